//! Polynomial functions, `P₀(G)`, `P(G)`, and the claim checker.

mod autset;
mod claims;
mod closure;
mod function;
mod lemma;

use thiserror::Error;

use crate::group::{Elem, GroupError};

pub use autset::{
    automorphism_group, generate_p, inner_automorphisms, polynomial_automorphisms,
    polynomial_automorphisms_from_closure, AutomorphismSet,
};
pub use claims::{
    check_inclusion_chain, random_unit_sum_form, verify_claim, verify_group, Analysis, Claim,
};
pub use closure::{polynomial_function_closure, polynomial_seeds, FunctionChain};
pub use function::GroupFunction;
pub use lemma::{conjugates_commute, lemma_2_1_compose};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("automorphism search needs more than {budget} candidates")]
    SearchBudgetExceeded { budget: usize },
    #[error("polynomial function closure exceeds budget {budget} (reached {partial})")]
    ClosureBudgetExceeded { budget: usize, partial: usize },
    #[error("set {0} is not closed under composition")]
    NotClosedUnderComposition(String),
    #[error("member {index} of set {set} is not an automorphism")]
    NotAnAutomorphism { set: String, index: usize },
    #[error("conjugates of element {0} do not all commute")]
    ConjugatesDoNotCommute(Elem),
    #[error("precondition of {claim} not met: {reason}")]
    PreconditionNotMet { claim: String, reason: String },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
}
