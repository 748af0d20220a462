//! Free metabelian groups of rank 2 and 3.
//!
//! An element is a pair `(t, f)`: `t ∈ ℤʳ` is its image in the
//! abelianization and `f` is a vector of `r` Laurent polynomials with
//! `Σ fᵢ·(xᵢ − 1) = xᵗ − 1`. Multiplication is
//! `(t₁, f₁)(t₂, f₂) = (t₁ + t₂, xᵗ²·f₁ + f₂)`, so conjugating a derived
//! element `(0, h)` by `g` multiplies `h` by the monomial of `g`. With this
//! twist the derived subgroup of the rank 2 group is the cyclic module
//! generated by `[a, b]`, and `c(p)` denotes the derived element with
//! module coordinate `p` (`c(1) = [a, b]`, `c(p)^g = c(p·x^{t(g)})`).

mod element;
mod endo;
mod ia;
mod laurent;
mod module;
mod retract;
mod word;

use thiserror::Error;

pub use element::{fm_commutator, fm_conjugate, fm_generator, fm_inv, fm_mul, fm_pow, FMElement, FreeMetabelian};
pub use endo::{check_metabelian, endoform_apply, endoform_to_polyform, EndoForm};
pub use ia::{build_ia_endoform, canonical_preimage, IAConstruction, IASpec};
pub use laurent::{geometric_sum, laurent_mul, Exponents, LaurentPoly};
pub use module::{
    decompose_derived, derived_to_module, module_to_derived, rank2_normal_form, recompose_derived,
    render_rank2, DerivedDecomposition,
};
pub use retract::{rank3_counterexample, retract_generator, Rank3Report};
pub use word::{parse_word, Word};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FmError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("free metabelian groups of rank {0} are not supported (use 2 or 3)")]
    UnsupportedRank(usize),
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("element is not in the derived subgroup")]
    NotDerived,
    #[error("exact division failed: {0}")]
    ExactDivisionFailed(String),
    #[error("pair violates the membership identity")]
    NotAnElement,
    #[error("coefficient {0} does not fit in a 64-bit exponent")]
    CoefficientOverflow(String),
    #[error("group `{group}` is not metabelian (derived length {derived_length})")]
    NotMetabelian { group: String, derived_length: usize },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub(crate) fn check_rank(rank: usize) -> Result<(), FmError> {
    if rank == 2 || rank == 3 {
        Ok(())
    } else {
        Err(FmError::UnsupportedRank(rank))
    }
}
