//! Polynomial automorphisms of finite groups, and exact arithmetic in free
//! metabelian groups of rank 2 and 3.
//!
//! * [`group`]: finite groups as multiplication tables, subgroups, series,
//!   quotients and a catalog of small groups.
//! * [`engine`]: polynomial functions, `A(G)`, `I(G)`, `P₀(G)`, `P(G)` and
//!   instance checks of the structural claims about them.
//! * [`fm`]: free metabelian groups of rank 2 and 3 in a Magnus-style
//!   representation, IA-automorphisms and their polynomial forms.

pub mod config;
pub mod engine;
pub mod fm;
pub mod group;
pub mod ops;
pub mod polyform;
pub mod report;

pub use config::RunConfig;
pub use engine::{Claim, EngineError, GroupFunction};
pub use group::{Elem, FiniteGroup, GroupError};
pub use ops::GroupOps;
pub use polyform::PolynomialForm;
pub use report::{Report, VerificationReport};
