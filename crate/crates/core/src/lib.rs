//! Exact computer algebra for the degree 6, 7 and 14 representations of
//! `PSL(2,13)` over the cyclotomic field `Q(ζ13)`.
//!
//! The crate reconstructs, from exact arithmetic alone, the generator
//! matrices, triangle-group presentations, permutation models, the Hurwitz
//! quaternion order, and the invariant-form families carried by the
//! six-variable action, and certifies every identity they satisfy. All
//! scalars are elements of cyclotomic fields represented exactly; floating
//! point is used only for sign determinations and numeric spot checks,
//! never for equality decisions.
//!
//! The [`harness`] module drives the whole certification as a collection of
//! suites and produces a structured [`report::VerificationReport`].

pub mod cyclo;
pub mod harness;
pub mod invariants;
pub mod linalg;
pub mod matrep;
pub mod par;
pub mod permgroup;
pub mod quaternion;
pub mod report;
pub mod rng;

pub use cyclo::CycloNum;
pub use invariants::MultiPoly;
pub use matrep::ProjMatrix;
pub use permgroup::Permutation14;
pub use report::{Check, RunConfig, Status, VerificationReport};
