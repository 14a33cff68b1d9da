//! Exact invariants of algebraic knots.
//!
//! An algebraic knot is the link of a unibranched plane curve singularity and
//! is described here by its Puiseux characteristic sequence `(q0; q1, ..., qn)`.
//! From that sequence this crate derives the gcd chain, the semigroup of the
//! singularity, the iterated torus (cable) description, the Milnor number and
//! genus, and the Upsilon function as an exact piecewise-linear object. The
//! Upsilon function is then used to bound the genus of cobordisms between two
//! algebraic knots, and Tristram-Levine signatures of torus knots are available
//! for comparison.
//!
//! All invariant computations use exact integer or rational arithmetic. The only
//! floating point code is the Seifert-matrix signature oracle in [`seifert`].

pub mod corpus;
pub mod envelope;
pub mod knot;
pub mod obstruction;
pub mod pl;
pub mod puiseux;
pub mod rational;
pub mod seifert;
pub mod semigroup;
pub mod signature;
pub mod upsilon;

pub use knot::{KnotError, KnotSpec};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use obstruction::{
    family_check, obstruct_minimal, FamilyPair, FamilyRejection, ObstructionError,
    ObstructionReport, Verdict,
};
pub use pl::{PiecewiseLinear, PlError};
pub use puiseux::{CableStage, IteratedTorusDescription, PuiseuxError, PuiseuxSequence};
pub use semigroup::{NumericalSemigroup, SemigroupError};
pub use signature::{SignatureError, SignatureFunction};
pub use upsilon::{
    cobordism_genus_lower_bound, first_singularity, tau_of, upsilon_diff, upsilon_of, GenusBound,
    TheoremViolation,
};
