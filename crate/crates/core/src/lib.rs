//! Numerical semigroups `S`, the plane monoid Σ with `ℂ[Σ] = gr D(ℂ[S])`,
//! explicit generators of `D(ℂ[S])`, irreducible decompositions of monomial
//! ideals of `ℂ[Σ]`, and the overrings `I:I ≅ Der(I, I)` of `ℂ[S]`.
//!
//! Everything is exact: integers for the combinatorics and rationals for
//! operator coefficients.
//!
//! ```
//! use semigroup_diffops::{NumericalSemigroup, SigmaMonoid};
//!
//! let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
//! assert_eq!(s.valency(1), 3);
//! let sigma = SigmaMonoid::new(&s);
//! assert_eq!(sigma.statistics().mu, 13);
//! ```
//!
//! The `examples/` directory has one runnable program per capability, and
//! the `semigroup-diffops` binary wraps the [`cli`] module.

pub mod cli;
pub mod error;
pub mod ideals;
pub mod overrings;
pub mod report;
pub mod semigroup;
pub mod sigma;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use ideals::{IrreducibleComponent, PlaneIdeal};
pub use overrings::{Oversemigroup, SemigroupIdeal};
pub use semigroup::{NumericalSemigroup, RelativeIdeal};
pub use sigma::{PlanePoint, SigmaMonoid};
pub use weyl::{LaurentPoly, WeylOperator};
