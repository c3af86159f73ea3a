//! Exact scalars and exact linear algebra.
//!
//! Nothing in this crate uses floating point. Rationals are arbitrary
//! precision; Gaussian rationals and the truncated polynomial rings
//! `Q[t]/(t^m - c)` are built on top of them.

mod gaussian;
mod lattice;
mod matrix;
mod quotient;
mod rational;
mod scalar;

pub use gaussian::GaussianRational;
pub use lattice::{hnf_kernel, Hermite, IntMatrix};
pub use matrix::{rational_rank, Echelon, RatMatrix};
pub use quotient::{quotient_pow, Modulus, QuotientRingElement};
pub use rational::{common_denominator, dot, Rational};
pub use scalar::RingScalar;
