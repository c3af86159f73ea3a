//! Exact certificates deciding whether a simple complex Lie group, embedded
//! by an irreducible representation, meets its own Lie algebra inside
//! `End(V)`.
//!
//! The answer is yes exactly for classical types with minuscule `V`. For
//! those cases [`witness`] builds a diagonal pair `(g, x)` with
//! `ρ(g) = ρ∗(x)` and checks it in exact arithmetic. For every other case
//! [`obstruction`] produces a certificate of the finite facts that rule a
//! witness out: root-string lengths, the incidence structure of the 27
//! weights of E6, and the facet sizes of the Gosset polytopes `2_21` and
//! `3_21`.
//!
//! ```
//! use lie_meet::{cli, rootsys::TypeLabel};
//!
//! let verdict = cli::classify(TypeLabel::A, 3, &cli::WeightSpec::Fundamental(2)).unwrap();
//! assert!(verdict.intersection_nonempty);
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod obstruction;
pub mod rootsys;
pub mod verify;
pub mod witness;

pub use error::{Error, Result};
