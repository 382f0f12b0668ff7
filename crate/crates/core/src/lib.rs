//! Commutator calculus in free groups and higher-order Magnus
//! homomorphisms of surface mapping classes.
//!
//! The layers build on each other:
//!
//! - [`words`]: reduced free words and endomorphisms.
//! - [`groupring`] and [`fox`]: `Z[Z^n]`, abelianized Fox derivatives and
//!   the Magnus representation.
//! - [`lcs`]: Hall basic commutators, the Magnus expansion and graded
//!   classes in `F_k / F_{k+1}`.
//! - [`derived`]: the commutator subgroup as a free group on the
//!   Tomaszewski basis, and classes in `F'_k / F'_{k+1}`.
//! - [`mcg`]: pure braid mapping classes of a holed disk, separating
//!   embeddings and the Johnson / Magnus homomorphisms.
//! - [`harness`]: rank experiments and verification suites.

pub mod derived;
pub mod error;
pub mod fox;
pub mod groupring;
pub mod harness;
pub mod lcs;
pub mod linalg;
pub mod mcg;
pub mod parse;
pub mod words;

pub use error::{Error, Result};
pub use words::{Endomorphism, FreeWord, Letter};
