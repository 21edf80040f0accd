//! Conditional oriented matroids, their tope and covector point loci and
//! orbit-harmonics Hilbert series, computed with exact arithmetic.

pub mod com;
pub mod equivariant;
pub mod error;
pub mod exactla;
pub mod field;
pub mod harmonics;
pub mod matroidal;
pub mod rational;
pub mod realize;

pub use com::{Com, ElementSet, FlatPoset, GroundSet, Sign, SignedPermutation, SignedVector};
pub use error::{Error, Result};
pub use field::{Field, FieldChoice, PrimeField, Rationals};
pub use rational::Rational;
