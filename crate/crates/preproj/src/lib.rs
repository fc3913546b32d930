//! Exact-arithmetic computations with finite-dimensional modules over
//! the preprojective algebra of the type A quiver.
//!
//! The crate builds Maya modules and tableau-indexed modules, computes
//! socles and homomorphism spaces over the rationals, evaluates the
//! closed-form Hom dimension and its truncated-permutahedron companion,
//! and classifies generic modules by their Hom signatures against
//! semistandard Young tableaux. Everything is checked against a
//! brute-force linear-algebra oracle; `selftest` runs those checks at a
//! chosen scale.

pub mod error;
pub mod interchange;
pub mod lattice;
pub mod matrix;
pub mod maya;
pub mod rational;
pub mod rep;
pub mod selftest;
pub mod tableaux;

pub use error::{Error, Result};
pub use matrix::RatMatrix;
pub use rational::Rational;
