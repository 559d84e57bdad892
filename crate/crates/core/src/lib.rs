//! Exact computer algebra for finite-dimensional nonassociative algebras.
//!
//! Algebras are given by rational structure constants. The crate checks
//! associativity-type identities parameterized by the group algebra K[Σ₃],
//! computes coboundaries and cocycle spaces, verifies truncated formal
//! deformations, polarizes products, builds degree-truncated free algebras and
//! tests operadic generating series for Koszulness.

pub mod algebra;
pub mod cohomology;
pub mod corpus;
pub mod deformation;
pub mod error;
pub mod format;
pub mod free;
pub mod linalg;
pub mod series;
pub mod sigma3;
pub mod survey;

pub use error::Error;
