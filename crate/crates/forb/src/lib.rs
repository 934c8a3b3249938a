//! Forbidden-configuration tools for (0,1)-matrices.
//!
//! A configuration `F` is *contained* in a matrix `A` (written `F ≺ A`)
//! when some submatrix of `A` is a row and column permutation of `F`; `A`
//! *avoids* `F` otherwise. For a family `𝓕` of configurations,
//! `forb(m, 𝓕)` is the largest number of columns of an `m`-rowed *simple*
//! matrix (no repeated columns) avoiding every member of `𝓕`.
//!
//! The crate provides:
//!
//! * [`matrix`] — the column-major bitmask representation, standard
//!   matrices, products, restrictions, and a plain text format;
//! * [`containment`] — the `F ≺ A` decision procedure with witnesses, plus
//!   row-pair pattern analysis and complementary-pair coverage reports;
//! * [`constructions`] — the extremal count `f(m, k)`, the transition-bounded
//!   matrix `A(k)`, the boundary families `F_{1,k}..F_{6,k}`, named small
//!   configurations, and two code-based column families;
//! * [`solver`] — exact `forb` computation by branch and bound, maximality
//!   checking, and lower/upper bound reports;
//! * [`verify`] — named suites that machine-check the claims the rest of
//!   the crate is built around.

pub mod constructions;
pub mod containment;
pub mod matrix;
pub mod solver;
pub mod verify;

pub use containment::{
    avoids_family, contains_configuration, ComplementaryPairReport, ConfigWitness,
};
pub use matrix::{BinaryMatrix, Column, MatrixError};
