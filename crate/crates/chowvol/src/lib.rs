//! Exact-arithmetic invariants of matroids built from the lattice of flats.
//!
//! The crate computes, without ever leaving the rationals:
//!
//! - lattices of flats, minors, and connected components ([`matroid`], [`lattice`]);
//! - Möbius functions, characteristic polynomials, and the signed chain-sum
//!   coefficients that recover them ([`charpoly`]);
//! - intersection numbers of divisors on a matroid, the volume polynomial, and
//!   the shifted rank volume, together with a toppling-operator expansion that
//!   serves as an independent oracle for the closed form ([`chow`]);
//! - volumes of generalized permutohedra three ways: a chain formula over the
//!   boolean lattice, Postnikov's Minkowski-sum formula, and a direct exact
//!   polytope volume ([`genperm`]);
//! - the inclusion-exclusion identity for volume polynomials under matroid
//!   polytope subdivisions ([`valuation`]).
//!
//! A command-line front end lives in [`cli`] and is exposed by the `chowvol`
//! binary. The mdbook under `book/` walks through the concepts with runnable
//! snippets; those snippets are kept compiling by the `guide` crate's
//! doc-tests.
//!
//! ```
//! use chowvol::{Matroid, chow};
//!
//! let m = Matroid::uniform(3, 4).unwrap();
//! assert_eq!(chow::shifted_rank_volume(&m).to_string(), "16");
//! ```

pub mod catalog;
pub mod charpoly;
pub mod chow;
pub mod cli;
pub mod genperm;
pub mod json;
pub mod lattice;
pub mod matroid;
pub mod selftest;
pub mod valuation;

pub use lattice::FlatLattice;
pub use matroid::{Matroid, Subset};

// Exact arithmetic types used throughout the public API.
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

/// Largest supported ground set. Everything here enumerates flats or chains
/// of flats, which is only sensible at desk scale.
pub const MAX_GROUND: usize = 16;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set must have between 1 and {MAX_GROUND} elements, got {0}")]
    GroundSize(usize),
    #[error("uniform matroid needs 1 <= r <= n, got r={r}, n={n}")]
    UniformRank { r: usize, n: usize },
    #[error("edge {0} is a self-loop at vertex {1}")]
    SelfLoop(usize, usize),
    #[error("basis list is empty")]
    NoBases,
    #[error("bases must be equicardinal: {0} vs {1}")]
    Equicardinal(String, String),
    #[error("element {0} out of range for ground set of size {1}")]
    ElementRange(usize, usize),
    #[error("element {0} is a loop (lies in no basis)")]
    Loop(usize),
    #[error("basis exchange fails for {0}, {1} at element {2}")]
    Exchange(String, String, usize),
    #[error("{0} is not a flat")]
    NotAFlat(String),
    #[error("{0} is not contained in {1}")]
    NotNested(String, String),
    #[error("chain monomial invalid: {0}")]
    BadMonomial(String),
    #[error("monomial degree {got} does not match rank(M)-1 = {want}")]
    DegreeMismatch { got: u32, want: u32 },
    #[error("gamma index {0} out of range -1..={1}")]
    GammaRange(i64, i64),
    #[error("polynomial not divisible by t-1 (is the matroid loopless?)")]
    InexactDivision,
    #[error("toppling expansion failed to become square-free")]
    ToppleExpansion,
    #[error("tight toppling needs a homogeneous polynomial of degree rank-1")]
    NotHomogeneous,
    #[error("submodular function values must cover all 2^n subsets with z(empty) = 0")]
    BadSubmodular,
    #[error("z is not normalized: z([n]) = {0}, expected 0")]
    NotNormalized(String),
    #[error("z is not submodular: violated at {0}, {1}")]
    NotSubmodular(String, String),
    #[error("Minkowski weight y({0}) = {1} is negative")]
    NegativeWeight(String, String),
    #[error("polytope volume oracle supports n <= 5, got {0}")]
    OracleSize(usize),
    #[error("subdivision invalid: {0}")]
    BadSubdivision(String),
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
