//! Exact computation of Segre, Chern–Schwartz–MacPherson, Chern–Fulton and
//! Milnor classes of subschemes of `P^n`, and checks of the product formulas
//! these classes satisfy for splayed and general-position intersections.
//!
//! Polynomial arithmetic is over a prime field `F_p` with `p` near `2^31`;
//! results are integer classes in `A_*P^n`, recovered with Monte Carlo
//! confidence from random linear sections.

pub mod charclasses;
pub mod chowring;
pub mod error;
pub mod groebner;
pub mod polyring;
pub mod segre;
pub mod verifier;

pub use chowring::{cartier_segre, ChowClass, ClassScalar};
pub use error::{Error, Result};
pub use polyring::{HomogeneousIdeal, PrimeField, SparsePolynomial};

/// Chow class with arbitrary-precision coefficients, used throughout the pipeline.
pub type Class = ChowClass<num_bigint::BigInt>;

/// Chow class with machine-word coefficients.
pub type SmallClass = ChowClass<i64>;
