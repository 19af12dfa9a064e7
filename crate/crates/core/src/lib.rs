//! Exact independence polynomials of composite graphs.
//!
//! The crate is split along the lines of the computation:
//!
//! * [`graph`] builds and combines finite simple graphs (unions, Zykov sums,
//!   coronas), enumerates small graphs up to isomorphism and answers a few
//!   brute-force structural questions (clique number, perfectness).
//! * [`poly`] is dense polynomial arithmetic over an exact coefficient ring.
//! * [`engine`] computes `I(G;x)`, either by backtracking over independent
//!   sets or by memoized vertex branching over bitsets.
//! * [`analysis`] decides symmetry, f-symmetry, unimodality and related
//!   coefficient properties.
//!
//! Polynomial arithmetic and the coefficient analyses are generic over the
//! coefficient type (see [`scalar`]); the aliases below fix the exact
//! arbitrary-precision instantiation used everywhere else.

pub mod analysis;
pub mod bitset;
pub mod engine;
pub mod error;
pub mod graph;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use graph::Graph;
pub use poly::Polynomial;

/// Arbitrary-precision integer used for polynomial coefficients.
pub type Integer = num_bigint::BigInt;

/// Exact fraction of arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

/// Dense polynomial with arbitrary-precision integer coefficients.
pub type IntPolynomial = Polynomial<Integer>;

/// Dense polynomial with exact rational coefficients.
pub type RatPolynomial = Polynomial<Rational>;
