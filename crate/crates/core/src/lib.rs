//! Exact computation of Stirling, Whitney, geometric and noncentral
//! Tanny-Dowling numbers and polynomials, a catalog of checkable identities
//! relating them, and certified evaluation of their infinite-series forms.
//!
//! Polynomial and power-series containers are generic over any [`Scalar`]
//! field; everything that needs exact equality works over [`Rational`].

pub mod arith;
pub mod error;
pub mod fps;
pub mod identities;
pub mod poly;
pub mod polynomials;
pub mod scalar;
pub mod series;
pub mod triangles;

pub use error::{Error, Result};
pub use fps::TruncatedSeries;
pub use poly::Polynomial;
pub use polynomials::TdVariant;
pub use scalar::Scalar;
pub use series::Enclosure;

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Normalized arbitrary-precision fraction; the scalar used for every exact computation.
pub type Rational = num_rational::BigRational;
/// Dense polynomial with exact rational coefficients.
pub type RationalPolynomial = Polynomial<Rational>;
/// Truncated power series with exact rational coefficients.
pub type RationalSeries = TruncatedSeries<Rational>;
