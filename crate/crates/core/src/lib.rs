//! Exact arithmetic for tangent power sums
//!
//! ```text
//! sigma(n, p) = sum_{k=1}^{(n-1)/2} tan^{2p}(pi k / n),   n odd
//! ```
//!
//! computed three independent ways (linear recurrence, digit-sum enumeration
//! in base `n - 1`, explicit composition counting), together with the
//! polynomial structure of `sigma(., p)`, the Newman digit sums `S_n(x)` and
//! the growth exponents `lambda_n`.
//!
//! All exact values are [`BigInt`] or [`BigRational`]; floating point only
//! appears in the cross-checks and the asymptotic statistics.

pub mod asymptotics;
pub mod compositions;
pub mod digit_sums;
mod error;
pub mod exact_sums;
pub mod polynomials;
pub mod suite;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use asymptotics::{asymptotic_ratio, coquet_constants, lambda_n, LambdaRecord};
pub use compositions::{
    compositions_nonneg, compositions_oracle, compositions_positive, is_multiple_by_digits,
    sigma_combinatorial, CompositionCount,
};
pub use digit_sums::{
    check_newman_bounds, derive_period24_table, digit_sum, newman_sum, newman_sum_fast, s3_fast,
    Budget, NewmanStat, Period24Table,
};
pub use error::{Error, Result};
pub use exact_sums::{
    char_poly_coeffs, sigma, sigma_float, sigma_star, CharPolyCoeffs, SigmaCache, TrigForm,
};
pub use polynomials::{
    bernoulli, interpolate_sigma_poly, leading_coefficient, to_binomial_basis, BinomialPolynomial,
    PolyTarget, RationalPolynomial,
};
