//! Growth exponents `lambda_n` and the dominant-root asymptotics of
//! `sigma(n, p)`.
//!
//! The largest root `tan^2((n-1) pi / (2n)) = cot^2(pi / (2n))` dominates, so
//! `sigma(n, p) / cot^{2p}(pi / (2n)) -> 1` and, with `x = (n-1)^{2p}`,
//! `S_n(x) ~ (2/n) x^{lambda_n}`.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{require_odd, Error, Result};
use crate::exact_sums::sigma;

/// `lambda_n` with the elementary bounds that bracket it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaRecord {
    pub n: u64,
    pub lambda: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
}

/// `ln cot(pi / 2n) / ln(n - 1)`, bracketed by `1 - ln(pi/2)/ln(n-1)` and that
/// plus `1 / ((n-1) ln(n-1))`.
pub fn lambda_n(n: u64) -> Result<LambdaRecord> {
    require_odd(n, 3)?;
    let nf = n as f64;
    let log_base = (nf - 1.0).ln();
    let lambda = (PI / (2.0 * nf)).tan().recip().ln() / log_base;
    let lower_bound = 1.0 - (PI / 2.0).ln() / log_base;
    let upper_bound = lower_bound + 1.0 / ((nf - 1.0) * log_base);
    if !(lower_bound <= lambda && lambda <= upper_bound && 0.0 < lambda && lambda < 1.0) {
        return Err(Error::Invariant(format!(
            "lambda_{n} = {lambda} outside [{lower_bound}, {upper_bound}]"
        )));
    }
    Ok(LambdaRecord {
        n,
        lambda,
        lower_bound,
        upper_bound,
    })
}

/// Odd `n` from 3 to `n_max` with their records.
pub fn lambda_table(n_max: u64) -> Result<Vec<LambdaRecord>> {
    (3..=n_max).step_by(2).map(lambda_n).collect()
}

/// `lambda_3 < lambda_5 < ... < lambda_{n_max}`, each step by more than 1e-12.
pub fn verify_lambda_monotonic(n_max: u64) -> bool {
    match lambda_table(n_max) {
        Ok(table) => table.windows(2).all(|w| w[1].lambda - w[0].lambda > 1e-12),
        Err(_) => false,
    }
}

/// Natural log of a positive big integer from its leading 64 bits.
pub fn ln_bigint(value: &BigInt) -> f64 {
    assert!(value.is_positive(), "ln of non-positive integer");
    let bits = value.bits();
    if bits <= 1000 {
        return value.to_f64().expect("fits f64").ln();
    }
    let shift = bits - 64;
    let top: BigInt = value >> shift;
    top.to_f64().expect("64-bit head").ln() + shift as f64 * LN_2
}

/// `sigma(n, p) / cot^{2p}(pi / 2n)`, evaluated in the log domain.
///
/// At `n = 3` the only root is the integer 3 and the ratio is computed
/// exactly.
pub fn asymptotic_ratio(n: u64, p: usize) -> Result<f64> {
    require_odd(n, 3)?;
    let value = sigma(n, p)?;
    if n == 3 {
        let ratio = BigRational::new(value, num_traits::pow(BigInt::from(3), p));
        return Ok(ratio.to_f64().expect("finite ratio"));
    }
    Ok(log_ratio(&value, n, p).exp())
}

fn log_ratio(value: &BigInt, n: u64, p: usize) -> f64 {
    let log_cot = (PI / (2.0 * n as f64)).tan().recip().ln();
    ln_bigint(value) - 2.0 * p as f64 * log_cot
}

/// `|ln S_n(x) - ln((2/n) x^{lambda_n})|` at `x = (n-1)^{2p}`, with
/// `S_n(x) = 2 sigma(n, p) / n`.
pub fn newman_log_error(n: u64, p: usize) -> Result<f64> {
    let record = lambda_n(n)?;
    let s = crate::digit_sums::newman_sum_fast(n, p)?;
    let ln_x = 2.0 * p as f64 * (n as f64 - 1.0).ln();
    let predicted = (2.0 / n as f64).ln() + record.lambda * ln_x;
    Ok((ln_bigint(&s) - predicted).abs())
}

/// `((55/3)(3/65)^lambda, 2 sqrt(3) / 3)` with `lambda = ln 3 / ln 4`: the
/// limsup and liminf of `S_3(3x) x^{-lambda}`.
pub fn coquet_constants() -> (f64, f64) {
    let lambda = 3f64.ln() / 4f64.ln();
    let upper = 55.0 / 3.0 * (3.0f64 / 65.0).powf(lambda);
    let lower = 2.0 * 3f64.sqrt() / 3.0;
    (upper, lower)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_values() {
        let cases = [
            (3, 0.79248125),
            (5, 0.81092244),
            (7, 0.82452046),
            (9, 0.83455828),
            (11, 0.84230667),
        ];
        for (n, want) in cases {
            let got = lambda_n(n).unwrap().lambda;
            assert!((got - want).abs() < 1e-8, "n={n} got {got}");
        }
        assert!((lambda_n(3).unwrap().lambda - 3f64.ln() / 4f64.ln()).abs() < 1e-15);
        assert!(lambda_n(4).is_err());
    }

    #[test]
    fn lambda_bounds_and_monotonicity() {
        for r in lambda_table(101).unwrap() {
            assert!(r.lower_bound <= r.lambda && r.lambda <= r.upper_bound);
        }
        assert!(verify_lambda_monotonic(11));
        assert!(verify_lambda_monotonic(101));
    }

    #[test]
    fn ln_of_big_values() {
        let big = num_traits::pow(BigInt::from(3), 5000);
        let want = 5000.0 * 3f64.ln();
        assert!(((ln_bigint(&big) - want) / want).abs() < 1e-12);
        assert_eq!(ln_bigint(&BigInt::from(1)), 0.0);
    }

    #[test]
    fn ratio_examples() {
        for p in [0, 1, 20, 200] {
            assert_eq!(asymptotic_ratio(3, p).unwrap(), 1.0);
        }
        assert!((asymptotic_ratio(5, 30).unwrap() - 1.0).abs() < 1e-6);
        let far = (asymptotic_ratio(7, 10).unwrap() - 1.0).abs();
        let near = (asymptotic_ratio(7, 5).unwrap() - 1.0).abs();
        assert!(far < near);
    }

    #[test]
    fn ratio_converges_monotonically() {
        for n in [5, 7, 9, 11] {
            let ratios: Vec<f64> = (1..=60).map(|p| asymptotic_ratio(n, p).unwrap()).collect();
            assert!(ratios.iter().all(|r| *r >= 1.0 - 1e-12));
            // Strict decrease until the subdominant roots fall below f64 resolution.
            let settled = ratios.iter().position(|r| r - 1.0 < 1e-13).unwrap();
            assert!(ratios[..settled].windows(2).all(|w| w[1] < w[0]), "n={n}");
            assert!((ratios[49] - 1.0).abs() < 1e-4);
        }
    }

    #[test]
    fn newman_log_error_vanishes() {
        for n in [5, 7, 9, 11] {
            let early = newman_log_error(n, 2).unwrap();
            let late = newman_log_error(n, 80).unwrap();
            assert!(late < early);
            assert!(late < 1e-10, "n={n} late={late}");
        }
    }

    #[test]
    fn coquet() {
        let (upper, lower) = coquet_constants();
        assert!((upper - 1.601958421).abs() < 1e-9);
        assert!((lower - 1.154700538).abs() < 1e-9);
        assert!((lower - 2.0 / 3f64.sqrt()).abs() < 1e-15);
    }
}
