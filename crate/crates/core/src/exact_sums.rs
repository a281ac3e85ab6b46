//! Exact evaluation of `sigma(n, p)` through the characteristic recurrence.
//!
//! The numbers `tan^2(k pi / n)`, `k = 1..m` with `m = (n - 1) / 2`, are the
//! roots of
//!
//! ```text
//! L^m - C(n,2) L^{m-1} + C(n,4) L^{m-2} - ... + (-1)^m C(n,n-1) = 0
//! ```
//!
//! so their power sums satisfy Newton's identities for `p <= m` and the
//! order-`m` linear recurrence with the same coefficients for `p > m`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::compositions::binomial;
use crate::error::{require_odd, Error, Result};

/// Coefficients `e[j] = C(n, 2j)`, `j = 1..=m`, of the characteristic
/// polynomial whose roots are `tan^2(k pi / n)`.
///
/// Stored without signs; index 0 of [`CharPolyCoeffs::e`] is `e[1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPolyCoeffs {
    n: u64,
    e: Vec<BigInt>,
}

impl CharPolyCoeffs {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of roots, `(n - 1) / 2`.
    pub fn order(&self) -> usize {
        self.e.len()
    }

    /// `e[j]` for `1 <= j <= order()`.
    pub fn e(&self, j: usize) -> &BigInt {
        &self.e[j - 1]
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.e
    }
}

pub fn char_poly_coeffs(n: u64) -> Result<CharPolyCoeffs> {
    require_odd(n, 3)?;
    Ok(char_poly_unchecked(n))
}

fn char_poly_unchecked(n: u64) -> CharPolyCoeffs {
    let m = (n - 1) / 2;
    let e = (1..=m).map(|j| binomial(n, 2 * j)).collect();
    CharPolyCoeffs { n, e }
}

/// Memoized `sigma(n, p)` for one fixed odd `n`, filled in increasing `p`.
///
/// `n = 1` is accepted and yields the empty sum, 0, for every `p`.
#[derive(Debug, Clone)]
pub struct SigmaCache {
    coeffs: CharPolyCoeffs,
    values: Vec<BigInt>,
}

impl SigmaCache {
    pub fn new(n: u64) -> Result<Self> {
        require_odd(n, 1)?;
        let coeffs = char_poly_unchecked(n);
        let values = vec![BigInt::from(coeffs.order())];
        Ok(Self { coeffs, values })
    }

    pub fn n(&self) -> u64 {
        self.coeffs.n
    }

    /// `sigma(n, p)`, extending the cache as needed.
    pub fn get(&mut self, p: usize) -> &BigInt {
        while self.values.len() <= p {
            let next = self.next_value();
            self.values.push(next);
        }
        &self.values[p]
    }

    /// Cached values `sigma(n, 0..len)`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `sigma(n, 0..=p_max)` as an owned vector.
    pub fn take(mut self, p_max: usize) -> Vec<BigInt> {
        self.get(p_max);
        self.values.truncate(p_max + 1);
        self.values
    }

    fn next_value(&self) -> BigInt {
        let p = self.values.len();
        let m = self.coeffs.order();
        let mut acc = BigInt::zero();
        // Newton's identities for p <= m; for p > m the tail terms vanish
        // and what is left is the order-m recurrence.
        for k in 1..p.min(m + 1) {
            let term = self.coeffs.e(k) * &self.values[p - k];
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if p <= m {
            let term = self.coeffs.e(p) * BigInt::from(p);
            if p % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

/// `sigma(n, p)` exactly. Odd `n >= 1`; `sigma(1, p) = 0`.
pub fn sigma(n: u64, p: usize) -> Result<BigInt> {
    let mut cache = SigmaCache::new(n)?;
    Ok(cache.get(p).clone())
}

/// `2 sigma(n, p) / (n (n - 1))`.
///
/// As a polynomial in `n` this has rational coefficients; at odd integers it
/// is integral only for some `n` (for example `sigma*(7, 2) = 53/3`), so the
/// exact rational is returned.
pub fn sigma_star(n: u64, p: usize) -> Result<BigRational> {
    require_odd(n, 3)?;
    if p == 0 {
        return Err(Error::Domain("sigma_star needs p >= 1".into()));
    }
    let value = sigma(n, p)?;
    let denom = BigInt::from(n) * BigInt::from(n - 1);
    Ok(BigRational::new(value * 2, denom))
}

/// Integer view of [`sigma_star`], when the division is exact.
pub fn sigma_star_integer(n: u64, p: usize) -> Result<Option<BigInt>> {
    let q = sigma_star(n, p)?;
    Ok(q.is_integer().then(|| q.to_integer()))
}

/// Which closed trigonometric form [`sigma_float`] sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigForm {
    /// `sum_{k=1}^{m} tan^{2p}(k pi / n)`
    Tangent,
    /// `sum_{l=0}^{m-1} cot^{2p}((2l + 1) pi / (2n))`
    Cotangent,
}

/// Direct double-precision summation of `sigma(n, p)`.
///
/// A cross-check only. Results above about `2^53` carry no integer
/// information and rounding grows with `p`; callers pick small cases.
pub fn sigma_float(n: u64, p: u32, form: TrigForm) -> f64 {
    let m = (n - 1) / 2;
    let exp = 2 * p as i32;
    let nf = n as f64;
    match form {
        TrigForm::Tangent => (1..=m).map(|k| (PI * k as f64 / nf).tan().powi(exp)).sum(),
        TrigForm::Cotangent => (0..m)
            .map(|l| {
                (PI * (2 * l + 1) as f64 / (2.0 * nf))
                    .tan()
                    .recip()
                    .powi(exp)
            })
            .sum(),
    }
}

/// Checks in floating point that every `tan^2(k pi / n)` is a root of the
/// characteristic polynomial, relative to its largest monomial.
///
/// Meaningful for `n <= 51`.
pub fn verify_char_roots(n: u64) -> bool {
    let Ok(coeffs) = char_poly_coeffs(n) else {
        return false;
    };
    let m = coeffs.order();
    // signed[j] multiplies L^{m-j}
    let signed: Vec<f64> = std::iter::once(1.0)
        .chain(coeffs.as_slice().iter().enumerate().map(|(i, c)| {
            let c = c.to_f64().unwrap_or(f64::INFINITY);
            if (i + 1).is_odd() {
                -c
            } else {
                c
            }
        }))
        .collect();
    (1..=m).all(|k| {
        let root = (PI * k as f64 / n as f64).tan().powi(2);
        let mut residual = 0.0;
        let mut largest: f64 = 0.0;
        for (j, c) in signed.iter().enumerate() {
            let term = c * root.powi((m - j) as i32);
            residual += term;
            largest = largest.max(term.abs());
        }
        residual.abs() < 1e-6 * largest
    })
}
