//! `sigma(n, p)` and `sigma*(n, p)` as polynomials in `n`.
//!
//! For fixed `p`, `sigma(., p)` has degree `2p` and is integer-valued, so it
//! has integer coordinates in the binomial basis `C(n, k)`. The monomial form
//! is recovered by exact Lagrange interpolation over odd nodes and the
//! binomial form by forward differences at zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::compositions::binomial;
use crate::digit_sums::newman_sum_fast;
use crate::error::{require_odd, Error, Result};
use crate::exact_sums::SigmaCache;

/// `B_0 ..= B_k_max` from `sum_{j=0}^{k} C(k+1, j) B_j = 0`, with `B_1 = -1/2`.
pub fn bernoulli_numbers(k_max: usize) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::with_capacity(k_max + 1);
    out.push(BigRational::one());
    for k in 1..=k_max {
        let mut acc = BigRational::zero();
        for (j, b) in out.iter().enumerate() {
            acc += b * BigRational::from(binomial(k as u64 + 1, j as u64));
        }
        out.push(-acc / BigRational::from(BigInt::from(k + 1)));
    }
    out
}

pub fn bernoulli(k: usize) -> BigRational {
    bernoulli_numbers(k).pop().expect("nonempty")
}

fn factorial(k: u64) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// Coefficient of `n^{2p}` in `sigma(n, p)`:
/// `2^{2p-1} (2^{2p} - 1) |B_{2p}| / (2p)!`.
pub fn leading_coefficient(p: usize) -> BigRational {
    let two = BigInt::from(2);
    let num = num_traits::pow(two.clone(), 2 * p - 1) * (num_traits::pow(two, 2 * p) - 1);
    bernoulli(2 * p).abs() * BigRational::from(num) / BigRational::from(factorial(2 * p as u64))
}

/// Polynomial in `n` with exact rational coefficients, lowest power first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_int(&self, at: i64) -> BigRational {
        self.eval(&BigRational::from(BigInt::from(at)))
    }

    /// Unique polynomial of degree `< points.len()` through `points`.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<Self> {
        let mut coeffs = vec![BigRational::zero(); points.len()];
        for (i, (xi, yi)) in points.iter().enumerate() {
            // basis(n) = prod_{j != i} (n - x_j) / (x_i - x_j), built up in place
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                if xi == xj {
                    return Err(Error::Domain(format!("repeated interpolation node {xi}")));
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, c) in basis.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (slot, c) in coeffs.iter_mut().zip(&basis) {
                *slot += c * &scale;
            }
        }
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let magnitude = c.abs();
            let unit = magnitude.is_one();
            match (power, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (_, true) => write!(f, "n")?,
                (_, false) => write!(f, "{magnitude}*n")?,
            }
            if power > 1 {
                write!(f, "^{power}")?;
            }
        }
        Ok(())
    }
}

/// Integer-valued polynomial `sum_k coeffs[k] C(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinomialPolynomial {
    coeffs: BTreeMap<usize, BigInt>,
}

impl BinomialPolynomial {
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero coordinates in increasing `k`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn eval(&self, n: u64) -> BigInt {
        self.terms().map(|(k, c)| c * binomial(n, k as u64)).sum()
    }
}

impl fmt::Display for BinomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if magnitude.is_one() {
                write!(f, "C(n,{k})")?;
            } else {
                write!(f, "{magnitude}*C(n,{k})")?;
            }
        }
        Ok(())
    }
}

/// Binomial-basis coordinates `Delta^k poly(0)`; fails unless every one is an
/// integer, i.e. unless `poly` is integer-valued.
pub fn to_binomial_basis(poly: &RationalPolynomial) -> Result<BinomialPolynomial> {
    let degree = poly.degree();
    let mut row: Vec<BigRational> = (0..=degree as i64).map(|x| poly.eval_int(x)).collect();
    let mut coeffs = BTreeMap::new();
    for k in 0..=degree {
        let head = &row[0];
        if !head.is_integer() {
            return Err(Error::Invariant(format!(
                "polynomial is not integer-valued: Delta^{k} at 0 is {head}"
            )));
        }
        if !head.is_zero() {
            coeffs.insert(k, head.to_integer());
        }
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(BinomialPolynomial { coeffs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyTarget {
    /// `sigma(n, p)`, degree `2p`
    Sigma,
    /// `2 sigma(n, p) / (n (n - 1))`, degree `2p - 2`
    SigmaStar,
}

fn sigma_value(n: u64, p: usize, target: PolyTarget) -> Result<BigRational> {
    let value = BigRational::from(SigmaCache::new(n)?.get(p).clone());
    Ok(match target {
        PolyTarget::Sigma => value,
        PolyTarget::SigmaStar => value * BigRational::new(2.into(), BigInt::from(n * (n - 1))),
    })
}

/// Interpolates `sigma(., p)` (or `sigma*(., p)`) over odd nodes up to
/// `4p + 1` and checks the result at the held-out nodes `4p + 3`, `4p + 5`.
pub fn interpolate_sigma_poly(p: usize, target: PolyTarget) -> Result<RationalPolynomial> {
    if p == 0 {
        return Err(Error::Domain("interpolate_sigma_poly needs p >= 1".into()));
    }
    let top = 4 * p as u64 + 1;
    // sigma* is undefined at n = 1, which leaves 2p nodes for degree 2p - 2.
    let first = match target {
        PolyTarget::Sigma => 1,
        PolyTarget::SigmaStar => 3,
    };
    let points = (first..=top)
        .step_by(2)
        .map(|n| {
            Ok((
                BigRational::from(BigInt::from(n)),
                sigma_value(n, p, target)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = RationalPolynomial::interpolate(&points)?;

    let expected_degree = match target {
        PolyTarget::Sigma => 2 * p,
        PolyTarget::SigmaStar => 2 * p - 2,
    };
    if poly.degree() != expected_degree {
        return Err(Error::Invariant(format!(
            "interpolant for p={p} has degree {}, expected {expected_degree}",
            poly.degree()
        )));
    }
    for n in [top + 2, top + 4] {
        let got = poly.eval_int(n as i64);
        let want = sigma_value(n, p, target)?;
        if got != want {
            return Err(Error::Invariant(format!(
                "interpolant for p={p} gives {got} at n={n}, exact value is {want}"
            )));
        }
    }
    Ok(poly)
}

fn signed_sum<I: IntoIterator<Item = (bool, BigInt)>>(terms: I) -> BigInt {
    terms.into_iter().fold(
        BigInt::zero(),
        |acc, (neg, t)| if neg { acc - t } else { acc + t },
    )
}

/// Both forms of the identity at `p = (n - 1) / 2`:
///
/// ```text
/// sum_{j=0}^{m} (-1)^j C(n, 2j+1) S_n((n-1)^{2j}) = 1
/// sum_{j=1}^{m} (-1)^{j-1} C(n, 2j+1) sigma(n, j)  = C(n, 2)
/// ```
pub fn verify_identity34(n: u64) -> Result<bool> {
    require_odd(n, 3)?;
    let m = ((n - 1) / 2) as usize;
    let newman_form = signed_sum(
        (0..=m)
            .map(|j| {
                let s = if j == 0 {
                    Ok(BigInt::one())
                } else {
                    newman_sum_fast(n, j)
                };
                s.map(|s| (j % 2 == 1, binomial(n, 2 * j as u64 + 1) * s))
            })
            .collect::<Result<Vec<_>>>()?,
    );
    let values = SigmaCache::new(n)?.take(m);
    let sigma_form =
        signed_sum((1..=m).map(|j| (j % 2 == 0, binomial(n, 2 * j as u64 + 1) * &values[j])));
    Ok(newman_form.is_one() && sigma_form == binomial(n, 2))
}

/// `sum_{k=0}^{m} (-1)^k C(n, 2k) sigma(n, p - k) == 0` for `p >= (n + 1) / 2`.
pub fn verify_recurrence_relation(n: u64, p: usize) -> Result<bool> {
    require_odd(n, 3)?;
    let m = ((n - 1) / 2) as usize;
    if p <= m {
        return Err(Error::Domain(format!(
            "relation needs p >= {}, got {p}",
            m + 1
        )));
    }
    let values = SigmaCache::new(n)?.take(p);
    let total =
        signed_sum((0..=m).map(|k| (k % 2 == 1, binomial(n, 2 * k as u64) * &values[p - k])));
    Ok(total.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_sums::sigma;

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    fn coefficients(poly: &BinomialPolynomial) -> Vec<i64> {
        (2..=poly.degree())
            .map(|k| i64::try_from(poly.coeff(k)).unwrap())
            .collect()
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), q(1, 1));
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(4), q(-1, 30));
        assert_eq!(bernoulli(12), q(-691, 2730));
        assert!(bernoulli(7).is_zero());
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(leading_coefficient(1), q(1, 2));
        assert_eq!(leading_coefficient(2), q(1, 6));
        let p3 = interpolate_sigma_poly(3, PolyTarget::Sigma).unwrap();
        assert_eq!(p3.leading(), leading_coefficient(3));
    }

    #[test]
    fn sigma_star_polynomials() {
        let p1 = interpolate_sigma_poly(1, PolyTarget::SigmaStar).unwrap();
        assert_eq!(p1.coeffs(), &[q(1, 1)]);
        let p2 = interpolate_sigma_poly(2, PolyTarget::SigmaStar).unwrap();
        assert_eq!(p2.coeffs(), &[q(-1, 1), q(1, 3), q(1, 3)]);
        // 2(n^2+n)(n^2-4)/15 + 1
        let p3 = interpolate_sigma_poly(3, PolyTarget::SigmaStar).unwrap();
        assert_eq!(
            p3.coeffs(),
            &[q(1, 1), q(-8, 15), q(-8, 15), q(2, 15), q(2, 15)]
        );
        let s1 = interpolate_sigma_poly(1, PolyTarget::Sigma).unwrap();
        assert_eq!(s1.coeffs(), &[q(0, 1), q(-1, 2), q(1, 2)]);
    }

    #[test]
    fn binomial_basis_tables() {
        let basis =
            |p| to_binomial_basis(&interpolate_sigma_poly(p, PolyTarget::Sigma).unwrap()).unwrap();
        assert_eq!(coefficients(&basis(1)), [1]);
        assert_eq!(coefficients(&basis(2)), [1, 6, 4]);
        assert_eq!(coefficients(&basis(3)), [1, 24, 96, 120, 48]);
        assert_eq!(
            coefficients(&basis(4)),
            [1, 78, 836, 3080, 5040, 3808, 1088]
        );
        for p in 1..=8 {
            let b = basis(p);
            assert_eq!(b.coeff(0), BigInt::zero());
            assert_eq!(b.coeff(1), BigInt::zero());
            assert_eq!(b.coeff(2), BigInt::one(), "p={p}");
            assert_eq!(b.degree(), 2 * p);
            assert_eq!(b.eval(13), sigma(13, p).unwrap());
        }
    }

    #[test]
    fn binomial_basis_rejects_non_integer_valued() {
        let half_n = RationalPolynomial::new(vec![q(0, 1), q(1, 2)]);
        assert!(matches!(
            to_binomial_basis(&half_n),
            Err(Error::Invariant(_))
        ));
        let n_choose_2 = RationalPolynomial::new(vec![q(0, 1), q(-1, 2), q(1, 2)]);
        assert_eq!(
            to_binomial_basis(&n_choose_2).unwrap().to_string(),
            "C(n,2)"
        );
    }

    #[test]
    fn display_forms() {
        let p2 = interpolate_sigma_poly(2, PolyTarget::SigmaStar).unwrap();
        assert_eq!(p2.to_string(), "1/3*n^2 + 1/3*n - 1");
        let s2 = interpolate_sigma_poly(2, PolyTarget::Sigma).unwrap();
        assert_eq!(
            to_binomial_basis(&s2).unwrap().to_string(),
            "C(n,2) + 6*C(n,3) + 4*C(n,4)"
        );
        assert_eq!(RationalPolynomial::new(vec![q(0, 1)]).to_string(), "0");
    }

    #[test]
    fn interpolant_matches_exact_values() {
        for p in 1..=6 {
            let poly = interpolate_sigma_poly(p, PolyTarget::Sigma).unwrap();
            for n in (3..=31u64).step_by(2) {
                assert_eq!(
                    poly.eval_int(n as i64),
                    BigRational::from(sigma(n, p).unwrap())
                );
            }
        }
    }

    #[test]
    fn identity34() {
        for n in (3..=25).step_by(2) {
            assert!(verify_identity34(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn recurrence_relation() {
        assert!(verify_recurrence_relation(5, 3).unwrap());
        assert!(verify_recurrence_relation(7, 4).unwrap());
        assert!(verify_recurrence_relation(9, 5).unwrap());
        assert!(matches!(
            verify_recurrence_relation(9, 4),
            Err(Error::Domain(_))
        ));
        for n in (3..=15u64).step_by(2) {
            for p in (n as usize).div_ceil(2)..=12 {
                assert!(verify_recurrence_relation(n, p).unwrap());
            }
        }
    }
}
