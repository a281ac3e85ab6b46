//! Bounded compositions and the explicit combinatorial formula for
//! `sigma(n, p)`.
//!
//! A multiple `N < (n-1)^{2p}` of `n` is read as `2p` base-`(n-1)` digits;
//! it is a multiple of `n` exactly when the digit sums on even and odd
//! positions agree modulo `n`. Counting digit strings by those two sums
//! turns the Newman sum at `x = (n-1)^{2p}` into a sum of products of
//! composition counts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::digit_sums::Budget;
use crate::error::{require_odd, Error, Result};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// A composition count together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionCount {
    pub m: u64,
    pub parts: u64,
    pub max_part: u64,
    pub count: BigInt,
}

/// `C(m, parts, s)`: compositions of `m` into `parts` positive parts, each at
/// most `s`, by inclusion-exclusion over the parts that overflow.
pub fn compositions_positive(m: u64, parts: u64, s: u64) -> BigInt {
    if parts == 0 {
        return if m == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if s == 0 || m < parts || m > parts * s {
        return BigInt::zero();
    }
    let top = parts.min((m - parts) / s);
    let mut acc = BigInt::zero();
    for j in 0..=top {
        let term = binomial(parts, j) * binomial(m - s * j - 1, parts - 1);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `C0(m, parts, s)`: compositions of `m` into `parts` nonnegative parts, each
/// at most `s`, following the five-way case split.
pub fn compositions_nonneg(m: u64, parts: u64, s: u64) -> BigInt {
    if parts == 0 {
        return if m == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    match (m, s) {
        (0, _) => BigInt::one(),
        (_, 0) => BigInt::zero(),
        (m, 1) if m > parts => BigInt::zero(),
        (m, 1) => binomial(parts, m),
        (m, s) if m >= parts => compositions_positive(m + parts, parts, s + 1),
        (m, s) => (1..=m)
            .map(|nu| compositions_positive(m, nu, s) * binomial(parts, parts - nu))
            .sum(),
    }
}

/// Exhaustive count of part sequences, the ground truth for
/// [`compositions_positive`] and [`compositions_nonneg`].
pub fn compositions_oracle(
    m: u64,
    parts: u64,
    s: u64,
    allow_zero: bool,
    budget: Budget,
) -> Result<BigInt> {
    let states = (s as u128 + 1)
        .checked_pow(parts as u32)
        .unwrap_or(u128::MAX);
    if states > budget.get() as u128 {
        return Err(Error::Budget {
            requested: states,
            budget: budget.get(),
            hint: "use compositions_positive or compositions_nonneg",
        });
    }
    let low = u64::from(!allow_zero);
    fn count(remaining: u64, parts: u64, low: u64, high: u64) -> u64 {
        if parts == 0 {
            return u64::from(remaining == 0);
        }
        if remaining < parts * low || remaining > parts * high {
            return 0;
        }
        (low..=high.min(remaining))
            .map(|d| count(remaining - d, parts - 1, low, high))
            .sum()
    }
    if s < low {
        return Ok(BigInt::from(u8::from(m == 0 && parts == 0)));
    }
    Ok(BigInt::from(count(m, parts, low, s)))
}

/// Divisibility by odd `n` from the alternating base-`(n-1)` digit sums.
pub fn is_multiple_by_digits(value: u64, n: u64) -> bool {
    let base = n - 1;
    let (mut even, mut odd) = (0u64, 0u64);
    let mut rest = value;
    let mut position = 0u32;
    while rest > 0 {
        let digit = rest % base;
        if position.is_multiple_of(2) {
            even += digit;
        } else {
            odd += digit;
        }
        rest /= base;
        position += 1;
    }
    even % n == odd % n
}

/// The two inner totals of the combinatorial formula for `S_n((n-1)^{2p})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialBreakdown {
    /// `sum_j C0(j)^2`
    pub square_total: BigInt,
    /// `2 sum_j sum_k (-1)^k C0(j) C0(j + nk)`
    pub cross_total: BigInt,
    pub sigma: BigInt,
}

pub fn sigma_combinatorial_breakdown(n: u64, p: u64) -> Result<CombinatorialBreakdown> {
    require_odd(n, 3)?;
    if p == 0 {
        return Err(Error::Domain("sigma_combinatorial needs p >= 1".into()));
    }
    let top = (n - 2) * p;
    let counts: Vec<BigInt> = (0..=top)
        .map(|j| compositions_nonneg(j, p, n - 2))
        .collect();
    let mut square_total = BigInt::zero();
    let mut cross = BigInt::zero();
    for j in 0..=top {
        let cj = &counts[j as usize];
        square_total += cj * cj;
        for k in 1..=(top - j) / n {
            let term = cj * &counts[(j + n * k) as usize];
            if k % 2 == 0 {
                cross += term;
            } else {
                cross -= term;
            }
        }
    }
    let cross_total = cross * 2;
    let scaled: BigInt = (&square_total + &cross_total) * BigInt::from(n);
    let (sigma, rem) = scaled.div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::Invariant(format!(
            "n * S_n((n-1)^(2p)) is odd for n={n}, p={p}"
        )));
    }
    Ok(CombinatorialBreakdown {
        square_total,
        cross_total,
        sigma,
    })
}

/// `sigma(n, p)` from composition counts alone.
pub fn sigma_combinatorial(n: u64, p: u64) -> Result<BigInt> {
    sigma_combinatorial_breakdown(n, p).map(|b| b.sigma)
}

/// `sum_{j=0}^{min(n, m-n)} (-1)^j C(n,j) C(m-j-1, n-1) == [m == n]`
/// for `1 <= n <= n_max`, `n <= m <= m_max`.
pub fn verify_identity36(n_max: u64, m_max: u64) -> bool {
    (1..=n_max).all(|n| (n..=m_max).all(|m| identity36_lhs(n, m) == BigInt::from(u8::from(m == n))))
}

pub(crate) fn identity36_lhs(n: u64, m: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=n.min(m - n) {
        let term = binomial(n, j) * binomial(m - j - 1, n - 1);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `sum_{j=0}^{p-3k} C(p,j) C(p,3k+j) == C(2p, p+3k)` for `1 <= k <= p/3`,
/// `p <= p_max`.
pub fn verify_identity40(p_max: u64) -> bool {
    (1..=p_max).all(|p| {
        (1..=p / 3).all(|k| {
            let lhs: BigInt = (0..=p - 3 * k)
                .map(|j| binomial(p, j) * binomial(p, 3 * k + j))
                .sum();
            lhs == binomial(2 * p, p + 3 * k)
        })
    })
}

/// `sum_{k=1}^{p/3} (-1)^{k-1} C(2p, p+3k) == C(2p,p)/2 - 3^{p-1}` for
/// `1 <= p <= p_max`.
pub fn verify_identity41(p_max: u64) -> bool {
    (1..=p_max).all(|p| {
        let (lhs, rhs) = identity41_sides(p);
        lhs == rhs
    })
}

pub(crate) fn identity41_sides(p: u64) -> (BigInt, BigInt) {
    let mut lhs = BigInt::zero();
    for k in 1..=p / 3 {
        let term = binomial(2 * p, p + 3 * k);
        if k % 2 == 1 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let rhs = binomial(2 * p, p) / 2 - num_traits::pow(BigInt::from(3), (p - 1) as usize);
    (lhs, rhs)
}
