//! Newman digit sums in base `n - 1`.
//!
//! `S_n(x)` is the number of multiples of `n` in `[0, x)` with even base-`(n-1)`
//! digit sum minus the number with odd digit sum. Over a full range
//! `[0, (n-1)^{2p})` it equals `2 sigma(n, p) / n`; for `n = 3` it also obeys a
//! quaternary recursion with a period-24 correction term.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{require_odd, Error, Result};
use crate::exact_sums::sigma;

/// Cap on the number of integers a brute-force scan may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Budget(u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(100_000_000);

    pub const fn new(max_candidates: u64) -> Self {
        Budget(max_candidates)
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    fn admit(self, requested: u128, hint: &'static str) -> Result<()> {
        if requested > self.0 as u128 {
            return Err(Error::Budget {
                requested,
                budget: self.0,
                hint,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

pub fn digit_sum(r: u64, base: u64) -> Result<u64> {
    if base < 2 {
        return Err(Error::Domain(format!(
            "base must be at least 2, got {base}"
        )));
    }
    Ok(digit_sum_unchecked(r, base))
}

#[inline]
fn digit_sum_unchecked(mut r: u64, base: u64) -> u64 {
    let mut acc = 0;
    while r > 0 {
        acc += r % base;
        r /= base;
    }
    acc
}

#[inline]
fn binary_sign(x: u64) -> i64 {
    if x.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Signed and split counts of the multiples of `n` below `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewmanStat {
    pub n: u64,
    pub x: u64,
    /// `S_n(x)`, equal to `even_count - odd_count`.
    pub s_value: i64,
    pub even_count: u64,
    pub odd_count: u64,
}

/// `S_n(x)` by enumerating every multiple of `n` in `[0, x)`.
pub fn newman_sum(n: u64, x: u64, budget: Budget) -> Result<NewmanStat> {
    require_odd(n, 3)?;
    budget.admit(x as u128, "use newman_sum_fast or s3_fast")?;
    let base = n - 1;
    let (mut even_count, mut odd_count) = (0u64, 0u64);
    for r in (0..x).step_by(n as usize) {
        if digit_sum_unchecked(r, base).is_multiple_of(2) {
            even_count += 1;
        } else {
            odd_count += 1;
        }
    }
    Ok(NewmanStat {
        n,
        x,
        s_value: even_count as i64 - odd_count as i64,
        even_count,
        odd_count,
    })
}

/// `S_n((n-1)^{2p}) = 2 sigma(n, p) / n`, without enumeration.
pub fn newman_sum_fast(n: u64, p: usize) -> Result<BigInt> {
    require_odd(n, 3)?;
    if p == 0 {
        return Err(Error::Domain("newman_sum_fast needs p >= 1".into()));
    }
    let doubled: BigInt = sigma(n, p)? * 2;
    let (q, rem) = doubled.div_rem(&BigInt::from(n));
    if !rem.is_zero() {
        return Err(Error::Invariant(format!(
            "2 sigma({n},{p}) is not a multiple of {n}"
        )));
    }
    Ok(q)
}

/// `(n-1)^{2p}`, or `None` past `u64`.
pub fn full_range(n: u64, p: usize) -> Option<u64> {
    (n - 1).checked_pow(u32::try_from(2 * p).ok()?)
}

/// Checks `2 sigma(n,p) == n * S_n((n-1)^{2p})` with `S_n` enumerated directly.
pub fn verify_eq10(n: u64, p: usize, budget: Budget) -> Result<bool> {
    require_odd(n, 3)?;
    let x = full_range(n, p).ok_or(Error::Budget {
        requested: u128::MAX,
        budget: budget.get(),
        hint: "use newman_sum_fast",
    })?;
    let stat = newman_sum(n, x, budget)?;
    Ok(sigma(n, p)? * 2 == BigInt::from(n) * stat.s_value)
}

/// `(-1)^{s_2(x)} (S_3(x) - 3 S_3(floor(x/4)))` indexed by `x mod 24`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Period24Table {
    t: [i8; 24],
}

impl Period24Table {
    pub fn from_entries(t: [i8; 24]) -> Result<Self> {
        if let Some(v) = t.iter().find(|v| !(-2..=2).contains(*v)) {
            return Err(Error::Invariant(format!(
                "period-24 entry {v} outside [-2, 2]"
            )));
        }
        Ok(Self { t })
    }

    pub fn entries(&self) -> &[i8; 24] {
        &self.t
    }

    pub fn get(&self, x: u64) -> i64 {
        i64::from(self.t[(x % 24) as usize])
    }
}

impl fmt::Display for Period24Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.t.iter().map(i8::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `S_3(0..=x_max)` by a single pass.
fn s3_prefix(x_max: u64) -> Vec<i64> {
    let mut out = Vec::with_capacity(x_max as usize + 1);
    let mut acc = 0i64;
    for x in 0..=x_max {
        out.push(acc);
        if x % 3 == 0 {
            acc += binary_sign(x);
        }
    }
    out
}

/// Derives the period-24 correction table by brute force and checks that
/// every `x` in `24..=verify_up_to` agrees with its residue class.
pub fn derive_period24_table(verify_up_to: u64) -> Result<Period24Table> {
    if verify_up_to < 96 {
        return Err(Error::Domain(format!(
            "verify_up_to must be at least 96, got {verify_up_to}"
        )));
    }
    let s3 = s3_prefix(verify_up_to);
    let d = |x: u64| binary_sign(x) * (s3[x as usize] - 3 * s3[(x / 4) as usize]);
    let mut t = [0i8; 24];
    for (residue, slot) in t.iter_mut().enumerate() {
        let v = d(24 + residue as u64);
        *slot = i8::try_from(v)
            .map_err(|_| Error::Invariant(format!("period-24 entry {v} out of range")))?;
    }
    for x in 24..=verify_up_to {
        if d(x) != i64::from(t[(x % 24) as usize]) {
            return Err(Error::Invariant(format!(
                "period-24 claim fails at x={x}: d(x)={} but d(x mod 24 + 24)={}",
                d(x),
                t[(x % 24) as usize]
            )));
        }
    }
    Period24Table::from_entries(t)
}

/// `S_3(x)` in `O(log x)` from the quaternary recursion; `x < 24` is counted
/// directly.
pub fn s3_fast(x: u64, table: &Period24Table) -> i64 {
    if x < 24 {
        return (0..x).step_by(3).map(binary_sign).sum();
    }
    3 * s3_fast(x / 4, table) + binary_sign(x) * table.get(x)
}

/// Which inequality a [`BoundViolation`] broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NewmanBound {
    /// `S_3(x) > 0`
    Positive,
    /// `1/20 < S_3(x) x^{-lambda} < 5`
    Newman,
    /// `(2 sqrt 3 / 3) y^lambda <= S_3(3y) <= (55/3)(3/65)^lambda y^lambda`
    Coquet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundViolation {
    pub bound: NewmanBound,
    /// `x` for the first two bounds, `y` (with `x = 3y`) for the third.
    pub at: u64,
    pub s_value: i64,
    pub ratio: f64,
}

/// Running extremum with the argument where it was attained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub at: u64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NewmanBoundsReport {
    pub x_max: u64,
    pub checks: u64,
    pub violations: Vec<BoundViolation>,
    /// Extremes of `S_3(x) x^{-lambda}` over `1 <= x <= x_max`.
    pub newman_min: Extremum,
    pub newman_max: Extremum,
    /// Extremes of `S_3(3y) y^{-lambda}` over `1 <= y <= x_max / 3`.
    pub coquet_min: Extremum,
    pub coquet_max: Extremum,
}

impl NewmanBoundsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Slack on the sharp bounds for double-precision `y^lambda`.
pub const COQUET_TOLERANCE: f64 = 1e-9;

/// Scans `S_3` with [`s3_fast`] against the positivity, Newman and Coquet
/// bounds. Violations are collected, not raised.
pub fn check_newman_bounds(x_max: u64, table: &Period24Table) -> Result<NewmanBoundsReport> {
    if x_max < 3 {
        return Err(Error::Domain(format!(
            "x_max must be at least 3, got {x_max}"
        )));
    }
    let lambda = 3f64.ln() / 4f64.ln();
    let (upper, lower) = crate::asymptotics::coquet_constants();
    let mut violations = Vec::new();
    let mut checks = 0;

    let mut newman_min = Extremum {
        at: 0,
        ratio: f64::INFINITY,
    };
    let mut newman_max = Extremum {
        at: 0,
        ratio: f64::NEG_INFINITY,
    };
    for x in 1..=x_max {
        let s = s3_fast(x, table);
        let ratio = s as f64 * (x as f64).powf(-lambda);
        checks += 2;
        if s <= 0 {
            violations.push(BoundViolation {
                bound: NewmanBound::Positive,
                at: x,
                s_value: s,
                ratio,
            });
        }
        if !(ratio > 1.0 / 20.0 && ratio < 5.0) {
            violations.push(BoundViolation {
                bound: NewmanBound::Newman,
                at: x,
                s_value: s,
                ratio,
            });
        }
        if ratio < newman_min.ratio {
            newman_min = Extremum { at: x, ratio };
        }
        if ratio > newman_max.ratio {
            newman_max = Extremum { at: x, ratio };
        }
    }

    let mut coquet_min = Extremum {
        at: 0,
        ratio: f64::INFINITY,
    };
    let mut coquet_max = Extremum {
        at: 0,
        ratio: f64::NEG_INFINITY,
    };
    for y in 1..=x_max / 3 {
        let s = s3_fast(3 * y, table);
        let ratio = s as f64 * (y as f64).powf(-lambda);
        checks += 1;
        if ratio < lower - COQUET_TOLERANCE || ratio > upper + COQUET_TOLERANCE {
            violations.push(BoundViolation {
                bound: NewmanBound::Coquet,
                at: y,
                s_value: s,
                ratio,
            });
        }
        if ratio < coquet_min.ratio {
            coquet_min = Extremum { at: y, ratio };
        }
        if ratio > coquet_max.ratio {
            coquet_max = Extremum { at: y, ratio };
        }
    }

    Ok(NewmanBoundsReport {
        x_max,
        checks,
        violations,
        newman_min,
        newman_max,
        coquet_min,
        coquet_max,
    })
}
