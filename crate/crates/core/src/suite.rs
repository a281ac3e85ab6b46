//! Named verification checks grouped into suites, shared by the CLI
//! `verify` command.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::asymptotics::{asymptotic_ratio, lambda_table, verify_lambda_monotonic};
use crate::compositions::{
    compositions_nonneg, compositions_oracle, compositions_positive, is_multiple_by_digits,
    sigma_combinatorial, verify_identity36, verify_identity40, verify_identity41,
};
use crate::digit_sums::{
    check_newman_bounds, derive_period24_table, full_range, newman_sum, s3_fast, Budget,
};
use crate::error::Result;
use crate::exact_sums::{verify_char_roots, SigmaCache};
use crate::polynomials::{
    interpolate_sigma_poly, leading_coefficient, to_binomial_basis, verify_identity34,
    verify_recurrence_relation, PolyTarget,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Bounds,
    Oracles,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: &'static str, result: Result<(bool, String)>) -> Self {
        match result {
            Ok((passed, detail)) => Self::new(name, passed, detail),
            Err(e) => Self::new(name, false, e.to_string()),
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.name, self.detail)
    }
}

/// Runs `suite`; brute-force scans are limited to `budget` candidates each.
pub fn run(suite: Suite, budget: Budget) -> Vec<CheckOutcome> {
    match suite {
        Suite::Identities => identities(),
        Suite::Bounds => bounds(),
        Suite::Oracles => oracles(budget),
        Suite::All => {
            let mut out = identities();
            out.extend(bounds());
            out.extend(oracles(budget));
            out
        }
    }
}

fn swept(ok: bool, what: &str) -> (bool, String) {
    (ok, what.to_string())
}

fn identities() -> Vec<CheckOutcome> {
    vec![
        CheckOutcome::from_result(
            "identity-34",
            (|| {
                let mut ok = true;
                for n in (3..=25).step_by(2) {
                    ok &= verify_identity34(n)?;
                }
                Ok(swept(ok, "both forms, odd n <= 25"))
            })(),
        ),
        CheckOutcome::new("identity-36", verify_identity36(12, 24), "n <= 12, m <= 24"),
        CheckOutcome::new("identity-40", verify_identity40(30), "p <= 30"),
        CheckOutcome::new("identity-41", verify_identity41(50), "1 <= p <= 50"),
        CheckOutcome::from_result(
            "recurrence-relation",
            (|| {
                let mut ok = true;
                for n in (3..=15u64).step_by(2) {
                    for p in (n as usize).div_ceil(2)..=12 {
                        ok &= verify_recurrence_relation(n, p)?;
                    }
                }
                Ok(swept(ok, "odd n <= 15, (n+1)/2 <= p <= 12"))
            })(),
        ),
        CheckOutcome::from_result(
            "leading-term",
            (|| {
                let mut ok = true;
                for p in 1..=8 {
                    ok &= interpolate_sigma_poly(p, PolyTarget::Sigma)?.leading()
                        == leading_coefficient(p);
                }
                Ok(swept(ok, "p <= 8"))
            })(),
        ),
        CheckOutcome::from_result(
            "binomial-basis",
            (|| {
                let mut ok = true;
                for p in 1..=8 {
                    let basis = to_binomial_basis(&interpolate_sigma_poly(p, PolyTarget::Sigma)?)?;
                    ok &= basis.coeff(2) == BigInt::from(1) && basis.degree() == 2 * p;
                }
                Ok(swept(ok, "integer coordinates, leading C(n,2), p <= 8"))
            })(),
        ),
    ]
}

fn bounds() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let newman = derive_period24_table(100_000).and_then(|t| check_newman_bounds(100_000, &t));
    match newman {
        Ok(report) => {
            use crate::digit_sums::NewmanBound::*;
            for (name, kind) in [
                ("newman-positive", Positive),
                ("newman-bounds", Newman),
                ("coquet-sharp-bounds", Coquet),
            ] {
                let bad: Vec<_> = report
                    .violations
                    .iter()
                    .filter(|v| v.bound == kind)
                    .collect();
                let detail = match bad.first() {
                    None => match kind {
                        Coquet => format!(
                            "y <= {}, ratio range [{:.9}, {:.9}]",
                            report.x_max / 3,
                            report.coquet_min.ratio,
                            report.coquet_max.ratio
                        ),
                        _ => format!(
                            "x <= {}, ratio range [{:.6}, {:.6}]",
                            report.x_max, report.newman_min.ratio, report.newman_max.ratio
                        ),
                    },
                    Some(v) => format!(
                        "{} violation(s), first at {}: S = {}, ratio {:.9}",
                        bad.len(),
                        v.at,
                        v.s_value,
                        v.ratio
                    ),
                };
                out.push(CheckOutcome::new(name, bad.is_empty(), detail));
            }
        }
        Err(e) => out.push(CheckOutcome::new("newman-bounds", false, e.to_string())),
    }
    out.push(CheckOutcome::from_result(
        "lambda-bounds",
        (|| {
            let table = lambda_table(101)?;
            let ok = table
                .iter()
                .all(|r| r.lower_bound <= r.lambda && r.lambda <= r.upper_bound);
            Ok(swept(ok, "odd n <= 101"))
        })(),
    ));
    out.push(CheckOutcome::new(
        "lambda-monotonic",
        verify_lambda_monotonic(101),
        "odd n <= 101",
    ));
    out.push(CheckOutcome::from_result(
        "asymptotic-ratio",
        (|| {
            let mut worst: f64 = 0.0;
            for n in [5, 7, 9, 11] {
                worst = worst.max((asymptotic_ratio(n, 50)? - 1.0).abs());
            }
            let exact = (0..=60)
                .map(|p| asymptotic_ratio(3, p))
                .collect::<Result<Vec<_>>>()?;
            let ok = worst < 1e-4 && exact.iter().all(|r| *r == 1.0);
            Ok((ok, format!("max |ratio - 1| at p=50: {worst:.3e}")))
        })(),
    ));
    out
}

fn oracles(budget: Budget) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    out.push(CheckOutcome::from_result(
        "three-way-sigma",
        (|| {
            let mut cases = 0;
            for n in (3..=11u64).step_by(2) {
                let mut cache = SigmaCache::new(n)?;
                for p in 1.. {
                    let Some(x) = full_range(n, p).filter(|x| *x <= budget.get()) else {
                        break;
                    };
                    let recurrence = cache.get(p).clone();
                    let brute = BigInt::from(newman_sum(n, x, budget)?.s_value) * n / 2;
                    let combinatorial = sigma_combinatorial(n, p as u64)?;
                    if recurrence != brute || recurrence != combinatorial {
                        return Ok((
                            false,
                            format!("n={n} p={p}: {recurrence} vs {brute} vs {combinatorial}"),
                        ));
                    }
                    cases += 1;
                }
            }
            Ok((
                true,
                format!("{cases} cases with (n-1)^(2p) <= {}", budget.get()),
            ))
        })(),
    ));
    out.push(CheckOutcome::from_result(
        "divisibility-n",
        (|| {
            let ok = divisibility_sweep(|n, v| (v % BigInt::from(n)).is_zero())?;
            Ok(swept(ok, "n | sigma(n,p), odd n <= 101, 1 <= p <= 30"))
        })(),
    ));
    out.push(CheckOutcome::from_result(
        "divisibility-n(n-1)",
        (|| {
            let mut first = None;
            for n in (3..=101u64).step_by(2) {
                let values = SigmaCache::new(n)?.take(30);
                if let Some(p) = (1..=30).find(|p| {
                    let doubled: BigInt = &values[*p] * 2;
                    !(doubled % BigInt::from(n * (n - 1))).is_zero()
                }) {
                    first = Some((n, p, values[p].clone()));
                    break;
                }
            }
            Ok(match first {
                None => swept(true, "n(n-1) | 2 sigma(n,p), odd n <= 101, 1 <= p <= 30"),
                Some((n, p, v)) => (
                    false,
                    format!("fails at n={n} p={p}: 2*{v} mod {}", n * (n - 1)),
                ),
            })
        })(),
    ));
    out.push(CheckOutcome::from_result(
        "s3-fast",
        (|| {
            let table = derive_period24_table(100_000)?;
            let mut acc = 0i64;
            for x in 0..=100_000u64 {
                if s3_fast(x, &table) != acc {
                    return Ok((false, format!("mismatch at x={x}")));
                }
                if x % 3 == 0 {
                    acc += if x.count_ones() % 2 == 0 { 1 } else { -1 };
                }
            }
            Ok((true, format!("x <= 100000, table {table}")))
        })(),
    ));
    out.push(CheckOutcome::from_result(
        "compositions",
        (|| {
            let mut ok = true;
            for parts in 1..=6 {
                for s in 0..=6 {
                    for m in 0..=20 {
                        if s > 0 {
                            ok &= compositions_positive(m, parts, s)
                                == compositions_oracle(m, parts, s, false, budget)?;
                        }
                        ok &= compositions_nonneg(m, parts, s)
                            == compositions_oracle(m, parts, s, true, budget)?;
                    }
                }
            }
            Ok(swept(ok, "m <= 20, parts <= 6, s <= 6"))
        })(),
    ));
    out.push(CheckOutcome::new(
        "digit-criterion",
        [3, 5, 7, 9, 11]
            .iter()
            .all(|&n| (0..100_000).all(|v| is_multiple_by_digits(v, n) == (v % n == 0))),
        "N < 100000, n in {3,5,7,9,11}",
    ));
    out.push(CheckOutcome::new(
        "characteristic-roots",
        (3..=51).step_by(2).all(verify_char_roots),
        "odd n <= 51",
    ));
    out
}

fn divisibility_sweep(pred: impl Fn(u64, &BigInt) -> bool) -> Result<bool> {
    for n in (3..=101u64).step_by(2) {
        let values = SigmaCache::new(n)?.take(30);
        if !values[1..].iter().all(|v| pred(n, v)) {
            return Ok(false);
        }
    }
    Ok(true)
}
