//! `tansum`: tangent power sums and Newman digit sums from the command line.
//!
//! Exit status: 0 on success, 1 when a verification or cross-check fails,
//! 2 on a usage error.

mod output;

use std::io;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tansum::asymptotics::lambda_table;
use tansum::digit_sums::full_range;
use tansum::suite::{self, Suite};
use tansum::{
    derive_period24_table, interpolate_sigma_poly, newman_sum, newman_sum_fast, s3_fast, sigma,
    sigma_combinatorial, to_binomial_basis, BigInt, Budget, Error, PolyTarget, SigmaCache,
};

use output::{Format, OutputRecord};

/// Default enumeration cap for `verify`.
const VERIFY_BUDGET: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "tansum",
    version,
    about = "Exact tangent power sums and Newman digit sums"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Maximum number of candidates a brute-force scan may visit.
    #[arg(long, global = true, env = "TANSUM_BUDGET")]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recurrence,
    Bruteforce,
    Combinatorial,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Sigma,
    #[value(name = "sigma_star", alias = "sigma-star")]
    SigmaStar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Monomial,
    Binomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Identities,
    Bounds,
    Oracles,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// sigma(n, p) by one or all three methods.
    Sigma {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
    },
    /// sigma(n, p) for p = 0..=p_max.
    Table {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p_max: usize,
    },
    /// sigma(., p) or sigma*(., p) as a polynomial in n.
    Poly {
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value_t = Target::Sigma)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Basis::Monomial)]
        basis: Basis,
    },
    /// Newman digit sum S_n(x), directly or at x = (n-1)^(2p).
    Newman {
        #[arg(long)]
        n: u64,
        #[arg(long, conflicts_with = "p", required_unless_present = "p")]
        x: Option<u64>,
        #[arg(long)]
        p: Option<usize>,
        /// Skip enumeration: the quaternary recursion for n = 3, or
        /// 2 sigma(n,p) / n for full ranges.
        #[arg(long)]
        fast: bool,
    },
    /// lambda_n with its bounds for odd n up to n_max.
    Lambda {
        #[arg(long)]
        n_max: u64,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Budget { .. } => Failure::Usage(e.to_string()),
            Error::Invariant(_) => Failure::Verification(e.to_string()),
        }
    }
}

/// A record to print and whether the command's own check passed.
type Outcome = Result<(OutputRecord, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli.budget;
    let outcome = match cli.command {
        Command::Sigma { n, p, method } => {
            cmd_sigma(n, p, method, budget_or(budget, Budget::DEFAULT.get()))
        }
        Command::Table { n, p_max } => cmd_table(n, p_max),
        Command::Poly { p, target, basis } => cmd_poly(p, target, basis),
        Command::Newman { n, x, p, fast } => {
            cmd_newman(n, x, p, fast, budget_or(budget, Budget::DEFAULT.get()))
        }
        Command::Lambda { n_max } => cmd_lambda(n_max),
        Command::Verify { suite } => cmd_verify(suite, budget_or(budget, VERIFY_BUDGET)),
    };
    match outcome {
        Ok((record, passed)) => {
            if cli.format == Format::Bfile && record.command != "table" {
                eprintln!("error: --format bfile is only available for `table`");
                return ExitCode::from(2);
            }
            if let Err(e) = record.render(cli.format, &mut io::stdout().lock()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn budget_or(flag: Option<u64>, default: u64) -> Budget {
    Budget::new(flag.unwrap_or(default))
}

fn sigma_bruteforce(n: u64, p: usize, budget: Budget) -> Result<BigInt, Failure> {
    if p == 0 {
        return Err(Failure::Usage("bruteforce needs p >= 1".into()));
    }
    let x = full_range(n, p)
        .ok_or_else(|| Failure::Usage(format!("(n-1)^(2p) overflows for n={n} p={p}")))?;
    let s = newman_sum(n, x, budget)?.s_value;
    Ok(BigInt::from(s) * n / 2)
}

fn cmd_sigma(n: u64, p: usize, method: Method, budget: Budget) -> Outcome {
    let mut rec = OutputRecord::new("sigma").param("n", n).param("p", p);
    let label = format!("sigma({n},{p})");
    let mut values = Vec::new();
    if matches!(method, Method::Recurrence | Method::All) {
        values.push((sigma(n, p)?, "recurrence"));
    }
    if matches!(method, Method::Bruteforce | Method::All) {
        values.push((sigma_bruteforce(n, p, budget)?, "eq10-bruteforce"));
    }
    if matches!(method, Method::Combinatorial | Method::All) {
        values.push((sigma_combinatorial(n, p as u64)?, "theorem7"));
    }
    let agree = values.windows(2).all(|w| w[0].0 == w[1].0);
    for (v, m) in &values {
        rec.push(label.clone(), v, m);
    }
    if method == Method::All {
        rec.push(
            "verdict",
            if agree { "AGREE" } else { "DISAGREE" },
            "cross-check",
        );
    }
    Ok((
        rec.param("method", format!("{method:?}").to_lowercase()),
        agree,
    ))
}

fn cmd_table(n: u64, p_max: usize) -> Outcome {
    let mut rec = OutputRecord::new("table")
        .param("n", n)
        .param("p_max", p_max);
    for (p, v) in SigmaCache::new(n)?.take(p_max).iter().enumerate() {
        rec.push(p.to_string(), v, "recurrence");
    }
    Ok((rec, true))
}

fn cmd_poly(p: usize, target: Target, basis: Basis) -> Outcome {
    let poly_target = match target {
        Target::Sigma => PolyTarget::Sigma,
        Target::SigmaStar => PolyTarget::SigmaStar,
    };
    let mut rec = OutputRecord::new("poly")
        .param("p", p)
        .param("target", format!("{:?}", poly_target))
        .param("basis", format!("{basis:?}").to_lowercase());
    let poly = interpolate_sigma_poly(p, poly_target)?;
    match basis {
        Basis::Monomial => {
            rec.push("polynomial", &poly, "interpolation");
            for (k, c) in poly.coeffs().iter().enumerate() {
                rec.push(format!("n^{k}"), c, "interpolation");
            }
        }
        Basis::Binomial => {
            if target == Target::SigmaStar {
                return Err(Failure::Usage(
                    "the binomial basis is only offered for --target sigma".into(),
                ));
            }
            let binom = to_binomial_basis(&poly)?;
            rec.push("polynomial", &binom, "finite-differences");
            for (k, c) in binom.terms() {
                rec.push(format!("C(n,{k})"), c, "finite-differences");
            }
        }
    }
    Ok((rec, true))
}

fn cmd_newman(n: u64, x: Option<u64>, p: Option<usize>, fast: bool, budget: Budget) -> Outcome {
    let mut rec = OutputRecord::new("newman")
        .param("n", n)
        .param("fast", fast);
    match (x, p, fast) {
        (Some(x), _, true) => {
            if n != 3 {
                return Err(Failure::Usage(
                    "--fast with --x is only available for n = 3".into(),
                ));
            }
            let table = derive_period24_table(10_000)?;
            rec = rec.param("x", x);
            rec.push(format!("S_3({x})"), s3_fast(x, &table), "s3-period24");
        }
        (None, Some(p), true) => {
            let v = newman_sum_fast(n, p)?;
            rec = rec.param("p", p);
            rec.push(format!("S_{n}((n-1)^{})", 2 * p), v, "eq29");
        }
        (x, p, false) => {
            let x = match (x, p) {
                (Some(x), _) => x,
                (None, Some(p)) => full_range(n, p).ok_or_else(|| {
                    Failure::Usage(format!("(n-1)^(2p) overflows for n={n} p={p}"))
                })?,
                (None, None) => unreachable!("clap requires --x or --p"),
            };
            let stat = newman_sum(n, x, budget)?;
            rec = rec.param("x", x);
            if let Some(p) = p {
                rec = rec.param("p", p);
            }
            rec.push(format!("S_{n}({x})"), stat.s_value, "eq18-bruteforce");
            rec.push("even_count", stat.even_count, "eq18-bruteforce");
            rec.push("odd_count", stat.odd_count, "eq18-bruteforce");
        }
        (None, None, true) => unreachable!("clap requires --x or --p"),
    }
    Ok((rec, true))
}

fn cmd_lambda(n_max: u64) -> Outcome {
    let mut rec = OutputRecord::new("lambda").param("n_max", n_max);
    for r in lambda_table(n_max)? {
        let n = r.n;
        rec.push(format!("lambda_{n}"), format!("{:.12}", r.lambda), "eq28");
        rec.push(
            format!("lower_{n}"),
            format!("{:.12}", r.lower_bound),
            "eq31",
        );
        rec.push(
            format!("upper_{n}"),
            format!("{:.12}", r.upper_bound),
            "eq31",
        );
    }
    Ok((rec, true))
}

fn cmd_verify(suite_arg: SuiteArg, budget: Budget) -> Outcome {
    let suite = match suite_arg {
        SuiteArg::Identities => Suite::Identities,
        SuiteArg::Bounds => Suite::Bounds,
        SuiteArg::Oracles => Suite::Oracles,
        SuiteArg::All => Suite::All,
    };
    let mut rec = OutputRecord::new("verify")
        .param("suite", format!("{suite_arg:?}").to_lowercase())
        .param("budget", budget.get());
    let method = format!("verify-{}", format!("{suite_arg:?}").to_lowercase());
    let mut all_passed = true;
    for outcome in suite::run(suite, budget) {
        all_passed &= outcome.passed;
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        rec.push_detail(outcome.name, verdict, &method, outcome.detail);
    }
    Ok((rec, all_passed))
}
