//! The expression language and the `exactcomb` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, parse or
//! evaluation error, 3 resource cap exceeded. Caps come from
//! [`Limits::from_env`].

mod eval;
mod syntax;

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

pub use eval::{as_bracket, eval_expr, eval_expr_with, format_real, guard_predicate, Value};
pub use syntax::{parse, print, BigOp, BinOp, Expr, Func, ParseError, MAX_DEPTH, MAX_SOURCE_BYTES};

use crate::analysis::{
    asym_error, asym_factorial_power, convert, factorial_power_real, generalized_power_series_tol,
    kramp_expansion_partial, kramp_general_factorial, log_power_series, log_power_series_at, reciprocal_series, Basis,
    FactorialKind, DEFAULT_TOLERANCE,
};
use crate::error::Error;
use crate::exact::{parse_rational, to_f64, ExactRational};
use crate::iverson::{verify_identity, Assignment, IdentityParams};
use crate::limits::Limits;
use crate::numbers::{table_window, TableKind};
use crate::oracles::{bell, complete_hom, count_perms_by_cycles, count_set_partitions, elem_sym, fence_poset, Poset};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "exactcomb", version, about = "Exact Stirling numbers, bracket sums and factorial-power series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Cycle,
    Subset,
    Binomial,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Power,
    Falling,
    Rising,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PowerKindArg {
    Rising,
    Falling,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Iverson,
    Stirling,
    Analysis,
    Oracles,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleArg {
    Perms,
    Partitions,
    Esym,
    Hsym,
    Omega,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a window of the cycle, subset or binomial table.
    Table {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        nmin: i64,
        #[arg(long, allow_hyphen_values = true)]
        nmax: i64,
        #[arg(long, allow_hyphen_values = true)]
        kmin: i64,
        #[arg(long, allow_hyphen_values = true)]
        kmax: i64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Evaluate an expression.
    Eval {
        expr: String,
        /// Variable binding `name=value` (rational); repeatable.
        #[arg(long = "bind", value_name = "NAME=VALUE")]
        bind: Vec<String>,
        /// Print the canonical form instead of the value.
        #[arg(long)]
        canonical: bool,
    },
    /// Convert polynomial coefficients between bases.
    Convert {
        /// Comma-separated coefficients, ascending degree.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum)]
        from: BasisArg,
        #[arg(long, value_enum)]
        to: BasisArg,
    },
    /// Truncated asymptotic expansion of a real factorial power.
    Asym {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum)]
        kind: PowerKindArg,
        /// Also print the gamma-ratio value and the relative error.
        #[arg(long)]
        compare_gamma: bool,
    },
    /// Evaluate one of the series identities: 2.14, 2.21, 2.27, 2.29.
    Series {
        #[arg(long)]
        id: String,
        /// `key=value` parameters.
        #[arg(long, num_args = 1.., allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Run a seeded verification suite, or check one catalog identity.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        max_n: Option<i64>,
        /// Check one bracket identity instead of a suite.
        #[arg(long)]
        identity: Option<String>,
        /// `key=value` parameters for `--identity`.
        #[arg(long, num_args = 1.., allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Brute-force counts.
    Oracle {
        #[arg(long, value_enum)]
        what: OracleArg,
        /// `key=value` parameters: `n`, `k`; for omega also `strict`,
        /// `poly`, and one of `fence=K`, `chain=P`, `antichain=P`,
        /// `poset=FILE`.
        #[arg(long, num_args = 1.., allow_hyphen_values = true)]
        params: Vec<String>,
    },
}

/// Outcome of a subcommand other than an error.
enum Outcome {
    Ok(String),
    VerifyFailed(String),
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line on `args` (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let limits = Limits::from_env();
    emit(dispatch(cli.command, &limits), out, err)
}

fn emit(result: std::result::Result<Outcome, CliError>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match result {
        Ok(Outcome::Ok(text)) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Ok(Outcome::VerifyFailed(text)) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_VERIFY_FAILED
        }
        Err(CliError::Parse(p)) => {
            let _ = writeln!(err, "error: parse error at {p}");
            EXIT_USAGE
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

enum CliError {
    Parse(ParseError),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn key_values(items: &[String]) -> CliResult<Vec<(String, String)>> {
    items
        .iter()
        .flat_map(|s| s.split_whitespace())
        .map(|item| {
            item.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| CliError::Lib(Error::InvalidInput(format!("parameter `{item}` is not key=value"))))
        })
        .collect()
}

struct Params(Vec<(String, String)>);

impl Params {
    fn raw(&self, key: &str) -> Option<&str> {
        self.0.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn parsed<T: std::str::FromStr>(&self, key: &str, default: Option<T>) -> CliResult<T> {
        match self.raw(key) {
            Some(v) => {
                v.parse().map_err(|_| Error::InvalidInput(format!("parameter {key}: cannot parse `{v}`")).into())
            }
            None => default.ok_or_else(|| Error::InvalidInput(format!("missing parameter {key}")).into()),
        }
    }

    fn rational(&self, key: &str, default: Option<&str>) -> CliResult<ExactRational> {
        match self.raw(key).or(default) {
            Some(v) => Ok(parse_rational(v)?),
            None => Err(Error::InvalidInput(format!("missing parameter {key}")).into()),
        }
    }
}

fn basis(b: BasisArg) -> Basis {
    match b {
        BasisArg::Power => Basis::Power,
        BasisArg::Falling => Basis::Falling,
        BasisArg::Rising => Basis::Rising,
    }
}

fn power_kind(k: PowerKindArg) -> FactorialKind {
    match k {
        PowerKindArg::Rising => FactorialKind::Rising,
        PowerKindArg::Falling => FactorialKind::Falling,
    }
}

fn parse_real(s: &str, what: &str) -> CliResult<f64> {
    // exact rationals such as `1/3` are accepted and rounded once
    let x = match s.parse::<f64>() {
        Ok(x) => x,
        Err(_) => parse_rational(s)
            .map(|r| to_f64(&r))
            .map_err(|_| Error::InvalidInput(format!("{what}: `{s}` is not a real number")))?,
    };
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::InvalidInput(format!("{what} must be finite")).into())
    }
}

fn dispatch(cmd: Command, limits: &Limits) -> CliResult<Outcome> {
    match cmd {
        Command::Table { kind, nmin, nmax, kmin, kmax, format } => {
            let kind = match kind {
                KindArg::Cycle => TableKind::Cycle,
                KindArg::Subset => TableKind::Subset,
                KindArg::Binomial => TableKind::Binomial,
            };
            let w = table_window(kind, nmin..=nmax, kmin..=kmax, limits.table_entries)?;
            Ok(Outcome::Ok(match format {
                FormatArg::Tsv => w.to_tsv(),
                FormatArg::Json => format!("{}\n", serde_json::to_string_pretty(&w.to_json()).expect("json")),
            }))
        }
        Command::Eval { expr, bind, canonical } => {
            let e = parse(&expr)?;
            if canonical {
                return Ok(Outcome::Ok(format!("{}\n", print(&e))));
            }
            let mut env = Assignment::new();
            for (k, v) in key_values(&bind)? {
                env.insert(k, parse_rational(&v)?);
            }
            let v = eval_expr_with(&e, &env, limits)?;
            Ok(Outcome::Ok(format!("{v}\n")))
        }
        Command::Convert { poly, from, to } => {
            let coeffs = poly.split(',').map(|s| parse_rational(s.trim())).collect::<crate::Result<Vec<_>>>()?;
            let c = convert(&coeffs, basis(from), basis(to));
            let text: Vec<String> = c.iter().map(ToString::to_string).collect();
            Ok(Outcome::Ok(format!("{}\n", text.join(","))))
        }
        Command::Asym { alpha, z, terms, kind, compare_gamma } => {
            let (a, zf) = (parse_real(&alpha, "alpha")?, parse_real(&z, "z")?);
            let kind = power_kind(kind);
            let r = asym_factorial_power(zf, a, terms, kind)?;
            let mut text = format!(
                "value: {}\nmodeled_error_bound: {}\n",
                format_real(r.value),
                format_real(r.modeled_error_bound)
            );
            if compare_gamma {
                let g = factorial_power_real(zf, a, kind)?;
                text += &format!(
                    "gamma_ratio: {}\nrelative_error_f64: {}\n",
                    format_real(g),
                    format_real(r.value / g - 1.0)
                );
                if let (Ok(ar), Ok(zr)) = (parse_rational(&alpha), parse_rational(&z)) {
                    let e = asym_error(&ar, &zr, terms, kind)?;
                    text += &format!("relative_error_exact: {}\n", format_real(e));
                }
            }
            Ok(Outcome::Ok(text))
        }
        Command::Series { id, params } => series(&id, &Params(key_values(&params)?), limits),
        Command::Verify { suite, seed, max_n, identity, params } => {
            if let Some(id) = identity {
                let items: Vec<String> = key_values(&params)?.into_iter().map(|(k, v)| format!("{k}={v}")).collect();
                let r = verify_identity(&id, &IdentityParams::parse(&items)?)?;
                let text = format!("identity {}: lhs = {}, rhs = {}, holds = {}\n", r.id, r.lhs, r.rhs, r.holds);
                return Ok(if r.holds { Outcome::Ok(text) } else { Outcome::VerifyFailed(text) });
            }
            let suite = match suite {
                SuiteArg::Iverson => Suite::Iverson,
                SuiteArg::Stirling => Suite::Stirling,
                SuiteArg::Analysis => Suite::Analysis,
                SuiteArg::Oracles => Suite::Oracles,
                SuiteArg::All => Suite::All,
            };
            let report = run_suite(suite, seed, max_n);
            let text = report.to_string();
            Ok(if report.passed() { Outcome::Ok(text) } else { Outcome::VerifyFailed(text) })
        }
        Command::Oracle { what, params } => oracle(what, &Params(key_values(&params)?)),
    }
}

fn series(id: &str, p: &Params, limits: &Limits) -> CliResult<Outcome> {
    let text = match id {
        "2.14" => {
            let z = p.rational("z", Some("1"))?;
            let n: usize = p.parsed("n", Some(10))?;
            if n > limits.series_order {
                return Err(Error::CapExceeded {
                    what: "series terms",
                    requested: n as u128,
                    cap: limits.series_order as u128,
                }
                .into());
            }
            let (partial, rem) = reciprocal_series(&z, n)?;
            let holds = &partial + &rem == z.recip();
            format!(
                "partial_sum: {partial}\nremainder: {rem}\nremainder_real: {}\npartial_plus_remainder_equals_1/z: {holds}\n",
                format_real(to_f64(&rem))
            )
        }
        "2.21" => {
            let a = p.rational("a", Some("4"))?;
            let r = p.rational("r", Some("1"))?;
            let n: i64 = p.parsed("n", Some(-1))?;
            let m: usize = p.parsed("m", Some(30))?;
            if m > limits.series_order {
                return Err(Error::CapExceeded {
                    what: "series terms",
                    requested: m as u128,
                    cap: limits.series_order as u128,
                }
                .into());
            }
            let partial = kramp_expansion_partial(&a, &r, n, m)?;
            let exact = kramp_general_factorial(&a, &r, n)?;
            format!(
                "partial_sum: {}\nexact: {exact}\ndifference: {}\n",
                format_real(to_f64(&partial)),
                format_real(to_f64(&(&partial - &exact)))
            )
        }
        "2.27" => {
            let z = parse_real(p.raw("z").unwrap_or("10"), "z")?;
            let alpha = parse_real(p.raw("alpha").unwrap_or("0.5"), "alpha")?;
            let budget: usize = p.parsed("budget", Some(200))?;
            let tol: f64 = p.parsed("tol", Some(DEFAULT_TOLERANCE))?;
            if budget > limits.term_budget {
                return Err(Error::CapExceeded {
                    what: "term budget",
                    requested: budget as u128,
                    cap: limits.term_budget as u128,
                }
                .into());
            }
            let s = generalized_power_series_tol(z, alpha, budget, tol)?;
            let reference = z.powf(alpha);
            format!(
                "value: {}\nterms_used: {}\nconverged: {}\nlast_term: {}\nreference_z^alpha: {}\nrelative_error: {}\n\
                 policy: stop after 3 consecutive terms below {} * |sum|, at most {} terms\n",
                format_real(s.value),
                s.terms_used,
                s.converged,
                format_real(s.last_term),
                format_real(reference),
                format_real((s.value - reference) / reference),
                format_real(tol),
                budget
            )
        }
        "2.29" => {
            let order: usize = p.parsed("order", Some(8))?;
            let mut text = String::new();
            match p.raw("alpha") {
                Some(a) => {
                    let a = parse_rational(a)?;
                    let s = log_power_series_at(&a, order, limits.poly_series_order)?;
                    for (k, c) in s.coeffs().iter().enumerate() {
                        text += &format!("h_{k}: {c}\n");
                    }
                }
                None => {
                    let s = log_power_series(order, limits.poly_series_order)?;
                    for (k, c) in s.coeffs().iter().enumerate() {
                        text += &format!("h_{k}: {}\n", c.display_in("a"));
                    }
                }
            }
            text
        }
        other => {
            return Err(
                Error::InvalidInput(format!("unknown series `{other}`; expected 2.14, 2.21, 2.27 or 2.29")).into()
            )
        }
    };
    Ok(Outcome::Ok(text))
}

fn oracle(what: OracleArg, p: &Params) -> CliResult<Outcome> {
    let value = match what {
        OracleArg::Perms => count_perms_by_cycles(p.parsed("n", None)?, p.parsed("k", None)?)?,
        OracleArg::Partitions => match p.raw("k") {
            Some(_) => count_set_partitions(p.parsed("n", None)?, p.parsed("k", None)?)?,
            None => bell(p.parsed("n", None)?)?,
        },
        OracleArg::Esym => elem_sym(p.parsed("n", None)?, p.parsed("k", None)?)?,
        OracleArg::Hsym => complete_hom(p.parsed("n", None)?, p.parsed("k", None)?)?,
        OracleArg::Omega => {
            let poset = if let Some(k) = p.raw("fence") {
                fence_poset(k.parse().map_err(|_| Error::InvalidInput(format!("fence: `{k}`")))?)?
            } else if let Some(n) = p.raw("chain") {
                Poset::chain(n.parse().map_err(|_| Error::InvalidInput(format!("chain: `{n}`")))?)
            } else if let Some(n) = p.raw("antichain") {
                Poset::antichain(n.parse().map_err(|_| Error::InvalidInput(format!("antichain: `{n}`")))?)
            } else if let Some(path) = p.raw("poset") {
                let text = fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?;
                Poset::parse(&text)?
            } else {
                return Err(Error::InvalidInput("omega needs one of fence=, chain=, antichain=, poset=".into()).into());
            };
            let strict: bool = p.parsed("strict", Some(false))?;
            if p.parsed("poly", Some(false))? {
                return Ok(Outcome::Ok(format!("{}\n", poset.order_poly(strict)?.display_in("n"))));
            }
            let n: i64 = p.parsed("n", None)?;
            if strict {
                poset.omega_bar(n)?
            } else {
                poset.omega(n)?
            }
        }
    };
    Ok(Outcome::Ok(format!("{value}\n")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code_of(result: std::result::Result<Outcome, CliError>) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = emit(result, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn outcomes_map_to_exit_codes() {
        assert_eq!(code_of(Ok(Outcome::Ok("x\n".into()))).0, EXIT_OK);
        let (code, out, _) = code_of(Ok(Outcome::VerifyFailed("FAIL a/b\n".into())));
        assert_eq!((code, out.as_str()), (EXIT_VERIFY_FAILED, "FAIL a/b\n"));
        let cap = Error::CapExceeded { what: "table", requested: 10, cap: 1 };
        let (code, _, err) = code_of(Err(CliError::Lib(cap)));
        assert_eq!(code, EXIT_CAP);
        assert!(err.starts_with("error: "));
        assert_eq!(code_of(Err(CliError::Lib(Error::InvalidInput("x".into())))).0, EXIT_USAGE);
    }
}
