//! Command-line front end: weighted-sum tables, the verification suites,
//! the Gauss formula, generating-function comparisons, and binomial
//! progression sums.
//!
//! Exit codes: 0 all checks pass, 1 a numerical check failed, 2 usage or
//! configuration error.

mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use periodic_sums::catalog::{self, BinomialSummand, CatalogEntry};
use periodic_sums::engine::{residue_class_sum, weighted_sum};
use periodic_sums::expr;
use periodic_sums::periodic::PeriodicWeight;
use periodic_sums::series::{
    check_order, residue_sum_series_decimate, residue_sum_series_dft, weighted_sum_series,
    TruncatedSeries,
};
use periodic_sums::special::{gauss_harmonic, harmonic_real};
use periodic_sums::suites::{run_all, run_suite, SuiteOptions, SUITE_NAMES};
use periodic_sums::{Complex64, Error};

use report::{Cell, Format, Report};

const DEFAULT_TOLERANCE: f64 = 1e-9;
const TOLERANCE_ENV: &str = "PERIODIC_SUM_TOL";

#[derive(Parser)]
#[command(
    name = "periodic-sums",
    version,
    about = "Convert sums weighted by periodic sequences into arithmetic-progression sums and verify the identities numerically"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Pass/fail tolerance (default 1e-9, or the PERIODIC_SUM_TOL
    /// environment variable; the flag wins). `verify` keeps its per-suite
    /// pinned tolerances unless one is given explicitly.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Write the report to a file instead; .json and .csv extensions pick
    /// the format.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Weighted prefix sums: brute force against the catalog closed form
    Sum {
        /// Catalog family id (see `catalog`)
        #[arg(long)]
        family: Option<String>,
        /// Sequence expression f(k), e.g. "1/(k+1)"
        #[arg(long)]
        f: Option<String>,
        /// Weight expression g(k), e.g. "sin(k*pi/2)"
        #[arg(long)]
        weight: Option<String>,
        /// Single index or inclusive range, e.g. 7 or 0..10
        #[arg(long)]
        n: String,
        /// Period search bound for weight expressions
        #[arg(long, default_value_t = 12)]
        qmax: usize,
    },
    /// Run the verification suites (the CI entry point)
    Verify {
        /// Run one suite only: delta, fact1, extension, closed-forms,
        /// genfun, prop34, catalan, binomial, gauss, or parser
        #[arg(long)]
        suite: Option<String>,
        /// Largest denominator in the Gauss-formula sweep
        #[arg(long, default_value_t = 12)]
        qmax: usize,
        /// Test hook: perturb the canonical extensions to force a failure
        #[arg(long, hide = true)]
        perturb: bool,
    },
    /// Gauss's closed form for H_{p/q} against the digamma route
    Gauss { p: usize, q: usize },
    /// Generating-function routes to residue or weighted sums
    Gf {
        /// Catalog family id supplying f (and the weight if needed)
        #[arg(long)]
        family: Option<String>,
        /// Sequence expression f(k)
        #[arg(long)]
        f: Option<String>,
        /// Weight expression g(k) for the weighted comparison
        #[arg(long)]
        weight: Option<String>,
        /// Decimation modulus (defaults to the family's)
        #[arg(long)]
        q: Option<usize>,
        /// Residue class; omit to compare the full weighted series
        #[arg(long)]
        p: Option<usize>,
        /// Series order (number of coefficients, at most 4096)
        #[arg(long = "N", default_value_t = 64)]
        order: usize,
        /// Period search bound for weight expressions
        #[arg(long, default_value_t = 12)]
        qmax: usize,
    },
    /// Binomial progression sums: closed form against exact brute force
    Binomial {
        /// Binomial row
        #[arg(long)]
        m: u64,
        /// Progression modulus
        #[arg(long)]
        q: usize,
        /// Progression offset
        #[arg(long)]
        p: usize,
        /// Summand choice
        #[arg(long, value_enum)]
        h: SummandArg,
    },
    /// List the catalog families
    Catalog,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SummandArg {
    /// h(k) = 1
    One,
    /// h(k) = 1/(k+1)
    Recip,
}

impl From<SummandArg> for BinomialSummand {
    fn from(value: SummandArg) -> Self {
        match value {
            SummandArg::One => BinomialSummand::One,
            SummandArg::Recip => BinomialSummand::ReciprocalShift,
        }
    }
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Inconsistency(_) => 1,
            _ => 2,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(err.code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let (tolerance, explicit_tol) = resolve_tolerance(cli.tol)?;
    let (report, code) = match &cli.command {
        Command::Sum {
            family,
            f,
            weight,
            n,
            qmax,
        } => cmd_sum(
            family.as_deref(),
            f.as_deref(),
            weight.as_deref(),
            n,
            *qmax,
            tolerance,
        )?,
        Command::Verify {
            suite,
            qmax,
            perturb,
        } => cmd_verify(
            suite.as_deref(),
            *qmax,
            *perturb,
            explicit_tol.then_some(tolerance),
        )?,
        Command::Gauss { p, q } => cmd_gauss(*p, *q, tolerance)?,
        Command::Gf {
            family,
            f,
            weight,
            q,
            p,
            order,
            qmax,
        } => cmd_gf(
            family.as_deref(),
            f.as_deref(),
            weight.as_deref(),
            *q,
            *p,
            *order,
            *qmax,
            tolerance,
        )?,
        Command::Binomial { m, q, p, h } => cmd_binomial(*m, *q, *p, (*h).into(), tolerance)?,
        Command::Catalog => cmd_catalog()?,
    };

    let format = match &cli.out {
        Some(path) => match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            Some("csv") => Format::Csv,
            _ => cli.format.into(),
        },
        None => cli.format.into(),
    };
    let rendered = report.render(format);
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(code)
}

impl From<FormatArg> for Format {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

fn resolve_tolerance(flag: Option<f64>) -> Result<(f64, bool), CliError> {
    let (value, explicit) = match flag {
        Some(t) => (t, true),
        None => match std::env::var(TOLERANCE_ENV) {
            Ok(raw) => {
                let t = raw.parse::<f64>().map_err(|_| {
                    CliError::usage(format!("cannot parse {TOLERANCE_ENV}=`{raw}` as a number"))
                })?;
                (t, true)
            }
            Err(_) => (DEFAULT_TOLERANCE, false),
        },
    };
    if !value.is_finite() || value <= 0.0 {
        return Err(CliError::usage(format!(
            "tolerance must be positive, got {value}"
        )));
    }
    Ok((value, explicit))
}

fn parse_index_range(text: &str) -> Result<(u64, u64), CliError> {
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| CliError::usage(format!("cannot parse index `{s}`")))
    };
    if let Some((a, b)) = text.split_once("..") {
        let (start, end) = (parse(a)?, parse(b)?);
        if end < start {
            return Err(CliError::usage(format!("empty range `{text}`")));
        }
        Ok((start, end))
    } else {
        let n = parse(text)?;
        Ok((n, n))
    }
}

fn lookup_family(id: &str) -> Result<CatalogEntry, CliError> {
    catalog::by_id(id).ok_or_else(|| {
        CliError::usage(format!(
            "unknown family `{id}` (known: {})",
            catalog::IDS.join(", ")
        ))
    })
}

/// Resolve the sequence: either a catalog family's term or a parsed
/// expression, pre-evaluated up to `max_index` inclusive so evaluation
/// errors surface as configuration errors.
fn resolve_sequence(
    entry: Option<&CatalogEntry>,
    f_expr: Option<&str>,
    max_index: u64,
) -> Result<Vec<Complex64>, CliError> {
    match (entry, f_expr) {
        (Some(_), Some(_)) => Err(CliError::usage(
            "give either --family or --f, not both".to_string(),
        )),
        (Some(e), None) => Ok((0..=max_index).map(|k| e.family().term(k)).collect()),
        (None, Some(src)) => {
            let parsed = expr::parse_str(src)?;
            Ok((0..=max_index)
                .map(|k| parsed.eval(k as i64))
                .collect::<Result<_, _>>()?)
        }
        (None, None) => Err(CliError::usage("need --family or --f".to_string())),
    }
}

fn resolve_weight(
    entry: Option<&CatalogEntry>,
    weight_expr: Option<&str>,
    q_max: usize,
) -> Result<PeriodicWeight, CliError> {
    match weight_expr {
        Some(src) => {
            let parsed = expr::parse_str(src)?;
            let weight = expr::sample_weight(&parsed, q_max, expr::PERIOD_TOLERANCE)?;
            if let Some(e) = entry {
                if weight.period() != e.modulus() {
                    return Err(CliError::usage(format!(
                        "weight period {} does not match family `{}` (q = {})",
                        weight.period(),
                        e.id(),
                        e.modulus()
                    )));
                }
            }
            Ok(weight)
        }
        None => match entry {
            Some(e) => Ok(e.weight().clone()),
            None => Err(CliError::usage(
                "need --weight when no family is given".to_string(),
            )),
        },
    }
}

fn complex_cells(value: Complex64) -> [Cell; 2] {
    [Cell::Num(value.re), Cell::Num(value.im)]
}

fn cmd_sum(
    family: Option<&str>,
    f_expr: Option<&str>,
    weight_expr: Option<&str>,
    n_text: &str,
    q_max: usize,
    tolerance: f64,
) -> Result<(Report, i32), CliError> {
    let (start, end) = parse_index_range(n_text)?;
    let entry = family.map(lookup_family).transpose()?;
    let values = resolve_sequence(entry.as_ref(), f_expr, end)?;
    let weight = resolve_weight(entry.as_ref(), weight_expr, q_max)?;

    let mut report = Report::new("sum");
    if let Some(e) = &entry {
        report.param("family", e.id());
    }
    if let Some(src) = f_expr {
        report.param("f", src);
    }
    if let Some(src) = weight_expr {
        report.param("weight", src);
    }
    report.param("n", n_text);
    report.param("tol", tolerance);
    report.columns = vec![
        "n",
        "brute_re",
        "brute_im",
        "closed_re",
        "closed_im",
        "abs_err",
    ];

    let has_closed = entry.as_ref().is_some_and(|e| e.has_closed_form());
    for n in start..=end {
        let brute = weighted_sum(|k| values[k as usize], &weight, n);
        let mut row = vec![Cell::Int(n as i64)];
        row.extend(complex_cells(brute));
        if has_closed {
            let closed = entry.as_ref().unwrap().closed_sum(n)?;
            let abs_err = (brute - closed).norm();
            row.extend(complex_cells(closed));
            row.push(Cell::Num(abs_err));
            report.record_error(abs_err, closed.norm(), tolerance);
        } else {
            row.extend([Cell::Empty, Cell::Empty, Cell::Empty]);
        }
        report.rows.push(row);
    }
    // mismatches are data here, not a failure exit
    Ok((report, 0))
}

fn cmd_verify(
    suite: Option<&str>,
    q_max: usize,
    perturb: bool,
    tolerance_override: Option<f64>,
) -> Result<(Report, i32), CliError> {
    let opts = SuiteOptions {
        perturb,
        gauss_q_max: q_max,
        tolerance_override,
    };
    let suites = match suite {
        Some(name) => vec![run_suite(name, &opts).ok_or_else(|| {
            CliError::usage(format!(
                "unknown suite `{name}` (known: {})",
                SUITE_NAMES.join(", ")
            ))
        })?],
        None => run_all(&opts),
    };

    let mut report = Report::new("verify");
    if let Some(name) = suite {
        report.param("suite", name);
    }
    report.param("qmax", q_max);
    if perturb {
        report.param("perturb", true);
    }
    report.columns = vec![
        "suite",
        "cases",
        "max_abs_err",
        "max_rel_err",
        "tolerance",
        "passed",
        "worst_case",
    ];
    let mut all_passed = true;
    for s in &suites {
        report.rows.push(vec![
            Cell::Text(s.name.to_string()),
            Cell::Int(s.cases as i64),
            Cell::Num(s.max_abs_err),
            Cell::Num(s.max_rel_err),
            Cell::Num(s.tolerance),
            Cell::Bool(s.passed),
            if s.passed {
                Cell::Empty
            } else {
                Cell::Text(s.worst_case.clone())
            },
        ]);
        report.max_abs_err = report.max_abs_err.max(s.max_abs_err);
        report.max_rel_err = report.max_rel_err.max(s.max_rel_err);
        all_passed &= s.passed;
    }
    report.passed = all_passed;
    Ok((report, i32::from(!all_passed)))
}

fn cmd_gauss(p: usize, q: usize, tolerance: f64) -> Result<(Report, i32), CliError> {
    let closed = gauss_harmonic(p, q)?;
    let oracle = harmonic_real(p as f64 / q as f64)?;
    let abs_err = (closed - oracle).abs();

    let mut report = Report::new("gauss");
    report.param("p", p);
    report.param("q", q);
    report.param("tol", tolerance);
    report.columns = vec!["p", "q", "closed", "oracle", "abs_err"];
    report.rows.push(vec![
        Cell::Int(p as i64),
        Cell::Int(q as i64),
        Cell::Num(closed),
        Cell::Num(oracle),
        Cell::Num(abs_err),
    ]);
    report.record_error(abs_err, oracle, tolerance);
    let code = i32::from(!report.passed);
    Ok((report, code))
}

#[allow(clippy::too_many_arguments)]
fn cmd_gf(
    family: Option<&str>,
    f_expr: Option<&str>,
    weight_expr: Option<&str>,
    q_arg: Option<usize>,
    p_arg: Option<usize>,
    order: usize,
    q_max: usize,
    tolerance: f64,
) -> Result<(Report, i32), CliError> {
    check_order(order)?;
    let entry = family.map(lookup_family).transpose()?;
    let values = resolve_sequence(entry.as_ref(), f_expr, order as u64)?;
    let f = |k: u64| values[k as usize];
    let f_series = TruncatedSeries::from_sequence(f, order);

    let mut report = Report::new("gf");
    if let Some(e) = &entry {
        report.param("family", e.id());
    }
    if let Some(src) = f_expr {
        report.param("f", src);
    }
    report.param("N", order);
    report.param("tol", tolerance);

    match p_arg {
        Some(p) => {
            let q = q_arg
                .or_else(|| entry.as_ref().map(|e| e.modulus()))
                .ok_or_else(|| CliError::usage("need --q (or --family) with --p".to_string()))?;
            report.param("q", q);
            report.param("p", p);
            let dft = residue_sum_series_dft(&f_series, q, p)?;
            let decimated = residue_sum_series_decimate(&f_series, q, p)?;
            report.columns = vec![
                "n",
                "direct_re",
                "direct_im",
                "dft_re",
                "dft_im",
                "decimate_re",
                "decimate_im",
                "abs_err",
            ];
            for n in 0..order {
                let direct = residue_class_sum(f, q, p, n as u64)?;
                let err = (dft.coeff(n) - direct)
                    .norm()
                    .max((decimated.coeff(n) - direct).norm())
                    .max((dft.coeff(n) - decimated.coeff(n)).norm());
                let mut row = vec![Cell::Int(n as i64)];
                row.extend(complex_cells(direct));
                row.extend(complex_cells(dft.coeff(n)));
                row.extend(complex_cells(decimated.coeff(n)));
                row.push(Cell::Num(err));
                report.rows.push(row);
                report.record_error(err, direct.norm(), tolerance);
            }
        }
        None => {
            if q_arg.is_some() {
                return Err(CliError::usage(
                    "--q selects a residue mode and needs --p; omit both for the weighted comparison",
                ));
            }
            let weight = resolve_weight(entry.as_ref(), weight_expr, q_max)?;
            if let Some(src) = weight_expr {
                report.param("weight", src);
            }
            report.param("q", weight.period());
            let series = weighted_sum_series(&f_series, &weight)?;
            report.columns = vec![
                "n",
                "brute_re",
                "brute_im",
                "series_re",
                "series_im",
                "abs_err",
            ];
            for n in 0..order {
                let brute = weighted_sum(f, &weight, n as u64);
                let err = (series.coeff(n) - brute).norm();
                let mut row = vec![Cell::Int(n as i64)];
                row.extend(complex_cells(brute));
                row.extend(complex_cells(series.coeff(n)));
                row.push(Cell::Num(err));
                report.rows.push(row);
                report.record_error(err, brute.norm(), tolerance);
            }
        }
    }
    let code = i32::from(!report.passed);
    Ok((report, code))
}

fn cmd_binomial(
    m: u64,
    q: usize,
    p: usize,
    h: BinomialSummand,
    tolerance: f64,
) -> Result<(Report, i32), CliError> {
    let closed = catalog::binomial_progression_closed(m, q, p, h)?;
    let brute = catalog::binomial_progression_brute(m, q, p, h)?;
    let abs_err = (closed - brute).abs();
    let rel_err = abs_err / 1.0f64.max(brute.abs());

    let mut report = Report::new("binomial");
    report.param("m", m);
    report.param("q", q);
    report.param("p", p);
    report.param("h", format!("{h:?}"));
    report.param("tol", tolerance);
    report.columns = vec!["m", "q", "p", "closed", "brute", "abs_err", "rel_err"];
    report.rows.push(vec![
        Cell::Int(m as i64),
        Cell::Int(q as i64),
        Cell::Int(p as i64),
        Cell::Num(closed),
        Cell::Num(brute),
        Cell::Num(abs_err),
        Cell::Num(rel_err),
    ]);
    report.record_error(abs_err, brute, tolerance);
    let code = i32::from(!report.passed);
    Ok((report, code))
}

fn cmd_catalog() -> Result<(Report, i32), CliError> {
    let mut report = Report::new("catalog");
    report.columns = vec![
        "id",
        "q",
        "weight",
        "closed_form",
        "alt_form",
        "extension",
        "description",
    ];
    for entry in catalog::all() {
        let weight: Vec<String> = entry
            .weight()
            .basis_coefficients()
            .iter()
            .map(|c| {
                if c.im == 0.0 {
                    format!("{}", c.re)
                } else {
                    format!("{}", c)
                }
            })
            .collect();
        report.rows.push(vec![
            Cell::Text(entry.id().to_string()),
            Cell::Int(entry.modulus() as i64),
            Cell::Text(format!("[{}]", weight.join(" "))),
            Cell::Bool(entry.has_closed_form()),
            Cell::Bool(entry.has_alt_form()),
            Cell::Bool(entry.family().has_extension()),
            Cell::Text(entry.description().to_string()),
        ]);
    }
    Ok((report, 0))
}
