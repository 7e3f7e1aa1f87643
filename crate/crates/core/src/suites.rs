//! Verification sweeps over the library's identities, each reported as a
//! pass/fail summary with its worst case. The CLI `verify` command runs
//! them; the acceptance tests assert on them. Tolerances are fixed here,
//! one per suite, with tighter per-check bounds where an identity warrants
//! them.

use num_complex::Complex64;

use crate::catalog::{self, BinomialSummand};
use crate::engine::{
    self, check_extension_q2, check_extension_q3, residue_class_sum, residue_sum_from_extension,
    weighted_sum, weighted_sum_from_extension, DomainPoint,
};
use crate::error::Result;
use crate::expr;
use crate::periodic::PeriodicWeight;
use crate::series::{
    residue_sum_series_decimate, residue_sum_series_dft, weighted_sum_series, TruncatedSeries,
};
use crate::special;

/// All suite names, in execution order.
pub const SUITE_NAMES: [&str; 10] = [
    "delta",
    "fact1",
    "extension",
    "closed-forms",
    "genfun",
    "prop34",
    "catalan",
    "binomial",
    "gauss",
    "parser",
];

/// Constant of the third-integer extension condition for the log family:
/// log(2 pi / 3^(3/2)).
pub fn log3_extension_constant() -> f64 {
    (2.0 * std::f64::consts::PI / 27f64.sqrt()).ln()
}

/// Options threaded through the suites.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Test hook: poke the canonical extensions so the condition checks fail.
    pub perturb: bool,
    /// Largest denominator in the Gauss-formula sweep.
    pub gauss_q_max: usize,
    /// Replace every per-check tolerance (user override; the defaults are
    /// the pinned values).
    pub tolerance_override: Option<f64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            perturb: false,
            gauss_q_max: 12,
            tolerance_override: None,
        }
    }
}

/// Summary of one suite run. `max_rel_err` is the scaled error
/// |got - want| / max(1, |want|).
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    pub worst_case: String,
    pub tolerance: f64,
    pub passed: bool,
}

struct Suite {
    name: &'static str,
    tolerance: f64,
    override_tol: Option<f64>,
    cases: usize,
    max_abs: f64,
    max_scaled: f64,
    worst: String,
    passed: bool,
}

impl Suite {
    fn new(name: &'static str, tolerance: f64, opts: &SuiteOptions) -> Self {
        Self {
            name,
            tolerance: opts.tolerance_override.unwrap_or(tolerance),
            override_tol: opts.tolerance_override,
            cases: 0,
            max_abs: 0.0,
            max_scaled: 0.0,
            worst: String::new(),
            passed: true,
        }
    }

    fn check_tol(
        &mut self,
        got: Complex64,
        want: Complex64,
        tol: f64,
        describe: impl FnOnce() -> String,
    ) {
        let tol = self.override_tol.unwrap_or(tol);
        self.cases += 1;
        let abs = (got - want).norm();
        let scaled = abs / 1.0f64.max(want.norm());
        self.max_abs = self.max_abs.max(abs);
        if scaled > self.max_scaled {
            self.max_scaled = scaled;
            self.worst = describe();
        }
        if scaled.is_nan() || scaled > tol || !got.is_finite() {
            self.passed = false;
        }
    }

    fn check(&mut self, got: Complex64, want: Complex64, describe: impl FnOnce() -> String) {
        self.check_tol(got, want, self.tolerance, describe);
    }

    fn check_real(&mut self, got: f64, want: f64, describe: impl FnOnce() -> String) {
        self.check(
            Complex64::new(got, 0.0),
            Complex64::new(want, 0.0),
            describe,
        );
    }

    fn check_bool(&mut self, got: bool, want: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if got != want {
            self.passed = false;
            self.max_scaled = self.max_scaled.max(1.0);
            self.max_abs = self.max_abs.max(1.0);
            self.worst = describe();
        }
    }

    fn fail(&mut self, describe: String) {
        self.cases += 1;
        self.passed = false;
        self.max_scaled = f64::INFINITY;
        self.max_abs = f64::INFINITY;
        self.worst = describe;
    }

    fn value(&mut self, result: Result<Complex64>, context: &str) -> Option<Complex64> {
        match result {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(format!("{context}: {e}"));
                None
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            cases: self.cases,
            max_abs_err: self.max_abs,
            max_rel_err: self.max_scaled,
            worst_case: self.worst,
            tolerance: self.tolerance,
            passed: self.passed && self.cases > 0,
        }
    }
}

/// Forward differences of the brute sums recover the summands:
/// delta S = g(n) f(n) and delta T_p = f(qn + p), n <= 200.
pub fn delta_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut suite = Suite::new("delta", 1e-12, opts);
    const N_MAX: u64 = 200;
    for entry in catalog::all() {
        let q = entry.modulus();
        let f = |k: u64| entry.family().term(k);

        let mut weighted = engine::CompensatedSum::new();
        let mut progressions = vec![engine::CompensatedSum::new(); q];
        for n in 0..=N_MAX {
            let before = weighted.value();
            weighted.add(entry.weight().eval(n as i64) * f(n));
            let delta = weighted.value() - before;
            suite.check(delta, entry.weight().eval(n as i64) * f(n), || {
                format!("{} delta S at n={n}", entry.id())
            });

            for (p, acc) in progressions.iter_mut().enumerate() {
                let before = acc.value();
                acc.add(f(q as u64 * n + p as u64));
                let delta = acc.value() - before;
                suite.check(delta, f(q as u64 * n + p as u64), || {
                    format!("{} delta T_{p} at n={n}", entry.id())
                });
            }
        }
    }
    suite.finish()
}

/// S_p(n) = T_p(residue_count(n)) and T_p(n) = S_p(qn), exactly, on
/// rational families for q <= 6, n <= 200.
pub fn fact1_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut suite = Suite::new("fact1", 0.0, opts);
    type Family = (&'static str, fn(u64) -> Complex64);
    let families: [Family; 3] = [
        ("linear", |k| Complex64::new(k as f64, 0.0)),
        ("square", |k| Complex64::new((k * k) as f64, 0.0)),
        ("reciprocal", |k| {
            Complex64::new(1.0 / (k as f64 + 1.0), 0.0)
        }),
    ];
    for (name, f) in families {
        for q in 2..=6usize {
            for p in 0..q {
                for n in 0..=200u64 {
                    let direct = residue_class_sum(f, q, p, n).unwrap();
                    let count = engine::residue_count(n, p, q).unwrap();
                    let converted = engine::progression_sum(f, q, p, count).unwrap();
                    suite.check(direct, converted, || {
                        format!("{name} S_{p}(n)=T_{p}(count) q={q} n={n}")
                    });
                }
                for n in 0..=50u64 {
                    let via = engine::progression_sum_via_residues(f, q, p, n).unwrap();
                    let direct = engine::progression_sum(f, q, p, n).unwrap();
                    suite.check(via, direct, || {
                        format!("{name} T_{p}(n)=S_{p}(qn) q={q} n={n}")
                    });
                }
            }
        }
    }
    suite.finish()
}

/// The extension form of S_p agrees with the direct residue sums for every
/// family that carries an anti-difference, n <= 300.
pub fn extension_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut suite = Suite::new("extension", 1e-10, opts);
    for entry in catalog::all() {
        if !entry.family().has_extension() {
            continue;
        }
        let q = entry.modulus();
        let f = |k: u64| entry.family().term(k);
        for p in 0..q {
            for n in 0..=300u64 {
                let Some(via) =
                    suite.value(residue_sum_from_extension(entry.family(), p, n), entry.id())
                else {
                    continue;
                };
                let direct = residue_class_sum(f, q, p, n).unwrap();
                suite.check(via, direct, || {
                    format!("{} S_{p}({n}) via extension", entry.id())
                });
            }
        }
        for n in 0..=300u64 {
            let Some(via) = suite.value(
                weighted_sum_from_extension(entry.weight(), entry.family(), n),
                entry.id(),
            ) else {
                continue;
            };
            let direct = entry.brute_sum(n);
            suite.check(via, direct, || {
                format!("{} S({n}) via extension", entry.id())
            });
        }
    }
    suite.finish()
}

/// Every closed form matches its brute sum for n <= 300, and the paired
/// variants agree with each other a decade tighter.
pub fn closed_forms_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut suite = Suite::new("closed-forms", 1e-9, opts);
    for entry in catalog::all() {
        if !entry.has_closed_form() {
            continue;
        }
        let start = u64::from(matches!(entry.id(), "log3" | "alt-harmonic"));
        for n in start..=300 {
            let Some(closed) = suite.value(entry.closed_sum(n), entry.id()) else {
                continue;
            };
            let brute = entry.brute_sum(n);
            suite.check(closed, brute, || format!("{} closed S({n})", entry.id()));
            if entry.has_alt_form() {
                let Some(alt) = suite.value(entry.closed_sum_alt(n), entry.id()) else {
                    continue;
                };
                suite.check(alt, brute, || format!("{} alt closed S({n})", entry.id()));
                suite.check_tol(alt, closed, 1e-10, || {
                    format!("{} variants at n={n}", entry.id())
                });
            }
        }
    }
    suite.finish()
}

/// Both generating-function routes match each other and the directly
/// computed residue sums for N = 64, q in 2..=5, every catalog sequence.
pub fn genfun_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut suite = Suite::new("genfun", 1e-10, opts);
    const ORDER: usize = 64;
    for entry in catalog::all() {
        let f = |k: u64| entry.family().term(k);
        let f_series = TruncatedSeries::from_sequence(f, ORDER);
        for q in 2..=5usize {
            for p in 0..q {
                let dft = residue_sum_series_dft(&f_series, q, p).unwrap();
                let decimated = residue_sum_series_decimate(&f_series, q, p).unwrap();
                for n in 0..ORDER {
                    suite.check_tol(dft.coeff(n), decimated.coeff(n), 1e-12, || {
                        format!("{} dft vs decimate q={q} p={p} n={n}", entry.id())
                    });
                    let direct = residue_class_sum(f, q, p, n as u64).unwrap();
                    suite.check(dft.coeff(n), direct, || {
                        format!("{} dft vs direct q={q} p={p} n={n}", entry.id())
                    });
                }
            }
        }
        // full weighted series against the brute weighted sums
        let weighted_series = weighted_sum_series(&f_series, entry.weight()).unwrap();
        for n in 0..ORDER {
            suite.check(weighted_series.coeff(n), entry.brute_sum(n as u64), || {
                format!("{} weighted coefficient n={n}", entry.id())
            });
        }
    }

    // specialized displays: coefficient of z^2
    let alt_f = TruncatedSeries::from_sequence(
        |n| {
            if n == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::new(1.0 / n as f64, 0.0)
            }
        },
        8,
    );
    let alternating = PeriodicWeight::from_real(&[1.0, -1.0]).unwrap();
    let s = weighted_sum_series(&alt_f, &alternating).unwrap();
    suite.check_tol(s.coeff(2), Complex64::new(-1.0, 0.0), 1e-12, || {
        "alternating 1/k z^2 coefficient".into()
    });

    let recip_f =
        TruncatedSeries::from_sequence(|n| Complex64::new(1.0 / (n as f64 + 1.0), 0.0), 8);
    let sin_weight = PeriodicWeight::from_real(&[0.0, 1.0, 0.0, -1.0]).unwrap();
    let s = weighted_sum_series(&recip_f, &sin_weight).unwrap();
    suite.check_tol(s.coeff(2), Complex64::new(0.5, 0.0), 1e-12, || {
        "sin weight 1/(k+1) z^2 coefficient".into()
    });

    suite.finish()
}

/// The canonical extensions satisfy all three equivalent conditions with
/// the expected constants; perturbed extensions fail all three. N = 100.
pub fn prop34_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut suite = Suite::new("prop34", 1e-10, opts);
    const N_MAX: u64 = 100;

    let alt = catalog::alt_harmonic();
    let alt_f = |k: u64| alt.family().term(k);
    let alt_t0 = |x: DomainPoint| alt.family().extension(0, x);
    let alt_t0_perturbed = |x: DomainPoint| {
        let v = alt.family().extension(0, x)?;
        Ok(if x.numerator() == 5 { v + 1.0 } else { v })
    };

    let log = catalog::log3();
    let log_f = |k: u64| log.family().term(k);
    let log_t0 = |x: DomainPoint| log.family().extension(0, x);
    let log_t0_perturbed = |x: DomainPoint| {
        let v = log.family().extension(0, x)?;
        Ok(if x.numerator() == 7 { v + 1.0 } else { v })
    };

    // canonical q = 2 extension: all conditions, constant -ln 2
    let canonical: &dyn Fn(DomainPoint) -> Result<Complex64> = if opts.perturb {
        &alt_t0_perturbed
    } else {
        &alt_t0
    };
    match check_extension_q2(canonical, alt_f, N_MAX) {
        Ok(check) => {
            suite.check_bool(check.constant_shift, true, || {
                "alt-harmonic condition (i)".into()
            });
            suite.check_bool(check.difference, true, || {
                "alt-harmonic condition (ii)".into()
            });
            suite.check_bool(check.progression_shift, true, || {
                "alt-harmonic condition (iii)".into()
            });
            suite.check(
                check.constant,
                Complex64::new(-std::f64::consts::LN_2, 0.0),
                || "alt-harmonic condition (i) constant".into(),
            );
        }
        Err(e) => suite.fail(format!("alt-harmonic check: {e}")),
    }

    // canonical q = 3 extension: all conditions, measured constant
    let canonical3: &dyn Fn(DomainPoint) -> Result<Complex64> = if opts.perturb {
        &log_t0_perturbed
    } else {
        &log_t0
    };
    match check_extension_q3(canonical3, log_f, N_MAX) {
        Ok(check) => {
            suite.check_bool(check.constant_shift, true, || "log3 condition (i)".into());
            suite.check_bool(check.difference, true, || "log3 condition (ii)".into());
            suite.check_bool(check.progression_shift, true, || {
                "log3 condition (iii)".into()
            });
            suite.check(
                check.constant,
                Complex64::new(log3_extension_constant(), 0.0),
                || "log3 condition (i) constant".into(),
            );
        }
        Err(e) => suite.fail(format!("log3 check: {e}")),
    }

    // the zero family trivially satisfies everything with constant 0
    let zero_t0 = |_: DomainPoint| Ok(Complex64::new(0.0, 0.0));
    let zero_f = |_: u64| Complex64::new(0.0, 0.0);
    match check_extension_q2(zero_t0, zero_f, N_MAX) {
        Ok(check) => {
            suite.check_bool(check.all_hold(), true, || "zero family conditions".into());
            suite.check(check.constant, Complex64::new(0.0, 0.0), || {
                "zero family constant".into()
            });
        }
        Err(e) => suite.fail(format!("zero family check: {e}")),
    }

    // perturbed extensions must fail every condition (the equivalence cuts
    // both ways)
    match check_extension_q2(alt_t0_perturbed, alt_f, N_MAX) {
        Ok(check) => {
            suite.check_bool(check.constant_shift, false, || {
                "perturbed alt condition (i)".into()
            });
            suite.check_bool(check.difference, false, || {
                "perturbed alt condition (ii)".into()
            });
            suite.check_bool(check.progression_shift, false, || {
                "perturbed alt condition (iii)".into()
            });
        }
        Err(e) => suite.fail(format!("perturbed alt check: {e}")),
    }
    match check_extension_q3(log_t0_perturbed, log_f, N_MAX) {
        Ok(check) => {
            suite.check_bool(check.constant_shift, false, || {
                "perturbed log3 condition (i)".into()
            });
            suite.check_bool(check.difference, false, || {
                "perturbed log3 condition (ii)".into()
            });
            suite.check_bool(check.progression_shift, false, || {
                "perturbed log3 condition (iii)".into()
            });
        }
        Err(e) => suite.fail(format!("perturbed log3 check: {e}")),
    }

    // the alternating closed route through the extension, spot-checked
    let prefix = |n: u64| {
        let mut acc = engine::CompensatedSum::new();
        for k in 0..n {
            acc.add(alt_f(k));
        }
        acc.value()
    };
    for n in [0u64, 1, 3, 10, 57] {
        match engine::alternating_sum_from_extension(alt_t0, prefix, n) {
            Ok(via) => {
                let direct = weighted_sum(alt_f, alt.weight(), n);
                suite.check(via, direct, || format!("alternating closed route n={n}"));
            }
            Err(e) => suite.fail(format!("alternating route n={n}: {e}")),
        }
    }

    suite.finish()
}

/// Catalan partial sums: the paper's decimal, and term regrouping against
/// the weighted inverse-square sum.
pub fn catalan_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut suite = Suite::new("catalan", 1e-8, opts);
    let value = catalog::catalan_partial_sum(100_000);
    suite.check_real(value, 0.915_965_594, || {
        "catalan series at 1e5 terms".into()
    });

    let entry = catalog::inv_square4();
    let brute = entry.brute_sum(400_000).re;
    suite.check_tol(
        Complex64::new(value, 0.0),
        Complex64::new(brute, 0.0),
        1e-10,
        || "catalan series vs weighted 1/k^2".into(),
    );

    suite.check_tol(
        Complex64::new(catalog::catalan_partial_sum(1), 0.0),
        Complex64::new(8.0 / 9.0, 0.0),
        1e-15,
        || "catalan first term".into(),
    );

    let mut previous = 0.0;
    for terms in [1u64, 10, 100, 1000, 10_000] {
        let v = catalog::catalan_partial_sum(terms);
        suite.check_bool(v > previous, true, || {
            format!("catalan monotone at {terms}")
        });
        previous = v;
    }
    suite.finish()
}

/// Binomial progression sums: closed forms vs exact brute sums for
/// m <= 30, q <= 8, both summands, plus the introduction's reduced form
/// and the row partition.
pub fn binomial_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut suite = Suite::new("binomial", 1e-9, opts);
    for m in 0..=30u64 {
        for q in 2..=8usize {
            for p in 0..q {
                for h in [BinomialSummand::One, BinomialSummand::ReciprocalShift] {
                    let closed = catalog::binomial_progression_closed(m, q, p, h).unwrap();
                    let brute = catalog::binomial_progression_brute(m, q, p, h).unwrap();
                    suite.check_real(closed, brute, || {
                        format!("binomial m={m} q={q} p={p} {h:?}")
                    });
                }
            }
            let mut total = 0.0;
            for p in 0..q {
                total +=
                    catalog::binomial_progression_closed(m, q, p, BinomialSummand::One).unwrap();
            }
            suite.check_real(total, 2f64.powi(m as i32), || {
                format!("row partition m={m} q={q}")
            });
        }
        // the introduction's reduced display for q = 3, p = 1
        let intro = (2f64.powi(m as i32 + 2)
            - 3.0 * (m as f64 * std::f64::consts::PI / 3.0).cos()
            - (5.0 * m as f64 * std::f64::consts::PI / 3.0).cos())
            / (6.0 * (m as f64 + 1.0));
        let brute =
            catalog::binomial_progression_brute(m, 3, 1, BinomialSummand::ReciprocalShift).unwrap();
        suite.check_real(intro, brute, || format!("intro closed form m={m}"));
    }

    // non-integer row: the alternating and odd-index prefix identities
    for z in [
        Complex64::new(3.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(2.5, 0.5),
    ] {
        for n in 0..=10u64 {
            suite.check_bool(
                catalog::alternating_binomial_prefix(z, n).is_ok(),
                true,
                || format!("alternating binomial prefix z={z} n={n}"),
            );
            suite.check_bool(catalog::odd_binomial_prefix(z, n).is_ok(), true, || {
                format!("odd binomial prefix z={z} n={n}")
            });
        }
    }
    suite.finish()
}

/// Gauss's fractional-harmonic formula against the digamma route for all
/// 1 <= p < q <= q_max, plus the supporting identities at their grids.
pub fn gauss_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut suite = Suite::new("gauss", 1e-10, opts);
    let q_max = opts.gauss_q_max.max(2);
    for q in 2..=q_max {
        for p in 1..q {
            let closed = special::gauss_harmonic(p, q).unwrap();
            let series = special::harmonic_real(p as f64 / q as f64).unwrap();
            suite.check_real(closed, series, || format!("gauss p={p} q={q}"));

            let (s_sin, s_cos, s_jsin) = special::trig_sums(p, q).unwrap();
            let angle = p as f64 * std::f64::consts::PI / q as f64;
            let cot = angle.cos() / angle.sin();
            suite.check_real(s_sin, 0.0, || format!("trig sin sum p={p} q={q}"));
            suite.check_real(s_cos, -1.0, || format!("trig cos sum p={p} q={q}"));
            suite.check_real(s_jsin, -(q as f64) / 2.0 * cot, || {
                format!("trig weighted sum p={p} q={q}")
            });
        }
        let product = special::sine_product(q).unwrap();
        let closed = q as f64 * 2f64.powi(1 - q as i32);
        suite.check_real(product, closed, || format!("sine product q={q}"));
    }

    for i in 0..100 {
        let x = -0.87 + 0.13 * i as f64;
        let near_pole = [x, x / 2.0, (x - 1.0) / 2.0]
            .iter()
            .any(|&a| a < -0.5 && (a - a.round()).abs() < 1e-3);
        if !near_pole {
            suite.check_real(special::duplication_residual(x).unwrap(), 0.0, || {
                format!("duplication at x={x}")
            });
        }
        let y = 0.04 + 0.11 * i as f64;
        suite.check_real(special::multiplication_residual(y, 4).unwrap(), 0.0, || {
            format!("multiplication by 4 at x={y}")
        });
    }
    suite.finish()
}

/// The paper's three weights parse, evaluate, and report their periods.
pub fn parser_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut suite = Suite::new("parser", 1e-12, opts);
    let cases: [(&str, usize, &[f64]); 3] = [
        ("sin(k*pi/2)", 4, &[0.0, 1.0, 0.0, -1.0]),
        ("cos(2*k*pi/3)", 3, &[1.0, -0.5, -0.5]),
        ("(-1)^k", 2, &[1.0, -1.0]),
    ];
    for (src, want_q, period) in cases {
        let parsed = match expr::parse_str(src) {
            Ok(e) => e,
            Err(e) => {
                suite.fail(format!("parse {src}: {e}"));
                continue;
            }
        };
        match expr::detect_period(&parsed, 12, expr::PERIOD_TOLERANCE) {
            Ok(q) => suite.check_bool(q == want_q, true, || {
                format!("{src} period {q} != {want_q}")
            }),
            Err(e) => suite.fail(format!("period of {src}: {e}")),
        }
        for (k, &want) in period.iter().enumerate() {
            match parsed.eval(k as i64) {
                Ok(v) => suite.check(v, Complex64::new(want, 0.0), || format!("{src} at k={k}")),
                Err(e) => suite.fail(format!("eval {src} at k={k}: {e}")),
            }
        }
        match expr::sample_weight(&parsed, 12, expr::PERIOD_TOLERANCE) {
            Ok(weight) => {
                for k in 0..=100i64 {
                    let direct = parsed.eval(k).unwrap();
                    suite.check(weight.eval(k), direct, || format!("{src} sampled at k={k}"));
                }
            }
            Err(e) => suite.fail(format!("sample {src}: {e}")),
        }
    }
    suite.finish()
}

/// Run one suite by name.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Option<SuiteReport> {
    Some(match name {
        "delta" => delta_suite(opts),
        "fact1" => fact1_suite(opts),
        "extension" => extension_suite(opts),
        "closed-forms" => closed_forms_suite(opts),
        "genfun" => genfun_suite(opts),
        "prop34" => prop34_suite(opts),
        "catalan" => catalan_suite(opts),
        "binomial" => binomial_suite(opts),
        "gauss" => gauss_suite(opts),
        "parser" => parser_suite(opts),
        _ => return None,
    })
}

/// Run every suite in order.
pub fn run_all(opts: &SuiteOptions) -> Vec<SuiteReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, opts).expect("known suite name"))
        .collect()
}
