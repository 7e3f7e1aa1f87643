//! Brute-force evaluators for weighted sums, residue-class sums, and
//! arithmetic-progression sums, together with the conversion formulas
//! connecting them.
//!
//! The three sum shapes, for f on the naturals and a q-periodic weight g:
//!
//! ```text
//! weighted_sum        S(n)   = sum_{k<n} g(k) f(k)
//! residue_class_sum   S_p(n) = sum_{k<n, k = p (mod q)} f(k)
//! progression_sum     T_p(n) = sum_{k<n} f(qk + p)
//! ```
//!
//! The conversions: S_p(n) = T_p(residue_count(n, p, q)), T_p(n) = S_p(qn),
//! and the extension form that rewrites S_p(n) through any extension of T_p
//! to the rational grid D_p = {(m - p)/q : m in N}.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::periodic::{check_residue, is_residue, PeriodicWeight};

/// Tolerance for the extension-condition checkers.
pub const EXTENSION_CONDITION_TOLERANCE: f64 = 1e-10;

/// Kahan-style compensated accumulator; long tails (harmonic, Catalan)
/// need the compensation once sums run past ~1e4 terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    compensation: Complex64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: Complex64) {
        let adjusted = term - self.compensation;
        let next = self.sum + adjusted;
        self.compensation = (next - self.sum) - adjusted;
        self.sum = next;
    }

    pub fn value(&self) -> Complex64 {
        self.sum
    }
}

/// A point of the extension domain D_p = {(m - p)/q : m in N}, kept as an
/// exact rational so half- and third-integer points compare exactly
/// instead of through float keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomainPoint {
    numerator: i64,
    denominator: i64,
}

impl DomainPoint {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator >= 1, "denominator must be positive");
        Self {
            numerator,
            denominator,
        }
    }

    pub fn numerator(self) -> i64 {
        self.numerator
    }

    pub fn denominator(self) -> i64 {
        self.denominator
    }

    pub fn value(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    pub fn is_zero(self) -> bool {
        self.numerator == 0
    }

    /// The point shifted by an integer: x + k.
    pub fn shifted(self, k: i64) -> Self {
        Self::new(self.numerator + k * self.denominator, self.denominator)
    }
}

pub type SequenceFn = dyn Fn(u64) -> Complex64 + Send + Sync;
pub type ExtensionFn = dyn Fn(usize, DomainPoint) -> Result<Complex64> + Send + Sync;

/// A named sequence f together with the modulus q it is decimated by and,
/// when available, an anti-difference extension T_p+ on the rational grid.
pub struct SequenceFamily {
    name: String,
    modulus: usize,
    term: Box<SequenceFn>,
    extension: Option<Box<ExtensionFn>>,
}

impl SequenceFamily {
    pub fn new(
        name: impl Into<String>,
        modulus: usize,
        term: impl Fn(u64) -> Complex64 + Send + Sync + 'static,
    ) -> Result<Self> {
        crate::periodic::check_period(modulus)?;
        Ok(Self {
            name: name.into(),
            modulus,
            term: Box::new(term),
            extension: None,
        })
    }

    pub fn with_extension(
        mut self,
        extension: impl Fn(usize, DomainPoint) -> Result<Complex64> + Send + Sync + 'static,
    ) -> Self {
        self.extension = Some(Box::new(extension));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn term(&self, k: u64) -> Complex64 {
        (self.term)(k)
    }

    pub fn has_extension(&self) -> bool {
        self.extension.is_some()
    }

    /// T_p+ at a grid point; fails loudly when the family carries no
    /// extension rather than falling back to brute force.
    pub fn extension(&self, p: usize, x: DomainPoint) -> Result<Complex64> {
        check_residue(p, self.modulus)?;
        match &self.extension {
            Some(ext) => ext(p, x),
            None => Err(Error::UnsupportedFamily(format!(
                "family `{}` has no anti-difference extension",
                self.name
            ))),
        }
    }
}

impl std::fmt::Debug for SequenceFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SequenceFamily")
            .field("name", &self.name)
            .field("modulus", &self.modulus)
            .field("has_extension", &self.extension.is_some())
            .finish()
    }
}

/// S(n) = sum_{k<n} g(k) f(k).
pub fn weighted_sum(f: impl Fn(u64) -> Complex64, weight: &PeriodicWeight, n: u64) -> Complex64 {
    let mut acc = CompensatedSum::new();
    for k in 0..n {
        acc.add(weight.eval(k as i64) * f(k));
    }
    acc.value()
}

/// T_p(n) = sum_{k<n} f(qk + p).
pub fn progression_sum(
    f: impl Fn(u64) -> Complex64,
    q: usize,
    p: usize,
    n: u64,
) -> Result<Complex64> {
    check_residue(p, q)?;
    let mut acc = CompensatedSum::new();
    for k in 0..n {
        acc.add(f(q as u64 * k + p as u64));
    }
    Ok(acc.value())
}

/// S_p(n) = sum_{k<n} g0(k - p) f(k), the part of the plain prefix sum
/// supported on the residue class p mod q.
pub fn residue_class_sum(
    f: impl Fn(u64) -> Complex64,
    q: usize,
    p: usize,
    n: u64,
) -> Result<Complex64> {
    check_residue(p, q)?;
    let mut acc = CompensatedSum::new();
    for k in 0..n {
        if is_residue(k as i64, p, q) {
            acc.add(f(k));
        }
    }
    Ok(acc.value())
}

/// Forward difference (delta h)(n) = h(n+1) - h(n).
pub fn forward_difference(h: impl Fn(u64) -> Complex64, n: u64) -> Complex64 {
    h(n + 1) - h(n)
}

/// Number of k < n with k = p (mod q), i.e. floor((n-p-1)/q) + 1 with
/// floored division. This is the index at which the progression sum
/// matches the residue-class sum: S_p(n) = T_p(residue_count(n, p, q)).
pub fn residue_count(n: u64, p: usize, q: usize) -> Result<u64> {
    check_residue(p, q)?;
    let count = (n as i64 - p as i64 - 1).div_euclid(q as i64) + 1;
    Ok(count.max(0) as u64)
}

/// S_p(n) evaluated through the family's anti-difference extension:
/// sum_{k=0}^{q-1} g0(n+k-p) T_p+((n+k-p)/q). Summands with a negative
/// numerator never satisfy the indicator and are skipped.
pub fn residue_sum_from_extension(family: &SequenceFamily, p: usize, n: u64) -> Result<Complex64> {
    let q = family.modulus();
    check_residue(p, q)?;
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..q {
        let numerator = n as i64 + k as i64 - p as i64;
        if numerator >= 0 && is_residue(numerator, 0, q) {
            total += family.extension(p, DomainPoint::new(numerator, q as i64))?;
        }
    }
    Ok(total)
}

/// T_p(n) computed the other way around, as S_p(qn).
pub fn progression_sum_via_residues(
    f: impl Fn(u64) -> Complex64,
    q: usize,
    p: usize,
    n: u64,
) -> Result<Complex64> {
    residue_class_sum(f, q, p, q as u64 * n)
}

/// S(n) = sum_p g(p) S_p(n) with every S_p taken through the extension.
/// Only residues with a nonzero weight coefficient are converted, so an
/// all-zero weight needs no extension at all.
pub fn weighted_sum_from_extension(
    weight: &PeriodicWeight,
    family: &SequenceFamily,
    n: u64,
) -> Result<Complex64> {
    if weight.period() != family.modulus() {
        return Err(Error::InvalidParameter(format!(
            "weight period {} does not match family modulus {}",
            weight.period(),
            family.modulus()
        )));
    }
    let mut total = Complex64::new(0.0, 0.0);
    for (p, &coeff) in weight.basis_coefficients().iter().enumerate() {
        if coeff.re == 0.0 && coeff.im == 0.0 {
            continue;
        }
        total += coeff * residue_sum_from_extension(family, p, n)?;
    }
    Ok(total)
}

/// The q = 2 alternating sum sum_{k<n} (-1)^k f(k) computed from the even
/// progression's extension and the plain prefix sum:
/// (T0+(n/2) + T0+((n+1)/2) - S_f(n)) + (-1)^n (T0+(n/2) - T0+((n+1)/2)).
pub fn alternating_sum_from_extension(
    t0_plus: impl Fn(DomainPoint) -> Result<Complex64>,
    prefix_sum: impl Fn(u64) -> Complex64,
    n: u64,
) -> Result<Complex64> {
    let half_n = t0_plus(DomainPoint::new(n as i64, 2))?;
    let half_n1 = t0_plus(DomainPoint::new(n as i64 + 1, 2))?;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(half_n + half_n1 - prefix_sum(n) + sign * (half_n - half_n1))
}

/// Result of checking the equivalent characterizations of an extension
/// that absorbs the plain prefix sum into a constant.
#[derive(Debug, Clone, Copy)]
pub struct ExtensionCheck {
    /// T0+(n/q) + ... + T0+((n+q-1)/q) - S_f(n) is constant.
    pub constant_shift: bool,
    /// The extension's unit difference reproduces f off the 0 residue.
    pub difference: bool,
    /// T0+(n + p/q) - T_p(n) is constant for every p >= 1.
    pub progression_shift: bool,
    /// The constant of the first condition, taken at n = 0.
    pub constant: Complex64,
}

impl ExtensionCheck {
    pub fn all_hold(&self) -> bool {
        self.constant_shift && self.difference && self.progression_shift
    }

    pub fn none_hold(&self) -> bool {
        !self.constant_shift && !self.difference && !self.progression_shift
    }
}

/// Check the three equivalent conditions for a q = 2 extension T0+ of the
/// even progression sum of f, over n = 0..=n_max at tolerance 1e-10:
/// (i) T0+(n/2) + T0+((n+1)/2) - S_f(n) constant,
/// (ii) T0+(n/2 + 1) - T0+(n/2) = f(n) for odd n,
/// (iii) T0+(n + 1/2) - T_1(n) constant.
pub fn check_extension_q2(
    t0_plus: impl Fn(DomainPoint) -> Result<Complex64>,
    f: impl Fn(u64) -> Complex64,
    n_max: u64,
) -> Result<ExtensionCheck> {
    let tol = EXTENSION_CONDITION_TOLERANCE;
    let at = |num: i64| t0_plus(DomainPoint::new(num, 2));

    let constant = at(0)? + at(1)?;
    let mut constant_shift = true;
    let mut difference = true;
    let mut progression_shift = true;

    let mut prefix = CompensatedSum::new();
    let mut odd_progression = CompensatedSum::new();
    let shift_reference = at(1)? - odd_progression.value();

    for n in 0..=n_max {
        let value = at(n as i64)? + at(n as i64 + 1)? - prefix.value();
        if (value - constant).norm() > tol {
            constant_shift = false;
        }
        if n % 2 == 1 {
            let step = at(n as i64 + 2)? - at(n as i64)?;
            if (step - f(n)).norm() > tol {
                difference = false;
            }
        }
        let shift = at(2 * n as i64 + 1)? - odd_progression.value();
        if (shift - shift_reference).norm() > tol {
            progression_shift = false;
        }

        prefix.add(f(n));
        odd_progression.add(f(2 * n + 1));
    }

    Ok(ExtensionCheck {
        constant_shift,
        difference,
        progression_shift,
        constant,
    })
}

/// The q = 3 analogue of [`check_extension_q2`], over thirds:
/// (i) sum_{j=0}^{2} T0+((n+j)/3) - S_f(n) constant,
/// (ii) T0+(n + 1 + p/3) - T0+(n + p/3) = f(3n + p) for p in {1, 2},
/// (iii) T0+(n + p/3) - T_p(n) constant for p in {1, 2}.
pub fn check_extension_q3(
    t0_plus: impl Fn(DomainPoint) -> Result<Complex64>,
    f: impl Fn(u64) -> Complex64,
    n_max: u64,
) -> Result<ExtensionCheck> {
    let tol = EXTENSION_CONDITION_TOLERANCE;
    let at = |num: i64| t0_plus(DomainPoint::new(num, 3));

    let constant = at(0)? + at(1)? + at(2)?;
    let mut constant_shift = true;
    let mut difference = true;
    let mut progression_shift = true;

    let mut prefix = CompensatedSum::new();
    let mut progressions = [CompensatedSum::new(), CompensatedSum::new()];
    let shift_references = [at(1)?, at(2)?];

    for n in 0..=n_max {
        let base = n as i64;
        let cond_i = at(base)? + at(base + 1)? + at(base + 2)? - prefix.value();
        if (cond_i - constant).norm() > tol {
            constant_shift = false;
        }

        for (idx, p) in [1i64, 2].iter().enumerate() {
            let low = DomainPoint::new(3 * n as i64 + p, 3);
            let step = t0_plus(low.shifted(1))? - t0_plus(low)?;
            if (step - f(3 * n + *p as u64)).norm() > tol {
                difference = false;
            }
            let shift = t0_plus(low)? - progressions[idx].value();
            if (shift - shift_references[idx]).norm() > tol {
                progression_shift = false;
            }
        }

        prefix.add(f(n));
        progressions[0].add(f(3 * n + 1));
        progressions[1].add(f(3 * n + 2));
    }

    Ok(ExtensionCheck {
        constant_shift,
        difference,
        progression_shift,
        constant,
    })
}

/// sum_{k=0}^{2n} (-1)^k f(k), checked against the equal middle form
/// T_0(n+1) - T_1(n) and returned. Disagreement beyond 1e-12 (scaled by
/// the magnitude) reports an inconsistency.
pub fn alternating_midpoint_sum(f: impl Fn(u64) -> Complex64, n: u64) -> Result<Complex64> {
    let mut alternating = CompensatedSum::new();
    for k in 0..=2 * n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        alternating.add(sign * f(k));
    }
    let lhs = alternating.value();

    let even = progression_sum(&f, 2, 0, n + 1)?;
    let odd = progression_sum(&f, 2, 1, n)?;
    let rhs = even - odd;

    let scale = 1.0f64.max(lhs.norm());
    if (lhs - rhs).norm() > 1e-12 * scale {
        return Err(Error::Inconsistency(format!(
            "alternating midpoint sum mismatch at n={n}: {lhs} vs {rhs}"
        )));
    }
    Ok(lhs)
}

/// Outcome of comparing two evaluation routes over a range of n.
///
/// `passed` uses the scaled error |a - b| / max(1, |b|): absolute below
/// magnitude one, relative above it.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub n_max: u64,
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    pub worst_n: u64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Scaled discrepancy used throughout the verification sweeps.
pub fn scaled_error(got: Complex64, reference: Complex64) -> f64 {
    (got - reference).norm() / 1.0f64.max(reference.norm())
}

/// Compare two routes for n = 0..=n_max.
pub fn compare_routes(
    candidate: impl Fn(u64) -> Result<Complex64>,
    reference: impl Fn(u64) -> Result<Complex64>,
    n_max: u64,
    tolerance: f64,
) -> Result<VerificationReport> {
    let mut max_abs = 0.0f64;
    let mut max_scaled = 0.0f64;
    let mut worst_n = 0;
    for n in 0..=n_max {
        let got = candidate(n)?;
        let want = reference(n)?;
        let abs = (got - want).norm();
        let scaled = scaled_error(got, want);
        if scaled > max_scaled {
            max_scaled = scaled;
            worst_n = n;
        }
        max_abs = max_abs.max(abs);
    }
    Ok(VerificationReport {
        n_max,
        max_abs_err: max_abs,
        max_rel_err: max_scaled,
        worst_n,
        tolerance,
        passed: max_scaled <= tolerance,
    })
}
