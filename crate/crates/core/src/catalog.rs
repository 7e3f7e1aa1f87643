//! Catalog of concrete sequence families with known progression sums and
//! closed-form weighted sums, used as regression targets, plus the
//! binomial progression sums and the Catalan partial sums.
//!
//! Families:
//! - `log3`: f(k) = log k against the 3-periodic weight cos(2k pi/3)
//! - `log4`: f(n) = log(n+1) against sin(k pi/2)
//! - `recip4`: f(n) = 1/(n+1) against sin(k pi/2)
//! - `harmonic4`: f(n) = H_n against sin(k pi/2)
//! - `alt-harmonic`: f(k) = 1/k against (-1)^k
//! - `inv-square4`: f(k) = 1/k^2 against sin(k pi/2) (Catalan-type limit)

use num_complex::Complex64;

use crate::engine::{self, SequenceFamily};
use crate::error::{Error, Result};
use crate::periodic::{check_residue, PeriodicWeight};
use crate::special::{harmonic_real, log_gamma_real};

const LN_2: f64 = std::f64::consts::LN_2;
const LN_3: f64 = 1.098_612_288_668_109_8;
const PI: f64 = std::f64::consts::PI;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// cos(n pi/2) at integer n, exact.
fn quarter_cos(n: u64) -> f64 {
    [1.0, 0.0, -1.0, 0.0][(n % 4) as usize]
}

/// sin(n pi/2) at integer n, exact.
fn quarter_sin(n: u64) -> f64 {
    [0.0, 1.0, 0.0, -1.0][(n % 4) as usize]
}

/// cos(2 n pi/3) at integer n, exact.
fn third_cos(n: u64) -> f64 {
    [1.0, -0.5, -0.5][(n % 3) as usize]
}

/// sin(2 n pi/3) at integer n.
fn third_sin(n: u64) -> f64 {
    const S: f64 = 0.866_025_403_784_438_6; // sqrt(3)/2
    [0.0, S, -S][(n % 3) as usize]
}

type ClosedForm = Box<dyn Fn(u64) -> Result<Complex64> + Send + Sync>;

/// One catalog family: the sequence, its weight, and (when the paper gives
/// one) the closed form of the weighted sum, sometimes in two variants
/// that cross-check each other.
pub struct CatalogEntry {
    family: SequenceFamily,
    weight: PeriodicWeight,
    description: &'static str,
    closed: Option<ClosedForm>,
    closed_alt: Option<ClosedForm>,
}

impl CatalogEntry {
    pub fn id(&self) -> &str {
        self.family.name()
    }

    pub fn family(&self) -> &SequenceFamily {
        &self.family
    }

    pub fn weight(&self) -> &PeriodicWeight {
        &self.weight
    }

    pub fn modulus(&self) -> usize {
        self.family.modulus()
    }

    pub fn description(&self) -> &'static str {
        self.description
    }

    pub fn has_closed_form(&self) -> bool {
        self.closed.is_some()
    }

    pub fn has_alt_form(&self) -> bool {
        self.closed_alt.is_some()
    }

    /// Brute-force S(n) for this family's weight.
    pub fn brute_sum(&self, n: u64) -> Complex64 {
        engine::weighted_sum(|k| self.family.term(k), &self.weight, n)
    }

    /// The paper's closed form for S(n).
    pub fn closed_sum(&self, n: u64) -> Result<Complex64> {
        match &self.closed {
            Some(form) => form(n),
            None => Err(Error::UnsupportedFamily(format!(
                "family `{}` has no closed form",
                self.id()
            ))),
        }
    }

    /// The alternative closed form, where the paper derives two.
    pub fn closed_sum_alt(&self, n: u64) -> Result<Complex64> {
        match &self.closed_alt {
            Some(form) => form(n),
            None => Err(Error::UnsupportedFamily(format!(
                "family `{}` has no alternative closed form",
                self.id()
            ))),
        }
    }
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id())
            .field("q", &self.modulus())
            .field("closed", &self.closed.is_some())
            .field("closed_alt", &self.closed_alt.is_some())
            .finish()
    }
}

/// All catalog ids, in catalog order.
pub const IDS: [&str; 6] = [
    "log3",
    "log4",
    "recip4",
    "harmonic4",
    "alt-harmonic",
    "inv-square4",
];

/// Every catalog entry.
pub fn all() -> Vec<CatalogEntry> {
    vec![
        log3(),
        log4(),
        recip4(),
        harmonic4(),
        alt_harmonic(),
        inv_square4(),
    ]
}

/// Look an entry up by its id.
pub fn by_id(id: &str) -> Option<CatalogEntry> {
    match id {
        "log3" => Some(log3()),
        "log4" => Some(log4()),
        "recip4" => Some(recip4()),
        "harmonic4" => Some(harmonic4()),
        "alt-harmonic" => Some(alt_harmonic()),
        "inv-square4" => Some(inv_square4()),
        _ => None,
    }
}

/// f(0) = 0, f(k) = log k, weighted by cos(2k pi/3).
///
/// T_0+(x) = log(3^(x-1) Gamma(x)) with T_0+(0) = 0. For p in {1, 2} the
/// sum-from-one formula log(3^(x-1) Gamma(x + p/3) / Gamma(1 + p/3)) is
/// off by the constant log p from the sum-from-zero convention used here,
/// so the stored extension adds it back.
pub fn log3() -> CatalogEntry {
    let family = SequenceFamily::new("log3", 3, |k| {
        if k == 0 {
            re(0.0)
        } else {
            re((k as f64).ln())
        }
    })
    .unwrap()
    .with_extension(|p, x| {
        if x.numerator() < 0 {
            return Err(Error::Domain(format!(
                "extension point {} below D_p",
                x.value()
            )));
        }
        if p == 0 {
            if x.is_zero() {
                return Ok(re(0.0));
            }
            let v = x.value();
            return Ok(re((v - 1.0) * LN_3 + log_gamma_real(v)?));
        }
        let v = x.value();
        let shifted = (x.numerator() as f64 + p as f64) / 3.0;
        let value = (v - 1.0) * LN_3 + log_gamma_real(shifted)?
            - log_gamma_real(1.0 + p as f64 / 3.0)?
            + (p as f64).ln();
        Ok(re(value))
    });

    let closed: ClosedForm = Box::new(|n| {
        if n == 0 {
            return Err(Error::Domain("log3 closed form needs n >= 1".into()));
        }
        let mut sum = 0.25 * (4.0 * PI * PI / 27.0).ln();
        for j in 0..3u64 {
            let arg = (n + j) as f64 / 3.0;
            sum += third_cos(n + j) * (j as f64 / 3.0 * LN_3 + log_gamma_real(arg)?);
        }
        Ok(re(sum))
    });

    let closed_alt: ClosedForm = Box::new(|n| {
        if n == 0 {
            return Err(Error::Domain("log3 closed form needs n >= 1".into()));
        }
        let nf = n as f64;
        let constant = ((2.0 * PI).sqrt() / 27f64.powf(0.25)).ln();
        let cos_part = (nf - 1.5) * LN_3 + 3.0 * log_gamma_real(nf / 3.0)?
            - (2.0 * PI).ln()
            - log_gamma_real(nf)?;
        let sin_part =
            LN_3 / 3.0 + log_gamma_real((nf + 2.0) / 3.0)? - log_gamma_real((nf + 1.0) / 3.0)?;
        Ok(re(constant
            + 0.5 * third_cos(n) * cos_part
            + 3f64.sqrt() / 2.0 * third_sin(n) * sin_part))
    });

    CatalogEntry {
        family,
        weight: PeriodicWeight::from_real(&[1.0, -0.5, -0.5]).unwrap(),
        description: "sum of cos(2k pi/3) log k",
        closed: Some(closed),
        closed_alt: Some(closed_alt),
    }
}

/// f(n) = log(n + 1), weighted by sin(k pi/2).
///
/// T_p+(x) = log(4^x Gamma(x + (p+1)/4) / Gamma((p+1)/4)).
pub fn log4() -> CatalogEntry {
    let family = SequenceFamily::new("log4", 4, |k| re((k as f64 + 1.0).ln()))
        .unwrap()
        .with_extension(|p, x| {
            let base = (p as f64 + 1.0) / 4.0;
            let shifted = (x.numerator() as f64 + p as f64 + 1.0) / 4.0;
            Ok(re(
                x.value() * (2.0 * LN_2) + log_gamma_real(shifted)? - log_gamma_real(base)?
            ))
        });

    let closed: ClosedForm = Box::new(|n| {
        let nf = n as f64;
        let constant = (2.0 / PI.sqrt()).ln();
        let cos_part = log_gamma_real((nf + 2.0) / 4.0)? - LN_2 - log_gamma_real((nf + 4.0) / 4.0)?;
        let sin_part = log_gamma_real((nf + 1.0) / 4.0)? - LN_2 - log_gamma_real((nf + 3.0) / 4.0)?;
        Ok(re(constant
            + quarter_cos(n) * cos_part
            + quarter_sin(n) * sin_part))
    });

    CatalogEntry {
        family,
        weight: PeriodicWeight::from_real(&[0.0, 1.0, 0.0, -1.0]).unwrap(),
        description: "sum of sin(k pi/2) log(k+1)",
        closed: Some(closed),
        closed_alt: None,
    }
}

/// f(n) = 1/(n + 1), weighted by sin(k pi/2).
///
/// T_p+(x) = (H_{x + (p+1)/4 - 1} - H_{(p+1)/4 - 1}) / 4.
pub fn recip4() -> CatalogEntry {
    let family = SequenceFamily::new("recip4", 4, |k| re(1.0 / (k as f64 + 1.0)))
        .unwrap()
        .with_extension(|p, x| {
            let upper = (x.numerator() as f64 + p as f64 + 1.0) / 4.0 - 1.0;
            let lower = (p as f64 + 1.0) / 4.0 - 1.0;
            Ok(re(0.25 * (harmonic_real(upper)? - harmonic_real(lower)?)))
        });

    let closed: ClosedForm = Box::new(|n| {
        let nf = n as f64;
        let cos_part = harmonic_real((nf - 2.0) / 4.0)? - harmonic_real(nf / 4.0)?;
        let sin_part = harmonic_real((nf - 3.0) / 4.0)? - harmonic_real((nf - 1.0) / 4.0)?;
        Ok(re(0.5 * LN_2
            + 0.25 * quarter_cos(n) * cos_part
            + 0.25 * quarter_sin(n) * sin_part))
    });

    CatalogEntry {
        family,
        weight: PeriodicWeight::from_real(&[0.0, 1.0, 0.0, -1.0]).unwrap(),
        description: "sum of sin(k pi/2) / (k+1)",
        closed: Some(closed),
        closed_alt: None,
    }
}

/// f(n) = H_n, weighted by sin(k pi/2). No elementary anti-difference;
/// the closed forms come from summation by parts, in two variants that
/// differ by the multiplication formula for H at quarters.
pub fn harmonic4() -> CatalogEntry {
    let family = SequenceFamily::new("harmonic4", 4, |k| {
        re(harmonic_real(k as f64).expect("H_k is finite for k >= 0"))
    })
    .unwrap();

    let closed: ClosedForm = Box::new(|n| {
        let nf = n as f64;
        let constant = (PI - 2.0 * LN_2) / 8.0;
        let h1 = harmonic_real((nf - 1.0) / 4.0)?;
        let h2 = harmonic_real((nf - 2.0) / 4.0)?;
        let h3 = harmonic_real((nf - 3.0) / 4.0)?;
        Ok(re(constant
            - 0.25 * quarter_cos(n) * (h1 + h2 + 4.0 * LN_2)
            - 0.25 * quarter_sin(n) * (h2 + h3 + 4.0 * LN_2)))
    });

    let closed_alt: ClosedForm = Box::new(|n| {
        let nf = n as f64;
        let constant = (PI - 2.0 * LN_2) / 8.0;
        let h0 = harmonic_real(nf / 4.0)?;
        let h1 = harmonic_real((nf - 1.0) / 4.0)?;
        let h2 = harmonic_real((nf - 2.0) / 4.0)?;
        let h3 = harmonic_real((nf - 3.0) / 4.0)?;
        let hn = harmonic_real(nf)?;
        Ok(re(constant
            + 0.125 * quarter_cos(n) * (h0 - h1 - h2 + h3 - 4.0 * hn)
            + 0.125 * quarter_sin(n) * (h0 + h1 - h2 - h3 - 4.0 * hn)))
    });

    CatalogEntry {
        family,
        weight: PeriodicWeight::from_real(&[0.0, 1.0, 0.0, -1.0]).unwrap(),
        description: "sum of sin(k pi/2) H_k",
        closed: Some(closed),
        closed_alt: Some(closed_alt),
    }
}

/// f(0) = 0, f(k) = 1/k, weighted by (-1)^k.
///
/// T_0+(0) = 0 and T_0+(x) = H_{x-1}/2 for x > 0; the odd progression
/// extends as T_1+(x) = H_{x-1/2}/2 + log 2.
pub fn alt_harmonic() -> CatalogEntry {
    let family = SequenceFamily::new("alt-harmonic", 2, |k| {
        if k == 0 {
            re(0.0)
        } else {
            re(1.0 / k as f64)
        }
    })
    .unwrap()
    .with_extension(|p, x| {
        if p == 0 {
            if x.is_zero() {
                return Ok(re(0.0));
            }
            if x.numerator() < 0 {
                return Err(Error::Domain(format!(
                    "extension point {} below D_0",
                    x.value()
                )));
            }
            let arg = (x.numerator() as f64 - 2.0) / 2.0;
            return Ok(re(0.5 * harmonic_real(arg)?));
        }
        let arg = (x.numerator() as f64 - 1.0) / 2.0;
        Ok(re(0.5 * harmonic_real(arg)? + LN_2))
    });

    let closed: ClosedForm = Box::new(|n| {
        if n == 0 {
            return Err(Error::Domain(
                "alt-harmonic closed form needs n >= 1".into(),
            ));
        }
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let diff = harmonic_real((nf - 2.0) / 2.0)? - harmonic_real((nf - 1.0) / 2.0)?;
        Ok(re(-LN_2 + 0.5 * sign * diff))
    });

    CatalogEntry {
        family,
        weight: PeriodicWeight::from_real(&[1.0, -1.0]).unwrap(),
        description: "alternating sum of 1/k",
        closed: Some(closed),
        closed_alt: None,
    }
}

/// f(0) = 0, f(k) = 1/k^2, weighted by sin(k pi/2). No finite-n closed
/// form; the infinite sum is the Catalan constant, reachable through the
/// progression sums T_1 - T_3.
pub fn inv_square4() -> CatalogEntry {
    let family = SequenceFamily::new("inv-square4", 4, |k| {
        if k == 0 {
            re(0.0)
        } else {
            re(1.0 / (k as f64 * k as f64))
        }
    })
    .unwrap();

    CatalogEntry {
        family,
        weight: PeriodicWeight::from_real(&[0.0, 1.0, 0.0, -1.0]).unwrap(),
        description: "sum of sin(k pi/2) / k^2 (Catalan limit)",
        closed: None,
        closed_alt: None,
    }
}

/// Partial sum of the Catalan series: sum_{k<terms} (1/(4k+1)^2 - 1/(4k+3)^2).
pub fn catalan_partial_sum(terms: u64) -> f64 {
    let mut acc = engine::CompensatedSum::new();
    for k in 0..terms {
        let a = 4.0 * k as f64 + 1.0;
        let b = 4.0 * k as f64 + 3.0;
        acc.add(re(1.0 / (a * a) - 1.0 / (b * b)));
    }
    acc.value().re
}

/// Choice of summand h(k) in the binomial progression sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomialSummand {
    /// h(k) = 1: sum of C(m, qk+p).
    One,
    /// h(k) = 1/(k+1): sum of C(m, qk+p) / (qk+p+1).
    ReciprocalShift,
}

/// cos(pi * num / den) with the angle reduced first; exact at multiples
/// of pi/2 so the root-of-unity combinations cancel cleanly.
fn cos_pi_ratio(num: i64, den: i64) -> f64 {
    let r = num.rem_euclid(2 * den);
    if r == 0 {
        1.0
    } else if r == den {
        -1.0
    } else if 2 * r == den || 2 * r == 3 * den {
        0.0
    } else {
        (PI * r as f64 / den as f64).cos()
    }
}

/// cos^e(j pi / q), with cos = 0 mapped to an exact 0 for e >= 1.
fn cos_power(j: i64, q: i64, e: i64) -> f64 {
    let base = cos_pi_ratio(j, q);
    if e == 0 {
        1.0
    } else if base == 0.0 {
        0.0
    } else {
        base.powi(e as i32)
    }
}

/// Closed form of sum_k C(m, qk+p) h(qk+p) via the root-of-unity filter.
pub fn binomial_progression_closed(m: u64, q: usize, p: usize, h: BinomialSummand) -> Result<f64> {
    check_residue(p, q)?;
    let (qi, pi_) = (q as i64, p as i64);
    let mi = m as i64;
    match h {
        BinomialSummand::One => {
            let mut sum = 0.0;
            for j in 0..qi {
                sum += cos_pi_ratio(j * (mi - 2 * pi_), qi) * cos_power(j, qi, mi);
            }
            Ok(2f64.powi(m as i32) / q as f64 * sum)
        }
        BinomialSummand::ReciprocalShift => {
            let mut sum = 0.0;
            for j in 0..qi {
                sum += 2f64.powi(m as i32 + 1)
                    * cos_pi_ratio(j * (mi - 2 * pi_ - 1), qi)
                    * cos_power(j, qi, mi + 1)
                    - cos_pi_ratio(2 * j * (pi_ + 1), qi);
            }
            Ok(sum / (q as f64 * (m as f64 + 1.0)))
        }
    }
}

/// Exact integer binomial coefficient, for row indices small enough that
/// the result converts to f64 without loss.
fn binomial_exact(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        c = c * (n - k + i) as u128 / i as u128;
    }
    c
}

/// Brute-force sum_k C(m, qk+p) h(qk+p). Rows are capped at m <= 52 so
/// every term is exact in f64.
pub fn binomial_progression_brute(m: u64, q: usize, p: usize, h: BinomialSummand) -> Result<f64> {
    check_residue(p, q)?;
    if m > 52 {
        return Err(Error::InvalidParameter(format!(
            "binomial row m must be <= 52 for exact evaluation, got {m}"
        )));
    }
    let mut acc = engine::CompensatedSum::new();
    let mut index = p as u64;
    while index <= m {
        let coefficient = binomial_exact(m, index) as f64;
        let term = match h {
            BinomialSummand::One => coefficient,
            BinomialSummand::ReciprocalShift => coefficient / (index as f64 + 1.0),
        };
        acc.add(re(term));
        index += q as u64;
    }
    Ok(acc.value().re)
}

/// Generalized binomial coefficient C(z, k) as the falling-factorial
/// product prod_{j<k} (z - j)/(j + 1); avoids Gamma-pole bookkeeping for
/// integer z < k.
pub fn generalized_binomial(z: Complex64, k: u64) -> Complex64 {
    let mut product = Complex64::new(1.0, 0.0);
    for j in 0..k {
        product *= (z - j as f64) / (j as f64 + 1.0);
    }
    product
}

/// Checks sum_{k=0}^{n} (-1)^k C(z, k) = (-1)^n C(z-1, n) and returns the
/// common value; disagreement beyond 1e-9 (scaled) is an inconsistency.
pub fn alternating_binomial_prefix(z: Complex64, n: u64) -> Result<Complex64> {
    let mut acc = engine::CompensatedSum::new();
    let mut coefficient = Complex64::new(1.0, 0.0);
    for k in 0..=n {
        if k > 0 {
            coefficient *= (z - (k as f64 - 1.0)) / k as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(sign * coefficient);
    }
    let lhs = acc.value();
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let rhs = sign * generalized_binomial(z - 1.0, n);

    let scale = 1.0f64.max(lhs.norm()).max(rhs.norm());
    if (lhs - rhs).norm() > 1e-9 * scale {
        return Err(Error::Inconsistency(format!(
            "alternating binomial prefix mismatch at z={z}, n={n}: {lhs} vs {rhs}"
        )));
    }
    Ok(rhs)
}

/// Checks sum_{k<n} C(z, 2k+1) = (sum_{k<=2n} C(z, k)) / 2 - C(z-1, 2n) / 2
/// and returns the odd-index sum.
pub fn odd_binomial_prefix(z: Complex64, n: u64) -> Result<Complex64> {
    let mut odd = engine::CompensatedSum::new();
    let mut full = engine::CompensatedSum::new();
    let mut coefficient = Complex64::new(1.0, 0.0);
    for k in 0..=2 * n {
        if k > 0 {
            coefficient *= (z - (k as f64 - 1.0)) / k as f64;
        }
        full.add(coefficient);
        if k % 2 == 1 {
            odd.add(coefficient);
        }
    }
    let lhs = odd.value();
    let rhs = 0.5 * full.value() - 0.5 * generalized_binomial(z - 1.0, 2 * n);

    let scale = 1.0f64.max(lhs.norm()).max(rhs.norm());
    if (lhs - rhs).norm() > 1e-9 * scale {
        return Err(Error::Inconsistency(format!(
            "odd binomial prefix mismatch at z={z}, n={n}: {lhs} vs {rhs}"
        )));
    }
    Ok(lhs)
}
