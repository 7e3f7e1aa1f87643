//! Log-gamma, digamma, and harmonic numbers at complex arguments, plus the
//! classical identities used by the closed-form catalog: the Gauss formula
//! for harmonic numbers at fractions, the duplication and multiplication
//! formulas, the sine product, and the finite trigonometric sums.
//!
//! Log-gamma and digamma are computed by shifting the argument with the
//! recurrence until it is large enough for the Stirling asymptotic series;
//! both series carry enough Bernoulli terms to reach machine precision at
//! the shift threshold.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Euler-Mascheroni constant to full double precision.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Arguments at least this large go straight to the asymptotic series.
const ASYMPTOTIC_THRESHOLD: f64 = 12.0;

/// Proximity guard for pole detection at non-positive integers.
const POLE_GUARD: f64 = 1e-9;

/// B_{2k} / (2k (2k-1)) for the log-gamma Stirling series, k = 1..9.
const LOG_GAMMA_SERIES: [f64; 9] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
];

/// B_{2k} / (2k) for the digamma asymptotic series, k = 1..8.
const DIGAMMA_SERIES: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

fn near_nonpositive_integer(z: Complex64) -> bool {
    if z.im.abs() > POLE_GUARD {
        return false;
    }
    let nearest = z.re.round();
    nearest <= 0.0 && (z.re - nearest).abs() <= POLE_GUARD
}

/// Principal-branch log Gamma.
///
/// For Re z >= 0.5 the argument is shifted up with
/// log Gamma(z) = log Gamma(z + m) - sum log(z + j) until the Stirling
/// series applies; every shifted factor stays in the right half plane, so
/// the principal logs sum to the continuous branch. Smaller real parts go
/// through the reflection formula.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if near_nonpositive_integer(z) {
        return Err(Error::Domain(format!("log_gamma pole at z = {z}")));
    }
    if z.re < 0.5 {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z). Gamma(1-z)
        // is positive on the real axis, so the sign of Gamma(z) there is the
        // sign of sin(pi z); put negative values on the arg = +pi side of
        // the principal branch explicitly.
        let pi = std::f64::consts::PI;
        if z.im == 0.0 {
            let sin_pix = (pi * z.re).sin();
            let magnitude =
                pi.ln() - sin_pix.abs().ln() - log_gamma(Complex64::new(1.0 - z.re, 0.0))?.re;
            let argument = if sin_pix < 0.0 { pi } else { 0.0 };
            return Ok(Complex64::new(magnitude, argument));
        }
        let sin_piz = (z * pi).sin();
        return Ok(Complex64::new(pi, 0.0).ln()
            - sin_piz.ln()
            - log_gamma(Complex64::new(1.0, 0.0) - z)?);
    }

    let mut shifted = z;
    let mut shift_correction = Complex64::new(0.0, 0.0);
    while shifted.re < ASYMPTOTIC_THRESHOLD {
        shift_correction += shifted.ln();
        shifted += 1.0;
    }

    let half_log_two_pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    let mut value = (shifted - 0.5) * shifted.ln() - shifted + Complex64::new(half_log_two_pi, 0.0);
    let inv_sq = 1.0 / (shifted * shifted);
    let mut power = 1.0 / shifted;
    for &coeff in &LOG_GAMMA_SERIES {
        value += coeff * power;
        power *= inv_sq;
    }
    Ok(value - shift_correction)
}

/// Digamma (psi) at a complex argument, by recurrence plus the asymptotic
/// series in 1/z^2.
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if near_nonpositive_integer(z) {
        return Err(Error::Domain(format!("digamma pole at z = {z}")));
    }

    let mut shifted = z;
    let mut shift_correction = Complex64::new(0.0, 0.0);
    while shifted.re < ASYMPTOTIC_THRESHOLD {
        shift_correction += 1.0 / shifted;
        shifted += 1.0;
    }

    let mut value = shifted.ln() - 0.5 / shifted;
    let inv_sq = 1.0 / (shifted * shifted);
    let mut power = inv_sq;
    for &coeff in &DIGAMMA_SERIES {
        value -= coeff * power;
        power *= inv_sq;
    }
    Ok(value - shift_correction)
}

/// Harmonic number H_z = sum_{n>=1} (1/n - 1/(n+z)), evaluated as
/// psi(z + 1) + gamma. Defined away from the negative integers.
pub fn harmonic(z: Complex64) -> Result<Complex64> {
    if near_nonpositive_integer(z) && z.re.round() < -0.5 {
        return Err(Error::Domain(format!("harmonic pole at z = {z}")));
    }
    Ok(digamma(z + 1.0)? + EULER_GAMMA)
}

/// H_x for real x.
pub fn harmonic_real(x: f64) -> Result<f64> {
    Ok(harmonic(Complex64::new(x, 0.0))?.re)
}

/// log Gamma(x) for real x > 0.
pub fn log_gamma_real(x: f64) -> Result<f64> {
    Ok(log_gamma(Complex64::new(x, 0.0))?.re)
}

/// Gauss's closed form for H_{p/q}, 1 <= p < q:
/// q/p - ln(2q) - (pi/2) cot(p pi / q)
///   + 2 sum_{j=1}^{floor((q-1)/2)} cos(2 j p pi / q) ln sin(j pi / q).
pub fn gauss_harmonic(p: usize, q: usize) -> Result<f64> {
    if q < 2 || p < 1 || p >= q {
        return Err(Error::InvalidParameter(format!(
            "gauss_harmonic needs 1 <= p < q with q >= 2, got p={p}, q={q}"
        )));
    }
    let pi = std::f64::consts::PI;
    let (pf, qf) = (p as f64, q as f64);
    let angle = pf * pi / qf;
    let mut sum = 0.0;
    for j in 1..=(q - 1) / 2 {
        let jf = j as f64;
        sum += (2.0 * jf * pf * pi / qf).cos() * (jf * pi / qf).sin().ln();
    }
    Ok(qf / pf - (2.0 * qf).ln() - (pi / 2.0) * (angle.cos() / angle.sin()) + 2.0 * sum)
}

/// 2 H_x - H_{x/2} - H_{(x-1)/2} - 2 ln 2; zero when the duplication
/// formula holds.
pub fn duplication_residual(x: f64) -> Result<f64> {
    let two_ln2 = 2.0 * std::f64::consts::LN_2;
    Ok(2.0 * harmonic_real(x)?
        - harmonic_real(x / 2.0)?
        - harmonic_real((x - 1.0) / 2.0)?
        - two_ln2)
}

/// m H_x - sum_{j=0}^{m-1} H_{(x-j)/m} - m ln m; zero when the
/// multiplication formula holds. m >= 2.
pub fn multiplication_residual(x: f64, m: usize) -> Result<f64> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "multiplication_residual needs m >= 2, got {m}"
        )));
    }
    let mf = m as f64;
    let mut sum = 0.0;
    for j in 0..m {
        sum += harmonic_real((x - j as f64) / mf)?;
    }
    Ok(mf * harmonic_real(x)? - sum - mf * mf.ln())
}

/// prod_{j=1}^{q-1} sin(j pi / q), which equals q * 2^(1-q).
pub fn sine_product(q: usize) -> Result<f64> {
    crate::periodic::check_period(q)?;
    let pi = std::f64::consts::PI;
    let mut product = 1.0;
    for j in 1..q {
        product *= (j as f64 * pi / q as f64).sin();
    }
    Ok(product)
}

/// The three finite sums over j = 1..q-1 of sin(2jp pi/q), cos(2jp pi/q),
/// and j sin(2jp pi/q). They equal (0, -1, -(q/2) cot(p pi/q)).
pub fn trig_sums(p: usize, q: usize) -> Result<(f64, f64, f64)> {
    if q < 2 || p < 1 || p >= q {
        return Err(Error::InvalidParameter(format!(
            "trig_sums needs 1 <= p < q, got p={p}, q={q}"
        )));
    }
    let pi = std::f64::consts::PI;
    let (mut s_sin, mut s_cos, mut s_jsin) = (0.0, 0.0, 0.0);
    for j in 1..q {
        let theta = 2.0 * (j * p) as f64 * pi / q as f64;
        s_sin += theta.sin();
        s_cos += theta.cos();
        s_jsin += j as f64 * theta.sin();
    }
    Ok((s_sin, s_cos, s_jsin))
}
