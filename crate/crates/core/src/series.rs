//! Truncated formal power series and the two generating-function routes
//! to the residue-class sums.
//!
//! For F(z) = sum f(n) z^n, the series of (S_p(n)) is both
//!
//! ```text
//! (z / (q (1 - z))) sum_{k<q} omega^{-kp} F(omega^k z)    (root-of-unity filter)
//! (z^{p+1} / (1 - z)) F_p(z^q)                            (decimation)
//! ```
//!
//! Series are dense coefficient vectors; division by (1 - z) is always a
//! running sum, never a series inverse.

use num_complex::Complex64;

use crate::engine::CompensatedSum;
use crate::error::{Error, Result};
use crate::periodic::{check_residue, root_of_unity_power, PeriodicWeight};

/// Hard cap on series orders accepted from outside callers.
pub const MAX_ORDER: usize = 4096;

/// The first N coefficients of a formal power series over the complex
/// numbers. Binary operations truncate to the shorter operand.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn zeros(order: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0); order],
        }
    }

    /// Coefficients f(0), ..., f(order - 1) of a sequence's series.
    pub fn from_sequence(f: impl Fn(u64) -> Complex64, order: usize) -> Self {
        Self {
            coeffs: (0..order as u64).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Multiplication by 1/(1 - z): coefficient n becomes the inclusive
    /// partial sum of coefficients 0..=n.
    pub fn prefix_sums(&self) -> Self {
        let mut acc = CompensatedSum::new();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                acc.add(c);
                acc.value()
            })
            .collect();
        Self { coeffs }
    }

    /// Multiplication by z/(1 - z): coefficient n becomes the exclusive
    /// partial sum of coefficients 0..n.
    pub fn shifted_prefix_sums(&self) -> Self {
        let mut acc = CompensatedSum::new();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                let before = acc.value();
                acc.add(c);
                before
            })
            .collect();
        Self { coeffs }
    }

    /// Coefficients of F(omega^k z), omega = exp(2 pi i / q).
    pub fn rotate(&self, q: usize, k: usize) -> Result<Self> {
        check_residue(k, q)?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, &c)| root_of_unity_power(q, (k * n) as i64) * c)
            .collect();
        Ok(Self { coeffs })
    }

    /// The decimated series F_p: coefficient n is coeff(qn + p).
    pub fn decimate(&self, q: usize, p: usize) -> Result<Self> {
        check_residue(p, q)?;
        if p >= self.coeffs.len() {
            return Ok(Self { coeffs: Vec::new() });
        }
        Ok(Self {
            coeffs: self.coeffs[p..].iter().copied().step_by(q).collect(),
        })
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| factor * c).collect(),
        }
    }

    /// Sum, truncated to the shorter order.
    pub fn plus(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..order)
                .map(|n| self.coeffs[n] + other.coeffs[n])
                .collect(),
        }
    }

    /// Cauchy product, truncated to the shorter order.
    pub fn convolve(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order];
        for (i, &a) in self.coeffs.iter().enumerate().take(order) {
            for (j, &b) in other.coeffs.iter().enumerate().take(order - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }
}

/// Coefficients of the masked series sum_n g_p(n) f(n) z^n via the
/// root-of-unity filter (1/q) sum_k omega^{-kp} F(omega^k z).
pub fn residue_mask_series(
    f_series: &TruncatedSeries,
    q: usize,
    p: usize,
) -> Result<TruncatedSeries> {
    check_residue(p, q)?;
    let mut acc = TruncatedSeries::zeros(f_series.order());
    for k in 0..q {
        let rotated = f_series.rotate(q, k)?;
        acc = acc.plus(&rotated.scaled(root_of_unity_power(q, -((k * p) as i64))));
    }
    Ok(acc.scaled(Complex64::new(1.0 / q as f64, 0.0)))
}

/// Series of (S_p(n)) by the root-of-unity route:
/// (z/(q(1-z))) sum_k omega^{-kp} F(omega^k z).
pub fn residue_sum_series_dft(
    f_series: &TruncatedSeries,
    q: usize,
    p: usize,
) -> Result<TruncatedSeries> {
    Ok(residue_mask_series(f_series, q, p)?.shifted_prefix_sums())
}

/// Series of (S_p(n)) by the decimation route: embed F_p back as
/// z^{p+1} F_p(z^q), then take running sums for the 1/(1-z) factor.
pub fn residue_sum_series_decimate(
    f_series: &TruncatedSeries,
    q: usize,
    p: usize,
) -> Result<TruncatedSeries> {
    let decimated = f_series.decimate(q, p)?;
    let order = f_series.order();
    let mut embedded = vec![Complex64::new(0.0, 0.0); order];
    for (m, &c) in decimated.coeffs().iter().enumerate() {
        let index = q * m + p + 1;
        if index < order {
            embedded[index] = c;
        }
    }
    Ok(TruncatedSeries::new(embedded).prefix_sums())
}

/// Series of the weighted sums (S(n)): sum_p g(p) times the p-th
/// residue-sum series.
pub fn weighted_sum_series(
    f_series: &TruncatedSeries,
    weight: &PeriodicWeight,
) -> Result<TruncatedSeries> {
    let q = weight.period();
    let mut acc = TruncatedSeries::zeros(f_series.order());
    for (p, &coeff) in weight.basis_coefficients().iter().enumerate() {
        if coeff.re == 0.0 && coeff.im == 0.0 {
            continue;
        }
        acc = acc.plus(&residue_sum_series_dft(f_series, q, p)?.scaled(coeff));
    }
    Ok(acc)
}

/// Validate a caller-supplied order: 1..=MAX_ORDER.
pub fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "series order must be in 1..={MAX_ORDER}, got {order}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::residue_class_sum;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn series(values: &[f64]) -> TruncatedSeries {
        TruncatedSeries::new(values.iter().map(|&x| re(x)).collect())
    }

    fn max_diff(a: &TruncatedSeries, b: &TruncatedSeries) -> f64 {
        assert_eq!(a.order(), b.order());
        (0..a.order())
            .map(|n| (a.coeff(n) - b.coeff(n)).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn from_sequence_examples() {
        let s = TruncatedSeries::from_sequence(|_| re(1.0), 3);
        assert_eq!(s.coeffs(), &[re(1.0), re(1.0), re(1.0)]);
        let s = TruncatedSeries::from_sequence(|n| re(1.0 / (n as f64 + 1.0)), 4);
        assert_eq!(s.coeff(3).re, 0.25);
        let s = TruncatedSeries::from_sequence(
            |n| if n == 0 { re(0.0) } else { re(1.0 / n as f64) },
            3,
        );
        assert_eq!(s.coeffs(), &[re(0.0), re(1.0), re(0.5)]);
    }

    #[test]
    fn prefix_sum_examples() {
        assert_eq!(
            series(&[1.0, 1.0, 1.0]).prefix_sums().coeffs(),
            series(&[1.0, 2.0, 3.0]).coeffs()
        );
        assert_eq!(
            series(&[0.0, 1.0, 0.0, -1.0]).prefix_sums().coeffs(),
            series(&[0.0, 1.0, 1.0, 0.0]).coeffs()
        );
        assert_eq!(
            series(&[0.0; 5]).prefix_sums().coeffs(),
            series(&[0.0; 5]).coeffs()
        );
    }

    #[test]
    fn prefix_sums_equal_convolution_with_ones() {
        let f = TruncatedSeries::from_sequence(|n| re((n as f64 * 0.37).sin()), 48);
        let ones = TruncatedSeries::from_sequence(|_| re(1.0), 48);
        let direct = f.prefix_sums();
        let convolved = f.convolve(&ones);
        assert!(max_diff(&direct, &convolved) < 1e-12);
    }

    #[test]
    fn rotate_examples() {
        let f = series(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(f.rotate(4, 0).unwrap(), f);

        let alternating = f.rotate(2, 1).unwrap();
        assert_eq!(alternating.coeff(0).re, 1.0);
        assert_eq!(alternating.coeff(1).re, -2.0);
        assert_eq!(alternating.coeff(2).re, 3.0);
        assert_eq!(alternating.coeff(3).re, -4.0);

        let quarter = series(&[1.0, 1.0, 1.0, 1.0]).rotate(4, 1).unwrap();
        let expected = [
            re(1.0),
            Complex64::new(0.0, 1.0),
            re(-1.0),
            Complex64::new(0.0, -1.0),
        ];
        for (got, want) in quarter.coeffs().iter().zip(expected.iter()) {
            assert!((got - want).norm() < 1e-15);
        }
        assert!(f.rotate(4, 4).is_err());
    }

    #[test]
    fn decimate_examples() {
        let f = series(&[10.0, 11.0, 12.0, 13.0]);
        assert_eq!(f.decimate(2, 1).unwrap(), series(&[11.0, 13.0]));
        let g = series(&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert_eq!(g.decimate(3, 0).unwrap(), series(&[0.0, 3.0, 6.0]));
        assert_eq!(series(&[1.0, 2.0]).decimate(3, 2).unwrap().order(), 0);
        assert_eq!(series(&[1.0, 2.0]).decimate(5, 4).unwrap().order(), 0);
    }

    #[test]
    fn mask_series_is_pointwise_indicator() {
        // The root-of-unity filter leaves exactly the p-residue terms.
        let f = TruncatedSeries::from_sequence(|n| re(1.0 / (n as f64 + 1.0)), 40);
        for q in 2..=5usize {
            for p in 0..q {
                let mask = residue_mask_series(&f, q, p).unwrap();
                for n in 0..40usize {
                    let want = if n % q == p { f.coeff(n) } else { re(0.0) };
                    assert!((mask.coeff(n) - want).norm() < 1e-13, "q={q} p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn both_routes_match_direct_sums() {
        let f = TruncatedSeries::from_sequence(
            |n| if n == 0 { re(0.0) } else { re(1.0 / n as f64) },
            64,
        );
        for q in 2..=5usize {
            for p in 0..q {
                let dft = residue_sum_series_dft(&f, q, p).unwrap();
                let dec = residue_sum_series_decimate(&f, q, p).unwrap();
                assert!(max_diff(&dft, &dec) < 1e-12, "q={q} p={p}");
                for n in 0..64u64 {
                    let direct = residue_class_sum(
                        |k| if k == 0 { re(0.0) } else { re(1.0 / k as f64) },
                        q,
                        p,
                        n,
                    )
                    .unwrap();
                    assert!(
                        (dft.coeff(n as usize) - direct).norm() < 1e-10,
                        "q={q} p={p} n={n}"
                    );
                }
                assert!(dft.coeff(0).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn decimate_route_floor_counting() {
        // f = 1: S_p(n) counts k < n in the residue class.
        let ones = TruncatedSeries::from_sequence(|_| re(1.0), 32);
        let s = residue_sum_series_decimate(&ones, 3, 2).unwrap();
        for n in 0..32u64 {
            let direct = residue_class_sum(|_| re(1.0), 3, 2, n).unwrap();
            assert!((s.coeff(n as usize) - direct).norm() < 1e-13);
        }
        let zero = TruncatedSeries::zeros(16);
        let s = residue_sum_series_decimate(&zero, 4, 3).unwrap();
        assert!(s.coeffs().iter().all(|c| c.norm() == 0.0));
    }

    #[test]
    fn weighted_series_spot_coefficients() {
        // alternating weight on f(0)=0, f(k)=1/k: coefficient of z^2 is -1
        let f = TruncatedSeries::from_sequence(
            |n| if n == 0 { re(0.0) } else { re(1.0 / n as f64) },
            16,
        );
        let alternating = PeriodicWeight::from_real(&[1.0, -1.0]).unwrap();
        let s = weighted_sum_series(&f, &alternating).unwrap();
        assert!((s.coeff(2).re + 1.0).abs() < 1e-12);
        assert!(s.coeff(2).im.abs() < 1e-12);

        // sin(k pi/2) weight on f(n) = 1/(n+1): coefficient of z^2 is 1/2
        let g = TruncatedSeries::from_sequence(|n| re(1.0 / (n as f64 + 1.0)), 16);
        let sin_weight = PeriodicWeight::from_real(&[0.0, 1.0, 0.0, -1.0]).unwrap();
        let s = weighted_sum_series(&g, &sin_weight).unwrap();
        assert!((s.coeff(2).re - 0.5).abs() < 1e-12);
        assert!(s.coeff(2).im.abs() < 1e-12);

        // zero weight gives the zero series
        let zero_weight = PeriodicWeight::from_real(&[0.0, 0.0]).unwrap();
        let s = weighted_sum_series(&g, &zero_weight).unwrap();
        assert!(s.coeffs().iter().all(|c| c.norm() == 0.0));
    }

    #[test]
    fn weighted_series_specialized_reductions() {
        // The alternating weight collapses to (z/(1-z)) F(-z), and the
        // 4-periodic sine weight to (iz/(2(1-z))) (F(-iz) - F(iz)).
        let f = TruncatedSeries::from_sequence(|n| re(((n as f64) * 0.61).cos()), 40);

        let alternating = PeriodicWeight::from_real(&[1.0, -1.0]).unwrap();
        let general = weighted_sum_series(&f, &alternating).unwrap();
        let reduced = f.rotate(2, 1).unwrap().shifted_prefix_sums();
        for n in 0..40 {
            assert!((general.coeff(n) - reduced.coeff(n)).norm() < 1e-12, "q=2 n={n}");
        }

        let sine = PeriodicWeight::from_real(&[0.0, 1.0, 0.0, -1.0]).unwrap();
        let general = weighted_sum_series(&f, &sine).unwrap();
        let half_i = Complex64::new(0.0, 0.5);
        let combined = f
            .rotate(4, 3)
            .unwrap()
            .plus(&f.rotate(4, 1).unwrap().scaled(re(-1.0)))
            .scaled(half_i);
        let reduced = combined.shifted_prefix_sums();
        for n in 0..40 {
            assert!((general.coeff(n) - reduced.coeff(n)).norm() < 1e-12, "q=4 n={n}");
        }
    }

    #[test]
    fn order_validation() {
        assert!(check_order(0).is_err());
        assert!(check_order(1).is_ok());
        assert!(check_order(MAX_ORDER).is_ok());
        assert!(check_order(MAX_ORDER + 1).is_err());
    }
}
