//! q-periodic weight sequences and the residue-class indicator.
//!
//! A q-periodic weight g is stored as one period (g(0), ..., g(q-1)).
//! The indicator of the residue class 0 mod q can be evaluated three ways:
//! an exact floor-difference, a root-of-unity average, and a half-spectrum
//! cosine form; the trigonometric forms agree with the exact one to
//! machine precision and are exposed for cross-checking.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Evaluation strategy for the residue-class indicator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndicatorMethod {
    /// floor(n/q) - floor((n-1)/q), exact in integer arithmetic.
    Floor,
    /// (1/q) sum of the n-th powers of all q-th roots of unity.
    RootsOfUnity,
    /// Folded cosine sum over half the spectrum, split on the parity of q.
    CosineSplit,
}

/// Indicator of n = 0 (mod q).
///
/// `Floor` returns exactly 0.0 or 1.0; the trigonometric methods return a
/// real within about 1e-15 of those values. Division and remainder are
/// floored so negative n work.
pub fn indicator(n: i64, q: usize, method: IndicatorMethod) -> Result<f64> {
    check_period(q)?;
    let qi = q as i64;
    Ok(match method {
        IndicatorMethod::Floor => (n.div_euclid(qi) - (n - 1).div_euclid(qi)) as f64,
        IndicatorMethod::RootsOfUnity => {
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..qi {
                sum += root_of_unity_power(q, j * n);
            }
            sum.re / q as f64
        }
        IndicatorMethod::CosineSplit => {
            let cos_term = |j: i64| reduced_angle(q, j * n).cos();
            if q % 2 == 1 {
                let mut sum = 1.0;
                for j in 1..=((qi - 1) / 2) {
                    sum += 2.0 * cos_term(j);
                }
                sum / q as f64
            } else {
                let parity = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                let mut sum = 1.0 + parity;
                for j in 1..(qi / 2) {
                    sum += 2.0 * cos_term(j);
                }
                sum / q as f64
            }
        }
    })
}

/// Exact boolean form of the indicator, used wherever a branch is taken.
pub fn is_residue(n: i64, p: usize, q: usize) -> bool {
    n.rem_euclid(q as i64) == p as i64
}

/// 2*pi*(m mod q)/q, the argument of the m-th power of exp(2*pi*i/q).
/// Reducing mod q first keeps the angle small regardless of m.
fn reduced_angle(q: usize, m: i64) -> f64 {
    let r = m.rem_euclid(q as i64);
    2.0 * std::f64::consts::PI * r as f64 / q as f64
}

/// omega^m with omega = exp(2*pi*i/q).
pub fn root_of_unity_power(q: usize, m: i64) -> Complex64 {
    Complex64::from_polar(1.0, reduced_angle(q, m))
}

pub(crate) fn check_period(q: usize) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "period q must be >= 2, got {q}"
        )));
    }
    Ok(())
}

pub(crate) fn check_residue(p: usize, q: usize) -> Result<()> {
    check_period(q)?;
    if p >= q {
        return Err(Error::InvalidParameter(format!(
            "residue p must satisfy 0 <= p < q, got p={p}, q={q}"
        )));
    }
    Ok(())
}

/// A q-periodic weight, stored as one period of complex values.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicWeight {
    values: Vec<Complex64>,
}

impl PeriodicWeight {
    /// Build a weight from one period. The period length must be >= 2;
    /// constant weights should be passed as a duplicated pair.
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        check_period(values.len())?;
        Ok(Self { values })
    }

    /// Convenience constructor for real-valued periods.
    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The period q.
    pub fn period(&self) -> usize {
        self.values.len()
    }

    /// g(n) = values[n mod q], with floored modulus so negative n work.
    pub fn eval(&self, n: i64) -> Complex64 {
        self.values[n.rem_euclid(self.values.len() as i64) as usize]
    }

    /// Coefficients of g in the shifted-indicator basis. These are the
    /// period values themselves: g(n) = sum_p g(p) * g0(n - p).
    pub fn basis_coefficients(&self) -> &[Complex64] {
        &self.values
    }

    /// Reconstruct g(n) from the basis expansion, using the exact indicator.
    pub fn reconstruct(&self, n: i64) -> Complex64 {
        let q = self.period();
        let mut sum = Complex64::new(0.0, 0.0);
        for (p, &coeff) in self.values.iter().enumerate() {
            if is_residue(n - p as i64, 0, q) {
                sum += coeff;
            }
        }
        sum
    }

    /// True when every period value is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.re == 0.0 && v.im == 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const METHODS: [IndicatorMethod; 3] = [
        IndicatorMethod::Floor,
        IndicatorMethod::RootsOfUnity,
        IndicatorMethod::CosineSplit,
    ];

    #[test]
    fn indicator_rejects_small_period() {
        for method in METHODS {
            assert!(matches!(
                indicator(0, 1, method),
                Err(Error::InvalidParameter(_))
            ));
            assert!(matches!(
                indicator(0, 0, method),
                Err(Error::InvalidParameter(_))
            ));
        }
    }

    #[test]
    fn indicator_spot_values() {
        assert_eq!(indicator(0, 3, IndicatorMethod::Floor).unwrap(), 1.0);
        assert_eq!(indicator(5, 3, IndicatorMethod::Floor).unwrap(), 0.0);
        let v = indicator(6, 3, IndicatorMethod::RootsOfUnity).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
        let v = indicator(-3, 3, IndicatorMethod::CosineSplit).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn indicator_methods_agree() {
        for q in 2..=12 {
            for n in -100..=100 {
                let exact = indicator(n, q, IndicatorMethod::Floor).unwrap();
                let expected = if n.rem_euclid(q as i64) == 0 {
                    1.0
                } else {
                    0.0
                };
                assert_eq!(exact, expected, "floor n={n} q={q}");
                for method in [IndicatorMethod::RootsOfUnity, IndicatorMethod::CosineSplit] {
                    let v = indicator(n, q, method).unwrap();
                    assert!(
                        (v - exact).abs() < 1e-12,
                        "{method:?} n={n} q={q}: {v} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn indicator_partition_of_unity() {
        for q in 2..=12i64 {
            for n in -50..=50 {
                let total: f64 = (0..q)
                    .map(|p| indicator(n - p, q as usize, IndicatorMethod::Floor).unwrap())
                    .sum();
                assert_eq!(total, 1.0, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn indicator_is_difference_of_floors() {
        // Forward difference of floor((n-1)/q) recovers the indicator exactly.
        for q in 2..=9i64 {
            for n in -60..=60i64 {
                let delta = n.div_euclid(q) - (n - 1).div_euclid(q);
                let ind = indicator(n, q as usize, IndicatorMethod::Floor).unwrap();
                assert_eq!(delta as f64, ind);
            }
        }
    }

    #[test]
    fn weight_eval_wraps_with_floored_modulus() {
        // sin(k*pi/2) has period (0, 1, 0, -1).
        let w = PeriodicWeight::from_real(&[0.0, 1.0, 0.0, -1.0]).unwrap();
        assert_eq!(w.eval(5).re, 1.0);
        assert_eq!(w.eval(4), w.eval(0));
        assert_eq!(w.eval(-1).re, -1.0);
        assert_eq!(w.eval(-5).re, -1.0);

        // cos(2*k*pi/3) has period (1, -1/2, -1/2).
        let w3 = PeriodicWeight::from_real(&[1.0, -0.5, -0.5]).unwrap();
        assert_eq!(w3.eval(0).re, 1.0);
        assert_eq!(w3.eval(3), w3.eval(0));
    }

    #[test]
    fn weight_requires_two_values() {
        assert!(PeriodicWeight::from_real(&[1.0]).is_err());
        assert!(PeriodicWeight::from_real(&[]).is_err());
    }

    #[test]
    fn basis_coefficients_are_the_period() {
        let w = PeriodicWeight::from_real(&[0.0, 1.0, 0.0, -1.0]).unwrap();
        let coeffs: Vec<f64> = w.basis_coefficients().iter().map(|c| c.re).collect();
        assert_eq!(coeffs, vec![0.0, 1.0, 0.0, -1.0]);

        // Reconstruction from the basis reproduces the weight everywhere.
        for n in -20..=20 {
            assert_eq!(w.reconstruct(n), w.eval(n), "n={n}");
        }
        assert_eq!(w.reconstruct(7).re, -1.0);

        let c = PeriodicWeight::from_real(&[2.5, 2.5, 2.5]).unwrap();
        for coeff in c.basis_coefficients() {
            assert_eq!(coeff.re, 2.5);
        }
    }

    #[test]
    fn root_of_unity_average_matches_indicator() {
        for q in 2..=12 {
            for n in -50..=50 {
                let mut sum = Complex64::new(0.0, 0.0);
                for k in 0..q as i64 {
                    sum += root_of_unity_power(q, k * n);
                }
                let avg = sum / q as f64;
                let exact = indicator(n, q, IndicatorMethod::Floor).unwrap();
                assert!((avg.re - exact).abs() < 1e-12);
                assert!(avg.im.abs() < 1e-12);
            }
        }
    }
}
