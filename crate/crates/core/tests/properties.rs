//! Property tests over randomized sequences, weights, and expressions.

use proptest::prelude::*;

use periodic_sums::engine::{
    progression_sum, progression_sum_via_residues, residue_class_sum, residue_count, weighted_sum,
};
use periodic_sums::expr::{parse_str, BinaryOp, Expr, Function};
use periodic_sums::periodic::{indicator, IndicatorMethod, PeriodicWeight};
use periodic_sums::series::{
    residue_mask_series, residue_sum_series_decimate, residue_sum_series_dft, TruncatedSeries,
};
use periodic_sums::Complex64;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

proptest! {
    #[test]
    fn indicator_methods_agree_everywhere(n in -2000i64..2000, q in 2usize..=24) {
        let exact = indicator(n, q, IndicatorMethod::Floor).unwrap();
        prop_assert_eq!(exact, if n.rem_euclid(q as i64) == 0 { 1.0 } else { 0.0 });
        for method in [IndicatorMethod::RootsOfUnity, IndicatorMethod::CosineSplit] {
            let v = indicator(n, q, method).unwrap();
            prop_assert!((v - exact).abs() < 1e-12, "{:?} n={} q={}: {}", method, n, q, v);
        }
    }

    #[test]
    fn residue_conversions_are_exact(
        a in -4i64..=4,
        b in -4i64..=4,
        c in -4i64..=4,
        q in 2usize..=6,
        n in 0u64..=80,
    ) {
        let f = move |k: u64| {
            let k = k as f64;
            re(a as f64 + b as f64 * k + c as f64 * k * k)
        };
        for p in 0..q {
            let direct = residue_class_sum(f, q, p, n).unwrap();
            let count = residue_count(n, p, q).unwrap();
            let converted = progression_sum(f, q, p, count).unwrap();
            prop_assert_eq!(direct, converted);

            let via = progression_sum_via_residues(f, q, p, n).unwrap();
            let plain = progression_sum(f, q, p, n).unwrap();
            prop_assert_eq!(via, plain);
        }
    }

    #[test]
    fn weighted_sum_is_basis_linear(
        values in prop::collection::vec(-2.0f64..2.0, 2..=8),
        n in 0u64..=120,
    ) {
        // S(n) = sum_p g(p) S_p(n): the indicator-basis decomposition.
        let weight = PeriodicWeight::from_real(&values).unwrap();
        let q = weight.period();
        let f = |k: u64| re(1.0 / (k as f64 + 1.0));
        let direct = weighted_sum(f, &weight, n);
        let mut recombined = Complex64::new(0.0, 0.0);
        for (p, &coeff) in weight.basis_coefficients().iter().enumerate() {
            recombined += coeff * residue_class_sum(f, q, p, n).unwrap();
        }
        prop_assert!((direct - recombined).norm() < 1e-10);
    }

    #[test]
    fn series_routes_agree(
        coeffs in prop::collection::vec(-2.0f64..2.0, 8..=48),
        q in 2usize..=6,
    ) {
        let f_series = TruncatedSeries::new(coeffs.iter().map(|&x| re(x)).collect());
        let order = f_series.order();
        for p in 0..q {
            let dft = residue_sum_series_dft(&f_series, q, p).unwrap();
            let dec = residue_sum_series_decimate(&f_series, q, p).unwrap();
            let mask = residue_mask_series(&f_series, q, p).unwrap();
            let mut running = Complex64::new(0.0, 0.0);
            for n in 0..order {
                prop_assert!((dft.coeff(n) - dec.coeff(n)).norm() < 1e-10);
                // mask isolates the residue class pointwise
                let want = if n % q == p { f_series.coeff(n) } else { re(0.0) };
                prop_assert!((mask.coeff(n) - want).norm() < 1e-12);
                // and the dft route is its shifted prefix sum
                prop_assert!((dft.coeff(n) - running).norm() < 1e-10);
                running += want;
            }
        }
    }

    #[test]
    fn prefix_equals_convolution_with_ones(
        coeffs in prop::collection::vec(-3.0f64..3.0, 1..=40),
    ) {
        let f_series = TruncatedSeries::new(coeffs.iter().map(|&x| re(x)).collect());
        let ones = TruncatedSeries::from_sequence(|_| re(1.0), f_series.order());
        let direct = f_series.prefix_sums();
        let convolved = f_series.convolve(&ones);
        for n in 0..f_series.order() {
            prop_assert!((direct.coeff(n) - convolved.coeff(n)).norm() < 1e-12);
        }
    }
}

// Expression trees in canonical form: constants are non-negative (the
// grammar spells negative values with unary minus).
fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..=400).prop_map(|n| Expr::Constant(n as f64 / 8.0)),
        Just(Expr::Variable),
    ];
    leaf.prop_recursive(5, 48, 3, |inner| {
        let op = prop::sample::select(vec![
            BinaryOp::Add,
            BinaryOp::Sub,
            BinaryOp::Mul,
            BinaryOp::Div,
            BinaryOp::Pow,
        ]);
        let function = prop::sample::select(vec![
            Function::Sin,
            Function::Cos,
            Function::Tan,
            Function::Log,
            Function::Exp,
            Function::Abs,
            Function::Floor,
        ]);
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Negate(Box::new(e))),
            (op, inner.clone(), inner.clone()).prop_map(|(op, l, r)| Expr::Binary(
                op,
                Box::new(l),
                Box::new(r)
            )),
            (function, inner).prop_map(|(f, a)| Expr::Call(f, Box::new(a))),
        ]
    })
}

proptest! {
    #[test]
    fn printed_expressions_reparse_identically(expr in arb_expr()) {
        let printed = expr.to_string();
        let reparsed = parse_str(&printed);
        prop_assert_eq!(reparsed.as_ref(), Ok(&expr), "printed as {}", printed);
    }
}
