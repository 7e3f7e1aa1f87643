//! Cross-module identities: the conversion formulas evaluated through the
//! catalog families against the brute-force oracles.

use periodic_sums::catalog;
use periodic_sums::engine::{
    alternating_sum_from_extension, forward_difference, residue_class_sum,
    residue_sum_from_extension, scaled_error, weighted_sum, weighted_sum_from_extension,
    CompensatedSum, DomainPoint,
};
use periodic_sums::periodic::is_residue;
use periodic_sums::special::log_gamma_real;
use periodic_sums::Complex64;

#[test]
fn extension_route_matches_brute_residue_sums() {
    // spec-level spot cases first
    let log3 = catalog::log3();
    let brute = residue_class_sum(|k| log3.family().term(k), 3, 2, 7).unwrap();
    let via = residue_sum_from_extension(log3.family(), 2, 7).unwrap();
    assert!((via - brute).norm() < 1e-10);

    let recip4 = catalog::recip4();
    let brute = residue_class_sum(|k| recip4.family().term(k), 4, 1, 13).unwrap();
    let via = residue_sum_from_extension(recip4.family(), 1, 13).unwrap();
    assert!((via - brute).norm() < 1e-10);

    for entry in catalog::all() {
        if !entry.family().has_extension() {
            continue;
        }
        for p in 0..entry.modulus() {
            // T_p+(0) = T_p(0) = 0, up to the rounding in the Gamma ratios
            assert!(
                residue_sum_from_extension(entry.family(), p, 0)
                    .unwrap()
                    .norm()
                    < 1e-12
            );
        }
    }
}

#[test]
fn extension_route_telescopes() {
    // The forward difference of the extension form collapses to the
    // indicator times the summand.
    for entry in catalog::all() {
        if !entry.family().has_extension() {
            continue;
        }
        let q = entry.modulus();
        for p in 0..q {
            for n in 0..=100u64 {
                let delta = forward_difference(
                    |m| residue_sum_from_extension(entry.family(), p, m).unwrap(),
                    n,
                );
                let expected = if is_residue(n as i64, p, q) {
                    entry.family().term(n)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                assert!(
                    scaled_error(delta, expected) < 1e-12,
                    "{} p={p} n={n}: {delta} vs {expected}",
                    entry.id()
                );
            }
        }
    }
}

#[test]
fn weighted_extension_route_matches_brute() {
    let log3 = catalog::log3();
    let via = weighted_sum_from_extension(log3.weight(), log3.family(), 9).unwrap();
    let brute = log3.brute_sum(9);
    assert!((via - brute).norm() < 1e-9);

    let log4 = catalog::log4();
    let via = weighted_sum_from_extension(log4.weight(), log4.family(), 11).unwrap();
    let brute = log4.brute_sum(11);
    assert!((via - brute).norm() < 1e-9);

    for entry in catalog::all() {
        if !entry.family().has_extension() {
            continue;
        }
        for n in (0..=120).step_by(7) {
            let via = weighted_sum_from_extension(entry.weight(), entry.family(), n).unwrap();
            let brute = entry.brute_sum(n);
            assert!(scaled_error(via, brute) < 1e-10, "{} n={n}", entry.id());
        }
    }
}

#[test]
fn alternating_extension_route() {
    // q = 2: the two-term closed route through T0+ only.
    let alt = catalog::alt_harmonic();
    let t0 = |x: DomainPoint| alt.family().extension(0, x);
    let f = |k: u64| alt.family().term(k);
    let prefix = |n: u64| {
        let mut acc = CompensatedSum::new();
        for k in 0..n {
            acc.add(f(k));
        }
        acc.value()
    };

    let s3 = alternating_sum_from_extension(t0, prefix, 3).unwrap();
    assert!((s3.re + 0.5).abs() < 1e-12);

    for n in 0..=150u64 {
        let via = alternating_sum_from_extension(t0, prefix, n).unwrap();
        let brute = weighted_sum(f, alt.weight(), n);
        assert!((via - brute).norm() < 1e-10, "n={n}");
    }
}

#[test]
fn progression_sum_matches_gamma_ratio() {
    // T_1(3) for f(k) = log(k+1), q = 4: log(2*6*10) against the catalog's
    // Gamma-ratio extension log(4^3 Gamma(3 + 1/2) / Gamma(1/2)).
    let log4 = catalog::log4();
    let direct =
        periodic_sums::engine::progression_sum(|k| log4.family().term(k), 4, 1, 3).unwrap();
    let formula = 3.0 * 4f64.ln() + log_gamma_real(3.5).unwrap() - log_gamma_real(0.5).unwrap();
    assert!((direct.re - formula).abs() < 1e-12);
    assert!((direct.re - 120f64.ln()).abs() < 1e-12);

    let at_integer = log4.family().extension(1, DomainPoint::new(12, 4)).unwrap();
    assert!((at_integer.re - formula).abs() < 1e-12);
}
