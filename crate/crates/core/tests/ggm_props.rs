mod common;

use common::{apply_local, ghz, haar, w3};
use monoscope::families::{dicke, ghz_w, symmetric_random, RngStream};
use monoscope::ggm::{ggm, ggm_dicke_closed_form, ggm_ghzw_closed_form, ghzw_single_qubit_eigenvalue};
use monoscope::qstate::enumerate_bipartitions;
use monoscope::{Complex64, PureState};
use proptest::prelude::*;

#[test]
fn named_values() {
    for n in 3..=7 {
        assert!((ggm(&ghz(n)).unwrap().ggm - 0.5).abs() < 1e-12);
    }
    assert_eq!(ggm(&PureState::basis(4, 0).unwrap()).unwrap().ggm, 0.0);
    assert!((ggm(&w3()).unwrap().ggm - 1.0 / 3.0).abs() < 1e-12);

    let d = ggm(&dicke(4, 2).unwrap()).unwrap();
    assert!((d.ggm - 1.0 / 3.0).abs() < 1e-12);
    assert_eq!(d.max_cut.part_a().len(), 2);
    assert!((d.beta.unwrap() - 1.0 / 6.0).abs() < 1e-12);
    assert!(!d.single_qubit_dominates);

    let biseparable = haar(2, 3).tensor(&haar(2, 4));
    assert_eq!(ggm(&biseparable).unwrap().ggm, 0.0);
}

#[test]
fn dicke_matches_closed_forms() {
    for n in 2..=8 {
        for r in 0..=n {
            let report = ggm(&dicke(n, r).unwrap()).unwrap();
            let form = ggm_dicke_closed_form(n, r).unwrap();
            assert!((report.a - form.a).abs() < 1e-9, "a n={n} r={r}");
            assert!((report.ggm - form.ggm()).abs() < 1e-9, "ggm n={n} r={r}");
            if let Some(b) = form.b_when_half {
                assert!((report.b.unwrap() - b).abs() < 1e-9, "b n={n} r={r}");
                assert!((report.beta.unwrap() - 1.0 / (2.0 * (n as f64 - 1.0))).abs() < 1e-9);
            }
        }
    }
    assert!((ggm_dicke_closed_form(5, 1).unwrap().a - 0.8).abs() < 1e-15);
    assert!((ggm_dicke_closed_form(6, 3).unwrap().b_when_half.unwrap() - 0.6).abs() < 1e-15);
}

#[test]
fn ghz_w_named_values() {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    assert!((ggm_ghzw_closed_form(h, zero, 4).unwrap() - 0.5).abs() < 1e-12);
    assert_eq!(ggm_ghzw_closed_form(one, zero, 5).unwrap(), 0.0);
    assert!((ggm_ghzw_closed_form(zero, one, 3).unwrap() - 1.0 / 3.0).abs() < 1e-12);
    assert!(ggm_ghzw_closed_form(one, one, 4).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ghz_w_matches_closed_form(
        n in 3usize..=8,
        r_alpha in 0.0f64..1.0,
        r_gamma in 0.0f64..1.0,
        ph_alpha in 0.0f64..6.3,
        ph_gamma in 0.0f64..6.3,
    ) {
        prop_assume!(r_alpha * r_alpha + r_gamma * r_gamma <= 1.0);
        let alpha = Complex64::from_polar(r_alpha, ph_alpha);
        let gamma = Complex64::from_polar(r_gamma, ph_gamma);
        let report = ggm(&ghz_w(n, alpha, gamma).unwrap()).unwrap();
        let a = ghzw_single_qubit_eigenvalue(alpha, gamma, n).unwrap();
        prop_assert!((report.a - a).abs() < 1e-9, "a {} vs {}", report.a, a);
        if report.single_qubit_dominates {
            prop_assert!((report.ggm - ggm_ghzw_closed_form(alpha, gamma, n).unwrap()).abs() < 1e-9);
        }
    }

    #[test]
    fn ggm_is_local_unitary_invariant(n in 2usize..=6, seed in any::<u64>()) {
        let psi = haar(n, seed);
        let all: Vec<usize> = (0..n).collect();
        let moved = apply_local(&psi, &all, seed ^ 0xabc);
        prop_assert!((ggm(&psi).unwrap().ggm - ggm(&moved).unwrap().ggm).abs() < 1e-9);
    }

    #[test]
    fn both_sides_of_every_cut_agree(n in 3usize..=6, seed in any::<u64>()) {
        let psi = haar(n, seed);
        let report = ggm(&psi).unwrap();
        let mut best = 0.0f64;
        for cut in enumerate_bipartitions(n).unwrap() {
            let a = psi.partial_trace(cut.part_a()).unwrap().spectrum().unwrap().max();
            let b = psi.partial_trace(cut.part_b()).unwrap().spectrum().unwrap().max();
            prop_assert!((a - b).abs() < 1e-9);
            best = best.max(a);
        }
        prop_assert!((report.ggm - (1.0 - best)).abs() < 1e-12);
        prop_assert!((0.0..1.0).contains(&report.ggm));
        for (q, &lambda) in report.node_eigenvalues.iter().enumerate() {
            prop_assert!((psi.partial_trace(&[q]).unwrap().spectrum().unwrap().max() - lambda).abs() < 1e-12);
        }
    }

    #[test]
    fn three_qubit_states_are_single_qubit_dominated(seed in any::<u64>()) {
        let report = ggm(&haar(3, seed)).unwrap();
        prop_assert!(report.single_qubit_dominates);
        prop_assert!(report.b.is_none() || report.beta.unwrap() <= 0.0);
        let sym = ggm(&symmetric_random(3, RngStream::new(seed, 0)).unwrap()).unwrap();
        prop_assert!(sym.single_qubit_dominates);
    }
}
