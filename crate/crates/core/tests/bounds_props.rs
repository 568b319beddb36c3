mod common;

use common::{ghz, haar};
use monoscope::bounds::{census, condition_census, evaluate, f_q, h_q, r_q, verdict};
use monoscope::families::{dicke, mg_ground, mg_werner_parameter, slocc_random, RngStream};
use monoscope::ggm::ggm;
use monoscope::monogamy::monogamy_score;
use monoscope::{Error, MeasureKind, OptimizerConfig, ProofRoute, PureState};
use rand::Rng;

#[test]
fn bound_function_identity_on_random_points() {
    let mut rng = RngStream::new(2024, 99).rng();
    let mut checked = 0;
    while checked < 10_000 {
        let b: f64 = rng.random();
        let beta = rng.random::<f64>() * b;
        if beta <= 0.0 {
            continue;
        }
        for kind in MeasureKind::CORE {
            let lhs = f_q(kind, b - beta).unwrap();
            let rhs = f_q(kind, b).unwrap() - r_q(kind, b, beta).unwrap();
            assert!((lhs - rhs).abs() < 1e-12, "{kind} b={b} beta={beta}: {lhs} vs {rhs}");
        }
        checked += 1;
    }
}

#[test]
fn table_values() {
    assert!((f_q(MeasureKind::ConcurrenceSq, 0.5).unwrap() - 1.0).abs() < 1e-15);
    assert!((f_q(MeasureKind::NegativitySq, 0.5).unwrap() - 0.25).abs() < 1e-15);
    assert!((f_q(MeasureKind::Discord, 0.5).unwrap() - 1.0).abs() < 1e-15);
    assert!((r_q(MeasureKind::ConcurrenceSq, 2.0 / 3.0, 1.0 / 6.0).unwrap() + 1.0 / 9.0).abs() < 1e-15);
    assert!((r_q(MeasureKind::NegativitySq, 2.0 / 3.0, 1.0 / 6.0).unwrap() + 1.0 / 36.0).abs() < 1e-15);
    for kind in MeasureKind::CORE {
        assert_eq!(r_q(kind, 0.7, 0.0).unwrap(), 0.0);
    }
    assert!(matches!(r_q(MeasureKind::Discord, 0.4, 0.5), Err(Error::OutOfRange { .. })));
}

#[test]
fn three_qubit_states_satisfy_the_bound() {
    let cfg = OptimizerConfig::default();
    for seed in 0..300 {
        let eval = evaluate(&haar(3, seed), &MeasureKind::CORE, &cfg, false).unwrap();
        for v in &eval.verdicts {
            assert!(v.bound_satisfied, "seed {seed} {}: delta {} F {}", v.kind, v.delta, v.f_of_g);
            assert_eq!(v.proof_route, ProofRoute::Theorem1);
            assert!(!v.cond_beta && v.r_term.is_none() && v.h_term.is_none());
        }
    }
}

#[test]
fn ghz_saturates() {
    let cfg = OptimizerConfig::default();
    for kind in [MeasureKind::ConcurrenceSq, MeasureKind::Discord] {
        let v = verdict(&ghz(3), kind, &cfg).unwrap();
        assert!((v.delta - 1.0).abs() < 1e-9);
        assert!((v.f_of_g - 1.0).abs() < 1e-9);
        assert!(v.margin().abs() < 1e-9);
        assert_eq!(v.proof_route, ProofRoute::Theorem1);
    }
}

#[test]
fn dicke_four_two() {
    let cfg = OptimizerConfig::default();
    let psi = dicke(4, 2).unwrap();
    let c2 = verdict(&psi, MeasureKind::ConcurrenceSq, &cfg).unwrap();
    assert!((c2.h_term.unwrap() - 2.0 / 9.0).abs() < 1e-9);
    assert!((c2.r_term.unwrap() + 1.0 / 9.0).abs() < 1e-12);
    for kind in [MeasureKind::Discord, MeasureKind::WorkDeficit] {
        let v = verdict(&psi, kind, &cfg).unwrap();
        assert!(v.cond_beta && v.cond_r_negative && !v.cond_h_negative, "{kind}");
        assert_eq!(v.proof_route, ProofRoute::Proposition1);
        assert!(v.identity_residual().unwrap() < 1e-8);
    }
}

#[test]
fn majumdar_ghosh_six_sites() {
    let cfg = OptimizerConfig::default();
    let p = mg_werner_parameter(6);
    assert!((p - 0.6).abs() < 1e-15);
    let v = verdict(&mg_ground(6).unwrap(), MeasureKind::ConcurrenceSq, &cfg).unwrap();
    assert!((v.h_term.unwrap() - 0.25 * (1.0 - 3.0 * p).powi(2)).abs() < 1e-9, "{:?}", v.h_term);
    assert!((v.h_term.unwrap() - 0.16).abs() < 1e-9);
}

#[test]
fn h_needs_beta() {
    let cfg = OptimizerConfig::default();
    let psi = PureState::basis(4, 0).unwrap();
    let report = monogamy_score(&psi, MeasureKind::ConcurrenceSq, &cfg).unwrap();
    assert_eq!(h_q(&report, &ggm(&psi).unwrap()), Err(Error::BetaUnavailable));
    assert_eq!(verdict(&psi, MeasureKind::ConcurrenceSq, &cfg).unwrap().proof_route, ProofRoute::Theorem1);
}

#[test]
fn ghz_census_is_empty() {
    let cfg = OptimizerConfig::default();
    let states = vec![ghz(4); 5].into_iter().chain(vec![ghz(5); 5]).collect::<Vec<_>>();
    for row in census(&states, &MeasureKind::CORE, &cfg, false).unwrap() {
        assert_eq!(row.n_states, 10);
        assert_eq!((row.pct_beta_pos, row.pct_r_neg, row.pct_h_neg), (0.0, 0.0, 0.0));
        assert_eq!(row.n_violations, 0);
    }
}

#[test]
fn proposition_identity_holds_when_beta_is_positive() {
    let cfg = OptimizerConfig::default();
    let mut seen = 0;
    for index in 0..30 {
        let psi = slocc_random(1, RngStream::new(7, index)).unwrap();
        let eval = evaluate(&psi, &MeasureKind::CORE, &cfg, false).unwrap();
        for v in &eval.verdicts {
            if let Some(resid) = v.identity_residual() {
                seen += 1;
                assert!(resid < 1e-8, "{} residual {resid}", v.kind);
            }
            if v.proof_route != ProofRoute::Unproven {
                assert!(v.margin() >= -1e-6);
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn condition_census_matches_verdicts() {
    let cfg = OptimizerConfig::default();
    let states: Vec<PureState> = (0..40).map(|i| slocc_random(3, RngStream::new(11, i)).unwrap()).collect();
    let row = condition_census(&states, MeasureKind::ConcurrenceSq, &cfg).unwrap();
    let beta = states.iter().filter(|s| !ggm(s).unwrap().single_qubit_dominates).count();
    assert!((row.pct_beta_pos - 100.0 * beta as f64 / 40.0).abs() < 1e-12);
    assert!(row.pct_r_neg <= row.pct_beta_pos && row.pct_h_neg <= row.pct_r_neg);
    assert!(row.min_delta >= -1e-8);
}

#[test]
fn saturated_states_are_not_flagged_as_h_negative() {
    let cfg = OptimizerConfig::default();
    let mut saturated = 0;
    for index in 0..200 {
        let psi = slocc_random(1, RngStream::new(3, index)).unwrap();
        let v = verdict(&psi, MeasureKind::ConcurrenceSq, &cfg).unwrap();
        if v.cond_beta && v.margin().abs() < 1e-12 {
            saturated += 1;
            assert!(!v.cond_h_negative, "H = {:?}", v.h_term);
            assert_eq!(v.proof_route, ProofRoute::Proposition1);
            assert!(v.bound_satisfied);
        }
        assert_eq!(v.cond_h_negative, !v.bound_satisfied && v.cond_beta);
    }
    assert!(saturated > 0);
}
