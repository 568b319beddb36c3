//! Upper bounds on monogamy scores as functions of the GGM.
//!
//! For a measure `Q` the bound is `δ^Q ≤ F^Q(G)`. When the best cut isolates
//! a single qubit the bound always holds. Otherwise write `b` for the best
//! multi-qubit eigenvalue and `β = b − a`; then `δ = F(G) − H` exactly, with
//! `H = Σ_k Q(ρ_jk) + R(b, b − a_j)` at the minimizing node `j`, so a
//! violation needs `β > 0`, `R < 0` and `H < 0` at once.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ggm::{ggm, GgmReport};
use crate::measures::{MeasureKind, OptimizerConfig};
use crate::monogamy::{monogamy_scores, MonogamyReport};
use crate::qstate::{binary_entropy, PureState};

/// Slack allowed in `bound_satisfied`, and the margin by which `H` must be
/// negative before `cond_h_negative` is set. Since `δ + H = F(G)`, the two
/// flags then agree on states that saturate the bound.
pub const BOUND_TOLERANCE: f64 = 1e-9;
/// A sampled state counts as a violation only beyond this margin.
pub const VIOLATION_TOLERANCE: f64 = 1e-6;
/// Grid refinement factor used to re-check flagged violations.
pub const RECHECK_FACTOR: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProofRoute {
    /// The best cut isolates one qubit.
    Theorem1,
    /// `β > 0`, but `R ≥ 0` or `H ≥ 0`.
    Proposition1,
    /// All three necessary violation conditions hold.
    Unproven,
}

impl std::fmt::Display for ProofRoute {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProofRoute::Theorem1 => "theorem1",
            ProofRoute::Proposition1 => "proposition1",
            ProofRoute::Unproven => "unproven",
        })
    }
}

/// `z` in `F = z g(1 − g)` for the quadratic measures, `None` for the entropic ones.
fn quadratic_weight(kind: MeasureKind) -> Option<f64> {
    match kind {
        MeasureKind::ConcurrenceSq => Some(4.0),
        MeasureKind::NegativitySq => Some(1.0),
        MeasureKind::Discord | MeasureKind::WorkDeficit | MeasureKind::EoF => None,
    }
}

fn check_unit(what: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::OutOfRange { what, value });
    }
    Ok(())
}

/// `F(g)`: `4g(1−g)`, `g(1−g)` or `h(g)`.
pub fn f_q(kind: MeasureKind, g: f64) -> Result<f64> {
    check_unit("g", g)?;
    Ok(match quadratic_weight(kind) {
        Some(z) => z * g * (1.0 - g),
        None => binary_entropy(g),
    })
}

/// `R(b, β) = F(b) − F(b − β)`.
///
/// Quadratic rows: `zβ(1 − 2b + β)`. Entropic row:
/// `−((b−β)log₂b + (1−b+β)log₂(1−b)) − h(b−β) − β log₂(b/(1−b))`,
/// which collapses to `h(b) − h(b−β)` and is evaluated that way so it stays
/// finite at `b = 1`.
pub fn r_q(kind: MeasureKind, b: f64, beta: f64) -> Result<f64> {
    check_unit("b", b)?;
    if !(0.0..=b).contains(&beta) {
        return Err(Error::OutOfRange { what: "beta", value: beta });
    }
    Ok(match quadratic_weight(kind) {
        Some(z) => z * beta * (1.0 - 2.0 * b + beta),
        None => binary_entropy(b) - binary_entropy(b - beta),
    })
}

/// `H = Σ_k Q(ρ_jk) + R(b, b − a_j)` at the minimizing node `j`.
pub fn h_q(report: &MonogamyReport, ggm_report: &GgmReport) -> Result<f64> {
    let b = match ggm_report.b {
        Some(b) if !ggm_report.single_qubit_dominates => b,
        _ => return Err(Error::BetaUnavailable),
    };
    let a_j = ggm_report.node_eigenvalues[report.min_node];
    Ok(report.pair_sum_at_min() + r_q(report.kind, b, (b - a_j).clamp(0.0, b))?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub kind: MeasureKind,
    pub ggm_report: GgmReport,
    pub delta: f64,
    pub min_node: usize,
    pub f_of_g: f64,
    pub r_term: Option<f64>,
    pub h_term: Option<f64>,
    pub cond_beta: bool,
    pub cond_r_negative: bool,
    /// `H < −BOUND_TOLERANCE`.
    pub cond_h_negative: bool,
    pub bound_satisfied: bool,
    pub proof_route: ProofRoute,
}

impl BoundVerdict {
    pub fn margin(&self) -> f64 {
        self.f_of_g - self.delta
    }

    pub fn is_violation(&self) -> bool {
        self.delta > self.f_of_g + VIOLATION_TOLERANCE
    }

    /// `|δ + H − F(G)|` when `H` is defined.
    pub fn identity_residual(&self) -> Option<f64> {
        self.h_term.map(|h| (self.delta + h - self.f_of_g).abs())
    }
}

pub fn verdict_from_reports(report: &MonogamyReport, ggm_report: &GgmReport) -> Result<BoundVerdict> {
    let kind = report.kind;
    let f_of_g = f_q(kind, ggm_report.ggm)?;
    let cond_beta = !ggm_report.single_qubit_dominates;
    let (r_term, h_term) = if cond_beta {
        let (b, beta) = (ggm_report.b.unwrap(), ggm_report.beta.unwrap());
        (Some(r_q(kind, b, beta)?), Some(h_q(report, ggm_report)?))
    } else {
        (None, None)
    };
    let cond_r_negative = r_term.is_some_and(|r| r < 0.0);
    let cond_h_negative = h_term.is_some_and(|h| h < -BOUND_TOLERANCE);
    let proof_route = if !cond_beta {
        ProofRoute::Theorem1
    } else if cond_r_negative && cond_h_negative {
        ProofRoute::Unproven
    } else {
        ProofRoute::Proposition1
    };
    Ok(BoundVerdict {
        kind,
        ggm_report: ggm_report.clone(),
        delta: report.delta,
        min_node: report.min_node,
        f_of_g,
        r_term,
        h_term,
        cond_beta,
        cond_r_negative,
        cond_h_negative,
        bound_satisfied: report.delta <= f_of_g + BOUND_TOLERANCE,
        proof_route,
    })
}

/// Everything computed for one state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub ggm: GgmReport,
    pub monogamy: Vec<MonogamyReport>,
    pub verdicts: Vec<BoundVerdict>,
}

pub fn evaluate(
    state: &PureState,
    kinds: &[MeasureKind],
    cfg: &OptimizerConfig,
    partner_measured: bool,
) -> Result<Evaluation> {
    let ggm_report = ggm(state)?;
    let monogamy = monogamy_scores(state, kinds, cfg, partner_measured)?;
    let verdicts = monogamy.iter().map(|m| verdict_from_reports(m, &ggm_report)).collect::<Result<_>>()?;
    Ok(Evaluation { ggm: ggm_report, monogamy, verdicts })
}

pub fn verdict(state: &PureState, kind: MeasureKind, cfg: &OptimizerConfig) -> Result<BoundVerdict> {
    Ok(evaluate(state, &[kind], cfg, false)?.verdicts.remove(0))
}

/// Verdicts for every state and kind, `[state][kind]`, evaluated in parallel.
pub fn verdicts_for(
    states: &[PureState],
    kinds: &[MeasureKind],
    cfg: &OptimizerConfig,
    partner_measured: bool,
) -> Result<Vec<Vec<BoundVerdict>>> {
    states
        .par_iter()
        .map(|s| Ok(evaluate(s, kinds, cfg, partner_measured)?.verdicts))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub kind: MeasureKind,
    pub n_states: usize,
    /// States with `β > 0`.
    pub pct_beta_pos: f64,
    /// States with `β > 0` and `R < 0`.
    pub pct_r_neg: f64,
    /// States meeting all three violation conditions.
    pub pct_h_neg: f64,
    /// States with `δ > F(G) + 1e-6` that survive a finer re-check.
    pub n_violations: usize,
    pub max_delta_minus_f: f64,
    pub min_delta: f64,
    /// Largest `|δ + H − F(G)|` over the states with `β > 0`.
    pub max_identity_residual: f64,
}

/// Aggregates the verdicts of one kind. Flagged violations of the
/// optimizer-based measures are re-evaluated on a grid `RECHECK_FACTOR`
/// times finer before they count.
pub fn summarize(
    states: &[PureState],
    verdicts: &[BoundVerdict],
    cfg: &OptimizerConfig,
    partner_measured: bool,
) -> Result<CensusRow> {
    if states.is_empty() || states.len() != verdicts.len() {
        return Err(Error::InvalidConfig(format!(
            "census needs one verdict per state, got {} states and {} verdicts",
            states.len(),
            verdicts.len()
        )));
    }
    let kind = verdicts[0].kind;
    let finer = cfg.finer(RECHECK_FACTOR);
    let mut rechecked = Vec::new();
    for (state, v) in states.iter().zip(verdicts) {
        if v.is_violation() && matches!(kind, MeasureKind::Discord | MeasureKind::WorkDeficit) {
            rechecked.push(evaluate(state, &[kind], &finer, partner_measured)?.verdicts.remove(0));
        }
    }
    let mut rechecked = rechecked.into_iter();
    let n = verdicts.len() as f64;
    let pct = |count: usize| 100.0 * count as f64 / n;
    let (mut beta, mut r_neg, mut h_neg, mut violations) = (0, 0, 0, 0);
    let (mut max_gap, mut min_delta, mut max_resid) = (f64::NEG_INFINITY, f64::INFINITY, 0.0f64);
    for v in verdicts {
        let v = if v.is_violation() && matches!(kind, MeasureKind::Discord | MeasureKind::WorkDeficit) {
            rechecked.next().unwrap()
        } else {
            v.clone()
        };
        beta += v.cond_beta as usize;
        r_neg += (v.cond_beta && v.cond_r_negative) as usize;
        h_neg += (v.cond_beta && v.cond_r_negative && v.cond_h_negative) as usize;
        violations += v.is_violation() as usize;
        max_gap = max_gap.max(v.delta - v.f_of_g);
        min_delta = min_delta.min(v.delta);
        if let Some(r) = v.identity_residual() {
            max_resid = max_resid.max(r);
        }
    }
    Ok(CensusRow {
        kind,
        n_states: verdicts.len(),
        pct_beta_pos: pct(beta),
        pct_r_neg: pct(r_neg),
        pct_h_neg: pct(h_neg),
        n_violations: violations,
        max_delta_minus_f: max_gap,
        min_delta,
        max_identity_residual: max_resid,
    })
}

/// One census row per kind from a single shared sample.
pub fn census(
    states: &[PureState],
    kinds: &[MeasureKind],
    cfg: &OptimizerConfig,
    partner_measured: bool,
) -> Result<Vec<CensusRow>> {
    let all = verdicts_for(states, kinds, cfg, partner_measured)?;
    (0..kinds.len())
        .map(|m| {
            let column: Vec<BoundVerdict> = all.iter().map(|row| row[m].clone()).collect();
            summarize(states, &column, cfg, partner_measured)
        })
        .collect()
}

pub fn condition_census(states: &[PureState], kind: MeasureKind, cfg: &OptimizerConfig) -> Result<CensusRow> {
    Ok(census(states, &[kind], cfg, false)?.remove(0))
}
