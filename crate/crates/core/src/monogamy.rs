//! Monogamy scores `δ_j = Q(ρ_{j:rest}) − Σ_{k≠j} Q(ρ_jk)` and their minimum over nodes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{
    cut_measure_from_marginal, discord_and_work_deficit, pair_measures, MeasureKind, OptimizerConfig, Side,
};
use crate::qstate::{DensityOperator, PureState, DEFAULT_QUBIT_CAP};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeScore {
    pub node: usize,
    pub cut_value: f64,
    /// `Q(ρ_jk)` for every `k ≠ j`, in increasing `k`.
    pub pair_values: Vec<f64>,
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonogamyReport {
    pub kind: MeasureKind,
    pub per_node: Vec<NodeScore>,
    pub min_node: usize,
    pub delta: f64,
    /// For discord and work-deficit: whether the partner rather than the node was measured.
    pub partner_measured: bool,
}

impl MonogamyReport {
    pub fn node(&self, j: usize) -> &NodeScore {
        &self.per_node[j]
    }

    pub fn pair_sum_at_min(&self) -> f64 {
        self.per_node[self.min_node].pair_values.iter().sum()
    }
}

fn check_size(state: &PureState) -> Result<()> {
    let n = state.n_qubits();
    if n < 3 {
        return Err(Error::TooFewQubits { n_qubits: n, min: 3 });
    }
    if n > DEFAULT_QUBIT_CAP {
        return Err(Error::TooManyQubits { n_qubits: n, cap: DEFAULT_QUBIT_CAP });
    }
    Ok(())
}

pub fn monogamy_score_node(state: &PureState, node: usize, kind: MeasureKind, cfg: &OptimizerConfig) -> Result<f64> {
    check_size(state)?;
    if node >= state.n_qubits() {
        return Err(Error::IndexOutOfRange { index: node, n_qubits: state.n_qubits() });
    }
    let cut = cut_measure_from_marginal(state.partial_trace(&[node])?.matrix(), kind);
    let mut pairs = 0.0;
    for k in (0..state.n_qubits()).filter(|&k| k != node) {
        let rho = state.partial_trace(&[node, k])?;
        pairs += pair_measures(&rho, &[kind], side_of_node(node, k, false), cfg)?[0];
    }
    Ok(cut - pairs)
}

pub fn monogamy_score(state: &PureState, kind: MeasureKind, cfg: &OptimizerConfig) -> Result<MonogamyReport> {
    Ok(monogamy_scores(state, &[kind], cfg, false)?.remove(0))
}

/// The marginal of pair `{j, k}` has labels sorted ascending, so the node is side A iff `j < k`.
fn side_of_node(node: usize, partner: usize, partner_measured: bool) -> Side {
    let s = if node < partner { Side::A } else { Side::B };
    if partner_measured {
        s.flipped()
    } else {
        s
    }
}

/// Reports for several measures at once, sharing marginals and optimizer passes.
pub fn monogamy_scores(
    state: &PureState,
    kinds: &[MeasureKind],
    cfg: &OptimizerConfig,
    partner_measured: bool,
) -> Result<Vec<MonogamyReport>> {
    check_size(state)?;
    cfg.validate()?;
    if kinds.is_empty() {
        return Ok(Vec::new());
    }
    let n = state.n_qubits();
    let singles: Vec<DensityOperator> = (0..n).map(|j| state.partial_trace(&[j])).collect::<Result<_>>()?;

    // values[j][k][m]: kind m on pair {j, k} evaluated from node j's perspective.
    let mut values = vec![vec![Vec::new(); n]; n];
    for j in 0..n {
        for k in (j + 1)..n {
            let rho = state.partial_trace(&[j, k])?;
            values[j][k] = pair_measures(&rho, kinds, side_of_node(j, k, partner_measured), cfg)?;
            // Only discord and work-deficit depend on which qubit is measured.
            let mut reverse = values[j][k].clone();
            if kinds.iter().any(|k| matches!(k, MeasureKind::Discord | MeasureKind::WorkDeficit)) {
                let opt = discord_and_work_deficit(&rho, side_of_node(k, j, partner_measured), cfg)?;
                for (slot, kind) in reverse.iter_mut().zip(kinds) {
                    match kind {
                        MeasureKind::Discord => *slot = opt.discord.value,
                        MeasureKind::WorkDeficit => *slot = opt.work_deficit.value,
                        _ => {}
                    }
                }
            }
            values[k][j] = reverse;
        }
    }

    Ok(kinds
        .iter()
        .enumerate()
        .map(|(m, &kind)| {
            let per_node: Vec<NodeScore> = (0..n)
                .map(|j| {
                    let cut_value = cut_measure_from_marginal(singles[j].matrix(), kind);
                    let pair_values: Vec<f64> = (0..n).filter(|&k| k != j).map(|k| values[j][k][m]).collect();
                    let delta = cut_value - pair_values.iter().sum::<f64>();
                    NodeScore { node: j, cut_value, pair_values, delta }
                })
                .collect();
            let mut min_node = 0;
            for s in &per_node {
                if s.delta < per_node[min_node].delta {
                    min_node = s.node;
                }
            }
            MonogamyReport { kind, delta: per_node[min_node].delta, min_node, per_node, partner_measured }
        })
        .collect())
}
