//! Sampling a family and evaluating every state.

use monoscope::bounds::{evaluate, summarize, verdicts_for, RECHECK_FACTOR};
use monoscope::{BoundVerdict, CensusRow, MeasureKind, OptimizerConfig, PureState};
use rayon::prelude::*;

use crate::manifest::ExperimentManifest;
use crate::CliResult;

/// A sample and its verdicts.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleEvaluation {
    pub states: Vec<PureState>,
    /// `verdicts[i][m]`: state `i`, measure `manifest.measures[m]`.
    pub verdicts: Vec<Vec<BoundVerdict>>,
    /// One row per measure.
    pub census: Vec<CensusRow>,
}

impl SampleEvaluation {
    pub fn n_violations(&self) -> usize {
        self.census.iter().map(|c| c.n_violations).sum()
    }
}

/// Replaces the flagged discord and work-deficit verdicts by their values on
/// a finer grid, so reported violations are not optimizer slack.
pub fn recheck_violations(
    state: &PureState,
    verdicts: &mut [BoundVerdict],
    cfg: &OptimizerConfig,
    partner_measured: bool,
) -> CliResult<()> {
    let flagged: Vec<MeasureKind> = verdicts
        .iter()
        .filter(|v| v.is_violation() && matches!(v.kind, MeasureKind::Discord | MeasureKind::WorkDeficit))
        .map(|v| v.kind)
        .collect();
    if flagged.is_empty() {
        return Ok(());
    }
    let finer = evaluate(state, &flagged, &cfg.finer(RECHECK_FACTOR), partner_measured)?;
    for fresh in finer.verdicts {
        if let Some(slot) = verdicts.iter_mut().find(|v| v.kind == fresh.kind) {
            *slot = fresh;
        }
    }
    Ok(())
}

pub fn sample_states(manifest: &ExperimentManifest) -> CliResult<Vec<PureState>> {
    let spec = manifest.seeded_spec();
    let states = (0..manifest.n_states as u64).into_par_iter().map(|i| spec.state(i)).collect::<Result<_, _>>()?;
    Ok(states)
}

pub fn evaluate_sample(manifest: &ExperimentManifest) -> CliResult<SampleEvaluation> {
    manifest.validate()?;
    let states = sample_states(manifest)?;
    let (cfg, flip) = (&manifest.optimizer, manifest.flip_side);
    let mut verdicts = verdicts_for(&states, &manifest.measures, cfg, flip)?;
    states
        .par_iter()
        .zip(verdicts.par_iter_mut())
        .try_for_each(|(state, row)| recheck_violations(state, row, cfg, flip))?;
    let census = (0..manifest.measures.len())
        .map(|m| {
            let column: Vec<BoundVerdict> = verdicts.iter().map(|row| row[m].clone()).collect();
            summarize(&states, &column, cfg, flip)
        })
        .collect::<Result<_, _>>()?;
    Ok(SampleEvaluation { states, verdicts, census })
}
