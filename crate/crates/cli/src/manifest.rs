//! Experiment manifests.

use std::path::{Path, PathBuf};

use monoscope::qstate::DEFAULT_QUBIT_CAP;
use monoscope::{FamilySpec, MeasureKind, OptimizerConfig};
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

pub const DEFAULT_N_STATES: usize = 10_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Everything needed to reproduce one sample.
///
/// ```json
/// {"family_spec": {"family": "haar_random", "params": {"n": 4}},
///  "n_states": 10000, "measures": ["c2", "n2", "d", "wd"], "seed": 7,
///  "output_path": "haar4.csv", "format": "csv"}
/// ```
///
/// `seed` drives the random streams; a seed inside `family_spec` is ignored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentManifest {
    pub family_spec: FamilySpec,
    #[serde(default = "default_n_states")]
    pub n_states: usize,
    #[serde(default = "default_measures")]
    pub measures: Vec<MeasureKind>,
    #[serde(default)]
    pub optimizer: OptimizerConfig,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
    /// Measure the partner rather than the node for discord and work-deficit.
    #[serde(default)]
    pub flip_side: bool,
}

fn default_n_states() -> usize {
    DEFAULT_N_STATES
}

fn default_measures() -> Vec<MeasureKind> {
    MeasureKind::CORE.to_vec()
}

impl ExperimentManifest {
    pub fn new(family_spec: FamilySpec) -> Self {
        Self {
            family_spec,
            n_states: DEFAULT_N_STATES,
            measures: default_measures(),
            optimizer: OptimizerConfig::default(),
            seed: 0,
            output_path: None,
            format: OutputFormat::Csv,
            flip_side: false,
        }
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        let manifest: Self = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("manifest: {e}")))?;
        Ok(manifest)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }

    /// The family spec with the manifest seed in place.
    pub fn seeded_spec(&self) -> FamilySpec {
        FamilySpec::new(self.family_spec.family.clone(), self.seed)
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.n_states == 0 {
            return Err(CliError::Usage("n_states must be at least 1".into()));
        }
        if self.measures.is_empty() {
            return Err(CliError::Usage("measures must not be empty".into()));
        }
        let mut seen = self.measures.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.measures.len() {
            return Err(CliError::Usage("measures must not repeat".into()));
        }
        self.optimizer.validate()?;
        self.family_spec.family.validate()?;
        let n = self.family_spec.family.n_qubits();
        if !(3..=DEFAULT_QUBIT_CAP).contains(&n) {
            return Err(CliError::Usage(format!(
                "family {} has {n} qubits; monogamy scores need 3 to {DEFAULT_QUBIT_CAP}",
                self.family_spec.family
            )));
        }
        Ok(())
    }
}
