//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use monoscope::{Family, MeasureKind, OptimizerConfig};

use crate::manifest::OutputFormat;

#[derive(Debug, Parser)]
#[command(name = "monoscope", version, about = "Monogamy scores, GGM and the GGM bound for few-qubit pure states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one state file and print the reports as JSON.
    Measure(MeasureArgs),
    /// Sample a family and write one scatter row per state and measure.
    Sample(SampleArgs),
    /// Condition percentages and violation counts for one or more families.
    Census(CensusArgs),
    /// Compare the numerical pipeline with the closed-form family results.
    VerifyFamilies,
    /// Write one member of a family to a state file.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct OptimizerArgs {
    /// Coarse grid points in the polar angle.
    #[arg(long, value_name = "N")]
    pub grid_theta: Option<usize>,
    /// Coarse grid points in the azimuthal angle.
    #[arg(long, value_name = "N")]
    pub grid_phi: Option<usize>,
    /// Target accuracy of the refined discord and work-deficit values.
    #[arg(long, value_name = "TOL")]
    pub opt_tol: Option<f64>,
}

impl OptimizerArgs {
    /// `base` with every given flag applied on top.
    pub fn apply(&self, base: OptimizerConfig) -> OptimizerConfig {
        OptimizerConfig {
            coarse_grid: (self.grid_theta.unwrap_or(base.coarse_grid.0), self.grid_phi.unwrap_or(base.coarse_grid.1)),
            refine_tolerance: self.opt_tol.unwrap_or(base.refine_tolerance),
            ..base
        }
    }
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    /// State file: qubit count, then one `re im` line per amplitude.
    pub state_file: PathBuf,
    /// Comma-separated measures out of c2, n2, d, wd, eof.
    #[arg(long, value_delimiter = ',', default_value = "c2,n2,d,wd")]
    pub measures: Vec<MeasureKind>,
    /// Measure the partner rather than the node for discord and work-deficit.
    #[arg(long)]
    pub flip_side: bool,
    #[command(flatten)]
    pub optimizer: OptimizerArgs,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// JSON experiment manifest; explicit flags override its fields.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Family in dotted syntax, e.g. `haar:n=4` or `slocc:class=3`.
    #[arg(long)]
    pub family: Option<Family>,
    /// Number of sampled states [default: 10000].
    #[arg(long)]
    pub n_states: Option<usize>,
    /// Seed of the random streams [default: 0].
    #[arg(long)]
    pub seed: Option<u64>,
    /// Comma-separated measures [default: c2,n2,d,wd].
    #[arg(long, value_delimiter = ',')]
    pub measures: Option<Vec<MeasureKind>>,
    /// Output format [default: csv].
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Output file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Leave out the generation timestamp so reruns are byte-identical.
    #[arg(long)]
    pub no_header_meta: bool,
    /// Measure the partner rather than the node for discord and work-deficit.
    #[arg(long)]
    pub flip_side: bool,
    #[command(flatten)]
    pub optimizer: OptimizerArgs,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Family in dotted syntax; repeat for several rows.
    #[arg(long)]
    pub family: Vec<Family>,
    /// Experiment manifest; repeat for several rows.
    #[arg(long)]
    pub manifest: Vec<PathBuf>,
    /// Number of states per family for `--family` entries [default: 10000].
    #[arg(long)]
    pub n_states: Option<usize>,
    /// Seed for `--family` entries [default: 0].
    #[arg(long)]
    pub seed: Option<u64>,
    /// Comma-separated measures for `--family` entries [default: c2,n2,d,wd].
    #[arg(long, value_delimiter = ',')]
    pub measures: Option<Vec<MeasureKind>>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Leave out the generation timestamp so reruns are byte-identical.
    #[arg(long)]
    pub no_header_meta: bool,
    /// Measure the partner rather than the node for discord and work-deficit.
    #[arg(long)]
    pub flip_side: bool,
    #[command(flatten)]
    pub optimizer: OptimizerArgs,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Family in dotted syntax.
    #[arg(long)]
    pub family: Family,
    /// Seed of the random streams.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sample index, which selects the random stream.
    #[arg(long, default_value_t = 0)]
    pub index: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
