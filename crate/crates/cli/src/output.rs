//! Scatter and census tables.

use std::io::Write;

use monoscope::{BoundVerdict, CensusRow, Family, MeasureKind, ProofRoute};
use serde::{Serialize, Serializer};

use crate::experiment::SampleEvaluation;
use crate::manifest::ExperimentManifest;

/// Bumped whenever a column is added, removed or reordered.
pub const SCHEMA_VERSION: u32 = 1;

pub const SCATTER_COLUMNS: [&str; 8] =
    ["state_index", "family", "kind", "delta", "ggm", "f_of_g", "bound_margin", "route"];

pub const CENSUS_COLUMNS: [&str; 9] = [
    "family",
    "n",
    "kind",
    "n_states",
    "pct_beta_pos",
    "pct_r_neg",
    "pct_h_neg",
    "n_violations",
    "max_delta_minus_f",
];

fn as_display<T: std::fmt::Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

/// One point of a monogamy-versus-GGM scatter plot.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatterRow {
    pub state_index: u64,
    #[serde(serialize_with = "as_display")]
    pub family: Family,
    pub kind: MeasureKind,
    pub delta: f64,
    pub ggm: f64,
    pub f_of_g: f64,
    pub bound_margin: f64,
    #[serde(serialize_with = "as_display")]
    pub route: ProofRoute,
}

impl ScatterRow {
    pub fn new(state_index: u64, family: &Family, v: &BoundVerdict) -> Self {
        Self {
            state_index,
            family: family.clone(),
            kind: v.kind,
            delta: v.delta,
            ggm: v.ggm_report.ggm,
            f_of_g: v.f_of_g,
            bound_margin: v.margin(),
            route: v.proof_route,
        }
    }

    fn record(&self) -> [String; 8] {
        [
            self.state_index.to_string(),
            self.family.to_string(),
            self.kind.to_string(),
            num(self.delta),
            num(self.ggm),
            num(self.f_of_g),
            num(self.bound_margin),
            self.route.to_string(),
        ]
    }
}

/// A census table row: one family, one measure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusRecord {
    #[serde(serialize_with = "as_display")]
    pub family: Family,
    pub n: usize,
    pub kind: MeasureKind,
    pub n_states: usize,
    pub pct_beta_pos: f64,
    pub pct_r_neg: f64,
    pub pct_h_neg: f64,
    pub n_violations: usize,
    pub max_delta_minus_f: f64,
}

impl CensusRecord {
    pub fn new(family: &Family, row: &CensusRow) -> Self {
        Self {
            family: family.clone(),
            n: family.n_qubits(),
            kind: row.kind,
            n_states: row.n_states,
            pct_beta_pos: row.pct_beta_pos,
            pct_r_neg: row.pct_r_neg,
            pct_h_neg: row.pct_h_neg,
            n_violations: row.n_violations,
            max_delta_minus_f: row.max_delta_minus_f,
        }
    }

    fn record(&self) -> [String; 9] {
        [
            self.family.to_string(),
            self.n.to_string(),
            self.kind.to_string(),
            self.n_states.to_string(),
            num(self.pct_beta_pos),
            num(self.pct_r_neg),
            num(self.pct_h_neg),
            self.n_violations.to_string(),
            num(self.max_delta_minus_f),
        ]
    }
}

/// Shortest representation that parses back to the same `f64`.
fn num(x: f64) -> String {
    format!("{x:?}")
}

/// Rows in state-index-major order, measures in manifest order.
pub fn scatter_rows(manifest: &ExperimentManifest, eval: &SampleEvaluation) -> Vec<ScatterRow> {
    let family = &manifest.family_spec.family;
    eval.verdicts
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().map(move |v| ScatterRow::new(i as u64, family, v)))
        .collect()
}

/// Seconds since the Unix epoch, or `None` under `--no-header-meta`.
pub fn timestamp(include: bool) -> Option<u64> {
    include.then(|| std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map_or(0, |d| d.as_secs()))
}

fn write_preamble(out: &mut Vec<u8>, generated_unix: Option<u64>) {
    let _ = writeln!(out, "# schema_version={SCHEMA_VERSION}");
    if let Some(t) = generated_unix {
        let _ = writeln!(out, "# generated_unix={t}");
    }
}

fn to_csv<const K: usize>(
    columns: [&str; K],
    records: impl Iterator<Item = [String; K]>,
    generated_unix: Option<u64>,
) -> Vec<u8> {
    let mut out = Vec::new();
    write_preamble(&mut out, generated_unix);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(columns).expect("writing to memory");
    for r in records {
        w.write_record(&r).expect("writing to memory");
    }
    w.into_inner().expect("writing to memory")
}

pub fn scatter_csv(rows: &[ScatterRow], generated_unix: Option<u64>) -> Vec<u8> {
    to_csv(SCATTER_COLUMNS, rows.iter().map(ScatterRow::record), generated_unix)
}

pub fn census_csv(rows: &[CensusRecord], generated_unix: Option<u64>) -> Vec<u8> {
    to_csv(CENSUS_COLUMNS, rows.iter().map(CensusRecord::record), generated_unix)
}

#[derive(Serialize)]
struct ScatterDocument<'a> {
    schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_unix: Option<u64>,
    manifest: &'a ExperimentManifest,
    rows: &'a [ScatterRow],
    summary: &'a [CensusRow],
}

pub fn scatter_json(
    manifest: &ExperimentManifest,
    rows: &[ScatterRow],
    summary: &[CensusRow],
    generated_unix: Option<u64>,
) -> Vec<u8> {
    let manifest = &ExperimentManifest { family_spec: manifest.seeded_spec(), output_path: None, ..manifest.clone() };
    let doc = ScatterDocument { schema_version: SCHEMA_VERSION, generated_unix, manifest, rows, summary };
    let mut out = serde_json::to_vec_pretty(&doc).expect("plain data serializes");
    out.push(b'\n');
    out
}

/// Human-readable summary of a sample.
pub fn summary_text(manifest: &ExperimentManifest, eval: &SampleEvaluation) -> String {
    let mut s = format!(
        "family {}  states {}  seed {}  violations {}\n",
        manifest.family_spec.family,
        manifest.n_states,
        manifest.seed,
        eval.n_violations()
    );
    for c in &eval.census {
        s += &format!(
            "  {:<3} beta>0 {:>7.3}%  R<0 {:>7.3}%  H<0 {:>7.3}%  violations {}  max(delta-F) {:.3e}  min delta {:.6}  max |delta+H-F| {:.1e}\n",
            c.kind.tag(),
            c.pct_beta_pos,
            c.pct_r_neg,
            c.pct_h_neg,
            c.n_violations,
            c.max_delta_minus_f,
            c.min_delta,
            c.max_identity_residual
        );
    }
    s
}
