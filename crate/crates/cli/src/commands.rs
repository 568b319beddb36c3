//! Subcommand implementations.

use std::io::Write;
use std::path::Path;

use monoscope::bounds::{evaluate, BoundVerdict};
use monoscope::qstate::io::{format_state, parse_state};
use monoscope::{FamilySpec, GgmReport, MeasureKind, MonogamyReport, OptimizerConfig};
use serde::Serialize;

use crate::args::{CensusArgs, Command, GenArgs, MeasureArgs, SampleArgs};
use crate::experiment::{evaluate_sample, recheck_violations};
use crate::manifest::{ExperimentManifest, OutputFormat};
use crate::output::{census_csv, scatter_csv, scatter_json, scatter_rows, summary_text, timestamp, CensusRecord};
use crate::verify::verify_families;
use crate::{CliError, CliResult, EXIT_INVARIANT, EXIT_OK, EXIT_VIOLATION};

pub fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<u8> {
    match command {
        Command::Measure(args) => measure(&args, out),
        Command::Sample(args) => sample(&args, out),
        Command::Census(args) => census(&args, out),
        Command::VerifyFamilies => {
            let report = verify_families();
            write_out(out, report.to_string().as_bytes())?;
            Ok(if report.has_failures() { EXIT_INVARIANT } else { EXIT_OK })
        }
        Command::Gen(args) => generate(&args, out),
    }
}

fn write_out(out: &mut dyn Write, bytes: &[u8]) -> CliResult<()> {
    out.write_all(bytes).and_then(|_| out.flush()).map_err(|e| CliError::io("<stdout>", e))
}

fn write_file(path: &Path, bytes: &[u8]) -> CliResult<()> {
    std::fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

#[derive(Serialize)]
struct MeasureEntry<'a> {
    kind: MeasureKind,
    monogamy: &'a MonogamyReport,
    verdict: &'a BoundVerdict,
    bound_margin: f64,
    violation: bool,
}

#[derive(Serialize)]
struct MeasureDocument<'a> {
    n_qubits: usize,
    ggm: &'a GgmReport,
    measures: Vec<MeasureEntry<'a>>,
}

fn measure(args: &MeasureArgs, out: &mut dyn Write) -> CliResult<u8> {
    let cfg = args.optimizer.apply(OptimizerConfig::default());
    cfg.validate()?;
    if args.measures.is_empty() {
        return Err(CliError::Usage("--measures must not be empty".into()));
    }
    let text = std::fs::read_to_string(&args.state_file).map_err(|e| CliError::io(&args.state_file, e))?;
    let state = parse_state(&text).map_err(|e| CliError::Usage(format!("{}: {e}", args.state_file.display())))?;
    let mut eval = evaluate(&state, &args.measures, &cfg, args.flip_side)?;
    recheck_violations(&state, &mut eval.verdicts, &cfg, args.flip_side)?;
    let doc = MeasureDocument {
        n_qubits: state.n_qubits(),
        ggm: &eval.ggm,
        measures: eval
            .monogamy
            .iter()
            .zip(&eval.verdicts)
            .map(|(m, v)| MeasureEntry {
                kind: v.kind,
                monogamy: m,
                verdict: v,
                bound_margin: v.margin(),
                violation: v.is_violation(),
            })
            .collect(),
    };
    let mut bytes = serde_json::to_vec_pretty(&doc).expect("plain data serializes");
    bytes.push(b'\n');
    write_out(out, &bytes)?;
    Ok(if eval.verdicts.iter().any(BoundVerdict::is_violation) { EXIT_VIOLATION } else { EXIT_OK })
}

/// The manifest named by `--manifest`, or a default one, with explicit flags applied.
fn sample_manifest(args: &SampleArgs) -> CliResult<ExperimentManifest> {
    let mut manifest = match (&args.manifest, &args.family) {
        (Some(path), _) => ExperimentManifest::load(path)?,
        (None, Some(family)) => ExperimentManifest::new(FamilySpec::new(family.clone(), 0)),
        (None, None) => return Err(CliError::Usage("sample needs --family or --manifest".into())),
    };
    if let Some(family) = &args.family {
        manifest.family_spec.family = family.clone();
    }
    if let Some(n) = args.n_states {
        manifest.n_states = n;
    }
    if let Some(seed) = args.seed {
        manifest.seed = seed;
    }
    if let Some(measures) = &args.measures {
        manifest.measures = measures.clone();
    }
    if let Some(format) = args.format {
        manifest.format = format;
    }
    if let Some(path) = &args.out {
        manifest.output_path = Some(path.clone());
    }
    manifest.flip_side |= args.flip_side;
    manifest.optimizer = args.optimizer.apply(manifest.optimizer);
    manifest.validate()?;
    Ok(manifest)
}

fn sample(args: &SampleArgs, out: &mut dyn Write) -> CliResult<u8> {
    let manifest = sample_manifest(args)?;
    let eval = evaluate_sample(&manifest)?;
    let rows = scatter_rows(&manifest, &eval);
    let stamp = timestamp(!args.no_header_meta);
    let bytes = match manifest.format {
        OutputFormat::Csv => scatter_csv(&rows, stamp),
        OutputFormat::Json => scatter_json(&manifest, &rows, &eval.census, stamp),
    };
    match &manifest.output_path {
        Some(path) => {
            write_file(path, &bytes)?;
            write_out(out, summary_text(&manifest, &eval).as_bytes())?;
        }
        None => write_out(out, &bytes)?,
    }
    Ok(if eval.n_violations() > 0 { EXIT_VIOLATION } else { EXIT_OK })
}

fn census_manifests(args: &CensusArgs) -> CliResult<Vec<ExperimentManifest>> {
    let mut manifests = Vec::new();
    for path in &args.manifest {
        let mut m = ExperimentManifest::load(path)?;
        m.optimizer = args.optimizer.apply(m.optimizer);
        m.flip_side |= args.flip_side;
        manifests.push(m);
    }
    for family in &args.family {
        let mut m = ExperimentManifest::new(FamilySpec::new(family.clone(), 0));
        if let Some(n) = args.n_states {
            m.n_states = n;
        }
        if let Some(seed) = args.seed {
            m.seed = seed;
        }
        if let Some(measures) = &args.measures {
            m.measures = measures.clone();
        }
        m.optimizer = args.optimizer.apply(m.optimizer);
        m.flip_side = args.flip_side;
        manifests.push(m);
    }
    if manifests.is_empty() {
        return Err(CliError::Usage("census needs at least one --family or --manifest".into()));
    }
    for m in &manifests {
        m.validate()?;
    }
    Ok(manifests)
}

fn census(args: &CensusArgs, out: &mut dyn Write) -> CliResult<u8> {
    let manifests = census_manifests(args)?;
    let mut records = Vec::new();
    for m in &manifests {
        let eval = evaluate_sample(m)?;
        records.extend(eval.census.iter().map(|row| CensusRecord::new(&m.family_spec.family, row)));
    }
    let bytes = census_csv(&records, timestamp(!args.no_header_meta));
    match &args.out {
        Some(path) => write_file(path, &bytes)?,
        None => write_out(out, &bytes)?,
    }
    Ok(if records.iter().any(|r| r.n_violations > 0) { EXIT_VIOLATION } else { EXIT_OK })
}

fn generate(args: &GenArgs, out: &mut dyn Write) -> CliResult<u8> {
    let state = FamilySpec::new(args.family.clone(), args.seed).state(args.index)?;
    let text = format_state(&state);
    match &args.out {
        Some(path) => write_file(path, text.as_bytes())?,
        None => write_out(out, text.as_bytes())?,
    }
    Ok(EXIT_OK)
}
