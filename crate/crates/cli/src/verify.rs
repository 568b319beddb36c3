//! Closed-form family results checked against the generic numerical pipeline.

use std::fmt;

use monoscope::bounds::evaluate;
use monoscope::families::{
    dicke, dicke_reduced, ghz_w, ghz_w_reduced, ising_gas_ground, ising_ring_b, ising_ring_ground,
    ising_ring_pair_matrix, mg_ground, mg_werner_parameter, werner_closed_forms,
};
use monoscope::ggm::{ggm, ggm_dicke_closed_form, ggm_ghzw_closed_form, ghzw_single_qubit_eigenvalue};
use monoscope::measures::{dicke_pair_closed_forms, pair_measure, Side};
use monoscope::{CMatrix, Complex64, MeasureKind, OptimizerConfig, ProofRoute, PureState};

/// Tolerance for closed forms that involve no optimization.
pub const EXACT_TOLERANCE: f64 = 1e-9;
/// Tolerance for discord and work-deficit closed forms.
pub const OPTIMIZED_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckLine {
    pub status: Status,
    pub name: String,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:<24} {}", self.status, self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.lines.iter().filter(|l| l.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    fn push(&mut self, name: String, outcome: monoscope::Result<(Status, String)>) {
        let (status, detail) = outcome.unwrap_or_else(|e| (Status::Fail, format!("error: {e}")));
        self.lines.push(CheckLine { status, name, detail });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        writeln!(
            f,
            "{} passed, {} warnings, {} failed",
            self.count(Status::Pass),
            self.count(Status::Warn),
            self.count(Status::Fail)
        )
    }
}

/// Largest error of each named comparison, with its tolerance.
struct Errors(Vec<(&'static str, f64, f64)>);

impl Errors {
    fn new() -> Self {
        Errors(Vec::new())
    }

    fn record(&mut self, what: &'static str, err: f64, tol: f64) {
        let err = if err.is_nan() { f64::INFINITY } else { err.abs() };
        match self.0.iter_mut().find(|(w, _, _)| *w == what) {
            Some(slot) => slot.1 = slot.1.max(err),
            None => self.0.push((what, err, tol)),
        }
    }

    fn outcome(&self) -> (Status, String) {
        let ok = self.0.iter().all(|&(_, e, t)| e <= t);
        let detail = self.0.iter().map(|(w, e, _)| format!("{w} {e:.1e}")).collect::<Vec<_>>().join(", ");
        (if ok { Status::Pass } else { Status::Fail }, format!("max error: {detail}"))
    }
}

/// Small-denominator fraction matching `x`, for display.
fn as_fraction(x: f64) -> String {
    (1..=64u32)
        .find_map(|q| {
            let p = (x * q as f64).round();
            ((x - p / q as f64).abs() < 1e-12).then(|| format!("{p}/{q}"))
        })
        .unwrap_or_else(|| format!("{x}"))
}

fn werner_matrix(p: f64) -> CMatrix {
    let (d, s) = ((1.0 - p) / 4.0, (1.0 + p) / 4.0);
    CMatrix::from_real_rows(&[&[d, 0.0, 0.0, 0.0], &[0.0, s, -p / 2.0, 0.0], &[0.0, -p / 2.0, s, 0.0], &[0.0, 0.0, 0.0, d]])
}

fn tolerance(kind: MeasureKind) -> f64 {
    match kind {
        MeasureKind::Discord | MeasureKind::WorkDeficit => OPTIMIZED_TOLERANCE,
        _ => EXACT_TOLERANCE,
    }
}

fn check_dicke(n: usize, cfg: &OptimizerConfig) -> monoscope::Result<(Status, String)> {
    let mut errs = Errors::new();
    for r in 0..=n {
        let psi = dicke(n, r)?;
        let report = ggm(&psi)?;
        let form = ggm_dicke_closed_form(n, r)?;
        errs.record("a", report.a - form.a, EXACT_TOLERANCE);
        if let Some(b) = form.b_when_half {
            errs.record("b", report.b.unwrap_or(f64::NAN) - b, EXACT_TOLERANCE);
            errs.record("beta", report.beta.unwrap_or(f64::NAN) - (b - form.a), EXACT_TOLERANCE);
        }
        errs.record("ggm", report.ggm - form.ggm(), EXACT_TOLERANCE);

        let pair = psi.partial_trace(&[0, 1])?;
        let forms = dicke_pair_closed_forms(n, r)?;
        for (kind, value) in [
            (MeasureKind::ConcurrenceSq, forms.concurrence_sq),
            (MeasureKind::NegativitySq, forms.negativity_sq),
            (MeasureKind::Discord, forms.discord),
        ] {
            let what = match kind {
                MeasureKind::ConcurrenceSq => "C2",
                MeasureKind::NegativitySq => "N2",
                _ => "D",
            };
            errs.record(what, pair_measure(&pair, kind, Side::A, cfg)? - value, tolerance(kind));
        }
        for k in 1..=(n - 1).min(4) {
            let keep: Vec<usize> = (0..k).collect();
            let numeric = psi.partial_trace(&keep)?;
            errs.record("reduced", dicke_reduced(n, r, k)?.matrix().max_abs_diff(numeric.matrix()), EXACT_TOLERANCE);
        }
    }
    Ok(errs.outcome())
}

/// `⟨x|ρ|y⟩` for `x, y` in `(|0…0⟩, |W_k⟩, |1…1⟩)` on the first `k` qubits.
fn ghz_w_basis_projection(psi: &PureState, k: usize) -> monoscope::Result<[[Complex64; 3]; 3]> {
    let keep: Vec<usize> = (0..k).collect();
    let rho = psi.partial_trace(&keep)?;
    let dim = 1usize << k;
    let zero = Complex64::new(0.0, 0.0);
    let mut basis = vec![vec![zero; dim]; 3];
    basis[0][0] = Complex64::new(1.0, 0.0);
    for q in 0..k {
        basis[1][1 << q] = Complex64::new(1.0 / (k as f64).sqrt(), 0.0);
    }
    basis[2][dim - 1] = Complex64::new(1.0, 0.0);
    let mut out = [[zero; 3]; 3];
    for y in 0..3 {
        let col = rho.matrix().mul_vec(&basis[y]);
        for x in 0..3 {
            out[x][y] = basis[x].iter().zip(&col).map(|(a, b)| a.conj() * b).sum();
        }
    }
    Ok(out)
}

const GHZ_W_PARAMETERS: [((f64, f64), (f64, f64)); 6] = [
    ((0.6, 0.0), (0.3, 0.4)),
    ((0.0, 0.5), (0.5, 0.0)),
    ((0.8, 0.0), (0.0, 0.0)),
    ((0.1, 0.0), (0.9, 0.0)),
    ((0.0, 0.0), (1.0, 0.0)),
    ((0.35, -0.2), (-0.4, 0.25)),
];

fn check_ghz_w(n: usize) -> monoscope::Result<(Status, String)> {
    let mut errs = Errors::new();
    for ((ar, ai), (gr, gi)) in GHZ_W_PARAMETERS {
        let (alpha, gamma) = (Complex64::new(ar, ai), Complex64::new(gr, gi));
        let psi = ghz_w(n, alpha, gamma)?;
        let report = ggm(&psi)?;
        errs.record("a", report.a - ghzw_single_qubit_eigenvalue(alpha, gamma, n)?, EXACT_TOLERANCE);
        if report.single_qubit_dominates {
            errs.record("ggm", report.ggm - ggm_ghzw_closed_form(alpha, gamma, n)?, EXACT_TOLERANCE);
        }
        for k in 2..=n - 2 {
            let closed = ghz_w_reduced(n, alpha, gamma, k)?;
            let numeric = ghz_w_basis_projection(&psi, k)?;
            let diff = (0..9).map(|i| (closed[i / 3][i % 3] - numeric[i / 3][i % 3]).norm()).fold(0.0, f64::max);
            errs.record("reduced", diff, EXACT_TOLERANCE);
        }
    }
    Ok(errs.outcome())
}

fn cyclic_distance(i: usize, j: usize, n: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

fn check_mg(n: usize, cfg: &OptimizerConfig) -> monoscope::Result<(Status, String)> {
    let p = mg_werner_parameter(n);
    let forms = werner_closed_forms(p)?;
    let psi = mg_ground(n)?;
    let mut errs = Errors::new();
    let report = ggm(&psi)?;
    errs.record("a", report.a - 0.5, EXACT_TOLERANCE);
    errs.record("b", report.b.unwrap_or(f64::NAN) - forms.max_eigenvalue, EXACT_TOLERANCE);

    let werner = werner_matrix(p);
    for i in 0..n {
        for j in (i + 1)..n {
            let rho = psi.partial_trace(&[i, j])?;
            if cyclic_distance(i, j, n) == 1 {
                errs.record("werner", rho.matrix().max_abs_diff(&werner), EXACT_TOLERANCE);
                let c2 = pair_measure(&rho, MeasureKind::ConcurrenceSq, Side::A, cfg)?;
                let n2 = pair_measure(&rho, MeasureKind::NegativitySq, Side::A, cfg)?;
                let d = pair_measure(&rho, MeasureKind::Discord, Side::A, cfg)?;
                errs.record("C2", c2 - forms.concurrence_sq, EXACT_TOLERANCE);
                errs.record("N2", n2 - forms.negativity_sq, EXACT_TOLERANCE);
                errs.record("D", d - forms.discord, OPTIMIZED_TOLERANCE);
            } else {
                let c2 = pair_measure(&rho, MeasureKind::ConcurrenceSq, Side::A, cfg)?;
                errs.record("far C2", c2, EXACT_TOLERANCE);
            }
        }
    }

    let eval = evaluate(&psi, &MeasureKind::CORE, cfg, false)?;
    let mut routes_ok = true;
    for v in &eval.verdicts {
        routes_ok &= v.proof_route == ProofRoute::Proposition1 && v.h_term.is_some_and(|h| h > 0.0);
        let weight = match v.kind {
            MeasureKind::ConcurrenceSq => Some(4.0),
            MeasureKind::NegativitySq => Some(1.0),
            _ => None,
        };
        if let Some(z) = weight {
            errs.record("H", v.h_term.unwrap_or(f64::NAN) - z / 16.0 * (1.0 - 3.0 * p).powi(2), EXACT_TOLERANCE);
        }
    }
    let (mut status, detail) = errs.outcome();
    if !routes_ok {
        status = Status::Fail;
    }
    let route = if routes_ok { "H>0 for all four measures" } else { "H not positive for every measure" };
    Ok((status, format!("p = {} ({p:.6}); {route}; {detail}", as_fraction(p))))
}

fn check_ising_ring(n: usize) -> Vec<(String, monoscope::Result<(Status, String)>)> {
    let name = format!("isingring n={n}");
    let psi = match ising_ring_ground(n) {
        Ok(psi) => psi,
        Err(e) => return vec![(name, Err(e))],
    };
    let spectra = || -> monoscope::Result<(Status, String, f64, f64)> {
        let mut errs = Errors::new();
        let closed = ising_ring_pair_matrix(n);
        for i in 0..n - 1 {
            errs.record("pair", psi.partial_trace(&[i, i + 1])?.matrix().max_abs_diff(&closed), EXACT_TOLERANCE);
        }
        let pair_max = psi.partial_trace(&[0, 1])?.spectrum()?.max();
        errs.record("pair max eig", pair_max - ising_ring_b(n), EXACT_TOLERANCE);
        let report = ggm(&psi)?;
        let b = report.b.unwrap_or(f64::NAN);
        errs.record("b", b - ising_ring_b(n), EXACT_TOLERANCE);
        let (status, detail) = errs.outcome();
        Ok((status, detail, report.a, b))
    };
    match spectra() {
        Err(e) => vec![(name, Err(e))],
        Ok((status, detail, a, b)) => {
            let displayed = 0.5 * (1.0 + 1.0 / n as f64);
            let a_line = if (a - displayed).abs() <= EXACT_TOLERANCE {
                (Status::Pass, format!("a = {a:.9} matches (n+1)/(2n)"))
            } else {
                (Status::Warn, format!("a = {a:.9} but (n+1)/(2n) = {displayed:.9}"))
            };
            let order_line = if a >= b {
                (Status::Pass, format!("a = {a:.9} >= b = {b:.9}"))
            } else {
                (Status::Warn, format!("a = {a:.9} < b = {b:.9}, so a >= b fails"))
            };
            vec![
                (name.clone(), Ok((status, detail))),
                (format!("{name} a"), Ok(a_line)),
                (format!("{name} a>=b"), Ok(order_line)),
            ]
        }
    }
}

fn check_ising_gas(n: usize) -> monoscope::Result<(Status, String)> {
    let mut mismatches = Vec::new();
    for ones in 0..=n {
        let x = 1.0 - 2.0 * ones as f64 / n as f64;
        if !(0.0..=1.0).contains(&x) {
            continue;
        }
        if ising_gas_ground(n, x)? != dicke(n, ones)? {
            mismatches.push(format!("x={x}"));
        }
    }
    Ok(if mismatches.is_empty() {
        (Status::Pass, "every admissible x gives the Dicke state with n(1-x)/2 excitations".into())
    } else {
        (Status::Fail, format!("differs from Dicke at {}", mismatches.join(", ")))
    })
}

pub fn verify_families() -> Report {
    let cfg = OptimizerConfig::default();
    let mut report = Report::default();
    for n in 3..=8 {
        report.push(format!("dicke n={n}"), check_dicke(n, &cfg));
    }
    for n in 4..=7 {
        report.push(format!("ghzw n={n}"), check_ghz_w(n));
    }
    for n in [4, 6, 8, 10] {
        report.push(format!("mg n={n}"), check_mg(n, &cfg));
    }
    for n in 4..=8 {
        for (name, outcome) in check_ising_ring(n) {
            report.push(name, outcome);
        }
    }
    for n in [4, 6, 8] {
        report.push(format!("isinggas n={n}"), check_ising_gas(n));
    }
    report
}
