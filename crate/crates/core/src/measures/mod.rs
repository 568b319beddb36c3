//! Bipartite quantum-correlation measures.
//!
//! Two-qubit mixed states get the squared concurrence, squared negativity,
//! discord, one-way work-deficit and entanglement of formation. For the
//! single-qubit cut of a pure state every measure reduces to a function of
//! the qubit marginal, see [`pure_cut_measure`].

mod discord;
mod optimizer;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use discord::{discord, discord_and_work_deficit, work_deficit, DiscordAndDeficit, OptimizedValue, Side, NEGATIVE_CLIP};
pub use optimizer::{minimize_on_sphere, minimize_on_sphere_with_screen, MeasurementSetting, OptimizerConfig, SphereMinimum};

use crate::error::{Error, Result};
use crate::qstate::{binary_entropy, eigh, eigvalsh, CMatrix, DensityOperator, PureState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Paradigm {
    Entanglement,
    InformationTheoretic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MeasureKind {
    #[serde(rename = "c2")]
    ConcurrenceSq,
    #[serde(rename = "n2")]
    NegativitySq,
    #[serde(rename = "d")]
    Discord,
    #[serde(rename = "wd")]
    WorkDeficit,
    #[serde(rename = "eof")]
    EoF,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 5] = [
        MeasureKind::ConcurrenceSq,
        MeasureKind::NegativitySq,
        MeasureKind::Discord,
        MeasureKind::WorkDeficit,
        MeasureKind::EoF,
    ];

    /// The four measures the bound census runs over.
    pub const CORE: [MeasureKind; 4] =
        [MeasureKind::ConcurrenceSq, MeasureKind::NegativitySq, MeasureKind::Discord, MeasureKind::WorkDeficit];

    pub fn paradigm(self) -> Paradigm {
        match self {
            MeasureKind::ConcurrenceSq | MeasureKind::NegativitySq | MeasureKind::EoF => Paradigm::Entanglement,
            MeasureKind::Discord | MeasureKind::WorkDeficit => Paradigm::InformationTheoretic,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            MeasureKind::ConcurrenceSq => "c2",
            MeasureKind::NegativitySq => "n2",
            MeasureKind::Discord => "d",
            MeasureKind::WorkDeficit => "wd",
            MeasureKind::EoF => "eof",
        }
    }

    fn needs_optimizer(self) -> bool {
        matches!(self, MeasureKind::Discord | MeasureKind::WorkDeficit)
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c2" | "concurrence" | "concurrencesq" | "concurrence_sq" => Ok(MeasureKind::ConcurrenceSq),
            "n2" | "negativity" | "negativitysq" | "negativity_sq" => Ok(MeasureKind::NegativitySq),
            "d" | "discord" => Ok(MeasureKind::Discord),
            "wd" | "workdeficit" | "work_deficit" | "work-deficit" => Ok(MeasureKind::WorkDeficit),
            "eof" | "entanglement_of_formation" => Ok(MeasureKind::EoF),
            other => Err(Error::InvalidConfig(format!("unknown measure {other:?}"))),
        }
    }
}

fn check_two_qubit(rho: &DensityOperator) -> Result<()> {
    if rho.n_qubits() != 2 {
        return Err(Error::NotTwoQubit { n_qubits: rho.n_qubits() });
    }
    Ok(())
}

/// Eigenvalues of `ρ` at or below this are rounding and count as zero.
const RANK_CLIP: f64 = 1e-14;

/// Wootters concurrence `max(0, λ₁ − λ₂ − λ₃ − λ₄)`.
///
/// The `λᵢ` are the singular values of `τ_ij = ⟨w_i|σ_y ⊗ σ_y|w_j*⟩` with
/// `w_i = √p_i v_i` from the eigendecomposition of `ρ`. They are read off
/// the Hermitian dilation `[[0, τ], [τ†, 0]]`, whose eigenvalues are `±λᵢ`,
/// so zero `λᵢ` of rank-deficient states stay at rounding level instead of
/// becoming square roots of rounding noise.
pub fn concurrence(rho: &DensityOperator) -> Result<f64> {
    const SIGN: [f64; 4] = [-1.0, 1.0, 1.0, -1.0];
    check_two_qubit(rho)?;
    let eig = eigh(rho.matrix())?;
    let w: Vec<Vec<Complex64>> = (0..4)
        .map(|k| {
            let p = eig.values[k];
            let scale = if p > RANK_CLIP { p.sqrt() } else { 0.0 };
            eig.vector(k).into_iter().map(|x| x * scale).collect()
        })
        .collect();
    let mut dilation = CMatrix::zeros(8);
    for i in 0..4 {
        for j in 0..4 {
            let tau: Complex64 = (0..4).map(|a| w[i][a].conj() * SIGN[a] * w[j][3 - a].conj()).sum();
            dilation[(i, 4 + j)] = tau;
            dilation[(4 + j, i)] = tau.conj();
        }
    }
    let lambda = eigvalsh(&dilation)?;
    Ok((lambda[0] - lambda[1] - lambda[2] - lambda[3]).clamp(0.0, 1.0))
}

/// Sum of the moduli of the negative eigenvalues of the partial transpose.
pub fn negativity(rho: &DensityOperator) -> Result<f64> {
    check_two_qubit(rho)?;
    let first = rho.qubit_labels()[0];
    let pt = rho.partial_transpose(&[first])?;
    let neg: f64 = eigvalsh(&pt)?.into_iter().filter(|&x| x < 0.0).map(|x| -x).sum();
    Ok(neg.clamp(0.0, 0.5))
}

/// Entanglement of formation from the concurrence.
pub fn eof_from_concurrence(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    binary_entropy(0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt()))
}

pub fn eof(rho: &DensityOperator) -> Result<f64> {
    Ok(eof_from_concurrence(concurrence(rho)?))
}

/// One measure on a two-qubit operator; `side` only matters for discord and work-deficit.
pub fn pair_measure(rho: &DensityOperator, kind: MeasureKind, side: Side, cfg: &OptimizerConfig) -> Result<f64> {
    Ok(pair_measures(rho, &[kind], side, cfg)?[0])
}

/// Several measures on the same two-qubit operator, sharing the concurrence
/// and the measurement optimization between the kinds that need them.
pub fn pair_measures(
    rho: &DensityOperator,
    kinds: &[MeasureKind],
    side: Side,
    cfg: &OptimizerConfig,
) -> Result<Vec<f64>> {
    check_two_qubit(rho)?;
    let mut c = None;
    let mut opt = None;
    kinds
        .iter()
        .map(|&kind| {
            if kind.needs_optimizer() && opt.is_none() {
                opt = Some(discord_and_work_deficit(rho, side, cfg)?);
            }
            if matches!(kind, MeasureKind::ConcurrenceSq | MeasureKind::EoF) && c.is_none() {
                c = Some(concurrence(rho)?);
            }
            Ok(match kind {
                MeasureKind::ConcurrenceSq => c.unwrap().powi(2),
                MeasureKind::NegativitySq => negativity(rho)?.powi(2),
                MeasureKind::EoF => eof_from_concurrence(c.unwrap()),
                MeasureKind::Discord => opt.unwrap().discord.value,
                MeasureKind::WorkDeficit => opt.unwrap().work_deficit.value,
            })
        })
        .collect()
}

/// `det ρ` of a qubit operator, clamped at zero.
fn qubit_det(m: &CMatrix) -> f64 {
    (m[(0, 0)].re * m[(1, 1)].re - m[(0, 1)].norm_sqr()).max(0.0)
}

/// The measure across the `node : rest` cut of a pure state.
pub fn pure_cut_measure(state: &PureState, node: usize, kind: MeasureKind) -> Result<f64> {
    let rho = state.partial_trace(&[node])?;
    Ok(cut_measure_from_marginal(rho.matrix(), kind))
}

pub(crate) fn cut_measure_from_marginal(m: &CMatrix, kind: MeasureKind) -> f64 {
    let det = qubit_det(m);
    match kind {
        MeasureKind::ConcurrenceSq => (4.0 * det).min(1.0),
        MeasureKind::NegativitySq => det.min(0.25),
        MeasureKind::Discord | MeasureKind::WorkDeficit | MeasureKind::EoF => {
            // Eigenvalues of a unit-trace qubit operator are (1 ± √(1 − 4 det))/2.
            let lambda = 0.5 * (1.0 + (1.0 - 4.0 * det).max(0.0).sqrt());
            binary_entropy(lambda)
        }
    }
}

/// Closed forms for the two-qubit marginal of a Dicke state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DickePairForms {
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub concurrence_sq: f64,
    pub negativity_sq: f64,
    pub discord: f64,
}

fn neg_xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

pub fn dicke_pair_closed_forms(n: usize, r: usize) -> Result<DickePairForms> {
    if n < 2 || r > n {
        return Err(Error::InvalidExcitation { n, r });
    }
    let (nf, rf) = (n as f64, r as f64);
    let norm = nf * nf - nf;
    let u = (nf - rf) * (nf - rf - 1.0) / norm;
    let v = rf * (nf - rf) / norm;
    let w = rf * (rf - 1.0) / norm;

    let concurrence_sq = 4.0 * (v - (u * w).sqrt()).max(0.0).powi(2);
    let pt_min = (u + w) - ((u - w).powi(2) + 4.0 * v * v).sqrt();
    let negativity_sq = 0.25 * pt_min.min(0.0).powi(2);
    let l = 0.5 * (1.0 + (1.0 - 4.0 * (u * v + v * w + w * u)).max(0.0).sqrt());
    let s1 = neg_xlog2x(u + v) + neg_xlog2x(v + w);
    let s2 = neg_xlog2x(u) + neg_xlog2x(2.0 * v) + neg_xlog2x(w);
    let discord = (s1 - s2 + binary_entropy(l)).max(0.0);
    Ok(DickePairForms { u, v, w, concurrence_sq, negativity_sq, discord })
}

/// Helper for tests and families: a single-qubit unitary from Euler angles.
pub fn qubit_unitary(alpha: f64, beta: f64, gamma: f64, delta: f64) -> [[Complex64; 2]; 2] {
    // e^{iα} Rz(β) Ry(γ) Rz(δ)
    let g = Complex64::from_polar(1.0, alpha);
    let (c, s) = ((gamma / 2.0).cos(), (gamma / 2.0).sin());
    let e = |x: f64| Complex64::from_polar(1.0, x);
    [
        [g * e(-(beta + delta) / 2.0) * c, -g * e(-(beta - delta) / 2.0) * s],
        [g * e((beta - delta) / 2.0) * s, g * e((beta + delta) / 2.0) * c],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w3_pair() -> DensityOperator {
        let mut a = vec![0.0; 8];
        a[0b100] = 1.0;
        a[0b010] = 1.0;
        a[0b001] = 1.0;
        PureState::from_real(&a).unwrap().partial_trace(&[0, 1]).unwrap()
    }

    fn bell() -> DensityOperator {
        PureState::from_real(&[1.0, 0.0, 0.0, 1.0]).unwrap().density()
    }

    #[test]
    fn paradigms() {
        assert_eq!(MeasureKind::ConcurrenceSq.paradigm(), Paradigm::Entanglement);
        assert_eq!(MeasureKind::NegativitySq.paradigm(), Paradigm::Entanglement);
        assert_eq!(MeasureKind::EoF.paradigm(), Paradigm::Entanglement);
        assert_eq!(MeasureKind::Discord.paradigm(), Paradigm::InformationTheoretic);
        assert_eq!(MeasureKind::WorkDeficit.paradigm(), Paradigm::InformationTheoretic);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in MeasureKind::ALL {
            assert_eq!(k.tag().parse::<MeasureKind>().unwrap(), k);
            let json = serde_json::to_string(&k).unwrap();
            assert_eq!(json, format!("\"{}\"", k.tag()));
        }
        assert!("nope".parse::<MeasureKind>().is_err());
    }

    #[test]
    fn concurrence_examples() {
        assert!((concurrence(&bell()).unwrap() - 1.0).abs() < 1e-12);
        assert!(concurrence(&PureState::basis(2, 0).unwrap().density()).unwrap().abs() < 1e-12);
        assert!((concurrence(&w3_pair()).unwrap() - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn negativity_examples() {
        assert!((negativity(&bell()).unwrap() - 0.5).abs() < 1e-12);
        let mix = DensityOperator::two_qubit(CMatrix::diagonal(&[0.5, 0.0, 0.0, 0.5])).unwrap();
        assert!(negativity(&mix).unwrap().abs() < 1e-12);
        let expected = ((3.0 - 5f64.sqrt()) / 18.0).sqrt();
        assert!((negativity(&w3_pair()).unwrap() - expected).abs() < 1e-12);
        assert!((expected - 0.206).abs() < 1e-3);
    }

    #[test]
    fn eof_examples() {
        assert!((eof(&bell()).unwrap() - 1.0).abs() < 1e-12);
        assert!(eof(&PureState::basis(2, 3).unwrap().density()).unwrap().abs() < 1e-12);
        let expected = binary_entropy(0.5 * (1.0 + 5f64.sqrt() / 3.0));
        assert!((eof(&w3_pair()).unwrap() - expected).abs() < 1e-12);
        assert!((expected - 0.550).abs() < 1e-3);
    }

    #[test]
    fn wrong_size_is_rejected() {
        let one = PureState::basis(1, 0).unwrap().density();
        assert_eq!(concurrence(&one), Err(Error::NotTwoQubit { n_qubits: 1 }));
        assert_eq!(negativity(&one), Err(Error::NotTwoQubit { n_qubits: 1 }));
        assert_eq!(eof(&one), Err(Error::NotTwoQubit { n_qubits: 1 }));
    }

    #[test]
    fn pure_cut_examples() {
        let mut ghz = vec![0.0; 8];
        ghz[0] = 1.0;
        ghz[7] = 1.0;
        let ghz = PureState::from_real(&ghz).unwrap();
        let mut w = vec![0.0; 8];
        w[1] = 1.0;
        w[2] = 1.0;
        w[4] = 1.0;
        let w = PureState::from_real(&w).unwrap();
        for node in 0..3 {
            assert!((pure_cut_measure(&ghz, node, MeasureKind::ConcurrenceSq).unwrap() - 1.0).abs() < 1e-12);
            assert!((pure_cut_measure(&ghz, node, MeasureKind::Discord).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((pure_cut_measure(&w, 0, MeasureKind::ConcurrenceSq).unwrap() - 8.0 / 9.0).abs() < 1e-12);
        assert!((pure_cut_measure(&w, 0, MeasureKind::NegativitySq).unwrap() - 2.0 / 9.0).abs() < 1e-12);
        assert!(matches!(
            pure_cut_measure(&w, 3, MeasureKind::Discord),
            Err(Error::IndexOutOfRange { index: 3, .. })
        ));
    }

    #[test]
    fn dicke_closed_form_examples() {
        let f = dicke_pair_closed_forms(3, 1).unwrap();
        assert!((f.concurrence_sq - 4.0 / 9.0).abs() < 1e-15);
        let f = dicke_pair_closed_forms(3, 0).unwrap();
        assert_eq!((f.concurrence_sq, f.negativity_sq, f.discord), (0.0, 0.0, 0.0));
        let f = dicke_pair_closed_forms(4, 2).unwrap();
        assert!((f.concurrence_sq - 1.0 / 9.0).abs() < 1e-15);
        assert!((f.u - 1.0 / 6.0).abs() < 1e-15 && (f.v - 1.0 / 3.0).abs() < 1e-15);
        assert!(matches!(dicke_pair_closed_forms(3, 4), Err(Error::InvalidExcitation { .. })));
        assert!(matches!(dicke_pair_closed_forms(1, 0), Err(Error::InvalidExcitation { .. })));
    }

    #[test]
    fn shared_pair_measures_match_individual_calls() {
        let rho = w3_pair();
        let cfg = OptimizerConfig::default();
        let all = pair_measures(&rho, &MeasureKind::ALL, Side::A, &cfg).unwrap();
        for (k, v) in MeasureKind::ALL.iter().zip(&all) {
            assert_eq!(pair_measure(&rho, *k, Side::A, &cfg).unwrap(), *v);
        }
    }

    #[test]
    fn unitary_is_unitary() {
        let u = qubit_unitary(0.3, 1.1, 2.0, -0.7);
        for i in 0..2 {
            for j in 0..2 {
                let s: Complex64 = (0..2).map(|k| u[k][i].conj() * u[k][j]).sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((s - Complex64::new(expected, 0.0)).norm() < 1e-15);
            }
        }
    }
}
