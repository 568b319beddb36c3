//! Generalized geometric measure.
//!
//! `G = 1 − max λ²` over all bipartitions, where `λ²` is the largest
//! eigenvalue of the reduced state on either side. The report splits the
//! maximum into the best single-qubit cut `a` and the best cut with at
//! least two qubits on each side `b`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qstate::{enumerate_bipartitions, max_eigenvalue, Bipartition, PureState};

/// A cut whose largest eigenvalue exceeds `1 − PRODUCT_TOLERANCE` is a product cut.
pub const PRODUCT_TOLERANCE: f64 = 1e-9;
/// `β` at or below this counts as no multi-qubit advantage, so exact ties
/// such as GHZ states (`a = b = 1/2`) are not flagged by rounding.
pub const BETA_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GgmReport {
    pub ggm: f64,
    /// Largest eigenvalue over the single-qubit cuts.
    pub a: f64,
    /// Largest eigenvalue over cuts with at least two qubits per side.
    pub b: Option<f64>,
    pub beta: Option<f64>,
    pub max_cut: Bipartition,
    pub single_qubit_dominates: bool,
    /// Largest eigenvalue of each single-qubit marginal, by qubit.
    pub node_eigenvalues: Vec<f64>,
}

pub fn ggm(state: &PureState) -> Result<GgmReport> {
    let n = state.n_qubits();
    let cuts = enumerate_bipartitions(n)?;
    let mut node_eigenvalues = vec![0.0; n];
    let mut a = f64::NEG_INFINITY;
    let mut b: Option<f64> = None;
    let mut best = (f64::NEG_INFINITY, 0usize);
    for (idx, cut) in cuts.iter().enumerate() {
        let rho = state.partial_trace(cut.part_a())?;
        let lambda = max_eigenvalue(&rho)?.clamp(0.0, 1.0);
        if cut.part_a().len() == 1 {
            node_eigenvalues[cut.part_a()[0]] = lambda;
            a = a.max(lambda);
            if n == 2 {
                node_eigenvalues[cut.part_b()[0]] = lambda;
            }
        } else {
            b = Some(b.map_or(lambda, |x: f64| x.max(lambda)));
        }
        if lambda > best.0 {
            best = (lambda, idx);
        }
    }
    let top = best.0;
    let ggm = if top > 1.0 - PRODUCT_TOLERANCE { 0.0 } else { (1.0 - top).max(0.0) };
    let beta = b.map(|b| b - a);
    Ok(GgmReport {
        ggm,
        a,
        b,
        beta,
        max_cut: cuts[best.1].clone(),
        single_qubit_dominates: beta.is_none_or(|x| x <= BETA_TOLERANCE),
        node_eigenvalues,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DickeGgmForm {
    pub a: f64,
    /// Best two-qubit-cut eigenvalue, given when `r = n/2`.
    pub b_when_half: Option<f64>,
}

impl DickeGgmForm {
    pub fn ggm(&self) -> f64 {
        let top = self.b_when_half.map_or(self.a, |b| b.max(self.a));
        if top > 1.0 - PRODUCT_TOLERANCE {
            0.0
        } else {
            1.0 - top
        }
    }
}

pub fn ggm_dicke_closed_form(n: usize, r: usize) -> Result<DickeGgmForm> {
    if n < 2 || r > n {
        return Err(Error::InvalidExcitation { n, r });
    }
    let frac = r as f64 / n as f64;
    let a = frac.max(1.0 - frac);
    let b_when_half = (n >= 4 && 2 * r == n).then(|| n as f64 / (2.0 * (n as f64 - 1.0)));
    Ok(DickeGgmForm { a, b_when_half })
}

/// Single-qubit eigenvalue `a` of `α|0…0⟩ + β|1…1⟩ + γ|W⟩` with `β = √(1 − |α|² − |γ|²)`.
pub fn ghzw_single_qubit_eigenvalue(alpha: Complex64, gamma: Complex64, n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::TooFewQubits { n_qubits: n, min: 3 });
    }
    let (a2, g2) = (alpha.norm_sqr(), gamma.norm_sqr());
    if !(a2 + g2 <= 1.0 + 1e-12) || !a2.is_finite() || !g2.is_finite() {
        return Err(Error::InvalidAmplitudes(format!("|alpha|^2 + |gamma|^2 = {} exceeds 1", a2 + g2)));
    }
    let b2 = (1.0 - a2 - g2).max(0.0);
    let nf = n as f64;
    let det = a2 * b2 + (nf - 1.0) / nf * g2 * (b2 + g2 / nf);
    Ok(0.5 * (1.0 + (1.0 - 4.0 * det).max(0.0).sqrt()))
}

/// `1 − a` for the GHZ+W superposition, with the single-qubit cut dominating.
pub fn ggm_ghzw_closed_form(alpha: Complex64, gamma: Complex64, n: usize) -> Result<f64> {
    let a = ghzw_single_qubit_eigenvalue(alpha, gamma, n)?;
    Ok(if a > 1.0 - PRODUCT_TOLERANCE { 0.0 } else { 1.0 - a })
}
