//! Discord and one-way work-deficit of two-qubit states.
//!
//! Both need the post-measurement states of the unmeasured qubit. In the
//! Pauli expansion `ρ = ¼ Σ R_μν σ_μ ⊗ σ_ν` with `a = R_i0`, `b = R_0j` and
//! `T = R_ij`, measuring the first qubit along `n̂` gives outcome
//! probabilities `(1 ± a·n̂)/2` and conditional Bloch vectors
//! `(b ± Tᵀn̂)/(1 ± a·n̂)`, so every objective evaluation is a handful of
//! flops and two binary entropies.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::optimizer::{minimize_on_sphere_with_screen, MeasurementSetting, OptimizerConfig, SphereMinimum};
use crate::error::{Error, Result};
use crate::qstate::{binary_entropy, CMatrix, DensityOperator};

/// Values in `[-NEGATIVE_CLIP, 0)` are optimizer slack and clip to zero.
pub const NEGATIVE_CLIP: f64 = 1e-6;

/// Which qubit of a two-qubit operator is measured: `A` is the first label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn flipped(self) -> Self {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizedValue {
    pub value: f64,
    /// Measurement achieving `value`, on the measured qubit.
    pub setting: MeasurementSetting,
    /// Same quantity evaluated at the best coarse-grid point.
    pub grid_value: f64,
}

/// Both optimized quantities from a single grid scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscordAndDeficit {
    pub discord: OptimizedValue,
    pub work_deficit: OptimizedValue,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct BlochForm {
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub t: [[f64; 3]; 3],
}

fn pauli(mu: usize) -> [[Complex64; 2]; 2] {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match mu {
        0 => [[one, z], [z, one]],
        1 => [[z, one], [one, z]],
        2 => [[z, -i], [i, z]],
        _ => [[one, z], [z, -one]],
    }
}

impl BlochForm {
    pub fn from_matrix(m: &CMatrix) -> Self {
        // R_μν = Tr[ρ (σ_μ ⊗ σ_ν)] = Σ_{ij} ρ_ij (σ_μ ⊗ σ_ν)_ji
        let coeff = |mu: usize, nu: usize| {
            let (pm, pn) = (pauli(mu), pauli(nu));
            let mut s = Complex64::new(0.0, 0.0);
            for i in 0..4 {
                for j in 0..4 {
                    let op = pm[j >> 1][i >> 1] * pn[j & 1][i & 1];
                    if op.re != 0.0 || op.im != 0.0 {
                        s += m[(i, j)] * op;
                    }
                }
            }
            s.re
        };
        let mut out = Self { a: [0.0; 3], b: [0.0; 3], t: [[0.0; 3]; 3] };
        for i in 0..3 {
            out.a[i] = coeff(i + 1, 0);
            out.b[i] = coeff(0, i + 1);
            for j in 0..3 {
                out.t[i][j] = coeff(i + 1, j + 1);
            }
        }
        out
    }

    pub fn swapped(&self) -> Self {
        let mut t = [[0.0; 3]; 3];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = self.t[j][i];
            }
        }
        Self { a: self.b, b: self.a, t }
    }

    /// `(H(p), Σ± p± S(ρ_B|±))` for a measurement of the first qubit along `n`.
    #[inline]
    pub fn measurement_entropies(&self, n: [f64; 3]) -> (f64, f64) {
        self.measurement_entropies_by(n, binary_entropy)
    }

    #[inline]
    fn measurement_entropies_by(&self, n: [f64; 3], h: impl Fn(f64) -> f64) -> (f64, f64) {
        let an = self.a[0] * n[0] + self.a[1] * n[1] + self.a[2] * n[2];
        let mut v = [0.0; 3];
        for (j, vj) in v.iter_mut().enumerate() {
            *vj = self.t[0][j] * n[0] + self.t[1][j] * n[1] + self.t[2][j] * n[2];
        }
        let mut cond = 0.0;
        for sign in [1.0, -1.0] {
            let weight = 1.0 + sign * an;
            if weight <= 1e-300 {
                continue;
            }
            let r2: f64 = (0..3).map(|j| (self.b[j] + sign * v[j]).powi(2)).sum();
            let r = (r2.sqrt() / weight).min(1.0);
            cond += 0.5 * weight * h(0.5 * (1.0 + r));
        }
        (h(0.5 * (1.0 + an.clamp(-1.0, 1.0))), cond)
    }

    fn first_qubit_entropy(&self) -> f64 {
        let r = (self.a[0] * self.a[0] + self.a[1] * self.a[1] + self.a[2] * self.a[2]).sqrt().min(1.0);
        binary_entropy(0.5 * (1.0 + r))
    }
}

/// `ln x` to about 1e-9 absolute, for ranking grid points only.
#[inline]
fn approx_ln(x: f64) -> f64 {
    const SQRT_2: f64 = std::f64::consts::SQRT_2;
    let bits = x.to_bits();
    let mut exponent = ((bits >> 52) & 0x7ff) as i64 - 1023;
    let mut m = f64::from_bits((bits & 0x000f_ffff_ffff_ffff) | 0x3ff0_0000_0000_0000);
    if m > SQRT_2 {
        m *= 0.5;
        exponent += 1;
    }
    // ln m = 2 atanh t with |t| ≤ 0.172
    let t = (m - 1.0) / (m + 1.0);
    let t2 = t * t;
    let series = t * (2.0 + t2 * (2.0 / 3.0 + t2 * (2.0 / 5.0 + t2 * (2.0 / 7.0 + t2 * (2.0 / 9.0 + t2 * (2.0 / 11.0))))));
    exponent as f64 * std::f64::consts::LN_2 + series
}

#[inline]
fn approx_binary_entropy(x: f64) -> f64 {
    let term = |p: f64| if p <= 1e-300 { 0.0 } else { -p * approx_ln(p) };
    (term(x) + term(1.0 - x)) * std::f64::consts::LOG2_E
}

fn check_two_qubit(rho: &DensityOperator) -> Result<()> {
    if rho.n_qubits() != 2 {
        return Err(Error::NotTwoQubit { n_qubits: rho.n_qubits() });
    }
    Ok(())
}

pub(crate) fn clip_negative(value: f64) -> Result<f64> {
    if value < -NEGATIVE_CLIP {
        return Err(Error::NegativeCorrelation { value });
    }
    Ok(value.max(0.0))
}

/// Discord and work-deficit with `side` measured, sharing one optimizer pass.
pub fn discord_and_work_deficit(rho: &DensityOperator, side: Side, cfg: &OptimizerConfig) -> Result<DiscordAndDeficit> {
    check_two_qubit(rho)?;
    let mut form = BlochForm::from_matrix(rho.matrix());
    if side == Side::B {
        form = form.swapped();
    }
    let s_joint = rho.entropy()?;
    let s_measured = form.first_qubit_entropy();
    let [cond, dephased] = minimize_on_sphere_with_screen(
        |n| {
            let (hp, c) = form.measurement_entropies_by(n, approx_binary_entropy);
            [c, hp + c]
        },
        |n| {
            let (hp, c) = form.measurement_entropies(n);
            [c, hp + c]
        },
        cfg,
    )?;
    let finish = |m: SphereMinimum, offset: f64| -> Result<OptimizedValue> {
        Ok(OptimizedValue {
            value: clip_negative(m.value + offset)?,
            setting: m.setting,
            grid_value: m.grid_value + offset,
        })
    };
    Ok(DiscordAndDeficit {
        discord: finish(cond, s_measured - s_joint)?,
        work_deficit: finish(dephased, -s_joint)?,
    })
}

/// `D = S(ρ_meas) − S(ρ) + min Σ p± S(ρ_other|±)` over projective measurements.
pub fn discord(rho: &DensityOperator, side: Side, cfg: &OptimizerConfig) -> Result<OptimizedValue> {
    Ok(discord_and_work_deficit(rho, side, cfg)?.discord)
}

/// `Δ = min S(Σ (Π± ⊗ I) ρ (Π± ⊗ I)) − S(ρ)` over measurements on `side`.
pub fn work_deficit(rho: &DensityOperator, side: Side, cfg: &OptimizerConfig) -> Result<OptimizedValue> {
    Ok(discord_and_work_deficit(rho, side, cfg)?.work_deficit)
}
