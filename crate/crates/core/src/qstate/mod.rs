//! Few-qubit states and the linear algebra around them.
//!
//! Qubit 0 is the most significant bit of a computational-basis index, for
//! every constructor, reduced state and file in this crate.

pub mod io;
pub mod jacobi;
pub mod matrix;

use num_complex::Complex64;

pub use jacobi::{eigh, eigvalsh, EigenDecomposition};
pub use matrix::CMatrix;

use crate::error::{Error, Result};

/// Normalization tolerance for [`PureState`].
pub const NORM_TOLERANCE: f64 = 1e-12;
/// Hermiticity and trace tolerance for [`DensityOperator`].
pub const DENSITY_TOLERANCE: f64 = 1e-12;
/// Eigenvalues in `[-PSD_TOLERANCE, 0)` are rounding noise and clip to zero.
pub const PSD_TOLERANCE: f64 = 1e-10;
/// Default cap on the number of qubits for bipartition scans.
pub const DEFAULT_QUBIT_CAP: usize = 12;

#[inline]
pub(crate) fn bit_of(index: usize, qubit: usize, n_qubits: usize) -> usize {
    (index >> (n_qubits - 1 - qubit)) & 1
}

#[inline]
pub(crate) fn qubit_mask(qubit: usize, n_qubits: usize) -> usize {
    1 << (n_qubits - 1 - qubit)
}

/// Normalized amplitude vector over `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Requires `Σ|a|² = 1` within [`NORM_TOLERANCE`].
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let n_qubits = qubits_for_len(amplitudes.len())?;
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self { n_qubits, amplitudes })
    }

    /// Rescales to unit norm; fails on the zero vector.
    pub fn from_unnormalized(mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let n_qubits = qubits_for_len(amplitudes.len())?;
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !(norm_sq > 0.0) || !norm_sq.is_finite() {
            return Err(Error::NotNormalized { norm_sq });
        }
        let inv = 1.0 / norm_sq.sqrt();
        amplitudes.iter_mut().for_each(|a| *a *= inv);
        Ok(Self { n_qubits, amplitudes })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::from_unnormalized(amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::TooFewQubits { n_qubits, min: 1 });
        }
        if index >= 1 << n_qubits {
            return Err(Error::IndexOutOfRange { index, n_qubits });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits, amplitudes })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    /// ⟨self|other⟩
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }

    /// `self ⊗ other`
    pub fn tensor(&self, other: &Self) -> Self {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Self { n_qubits: self.n_qubits + other.n_qubits, amplitudes }
    }

    /// Full projector `|ψ⟩⟨ψ|` on all qubits.
    pub fn density(&self) -> DensityOperator {
        DensityOperator {
            qubit_labels: (0..self.n_qubits).collect(),
            matrix: CMatrix::outer(&self.amplitudes),
        }
    }

    /// Applies the 2x2 unitary `u` (row-major) to one qubit.
    pub fn apply_single_qubit(&self, qubit: usize, u: [[Complex64; 2]; 2]) -> Result<Self> {
        self.check_index(qubit)?;
        let mask = qubit_mask(qubit, self.n_qubits);
        let mut out = self.amplitudes.clone();
        for i0 in 0..self.dim() {
            if i0 & mask != 0 {
                continue;
            }
            let i1 = i0 | mask;
            let (a0, a1) = (self.amplitudes[i0], self.amplitudes[i1]);
            out[i0] = u[0][0] * a0 + u[0][1] * a1;
            out[i1] = u[1][0] * a0 + u[1][1] * a1;
        }
        Ok(Self { n_qubits: self.n_qubits, amplitudes: out })
    }

    /// Relabels qubits: qubit `i` of the result is qubit `perm[i]` of `self`.
    pub fn permute_qubits(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n_qubits;
        if perm.len() != n {
            return Err(Error::DimensionMismatch { len: perm.len(), n_qubits: n });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            self.check_index(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::DuplicateQubit(p));
            }
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim()];
        for (old, &amp) in self.amplitudes.iter().enumerate() {
            let mut new = 0;
            for (i, &p) in perm.iter().enumerate() {
                if bit_of(old, p, n) == 1 {
                    new |= qubit_mask(i, n);
                }
            }
            out[new] = amp;
        }
        Ok(Self { n_qubits: n, amplitudes: out })
    }

    /// Reduced state on `keep` (any order, returned sorted ascending).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityOperator> {
        let keep = validated_keep(keep, self.n_qubits)?;
        let n = self.n_qubits;
        let env: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
        let k_dim = 1 << keep.len();
        let e_dim = 1 << env.len();

        // Amplitudes reshaped as a (kept × environment) matrix M; ρ = M M†.
        let mut reshaped = vec![Complex64::new(0.0, 0.0); k_dim * e_dim];
        for (idx, &amp) in self.amplitudes.iter().enumerate() {
            let x = gather_bits(idx, &keep, n);
            let e = gather_bits(idx, &env, n);
            reshaped[x * e_dim + e] = amp;
        }
        let mut matrix = CMatrix::zeros(k_dim);
        for x in 0..k_dim {
            let row_x = &reshaped[x * e_dim..(x + 1) * e_dim];
            for y in x..k_dim {
                let row_y = &reshaped[y * e_dim..(y + 1) * e_dim];
                let s: Complex64 = row_x.iter().zip(row_y).map(|(a, b)| a * b.conj()).sum();
                matrix[(x, y)] = s;
                matrix[(y, x)] = s.conj();
            }
            matrix[(x, x)].im = 0.0;
        }
        Ok(DensityOperator { qubit_labels: keep, matrix })
    }

    fn check_index(&self, q: usize) -> Result<()> {
        if q >= self.n_qubits {
            return Err(Error::IndexOutOfRange { index: q, n_qubits: self.n_qubits });
        }
        Ok(())
    }
}

fn qubits_for_len(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::DimensionMismatch { len, n_qubits: len.max(1).ilog2() as usize });
    }
    Ok(len.trailing_zeros() as usize)
}

fn gather_bits(index: usize, qubits: &[usize], n_qubits: usize) -> usize {
    qubits.iter().fold(0, |acc, &q| (acc << 1) | bit_of(index, q, n_qubits))
}

fn scatter_bits(value: usize, qubits: &[usize], n_qubits: usize) -> usize {
    let k = qubits.len();
    qubits.iter().enumerate().fold(0, |acc, (i, &q)| {
        if (value >> (k - 1 - i)) & 1 == 1 {
            acc | qubit_mask(q, n_qubits)
        } else {
            acc
        }
    })
}

fn validated_keep(keep: &[usize], n_qubits: usize) -> Result<Vec<usize>> {
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateQubit(w[0]));
        }
    }
    if let Some(&q) = sorted.last() {
        if q >= n_qubits {
            return Err(Error::IndexOutOfRange { index: q, n_qubits });
        }
    }
    Ok(sorted)
}

/// Hermitian, unit-trace, positive semidefinite operator on a set of qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    qubit_labels: Vec<usize>,
    matrix: CMatrix,
}

impl DensityOperator {
    /// Validates hermiticity and trace to [`DENSITY_TOLERANCE`] and the
    /// spectrum to [`PSD_TOLERANCE`].
    pub fn new(qubit_labels: Vec<usize>, matrix: CMatrix) -> Result<Self> {
        if matrix.dim() != 1 << qubit_labels.len() {
            return Err(Error::DimensionMismatch { len: matrix.dim(), n_qubits: qubit_labels.len() });
        }
        let mut seen = qubit_labels.clone();
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateQubit(w[0]));
            }
        }
        let deviation = matrix.hermitian_deviation();
        if deviation > DENSITY_TOLERANCE {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > DENSITY_TOLERANCE {
            return Err(Error::TraceNotOne { trace });
        }
        let op = Self { qubit_labels, matrix };
        op.spectrum()?;
        Ok(op)
    }

    /// Two-qubit operator on labels `[0, 1]`.
    pub fn two_qubit(matrix: CMatrix) -> Result<Self> {
        Self::new(vec![0, 1], matrix)
    }

    pub(crate) fn from_parts_unchecked(qubit_labels: Vec<usize>, matrix: CMatrix) -> Self {
        Self { qubit_labels, matrix }
    }

    pub fn qubit_labels(&self) -> &[usize] {
        &self.qubit_labels
    }

    pub fn n_qubits(&self) -> usize {
        self.qubit_labels.len()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Descending spectrum with rounding negatives clipped to zero.
    pub fn spectrum(&self) -> Result<Spectrum> {
        hermitian_spectrum(self)
    }

    pub fn entropy(&self) -> Result<f64> {
        Ok(von_neumann_entropy(&self.spectrum()?))
    }

    fn positions_of(&self, labels: &[usize]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                self.qubit_labels
                    .iter()
                    .position(|q| q == l)
                    .ok_or(Error::IndexOutOfRange { index: *l, n_qubits: self.n_qubits() })
            })
            .collect()
    }

    /// Traces out every qubit not in `keep` (original labels).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityOperator> {
        if keep.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        let positions = self.positions_of(keep)?;
        let n = self.n_qubits();
        let kept_pos = validated_keep(&positions, n)?;
        let env: Vec<usize> = (0..n).filter(|q| !kept_pos.contains(q)).collect();
        let k_dim = 1 << kept_pos.len();
        let e_dim = 1 << env.len();
        let kept_offsets: Vec<usize> = (0..k_dim).map(|x| scatter_bits(x, &kept_pos, n)).collect();
        let env_offsets: Vec<usize> = (0..e_dim).map(|e| scatter_bits(e, &env, n)).collect();

        let mut out = CMatrix::zeros(k_dim);
        for x in 0..k_dim {
            for y in 0..k_dim {
                let mut s = Complex64::new(0.0, 0.0);
                for &eo in &env_offsets {
                    s += self.matrix[(kept_offsets[x] | eo, kept_offsets[y] | eo)];
                }
                out[(x, y)] = s;
            }
        }
        let labels = kept_pos.iter().map(|&p| self.qubit_labels[p]).collect();
        Ok(DensityOperator { qubit_labels: labels, matrix: out })
    }

    /// Partial transpose on the qubits `on` (original labels).
    pub fn partial_transpose(&self, on: &[usize]) -> Result<CMatrix> {
        if on.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        let positions = self.positions_of(on)?;
        let n = self.n_qubits();
        let mask = positions.iter().fold(0, |m, &p| m | qubit_mask(p, n));
        let dim = self.matrix.dim();
        let mut out = CMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                let i2 = (i & !mask) | (j & mask);
                let j2 = (j & !mask) | (i & mask);
                out[(i, j)] = self.matrix[(i2, j2)];
            }
        }
        Ok(out)
    }
}

/// Real eigenvalues sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    /// Clips `[-PSD_TOLERANCE, 0)` to zero; anything more negative is an error.
    pub fn new(mut eigenvalues: Vec<f64>) -> Result<Self> {
        for x in eigenvalues.iter_mut() {
            if *x < -PSD_TOLERANCE {
                return Err(Error::NotPositiveSemidefinite { min_eigenvalue: *x });
            }
            if *x < 0.0 {
                *x = 0.0;
            }
        }
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Ok(Self { eigenvalues })
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }
}

pub fn hermitian_spectrum(op: &DensityOperator) -> Result<Spectrum> {
    Spectrum::new(eigvalsh(&op.matrix)?)
}

#[inline]
fn neg_xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// `-Σ λ log₂ λ` with `0 log 0 = 0`.
pub fn von_neumann_entropy(spec: &Spectrum) -> f64 {
    shannon_entropy(&spec.eigenvalues)
}

/// Shannon entropy in bits; non-positive entries contribute nothing.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    probs.iter().map(|&p| neg_xlog2x(p)).sum::<f64>().max(0.0)
}

/// Binary Shannon entropy `h(x)`.
#[inline]
pub fn binary_entropy(x: f64) -> f64 {
    neg_xlog2x(x) + neg_xlog2x(1.0 - x)
}

/// Unordered cut of the qubits into two nonempty parts.
///
/// Canonical form: `part_a` is the smaller side; on ties it holds qubit 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Bipartition {
    part_a: Vec<usize>,
    part_b: Vec<usize>,
}

impl Bipartition {
    /// Builds the canonical cut with `side` on one half.
    pub fn new(side: &[usize], n_qubits: usize) -> Result<Self> {
        let side = validated_keep(side, n_qubits)?;
        if side.len() == n_qubits {
            return Err(Error::EmptyKeepSet);
        }
        let other: Vec<usize> = (0..n_qubits).filter(|q| !side.contains(q)).collect();
        let (part_a, part_b) = if side.len() < other.len() || (side.len() == other.len() && side[0] == 0) {
            (side, other)
        } else {
            (other, side)
        };
        Ok(Self { part_a, part_b })
    }

    pub fn part_a(&self) -> &[usize] {
        &self.part_a
    }

    pub fn part_b(&self) -> &[usize] {
        &self.part_b
    }

    pub fn n_qubits(&self) -> usize {
        self.part_a.len() + self.part_b.len()
    }
}

impl std::fmt::Display for Bipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{}}}:{{{}}}", join(&self.part_a), join(&self.part_b))
    }
}

pub fn enumerate_bipartitions(n_qubits: usize) -> Result<Vec<Bipartition>> {
    enumerate_bipartitions_with_cap(n_qubits, DEFAULT_QUBIT_CAP)
}

/// Every unordered cut once, ordered by `|part_a|` and then by subset mask.
pub fn enumerate_bipartitions_with_cap(n_qubits: usize, cap: usize) -> Result<Vec<Bipartition>> {
    if n_qubits < 2 {
        return Err(Error::TooFewQubits { n_qubits, min: 2 });
    }
    if n_qubits > cap {
        return Err(Error::TooManyQubits { n_qubits, cap });
    }
    let mut cuts = Vec::with_capacity((1 << (n_qubits - 1)) - 1);
    for size in 1..=n_qubits / 2 {
        // Walk masks with qubit 0 as the MSB so lexicographic order follows qubit order.
        let mut masks: Vec<usize> = (1usize..(1 << n_qubits) - 1)
            .filter(|m| m.count_ones() as usize == size)
            .collect();
        masks.sort_unstable_by(|a, b| b.cmp(a));
        for m in masks {
            let part_a: Vec<usize> = (0..n_qubits).filter(|&q| m & qubit_mask(q, n_qubits) != 0).collect();
            if 2 * size == n_qubits && part_a[0] != 0 {
                continue;
            }
            let part_b = (0..n_qubits).filter(|q| !part_a.contains(q)).collect();
            cuts.push(Bipartition { part_a, part_b });
        }
    }
    Ok(cuts)
}

/// Largest eigenvalue of the reduced state on either side of `cut`
/// (the squared largest Schmidt coefficient).
pub fn schmidt_max_eigenvalue(state: &PureState, cut: &Bipartition) -> Result<f64> {
    if cut.n_qubits() != state.n_qubits() {
        return Err(Error::DimensionMismatch { len: cut.n_qubits(), n_qubits: state.n_qubits() });
    }
    let rho = state.partial_trace(&cut.part_a)?;
    Ok(max_eigenvalue(&rho)?.clamp(0.0, 1.0))
}

pub(crate) fn max_eigenvalue(rho: &DensityOperator) -> Result<f64> {
    let m = rho.matrix();
    if m.dim() == 2 {
        // Closed form for a qubit marginal.
        let (a, d) = (m[(0, 0)].re, m[(1, 1)].re);
        let off = m[(0, 1)].norm_sqr();
        return Ok(0.5 * (a + d) + (0.25 * (a - d) * (a - d) + off).sqrt());
    }
    Ok(hermitian_spectrum(rho)?.max())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn ghz3() -> PureState {
        let mut a = vec![0.0; 8];
        a[0] = 1.0;
        a[7] = 1.0;
        PureState::from_real(&a).unwrap()
    }

    fn w3() -> PureState {
        let mut a = vec![0.0; 8];
        a[0b100] = 1.0;
        a[0b010] = 1.0;
        a[0b001] = 1.0;
        PureState::from_real(&a).unwrap()
    }

    #[test]
    fn ghz_single_qubit_marginal_is_maximally_mixed() {
        let rho = ghz3().partial_trace(&[0]).unwrap();
        assert!(rho.matrix().max_abs_diff(&CMatrix::diagonal(&[0.5, 0.5])) < 1e-15);
    }

    #[test]
    fn product_marginal_is_pure() {
        let rho = PureState::basis(4, 0).unwrap().partial_trace(&[1, 2]).unwrap();
        assert!(rho.matrix().max_abs_diff(&CMatrix::diagonal(&[1.0, 0.0, 0.0, 0.0])) < 1e-15);
        assert_eq!(rho.qubit_labels(), &[1, 2]);
    }

    #[test]
    fn w_marginal_oracle() {
        // Direct summation over the traced qubits of the eight amplitudes.
        let psi = w3();
        let mut expected = [[0.0f64; 2]; 2];
        for x in 0..2 {
            for y in 0..2 {
                for e in 0..4 {
                    let ix = (x << 2) | e;
                    let iy = (y << 2) | e;
                    expected[x][y] += (psi.amplitudes()[ix] * psi.amplitudes()[iy].conj()).re;
                }
            }
        }
        let rho = psi.partial_trace(&[0]).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert!((rho.matrix()[(x, y)].re - expected[x][y]).abs() < 1e-15);
            }
        }
        assert!((expected[0][0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((expected[1][1] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn partial_trace_errors() {
        let psi = ghz3();
        assert_eq!(psi.partial_trace(&[]), Err(Error::EmptyKeepSet));
        assert!(matches!(psi.partial_trace(&[3]), Err(Error::IndexOutOfRange { index: 3, .. })));
        assert_eq!(psi.partial_trace(&[1, 1]), Err(Error::DuplicateQubit(1)));
    }

    #[test]
    fn keep_everything_returns_projector() {
        let psi = w3();
        let rho = psi.partial_trace(&[2, 0, 1]).unwrap();
        assert!(rho.matrix().max_abs_diff(psi.density().matrix()) < 1e-15);
        let spec = rho.spectrum().unwrap();
        assert!((spec.max() - 1.0).abs() < 1e-12);
        assert!(spec.eigenvalues()[1..].iter().all(|&x| x.abs() < 1e-12));
    }

    #[test]
    fn spectra_of_known_operators() {
        let half = DensityOperator::new(vec![0], CMatrix::diagonal(&[0.5, 0.5])).unwrap();
        assert_eq!(half.spectrum().unwrap().eigenvalues(), &[0.5, 0.5]);

        // Werner state p|ψ⁻⟩⟨ψ⁻| + (1-p) I/4 at p = 3/5.
        let p = 0.6;
        let s = FRAC_1_SQRT_2;
        let singlet = [0.0, s, -s, 0.0].map(|x| Complex64::new(x, 0.0));
        let werner = &CMatrix::outer(&singlet).scale(p) + &CMatrix::identity(4).scale((1.0 - p) / 4.0);
        let rho = DensityOperator::two_qubit(werner).unwrap();
        assert!((rho.spectrum().unwrap().max() - 0.7).abs() < 1e-12);

        // Ising-ring pair matrix at n = 4; largest root of its characteristic
        // polynomial is (6 + √32)/16.
        let n = 4.0;
        let m = CMatrix::from_real_rows(&[
            &[n - 1.0, 1.0, 1.0, 2.0],
            &[1.0, 1.0, 0.0, 1.0],
            &[1.0, 0.0, 1.0, 1.0],
            &[2.0, 1.0, 1.0, n - 1.0],
        ])
        .scale(1.0 / (2.0 * n));
        let rho = DensityOperator::two_qubit(m).unwrap();
        assert!((rho.spectrum().unwrap().max() - (6.0 + 32f64.sqrt()) / 16.0).abs() < 1e-12);
    }

    #[test]
    fn density_operator_validation() {
        let not_herm = CMatrix::from_row_major(vec![
            Complex64::new(0.5, 0.0),
            Complex64::new(0.1, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.5, 0.0),
        ]);
        assert!(matches!(DensityOperator::new(vec![0], not_herm), Err(Error::NotHermitian { .. })));
        assert!(matches!(
            DensityOperator::new(vec![0], CMatrix::diagonal(&[0.6, 0.6])),
            Err(Error::TraceNotOne { .. })
        ));
        assert!(matches!(
            DensityOperator::new(vec![0], CMatrix::diagonal(&[1.1, -0.1])),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn partial_transpose_examples() {
        let prod = PureState::basis(2, 0).unwrap().density();
        assert_eq!(prod.partial_transpose(&[0]).unwrap(), *prod.matrix());

        let bell = PureState::from_real(&[1.0, 0.0, 0.0, 1.0]).unwrap().density();
        let pt = bell.partial_transpose(&[0]).unwrap();
        let vals = eigvalsh(&pt).unwrap();
        assert!((vals[3] + 0.5).abs() < 1e-14);

        let w_pair = w3().partial_trace(&[0, 1]).unwrap();
        let vals = eigvalsh(&w_pair.partial_transpose(&[0]).unwrap()).unwrap();
        assert!((vals[3] - (1.0 - 5f64.sqrt()) / 6.0).abs() < 1e-13);
    }

    #[test]
    fn entropy_examples() {
        let s = |v: Vec<f64>| von_neumann_entropy(&Spectrum::new(v).unwrap());
        assert_eq!(s(vec![1.0, 0.0]), 0.0);
        assert!((s(vec![0.5, 0.5]) - 1.0).abs() < 1e-15);
        let h = -(2.0f64 / 3.0) * (2.0f64 / 3.0).log2() - (1.0f64 / 3.0) * (1.0f64 / 3.0).log2();
        assert!((s(vec![2.0 / 3.0, 1.0 / 3.0]) - h).abs() < 1e-15);
        assert!((h - 0.918296).abs() < 1e-6);
        assert!((s(vec![0.25; 4]) - 2.0).abs() < 1e-15);
        // rounding negatives are clipped
        assert_eq!(s(vec![1.0, -1e-12]), 0.0);
    }

    #[test]
    fn bipartition_counts() {
        assert_eq!(enumerate_bipartitions(2).unwrap().len(), 1);
        assert_eq!(enumerate_bipartitions(3).unwrap().len(), 3);
        let four = enumerate_bipartitions(4).unwrap();
        assert_eq!(four.len(), 7);
        assert_eq!(four.iter().filter(|c| c.part_a().len() == 1).count(), 4);
        assert_eq!(four.iter().filter(|c| c.part_a().len() == 2).count(), 3);
        for n in 2..=10 {
            let cuts = enumerate_bipartitions(n).unwrap();
            assert_eq!(cuts.len(), (1 << (n - 1)) - 1);
            let unique: std::collections::HashSet<_> = cuts.iter().collect();
            assert_eq!(unique.len(), cuts.len());
            for c in &cuts {
                assert_eq!(Bipartition::new(c.part_b(), n).unwrap(), *c);
            }
        }
        assert!(matches!(enumerate_bipartitions(13), Err(Error::TooManyQubits { .. })));
        assert!(matches!(enumerate_bipartitions(1), Err(Error::TooFewQubits { .. })));
    }

    #[test]
    fn schmidt_examples() {
        let mut ghz4 = vec![0.0; 16];
        ghz4[0] = 1.0;
        ghz4[15] = 1.0;
        let ghz4 = PureState::from_real(&ghz4).unwrap();
        for q in 0..4 {
            let cut = Bipartition::new(&[q], 4).unwrap();
            assert!((schmidt_max_eigenvalue(&ghz4, &cut).unwrap() - 0.5).abs() < 1e-15);
        }
        let prod = PureState::basis(1, 0).unwrap().tensor(&w3());
        let cut = Bipartition::new(&[0], 4).unwrap();
        assert!((schmidt_max_eigenvalue(&prod, &cut).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn permute_and_single_qubit_ops() {
        let psi = PureState::basis(3, 0b100).unwrap();
        let moved = psi.permute_qubits(&[2, 0, 1]).unwrap();
        // new qubit 1 = old qubit 0 (which was |1⟩)
        assert_eq!(moved, PureState::basis(3, 0b010).unwrap());
        let x = [
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        ];
        assert_eq!(psi.apply_single_qubit(2, x).unwrap(), PureState::basis(3, 0b101).unwrap());
    }
}
