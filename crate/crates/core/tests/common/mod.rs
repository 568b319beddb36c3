#![allow(dead_code)]

use monoscope::families::{complex_normal, haar_random, RngStream};
use monoscope::measures::qubit_unitary;
use monoscope::{CMatrix, Complex64, DensityOperator, PureState};

pub fn haar(n: usize, seed: u64) -> PureState {
    haar_random(n, RngStream::new(seed, 0)).unwrap()
}

pub fn ghz(n: usize) -> PureState {
    let mut v = vec![0.0; 1 << n];
    v[0] = 1.0;
    v[(1 << n) - 1] = 1.0;
    PureState::from_real(&v).unwrap()
}

pub fn w3() -> PureState {
    PureState::from_real(&[0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0]).unwrap()
}

/// `p |ψ⁻⟩⟨ψ⁻| + (1 − p) I/4`
pub fn werner(p: f64) -> DensityOperator {
    let s = 1.0 / 2f64.sqrt();
    let singlet = CMatrix::outer(&[0.0, s, -s, 0.0].map(|x| Complex64::new(x, 0.0)));
    let m = &singlet.scale(p) + &CMatrix::identity(4).scale((1.0 - p) / 4.0);
    DensityOperator::two_qubit(m).unwrap()
}

/// Random single-qubit unitary drawn from a seeded stream.
pub fn random_unitary(seed: u64) -> [[Complex64; 2]; 2] {
    let mut rng = RngStream::new(seed, 1).rng();
    let z = complex_normal(&mut rng);
    let w = complex_normal(&mut rng);
    qubit_unitary(z.re, z.im, w.re, w.im)
}

/// The same random local unitary on every qubit index in `qubits`.
pub fn apply_local(state: &PureState, qubits: &[usize], seed: u64) -> PureState {
    qubits
        .iter()
        .enumerate()
        .fold(state.clone(), |s, (i, &q)| s.apply_single_qubit(q, random_unitary(seed.wrapping_add(i as u64))).unwrap())
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
