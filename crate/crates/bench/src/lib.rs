//! Fixed inputs shared by the benchmarks.

use monoscope::families::{dicke, haar_random, RngStream};
use monoscope::{DensityOperator, PureState};

pub const SEED: u64 = 0x6d6f_6e6f;

pub fn haar(n: usize, index: u64) -> PureState {
    haar_random(n, RngStream::new(SEED, index)).expect("valid qubit count")
}

/// A generic mixed two-qubit marginal.
pub fn mixed_pair() -> DensityOperator {
    haar(4, 0).partial_trace(&[0, 2]).expect("valid pair")
}

pub fn dicke_pair(n: usize) -> DensityOperator {
    dicke(n, n / 2).expect("valid Dicke state").partial_trace(&[0, 1]).expect("valid pair")
}
