//! Normal-form representatives of the nine four-qubit SLOCC classes.

use num_complex::Complex64;

use super::rng::{complex_normal, RngStream};
use crate::error::{Error, Result};
use crate::qstate::PureState;

/// Number of complex parameters of each class, indexed by `class − 1`.
pub const PARAM_COUNTS: [usize; 9] = [4, 3, 2, 2, 1, 1, 0, 0, 0];

fn idx(bits: &str) -> usize {
    usize::from_str_radix(bits, 2).expect("four-bit label")
}

/// Normalized `|G^class⟩`; parameters need non-negative real parts.
pub fn slocc_class(class: u8, params: &[Complex64]) -> Result<PureState> {
    if !(1..=9).contains(&class) {
        return Err(Error::InvalidClass(class));
    }
    let expected = PARAM_COUNTS[class as usize - 1];
    if params.len() != expected {
        return Err(Error::WrongParamCount { class, expected, got: params.len() });
    }
    if let Some(index) = params.iter().position(|p| p.re < 0.0 || !p.re.is_finite() || !p.im.is_finite()) {
        return Err(Error::NegativeRealPart { index });
    }

    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let mut amp = vec![Complex64::new(0.0, 0.0); 16];
    let mut add = |labels: &[&str], c: Complex64| {
        for l in labels {
            amp[idx(l)] += c;
        }
    };
    match class {
        1 => {
            let (a, b, c, d) = (params[0], params[1], params[2], params[3]);
            add(&["0000", "1111"], (a + d) / 2.0);
            add(&["0011", "1100"], (a - d) / 2.0);
            add(&["0101", "1010"], (b + c) / 2.0);
            add(&["0110", "1001"], (b - c) / 2.0);
        }
        2 => {
            let (a, b, c) = (params[0], params[1], params[2]);
            add(&["0000", "1111"], (a + b) / 2.0);
            add(&["0011", "1100"], (a - b) / 2.0);
            add(&["0101", "1010"], c);
            add(&["0110"], one);
        }
        3 => {
            let (a, b) = (params[0], params[1]);
            add(&["0000", "1111"], a);
            add(&["0101", "1010"], b);
            add(&["0110", "0011"], one);
        }
        4 => {
            let (a, b) = (params[0], params[1]);
            add(&["0000", "1111"], a);
            add(&["0101", "1010"], (a + b) / 2.0);
            add(&["0110", "1001"], (a - b) / 2.0);
            add(&["0001", "0010", "0111", "1011"], i / 2f64.sqrt());
        }
        5 => {
            let a = params[0];
            add(&["0000", "0101", "1010", "1111"], a);
            add(&["0001"], i);
            add(&["1011"], -i);
            add(&["0110"], one);
        }
        6 => {
            let a = params[0];
            add(&["0000", "1111"], a);
            add(&["0011", "0101", "0110"], one);
        }
        7 => add(&["0000", "0101", "1000", "1110"], one),
        8 => add(&["0000", "1011", "1101", "1110"], one),
        _ => add(&["0000", "1111"], one),
    }
    PureState::from_unnormalized(amp)
}

/// Random member of a parameterized class: each parameter has standard
/// normal real and imaginary parts, with the real part folded to `|Re|`.
pub fn slocc_random(class: u8, stream: RngStream) -> Result<PureState> {
    if !(1..=6).contains(&class) {
        return Err(Error::InvalidClass(class));
    }
    let mut rng = stream.rng();
    let params: Vec<Complex64> = (0..PARAM_COUNTS[class as usize - 1])
        .map(|_| {
            let z = complex_normal(&mut rng);
            Complex64::new(z.re.abs(), z.im)
        })
        .collect();
    slocc_class(class, &params)
}
