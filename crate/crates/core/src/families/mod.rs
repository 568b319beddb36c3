//! State families: Dicke, GHZ+W superpositions, Majumdar-Ghosh and Ising
//! ground states, SLOCC normal forms, random symmetric and Haar-random states.

mod rng;
mod slocc;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use rng::{complex_normal, standard_normal, RngStream};
pub use slocc::{slocc_class, slocc_random, PARAM_COUNTS};

use crate::error::{Error, Result};
use crate::qstate::{CMatrix, DensityOperator, PureState};

/// Largest register the constructors will build.
pub const MAX_FAMILY_QUBITS: usize = 20;

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooFewQubits { n_qubits: n, min });
    }
    if n > MAX_FAMILY_QUBITS {
        return Err(Error::TooManyQubits { n_qubits: n, cap: MAX_FAMILY_QUBITS });
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Unnormalized Dicke vector: ones on every basis index of Hamming weight `r`.
fn dicke_support(n: usize, r: usize) -> Vec<Complex64> {
    (0..1usize << n).map(|i| real(if i.count_ones() as usize == r { 1.0 } else { 0.0 })).collect()
}

/// Equal superposition of all `n`-qubit basis states with `r` ones.
pub fn dicke(n: usize, r: usize) -> Result<PureState> {
    if r > n {
        return Err(Error::InvalidExcitation { n, r });
    }
    check_n(n, 2)?;
    PureState::from_unnormalized(dicke_support(n, r))
}

/// Reduced state of `dicke(n, r)` on `k` qubits, built as the mixture
/// `Σ_i C(k,i) C(n−k, r−i) / C(n,r) |D^k_i⟩⟨D^k_i|`.
pub fn dicke_reduced(n: usize, r: usize, k: usize) -> Result<DensityOperator> {
    if r > n {
        return Err(Error::InvalidExcitation { n, r });
    }
    check_n(n, 2)?;
    if k == 0 || k >= n {
        return Err(Error::OutOfRange { what: "k", value: k as f64 });
    }
    let total = binomial(n, r);
    let mut m = CMatrix::zeros(1 << k);
    for i in 0..=k.min(r) {
        let weight = binomial(k, i) * binomial(n - k, r - i) / total;
        if weight == 0.0 {
            continue;
        }
        let norm = binomial(k, i);
        for x in (0..1usize << k).filter(|x| x.count_ones() as usize == i) {
            for y in (0..1usize << k).filter(|y| y.count_ones() as usize == i) {
                m[(x, y)] = real(weight / norm);
            }
        }
    }
    Ok(DensityOperator::from_parts_unchecked((0..k).collect(), m))
}

/// `α|0…0⟩ + β|1…1⟩ + γ|W_n⟩` with `β = √(1 − |α|² − |γ|²)` real.
pub fn ghz_w(n: usize, alpha: Complex64, gamma: Complex64) -> Result<PureState> {
    check_n(n, 2)?;
    let rest = 1.0 - alpha.norm_sqr() - gamma.norm_sqr();
    if rest < -1e-12 || !rest.is_finite() {
        return Err(Error::InvalidAmplitudes(format!(
            "|alpha|^2 + |gamma|^2 = {} exceeds 1",
            1.0 - rest
        )));
    }
    let beta = rest.max(0.0).sqrt();
    let mut amp = vec![Complex64::new(0.0, 0.0); 1 << n];
    amp[0] += alpha;
    amp[(1 << n) - 1] += real(beta);
    let w = gamma / (n as f64).sqrt();
    for q in 0..n {
        amp[1 << q] += w;
    }
    PureState::from_unnormalized(amp)
}

/// Generalized GHZ state `α|0…0⟩ + √(1−|α|²)|1…1⟩`.
pub fn gen_ghz(n: usize, alpha: Complex64) -> Result<PureState> {
    ghz_w(n, alpha, Complex64::new(0.0, 0.0))
}

/// Reduced `k`-qubit state of [`ghz_w`] in the orthonormal basis
/// `(|0…0⟩, |W_k⟩, |1…1⟩)`; entries are `⟨x|ρ|y⟩`. Needs `2 ≤ k ≤ n − 2`,
/// where the three vectors stay distinct and no coherence reaches `|1…1⟩`.
pub fn ghz_w_reduced(n: usize, alpha: Complex64, gamma: Complex64, k: usize) -> Result<[[Complex64; 3]; 3]> {
    check_n(n, 4)?;
    if k < 2 || k + 2 > n {
        return Err(Error::OutOfRange { what: "k", value: k as f64 });
    }
    let b2 = 1.0 - alpha.norm_sqr() - gamma.norm_sqr();
    if b2 < -1e-12 {
        return Err(Error::InvalidAmplitudes(format!("|alpha|^2 + |gamma|^2 = {} exceeds 1", 1.0 - b2)));
    }
    let (nf, kf) = (n as f64, k as f64);
    let zero = Complex64::new(0.0, 0.0);
    let off = alpha * gamma.conj() * (kf / nf).sqrt();
    Ok([
        [real(alpha.norm_sqr() + gamma.norm_sqr() * (nf - kf) / nf), off, zero],
        [off.conj(), real(gamma.norm_sqr() * kf / nf), zero],
        [zero, zero, real(b2.max(0.0))],
    ])
}

/// Werner parameter of the nearest-neighbour marginal of [`mg_ground`].
pub fn mg_werner_parameter(n: usize) -> f64 {
    let h = n as f64 / 2.0;
    (1.0 + 2f64.powf(h - 2.0)) / (1.0 + 2f64.powf(h - 1.0))
}

/// Closed forms for the Werner state `p |ψ⁻⟩⟨ψ⁻| + (1 − p) I/4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WernerForms {
    pub max_eigenvalue: f64,
    pub concurrence_sq: f64,
    pub negativity_sq: f64,
    pub discord: f64,
}

pub fn werner_closed_forms(p: f64) -> Result<WernerForms> {
    if !(-1.0 / 3.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange { what: "p", value: p });
    }
    let xlog = |x: f64| if x > 0.0 { x * x.log2() } else { 0.0 };
    let (minus, plus, prime) = (1.0 - p, 1.0 + p, 1.0 + 3.0 * p);
    Ok(WernerForms {
        max_eigenvalue: prime / 4.0,
        concurrence_sq: ((3.0 * p - 1.0) / 2.0).max(0.0).powi(2),
        negativity_sq: ((3.0 * p - 1.0) / 4.0).max(0.0).powi(2),
        discord: xlog(minus) / 4.0 - xlog(plus) / 2.0 + xlog(prime) / 4.0,
    })
}

/// Product of singlets `|01⟩ − |10⟩` on the given ordered site pairs.
fn dimer_product(n: usize, pairs: &[(usize, usize)]) -> Vec<Complex64> {
    let mut amp = vec![Complex64::new(0.0, 0.0); 1 << n];
    let bit = |q: usize| 1usize << (n - 1 - q);
    for choice in 0..1usize << pairs.len() {
        let mut index = 0;
        let mut sign = 1.0;
        for (p, &(x, y)) in pairs.iter().enumerate() {
            if (choice >> p) & 1 == 0 {
                index |= bit(y);
            } else {
                index |= bit(x);
                sign = -sign;
            }
        }
        amp[index] += real(sign);
    }
    amp
}

/// Majumdar-Ghosh ground state on a periodic chain: the normalized sum of the
/// two dimer coverings, pairing sites `(2i, 2i+1)` and `(2i, 2i−1)` (counted
/// from one) with a singlet `|0_{2i}1_{2i±1}⟩ − |1_{2i}0_{2i±1}⟩` on each pair.
pub fn mg_ground(n: usize) -> Result<PureState> {
    if n % 2 == 1 {
        return Err(Error::OddChainLength(n));
    }
    if n < 4 {
        return Err(Error::ChainTooShort { n, min: 4 });
    }
    check_n(n, 4)?;
    // Site s (1-based) is qubit s − 1.
    let plus: Vec<(usize, usize)> = (1..=n / 2).map(|i| ((2 * i - 1) % n, (2 * i) % n)).collect();
    let minus: Vec<(usize, usize)> = (1..=n / 2).map(|i| ((2 * i - 1) % n, (2 * i - 2) % n)).collect();
    let a = dimer_product(n, &plus);
    let b = dimer_product(n, &minus);
    PureState::from_unnormalized(a.iter().zip(&b).map(|(x, y)| x + y).collect())
}

/// Equal superposition of the configurations with `n(1−x)/2` ones.
pub fn ising_gas_ground(n: usize, x: f64) -> Result<PureState> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::OutOfRange { what: "x", value: x });
    }
    let ones = n as f64 * (1.0 - x) / 2.0;
    let r = ones.round();
    if (ones - r).abs() > 1e-9 {
        return Err(Error::NonIntegerOccupation { n, x });
    }
    dicke(n, r as usize)
}

/// Ising-ring ground state: the kink sum
/// `Σ_{k=0}^{n−1} |0^{n−k}1^k⟩ + |1^{n−k}0^k⟩ + |1^{k+1}0^{n−k−1}⟩ + |0^{k+1}1^{n−k−1}⟩`
/// with repeated kets accumulated, then normalized.
pub fn ising_ring_ground(n: usize) -> Result<PureState> {
    if n < 4 {
        return Err(Error::ChainTooShort { n, min: 4 });
    }
    check_n(n, 4)?;
    let full = (1usize << n) - 1;
    // m leading zeros followed by ones, as a basis index.
    let zeros_then_ones = |m: usize| full >> m;
    let ones_then_zeros = |m: usize| full ^ (full >> m);
    let mut amp = vec![Complex64::new(0.0, 0.0); 1 << n];
    for k in 0..n {
        amp[zeros_then_ones(n - k)] += real(1.0);
        amp[ones_then_zeros(n - k)] += real(1.0);
        amp[ones_then_zeros(k + 1)] += real(1.0);
        amp[zeros_then_ones(k + 1)] += real(1.0);
    }
    PureState::from_unnormalized(amp)
}

/// Closed-form nearest-neighbour marginal of [`ising_ring_ground`].
pub fn ising_ring_pair_matrix(n: usize) -> CMatrix {
    let nf = n as f64;
    CMatrix::from_real_rows(&[
        &[nf - 1.0, 1.0, 1.0, 2.0],
        &[1.0, 1.0, 0.0, 1.0],
        &[1.0, 0.0, 1.0, 1.0],
        &[2.0, 1.0, 1.0, nf - 1.0],
    ])
    .scale(1.0 / (2.0 * nf))
}

/// Largest eigenvalue of [`ising_ring_pair_matrix`].
pub fn ising_ring_b(n: usize) -> f64 {
    let nf = n as f64;
    (nf + 2.0 + (nf * nf + 16.0).sqrt()) / (4.0 * nf)
}

/// Symmetric state `Σ_r a_r |D^n_r⟩` with complex Gaussian `a_r`, normalized.
pub fn symmetric_random(n: usize, stream: RngStream) -> Result<PureState> {
    check_n(n, 2)?;
    let mut rng = stream.rng();
    let coeffs: Vec<Complex64> = (0..=n)
        .map(|r| complex_normal(&mut rng) / binomial(n, r).sqrt())
        .collect();
    let amp = (0..1usize << n).map(|i| coeffs[i.count_ones() as usize]).collect();
    PureState::from_unnormalized(amp)
}

/// Haar-random pure state from a normalized complex Gaussian vector.
pub fn haar_random(n: usize, stream: RngStream) -> Result<PureState> {
    check_n(n, 2)?;
    let mut rng = stream.rng();
    PureState::from_unnormalized((0..1usize << n).map(|_| complex_normal(&mut rng)).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum Family {
    Dicke { n: usize, r: usize },
    GhzW { n: usize, alpha: Complex64, gamma: Complex64 },
    GenGhz { n: usize, alpha: Complex64 },
    Mg { n: usize },
    IsingGas { n: usize, x: f64 },
    IsingRing { n: usize },
    /// A fixed normal form; classes 7 to 9 take no parameters.
    Slocc { class: u8, params: Vec<Complex64> },
    /// A parameterized class (1 to 6) with random parameters.
    SloccRandom { class: u8 },
    SymmetricRandom { n: usize },
    HaarRandom { n: usize },
}

impl Family {
    pub fn n_qubits(&self) -> usize {
        match *self {
            Family::Dicke { n, .. }
            | Family::GhzW { n, .. }
            | Family::GenGhz { n, .. }
            | Family::Mg { n }
            | Family::IsingGas { n, .. }
            | Family::IsingRing { n }
            | Family::SymmetricRandom { n }
            | Family::HaarRandom { n } => n,
            Family::Slocc { .. } | Family::SloccRandom { .. } => 4,
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, Family::SloccRandom { .. } | Family::SymmetricRandom { .. } | Family::HaarRandom { .. })
    }

    /// Builds the state; random families draw from `stream`, the rest ignore it.
    pub fn build(&self, stream: RngStream) -> Result<PureState> {
        match self {
            Family::Dicke { n, r } => dicke(*n, *r),
            Family::GhzW { n, alpha, gamma } => ghz_w(*n, *alpha, *gamma),
            Family::GenGhz { n, alpha } => gen_ghz(*n, *alpha),
            Family::Mg { n } => mg_ground(*n),
            Family::IsingGas { n, x } => ising_gas_ground(*n, *x),
            Family::IsingRing { n } => ising_ring_ground(*n),
            Family::Slocc { class, params } => slocc_class(*class, params),
            Family::SloccRandom { class } => slocc_random(*class, stream),
            Family::SymmetricRandom { n } => symmetric_random(*n, stream),
            Family::HaarRandom { n } => haar_random(*n, stream),
        }
    }

    /// Checks parameters without building a state.
    pub fn validate(&self) -> Result<()> {
        match self {
            Family::SloccRandom { class } if !(1..=6).contains(class) => Err(Error::InvalidClass(*class)),
            _ => self.build(RngStream::new(0, 0)).map(|_| ()),
        }
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Parses `1.5`, `-2`, `0.3+0.4i`, `0.3-1e-2i` or `2i`.
fn parse_complex(s: &str) -> Option<Complex64> {
    let s = s.trim();
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().ok().map(real);
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&i| {
        (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E')
    });
    match split {
        Some(i) => {
            let re = body[..i].parse::<f64>().ok()?;
            let im = match &body[i..] {
                "+" => 1.0,
                "-" => -1.0,
                t => t.parse::<f64>().ok()?,
            };
            Some(Complex64::new(re, im))
        }
        None => {
            let im = match body {
                "" | "+" => 1.0,
                "-" => -1.0,
                t => t.parse::<f64>().ok()?,
            };
            Some(Complex64::new(0.0, im))
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Dicke { n, r } => write!(f, "dicke:n={n},r={r}"),
            Family::GhzW { n, alpha, gamma } => {
                write!(f, "ghzw:n={n},alpha={},gamma={}", fmt_complex(*alpha), fmt_complex(*gamma))
            }
            Family::GenGhz { n, alpha } => write!(f, "genghz:n={n},alpha={}", fmt_complex(*alpha)),
            Family::Mg { n } => write!(f, "mg:n={n}"),
            Family::IsingGas { n, x } => write!(f, "isinggas:n={n},x={x}"),
            Family::IsingRing { n } => write!(f, "isingring:n={n}"),
            Family::Slocc { class, params } => {
                write!(f, "slocc:class={class}")?;
                for (name, p) in ["a", "b", "c", "d"].iter().zip(params) {
                    write!(f, ",{name}={}", fmt_complex(*p))?;
                }
                Ok(())
            }
            Family::SloccRandom { class } => write!(f, "slocc:class={class}"),
            Family::SymmetricRandom { n } => write!(f, "symmetric:n={n}"),
            Family::HaarRandom { n } => write!(f, "haar:n={n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `name:key=value,key=value`, e.g. `dicke:n=5,r=2`, `slocc:class=3`, `haar:n=4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidConfig(msg);
        let (name, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let mut kv: Vec<(String, String)> = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| bad(format!("expected key=value, got {item:?}")))?;
            let k = k.trim().to_ascii_lowercase();
            if kv.iter().any(|(seen, _)| *seen == k) {
                return Err(bad(format!("duplicate key {k:?}")));
            }
            kv.push((k, v.trim().to_string()));
        }
        let take = |kv: &mut Vec<(String, String)>, key: &str| -> Option<String> {
            kv.iter().position(|(k, _)| k == key).map(|i| kv.remove(i).1)
        };
        let need_usize = |kv: &mut Vec<(String, String)>, key: &str| -> Result<usize> {
            let v = take(kv, key).ok_or_else(|| bad(format!("{name}: missing {key}")))?;
            v.parse().map_err(|_| bad(format!("{name}: {key}={v:?} is not a non-negative integer")))
        };
        let need_complex = |kv: &mut Vec<(String, String)>, key: &str, default: Option<Complex64>| -> Result<Complex64> {
            match take(kv, key) {
                Some(v) => parse_complex(&v).ok_or_else(|| bad(format!("{name}: {key}={v:?} is not a number"))),
                None => default.ok_or_else(|| bad(format!("{name}: missing {key}"))),
            }
        };

        let family = match name.to_ascii_lowercase().as_str() {
            "dicke" => Family::Dicke { n: need_usize(&mut kv, "n")?, r: need_usize(&mut kv, "r")? },
            "ghzw" | "ghz_w" => Family::GhzW {
                n: need_usize(&mut kv, "n")?,
                alpha: need_complex(&mut kv, "alpha", None)?,
                gamma: need_complex(&mut kv, "gamma", None)?,
            },
            "genghz" | "gen_ghz" => Family::GenGhz {
                n: need_usize(&mut kv, "n")?,
                alpha: need_complex(&mut kv, "alpha", Some(real(std::f64::consts::FRAC_1_SQRT_2)))?,
            },
            "mg" => Family::Mg { n: need_usize(&mut kv, "n")? },
            "isinggas" | "ising_gas" => {
                let n = need_usize(&mut kv, "n")?;
                let x = need_complex(&mut kv, "x", Some(real(0.0)))?;
                if x.im != 0.0 {
                    return Err(bad("isinggas: x must be real".into()));
                }
                Family::IsingGas { n, x: x.re }
            }
            "isingring" | "ising_ring" => Family::IsingRing { n: need_usize(&mut kv, "n")? },
            "slocc" => {
                let class: u8 = need_usize(&mut kv, "class")?
                    .try_into()
                    .map_err(|_| bad("slocc: class out of range".into()))?;
                let mut params = Vec::new();
                for key in ["a", "b", "c", "d"] {
                    if let Some(v) = take(&mut kv, key) {
                        params.push(parse_complex(&v).ok_or_else(|| bad(format!("slocc: {key}={v:?} is not a number")))?);
                    }
                }
                if params.is_empty() && (1..=6).contains(&class) {
                    Family::SloccRandom { class }
                } else {
                    Family::Slocc { class, params }
                }
            }
            "symmetric" | "sym" => Family::SymmetricRandom { n: need_usize(&mut kv, "n")? },
            "haar" | "gen" => Family::HaarRandom { n: need_usize(&mut kv, "n")? },
            other => return Err(bad(format!("unknown family {other:?}"))),
        };
        if let Some((k, _)) = kv.first() {
            return Err(bad(format!("{name}: unexpected key {k:?}")));
        }
        family.validate()?;
        Ok(family)
    }
}

/// A family together with the seed for its random draws.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(family: Family, seed: u64) -> Self {
        Self { family, seed }
    }

    /// The `index`-th member of a sample; `index` selects the random stream.
    pub fn state(&self, index: u64) -> Result<PureState> {
        self.family.build(RngStream::new(self.seed, index))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn dicke_examples() {
        let w = dicke(3, 1).unwrap();
        let expected = PureState::from_real(&[0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(max_diff(w.amplitudes(), expected.amplitudes()) < 1e-15);
        assert_eq!(dicke(4, 0).unwrap(), PureState::basis(4, 0).unwrap());
        let d = dicke(4, 2).unwrap();
        let nz: Vec<f64> = d.amplitudes().iter().filter(|a| a.norm() > 0.0).map(|a| a.re).collect();
        assert_eq!(nz.len(), 6);
        assert!(nz.iter().all(|&x| (x - 1.0 / 6f64.sqrt()).abs() < 1e-15));
        assert_eq!(dicke(3, 4), Err(Error::InvalidExcitation { n: 3, r: 4 }));
    }

    #[test]
    fn dicke_reduced_examples() {
        let r = dicke_reduced(3, 1, 1).unwrap();
        assert!(r.matrix().max_abs_diff(&CMatrix::diagonal(&[2.0 / 3.0, 1.0 / 3.0])) < 1e-15);
        let r = dicke_reduced(4, 2, 2).unwrap();
        assert!((r.spectrum().unwrap().max() - 2.0 / 3.0).abs() < 1e-12);
        let r = dicke_reduced(5, 0, 3).unwrap();
        assert!((r.matrix()[(0, 0)].re - 1.0).abs() < 1e-15);
        assert!(dicke_reduced(4, 2, 4).is_err());
    }

    #[test]
    fn ghz_w_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let g = ghz_w(4, real(h), real(0.0)).unwrap();
        assert!((g.amplitudes()[0].re - h).abs() < 1e-15 && (g.amplitudes()[15].re - h).abs() < 1e-15);
        let w = ghz_w(3, real(0.0), real(1.0)).unwrap();
        assert!(max_diff(w.amplitudes(), dicke(3, 1).unwrap().amplitudes()) < 1e-15);
        let s = ghz_w(4, real(0.6), real(0.5)).unwrap();
        assert!((s.amplitudes()[15].re - (1.0f64 - 0.36 - 0.25).sqrt()).abs() < 1e-15);
        assert!(matches!(ghz_w(4, real(0.9), real(0.9)), Err(Error::InvalidAmplitudes(_))));
    }

    #[test]
    fn werner_forms() {
        let f = werner_closed_forms(0.6).unwrap();
        assert!((f.concurrence_sq - 0.16).abs() < 1e-15);
        assert!((f.negativity_sq - 0.04).abs() < 1e-15);
        assert!((f.max_eigenvalue - 0.7).abs() < 1e-15);
        let g = werner_closed_forms(0.2).unwrap();
        assert_eq!((g.concurrence_sq, g.negativity_sq), (0.0, 0.0));
        assert!(werner_closed_forms(0.0).unwrap().discord.abs() < 1e-15);
        assert!((werner_closed_forms(1.0).unwrap().discord - 1.0).abs() < 1e-15);
        assert!(werner_closed_forms(1.5).is_err());
    }

    #[test]
    fn mg_errors_and_p() {
        assert_eq!(mg_ground(5), Err(Error::OddChainLength(5)));
        assert_eq!(mg_ground(2), Err(Error::ChainTooShort { n: 2, min: 4 }));
        assert!((mg_werner_parameter(4) - 2.0 / 3.0).abs() < 1e-15);
        assert!((mg_werner_parameter(6) - 0.6).abs() < 1e-15);
        assert!((mg_werner_parameter(8) - 5.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn ising_gas_examples() {
        assert_eq!(ising_gas_ground(4, 0.0).unwrap(), dicke(4, 2).unwrap());
        assert_eq!(ising_gas_ground(4, 0.5).unwrap(), dicke(4, 1).unwrap());
        assert_eq!(ising_gas_ground(4, 1.0).unwrap(), PureState::basis(4, 0).unwrap());
        assert!(matches!(ising_gas_ground(4, 0.3), Err(Error::NonIntegerOccupation { .. })));
        assert!(matches!(ising_gas_ground(4, -0.5), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn ising_ring_support() {
        let psi = ising_ring_ground(4).unwrap();
        assert_eq!(psi.amplitudes().iter().filter(|a| a.norm() > 0.0).count(), 8);
        assert_eq!(ising_ring_ground(3), Err(Error::ChainTooShort { n: 3, min: 4 }));
    }

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("0.5"), Some(real(0.5)));
        assert_eq!(parse_complex("0.3+0.4i"), Some(Complex64::new(0.3, 0.4)));
        assert_eq!(parse_complex("-1e-2-2i"), Some(Complex64::new(-0.01, -2.0)));
        assert_eq!(parse_complex("2i"), Some(Complex64::new(0.0, 2.0)));
        assert_eq!(parse_complex("1e+2"), Some(real(100.0)));
        assert_eq!(parse_complex("x"), None);
    }

    #[test]
    fn dotted_syntax_round_trip() {
        for s in [
            "dicke:n=5,r=2",
            "ghzw:n=4,alpha=0.6,gamma=0.5-0.1i",
            "genghz:n=4,alpha=0.8",
            "mg:n=6",
            "isinggas:n=4,x=0.5",
            "isingring:n=5",
            "slocc:class=3",
            "slocc:class=7",
            "slocc:class=6,a=0.5+1i",
            "symmetric:n=5",
            "haar:n=4",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("dicke:n=5".parse::<Family>().is_err());
        assert!("dicke:n=5,r=2,q=1".parse::<Family>().is_err());
        assert!("nope:n=1".parse::<Family>().is_err());
        assert_eq!("slocc:class=2".parse::<Family>().unwrap(), Family::SloccRandom { class: 2 });
    }

    #[test]
    fn spec_json_shape() {
        let spec = FamilySpec::new(Family::Dicke { n: 5, r: 2 }, 42);
        let json = serde_json::to_value(&spec).unwrap();
        assert_eq!(json["family"], "dicke");
        assert_eq!(json["params"]["n"], 5);
        assert_eq!(json["seed"], 42);
        let back: FamilySpec = serde_json::from_value(json).unwrap();
        assert_eq!(back, spec);
        let parsed: FamilySpec = serde_json::from_str(r#"{"family":"haar_random","params":{"n":4}}"#).unwrap();
        assert_eq!(parsed, FamilySpec::new(Family::HaarRandom { n: 4 }, 0));
    }

    #[test]
    fn random_families_are_deterministic() {
        let spec = FamilySpec::new(Family::HaarRandom { n: 3 }, 9);
        assert_eq!(spec.state(5).unwrap(), spec.state(5).unwrap());
        assert_ne!(spec.state(5).unwrap(), spec.state(6).unwrap());
        let spec = FamilySpec::new(Family::SymmetricRandom { n: 4 }, 9);
        assert_eq!(spec.state(1).unwrap(), spec.state(1).unwrap());
    }
}
