use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    IndexOutOfRange { index: usize, n_qubits: usize },
    #[error("keep set is empty")]
    EmptyKeepSet,
    #[error("qubit index {0} listed more than once")]
    DuplicateQubit(usize),
    #[error("amplitude vector of length {len} is not 2^{n_qubits}")]
    DimensionMismatch { len: usize, n_qubits: usize },
    #[error("state is not normalized (squared norm {norm_sq})")]
    NotNormalized { norm_sq: f64 },
    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("trace {trace} differs from one")]
    TraceNotOne { trace: f64 },
    #[error("matrix has eigenvalue {min_eigenvalue:e} below the PSD tolerance")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },
    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    EigenNoConvergence { sweeps: usize },
    #[error("expected a two-qubit operator, got {n_qubits} qubits")]
    NotTwoQubit { n_qubits: usize },
    #[error("{n_qubits} qubits exceeds the cap of {cap}")]
    TooManyQubits { n_qubits: usize, cap: usize },
    #[error("need at least {min} qubits, got {n_qubits}")]
    TooFewQubits { n_qubits: usize, min: usize },
    #[error("invalid excitation number r={r} for n={n}")]
    InvalidExcitation { n: usize, r: usize },
    #[error("invalid amplitudes: {0}")]
    InvalidAmplitudes(String),
    #[error("Majumdar-Ghosh chain length {0} must be even")]
    OddChainLength(usize),
    #[error("chain length {n} is shorter than {min}")]
    ChainTooShort { n: usize, min: usize },
    #[error("n(1±x)/2 is not an integer for n={n}, x={x}")]
    NonIntegerOccupation { n: usize, x: f64 },
    #[error("SLOCC class {class} takes {expected} parameters, got {got}")]
    WrongParamCount { class: u8, expected: usize, got: usize },
    #[error("SLOCC parameter {index} has negative real part")]
    NegativeRealPart { index: usize },
    #[error("SLOCC class {0} does not exist (valid: 1..=9, random: 1..=6)")]
    InvalidClass(u8),
    #[error("{what} = {value} is outside its domain")]
    OutOfRange { what: &'static str, value: f64 },
    #[error("beta is absent or non-positive; the residual H is undefined")]
    BetaUnavailable,
    #[error("measurement refinement did not converge within {iters} iterations")]
    OptimizerDiverged { iters: usize },
    #[error("invalid optimizer configuration: {0}")]
    InvalidConfig(String),
    #[error("correlation value {value:e} is negative beyond tolerance")]
    NegativeCorrelation { value: f64 },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
