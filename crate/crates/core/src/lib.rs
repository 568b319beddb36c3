//! Monogamy of bipartite quantum correlations versus genuine multipartite
//! entanglement for few-qubit pure states.
//!
//! * [`qstate`]: states, reduced states, spectra, bipartitions.
//! * [`measures`]: squared concurrence, squared negativity, discord,
//!   work-deficit and entanglement of formation.
//! * [`monogamy`]: per-node monogamy scores and their minimum.
//! * [`ggm`]: generalized geometric measure with the best single-qubit and
//!   multi-qubit eigenvalues.
//! * [`bounds`]: the GGM bound functions, the violation conditions and a
//!   census over samples.
//! * [`families`]: Dicke, GHZ+W, Majumdar-Ghosh, Ising, SLOCC normal forms,
//!   random symmetric and Haar-random states.

pub mod bounds;
pub mod error;
pub mod families;
pub mod ggm;
pub mod measures;
pub mod monogamy;
pub mod qstate;

pub use bounds::{BoundVerdict, CensusRow, ProofRoute};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec, RngStream};
pub use ggm::GgmReport;
pub use measures::{MeasureKind, MeasurementSetting, OptimizerConfig, Paradigm};
pub use monogamy::MonogamyReport;
pub use qstate::{Bipartition, CMatrix, DensityOperator, PureState, Spectrum};

pub use num_complex::Complex64;
