use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: |m[{row}][{col}] - conj(m[{col}][{row}])| = {deviation:e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("eigenvalue {value:e} is below the positivity threshold")]
    NegativeEigenvalue { value: f64 },

    #[error("Jacobi eigensolver did not converge (off-diagonal norm {off_norm:e})")]
    NoConvergence { off_norm: f64 },

    #[error("subsystem mask {mask:#05b} is invalid for a {qubits}-qubit operator")]
    InvalidMask { mask: u8, qubits: usize },

    #[error("expected a {expected}x{expected} matrix, got {found}x{found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("entropy function argument outside its domain: 1 + {eps} ± {x} < 0")]
    EntropyDomain { eps: f64, x: f64 },

    #[error("coefficient {field}[{index}] = {value} lies outside [-1, 1]")]
    ParameterOutOfRange { field: &'static str, index: usize, value: f64 },

    #[error("Werner-GHZ mixing weight {0} lies outside [0, 1]")]
    MixingOutOfRange(f64),

    #[error("not a unit vector: |z| = {0}")]
    NotUnitVector(f64),

    #[error("not a valid density matrix (min eigenvalue {min_eigenvalue:e}, trace deviation {trace_dev:e})")]
    InvalidState { min_eigenvalue: f64, trace_dev: f64 },

    #[error("parameters do not have the structure required by case {0}")]
    CaseNotApplicable(&'static str),

    #[error("invalid options: {0}")]
    InvalidOptions(&'static str),
}
