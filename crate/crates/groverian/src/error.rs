use thiserror::Error;

/// Errors reported by state construction, linear algebra, and the measures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid register shape: n = {n} parties of dimension d = {d}")]
    InvalidDimensions { n: usize, d: usize },

    #[error("expected {expected} amplitudes (d^n), got {got}")]
    AmplitudeCount { expected: usize, got: usize },

    #[error("non-finite amplitude or matrix entry")]
    NonFinite,

    #[error("amplitude vector norm {norm:.3e} is numerically zero")]
    ZeroNorm { norm: f64 },

    #[error("amplitude vector norm {norm} deviates from 1 beyond the strict bound (pass normalize to rescale)")]
    NotNormalized { norm: f64 },

    #[error("operands have different register shapes")]
    ShapeMismatch,

    #[error("party index {party} out of range for {n} parties")]
    PartyOutOfRange { party: usize, n: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("operation requires a bipartite state, got n = {n}")]
    NotBipartite { n: usize },

    #[error("matrix is not unitary (max deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:.3e})")]
    NotPositive { eigenvalue: f64 },

    #[error("trace {trace} deviates from 1")]
    BadTrace { trace: f64 },

    #[error("matrix entries must be a {expected}x{expected} square, got {got} entries")]
    EntryCount { expected: usize, got: usize },

    #[error("closed form is defined for local dimension 3, got {d}")]
    NotQutritPair { d: usize },

    #[error("closed form requires real amplitudes (max imaginary part {max_imag:.3e})")]
    ComplexAmplitudes { max_imag: f64 },

    #[error("success probability {pmax} outside [0, 1]")]
    PmaxOutOfRange { pmax: f64 },

    #[error("marked-state count {marked} must satisfy 1 <= r < {space}")]
    BadMarkedCount { marked: u64, space: u64 },

    #[error("iteration count must be at least 1")]
    NoIterations,

    #[error("expected a qutrit vector of 3 components, got {got}")]
    QutritLength { got: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("state file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
