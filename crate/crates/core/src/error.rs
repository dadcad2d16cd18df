use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands live in different variable universes")]
    UniverseMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable universe: {0}")]
    InvalidUniverse(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("generator `{0}` is not bihomogeneous")]
    NotBihomogeneous(String),

    #[error("ideal still carries parameter variables: {0}")]
    ParametersPresent(String),

    #[error("the ideal is the whole ring; dimension is undefined")]
    UnitIdeal,

    #[error("need at least {need} consecutive Hilbert function values, have {have}")]
    InsufficientSamples { need: usize, have: usize },

    /// The trailing samples do not lie on a polynomial of the allowed degree.
    /// Carries `(t, value)` for every sample in the table.
    #[error("Hilbert function did not stabilize within the sampled range (degree bound {dim_bound})")]
    NoStabilization {
        dim_bound: usize,
        residuals: Vec<(u32, u64)>,
    },

    #[error("matrix is degenerate (zero determinant)")]
    Degenerate,

    #[error("torus element has a zero entry at position {0}")]
    ZeroTorusEntry(usize),

    #[error("invalid chart point: {0}")]
    InvalidChartPoint(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
