use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("invalid sign {0}, expected 1 or -1")]
    InvalidSign(i64),

    #[error("switching vector has length {got}, graph has {expected} vertices")]
    SwitchLength { expected: usize, got: usize },

    #[error("basis vector {0:?} is the zero vector")]
    ZeroBasisVector(String),

    #[error("basis vector {0} appears twice")]
    DuplicateBasisVector(String),

    #[error("basis vector {vector} has length {got}, expected {expected}")]
    BasisVectorLength { vector: String, expected: usize, got: usize },

    #[error("basis does not cover coordinate {0}")]
    SupportViolation(usize),

    #[error("malformed basis: {0}")]
    BasisSyntax(String),

    #[error("product needs at least one factor")]
    EmptyFactors,

    #[error("basis has {basis} coordinates but {factors} factors were given")]
    FactorCount { basis: usize, factors: usize },

    #[error("p = {p} is outside 1..={nu}")]
    PRange { p: usize, nu: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("invalid family parameters: {0}")]
    FamilyParams(String),

    #[error("cannot parse family string {input:?}: {reason}")]
    FamilySyntax { input: String, reason: String },

    #[error("underlying graph is not regular")]
    NotRegular,

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors raised by numerical routines rather than by bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NoConvergence { .. })
    }
}
