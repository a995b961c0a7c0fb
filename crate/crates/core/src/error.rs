use thiserror::Error;

/// Library-wide error type. Parse diagnostics carry a byte offset into the
/// source so the CLI can point at the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("negative exponent at offset {offset}")]
    NegativeExponent { offset: usize },
    #[error("family has no t^0 part (an `f:` block or a constant-in-t term is required)")]
    TDegreeZeroMissing,
    #[error("family declares no equation")]
    EmptyFamily,
    #[error("deformation g[{k}] does not vanish at the origin")]
    DeformationConstantTerm { k: u32 },
    #[error("zero polynomial has no initial form")]
    ZeroPolynomial,
    #[error("zero germ")]
    ZeroGerm,
    #[error("germ does not vanish at the origin")]
    DoesNotVanishAtOrigin,
    #[error("generators must be homogeneous")]
    NonHomogeneousInput,
    #[error("arc has {got} components but the ring needs {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("the special member F(.,0) has a non-isolated singularity")]
    NonIsolatedAtZero,
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
