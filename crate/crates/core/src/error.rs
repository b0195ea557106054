use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("group order exceeds the limit of {limit}")]
    OrderExceeded { limit: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("generator images do not extend to a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("character table saturation stalled with {found} of {wanted} irreducibles")]
    SaturationStalled { found: usize, wanted: usize },
    #[error("character does not decompose integrally over the table: {0}")]
    DecompositionResidual(String),
    #[error("matrix set is not a Clifford generating set: {0}")]
    NotCliffordSet(String),
    #[error("reflection root is zero")]
    ZeroRoot,
    #[error("vector entry {0} is not an Eisenstein integer")]
    NotEisensteinIntegral(String),
    #[error("no table match: {0}")]
    NoMatch(String),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("element not contained in the ambient group")]
    ElementNotInAmbient,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cache corrupt: {0}")]
    CacheCorrupt(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
