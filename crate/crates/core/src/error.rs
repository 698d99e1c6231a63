use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field characteristic {0} (supported: 2, 3, 5, 7)")]
    UnsupportedField(u32),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field or ambient space mismatch")]
    AmbientMismatch,
    #[error("subspace is not an element of the Grassmannian: {0}")]
    NotInGrassmannian(String),
    #[error("star centre must have dimension {expected}, got {got}")]
    BadCentreDimension { expected: usize, got: usize },
    #[error("top carrier must have dimension {expected}, got {got}")]
    BadCarrierDimension { expected: usize, got: usize },
    #[error("not a flag M < N with dim M = n-1 and dim N = n+1")]
    BadFlag,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("pair (alpha | beta) does not have full row rank")]
    NotAdmissible,
    #[error("bad frame: {0}")]
    BadFrame(String),
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("subspaces are not mutually distant")]
    NotMutuallyDistant,
    #[error("at least three members are required")]
    TooFewMembers,
    #[error("members are not pairwise distant")]
    NotDistantClique,
    #[error("line is not a directrix of the regulus")]
    NotADirectrix,
    #[error("corrupt cache: {0}")]
    CorruptCache(String),
    #[error("bad configuration: {0}")]
    BadConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
