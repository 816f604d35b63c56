use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("relation is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("algebra collapses: a nonzero scalar lies in the ideal")]
    Collapse,

    #[error("degree {requested} exceeds the completion bound {bound}")]
    DegreeBound { requested: usize, bound: usize },

    #[error("not an AS regular algebra: {0}")]
    NotRegular(String),

    #[error("invalid Ore data: {0}")]
    Ore(String),

    #[error("unknown Hopf algebra id {0}")]
    UnknownHopf(u32),

    #[error("no catalog data for Hopf algebra #{0}: {1}")]
    Unsupported(u32, String),

    #[error("action does not define a module algebra: {0}")]
    NotModuleAlgebra(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("representation is not a direct sum of catalog simples: {0}")]
    Decomposition(String),

    #[error("claimed invariant is not invariant: {0}")]
    NotInvariant(String),

    #[error("twist failed: {0}")]
    Twist(String),

    #[error("unknown configuration key {0}")]
    UnknownKey(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Format(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
