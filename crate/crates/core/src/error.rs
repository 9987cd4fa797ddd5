use crate::encode::EncodingId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// All literals of a clause were folded away.
    #[error("empty clause emitted; constant folding upstream is inconsistent")]
    EmptyClause,
    #[error("variable count overflow")]
    VarOverflow,
    #[error("{encoding} supports k=1 only (got k={k})")]
    UnsupportedBound { encoding: EncodingId, k: usize },
    #[error("invalid constraint: {0}")]
    InvalidConstraint(&'static str),
    #[error("n={n} exceeds the exhaustive oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("invalid pigeonhole instance: {0}")]
    InvalidInstance(&'static str),
}
