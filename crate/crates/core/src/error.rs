use alloc::string::String;
use thiserror::Error;

use crate::root_data::AffineType;

/// Error type shared across the library.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown affine type tag `{0}` (expected A2~, C2~, G2~ or A1~)")]
    UnknownTypeTag(String),

    #[error("operation not supported for type {0}")]
    UnsupportedType(AffineType),

    #[error("invalid generator {letter} (generators are 0..{count})")]
    InvalidGenerator { letter: u8, count: usize },

    #[error("fold index {index} out of range 1..={len}")]
    FoldIndexOutOfRange { index: usize, len: usize },

    #[error("subword oracle cap exceeded: word length {length} > cap {cap}")]
    OracleCapExceeded { length: usize, cap: usize },

    #[error("folding sweep cap exceeded: word length {length} > cap {cap}")]
    FoldingCapExceeded { length: usize, cap: usize },

    #[error("annex frontier reached length {reached} past safety cap {cap}; this indicates an internal bug")]
    AnnexCapExceeded { reached: usize, cap: usize },

    #[error("hyperplanes are not parallel")]
    NotParallel,

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotMet(&'static str),
}
