use thiserror::Error;

use crate::elemset::MAX_ORDER;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {0} out of range: need 2 <= n <= {MAX_ORDER}")]
    BadOrder(usize),
    #[error("cannot enumerate order {0}: need 2 <= n <= {max}", max = crate::corpus::MAX_ENUMERATION_ORDER)]
    EnumerationOrder(usize),
    #[error("table has {got} entries, expected {expected}")]
    BadShape { expected: usize, got: usize },
    #[error("entry ({row}, {col}) = {value} is not an element index")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("element {0} is not an element index")]
    ElementOutOfRange(usize),
    #[error("not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("identity law fails at element {0}")]
    BadIdentity(usize),
    #[error("zero does not absorb element {0}")]
    BadZero(usize),
    #[error("identity and zero coincide")]
    OneEqualsZero,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("set is not a {0} ideal")]
    NotAnIdeal(&'static str),
    #[error("ideal is not proper")]
    NotProper,
    #[error("set is not a completely prime right ideal")]
    NotCompletelyPrime,
    #[error("set is not multiplicatively closed")]
    NotMultClosed,
    #[error("semigroup is not a right chain semigroup")]
    NotRightChain,
    #[error("no right waist two-sided ideal properly contains the given ideal")]
    NoWaistAbove,
    #[error("ideal enumeration exceeded the cap of {0}")]
    CapExceeded(usize),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("unknown corpus entry {0:?}")]
    UnknownCorpus(String),
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
