use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("a permutation needs at least one symbol")]
    Empty,
    #[error("expected {expected} symbols, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("symbol {value} at index {index} appears more than once")]
    DuplicateSymbol { index: usize, value: usize },
    #[error("symbol {value} at index {index} is outside 0..{n}")]
    SymbolOutOfRange {
        index: usize,
        value: usize,
        n: usize,
    },
    #[error("cannot combine permutations of lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("{what}: {detail}")]
    ParamOutOfRange { what: &'static str, detail: String },
    #[error(transparent)]
    Parse(#[from] ParseListError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("item {index} ({item:?}) is not a non-negative decimal integer")]
pub struct ParseListError {
    pub index: usize,
    pub item: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("value {0} is already present")]
    DuplicateInsert(usize),
    #[error("value {value} is outside the universe 0..{universe}")]
    OutsideUniverse { value: usize, universe: usize },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("representation vector is empty")]
    Empty,
    #[error("component a_{index} = {value} is outside 1..={max}")]
    InvalidRepVector {
        index: usize,
        value: usize,
        max: usize,
    },
    #[error(transparent)]
    Parse(#[from] ParseListError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("code length must be at least 2, got {0}")]
    InvalidLength(usize),
    #[error("message does not fit in the (n-1)! = {limit} message space of n = {n}")]
    MessageOutOfRange { n: usize, limit: String },
    #[error("digit a_{index} = {value} is outside 1..={max}")]
    DigitOutOfRange {
        index: usize,
        value: usize,
        max: usize,
    },
    #[error("expected {expected} data digits, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("received word has {found} symbols; expected {n} or {}", .n - 1)]
    WrongLength { n: usize, found: usize },
    #[error("received word is not a deletion of a length-{n} permutation: {source}")]
    InvalidSymbols { n: usize, source: PermError },
    #[error("full-length word {word} has parity residue {residue}, not {t} (mod {n})")]
    NotACodeword {
        word: String,
        residue: u64,
        t: usize,
        n: usize,
    },
    #[error("parity profile hit residue {t} (mod {n}) {hits} times; expected exactly once")]
    AmbiguousProfile { t: usize, n: usize, hits: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the exhaustive bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("code length must be at least 2, got {0}")]
    InvalidLength(usize),
}
