use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {0:?}: words are printable ASCII without whitespace")]
    InvalidSymbol(char),
    #[error("symbol {symbol:?} is not in alphabet {alphabet:?}")]
    NotInAlphabet { symbol: char, alphabet: String },
    #[error("alphabet must have 1..=26 distinct symbols, got {0:?}")]
    InvalidAlphabet(String),
    #[error("empty pattern")]
    EmptyPattern,
    #[error("length exceeds word: {len} > {word_len}")]
    LengthExceedsWord { len: usize, word_len: usize },
    #[error("difference profile undefined for ε")]
    DifferenceOfEmpty,
    #[error("period undefined for ε")]
    PeriodOfEmpty,
    #[error("trapezoid profile undefined for ε")]
    ProfileOfEmpty,
    #[error("balance defined for binary words")]
    NotBinary,
    #[error("profile not over {{0,1,2}}")]
    ProfileNotTernary,
    #[error("requires coprime parameters, got ({p}, {q})")]
    NotCoprime { p: u32, q: u32 },
    #[error("budget exceeded: {words} words requested, budget is {budget}")]
    BudgetExceeded { words: u128, budget: u64 },
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
}
