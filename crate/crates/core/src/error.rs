use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic operations of this crate.
///
/// Law *failures* are never errors: checkers return them as [`crate::report::Report`]
/// lines. Errors are reserved for malformed input and precondition violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two elements that must live in the same arity do not.
    ArityMismatch { left: usize, right: usize },
    /// A list argument has the wrong length.
    LengthMismatch { expected: usize, found: usize },
    /// A one-line permutation image is not a bijection.
    NotABijection(String),
    /// A token could not be parsed.
    Parse { position: usize, token: String, reason: &'static str },
    /// A braid letter is zero or out of range for the strand count.
    GeneratorOutOfRange { position: usize, letter: i64, strands: usize },
    /// A composite would exceed the configured arity bound.
    ArityOverflow { arity: usize, bound: usize },
    /// A composition table entry is missing.
    MissingComposite(String),
    /// A label is not part of the collection or operad.
    UnknownLabel(String),
    /// The operation needs to enumerate a group that is infinite.
    InfiniteGroup(&'static str),
    /// A table would be too large to materialize.
    TooLarge { requested: u128, limit: u128 },
    /// Structured data failed validation.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ArityMismatch { left, right } => {
                write!(f, "arity mismatch: {left} vs {right}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected a list of length {expected}, found {found}")
            }
            Error::NotABijection(msg) => write!(f, "not a permutation: {msg}"),
            Error::Parse { position, token, reason } => {
                write!(f, "token {position} ({token:?}): {reason}")
            }
            Error::GeneratorOutOfRange { position, letter, strands } => write!(
                f,
                "token {position}: generator {letter} is not valid on {strands} strands"
            ),
            Error::ArityOverflow { arity, bound } => {
                write!(f, "arity {arity} exceeds the bound {bound}")
            }
            Error::MissingComposite(what) => write!(f, "missing composite: {what}"),
            Error::UnknownLabel(label) => write!(f, "unknown label {label}"),
            Error::InfiniteGroup(name) => {
                write!(f, "cannot enumerate the infinite group family {name}")
            }
            Error::TooLarge { requested, limit } => {
                write!(f, "table of size {requested} exceeds the limit {limit}")
            }
            Error::Invalid(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
