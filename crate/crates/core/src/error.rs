use alloc::string::String;
use core::fmt;

/// Location of a token in the parsed input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed input text.
    Syntax { message: String, span: SourceSpan },
    /// A construct that the selected dialect does not allow.
    Dialect { message: String, span: SourceSpan },
    /// The search unit handed to the engine is larger than the configured cap.
    CapExceeded { size: usize, cap: usize },
    /// Translation needs at least one ordered rule.
    DegenerateProgram,
    /// A construct outside the supported fragment.
    Unsupported(String),
    /// Non-ground statement that could not be instantiated.
    Grounding(String),
    /// An internal cross-check failed.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { message, span } => write!(f, "syntax error at {span}: {message}"),
            Error::Dialect { message, span } => write!(f, "dialect error at {span}: {message}"),
            Error::CapExceeded { size, cap } => {
                write!(f, "search unit of {size} atoms exceeds the cap of {cap}")
            }
            Error::DegenerateProgram => {
                f.write_str("program has no ordered rules; translation needs at least one")
            }
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::Grounding(what) => write!(f, "grounding failed: {what}"),
            Error::Inconsistent(what) => write!(f, "internal cross-check failed: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
