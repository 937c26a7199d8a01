use goldroot::ErrorKind;
use thiserror::Error;

/// Process exit codes.
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_SCOPE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("mixed variables at byte {offset}: expected '{expected}', found '{found}'")]
    MixedVariables {
        offset: usize,
        expected: char,
        found: char,
    },
    #[error("exponent {exponent} at byte {offset} exceeds the maximum of 16")]
    ExponentTooLarge { offset: usize, exponent: u64 },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix with {rows} rows of {cols} entries is not square")]
    NonSquare { rows: usize, cols: usize },
    #[error("unsupported expression at byte {offset}: {message}")]
    OutOfScope { offset: usize, message: String },
    #[error("at byte {offset}: {source}")]
    Domain {
        offset: usize,
        source: goldroot::Error,
    },
}

impl ParseError {
    pub(crate) fn syntax(offset: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            offset,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            ParseError::OutOfScope { .. } => EXIT_SCOPE,
            ParseError::Domain { source, .. } => kind_code(source.kind()),
            _ => EXIT_PARSE,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Solve(#[from] goldroot::Error),
    #[error("invalid JSON input: {0}")]
    Json(String),
    #[error("reading standard input: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(e) => e.exit_code(),
            CliError::Solve(e) => kind_code(e.kind()),
            CliError::Json(_) | CliError::Io(_) => EXIT_PARSE,
        }
    }
}

fn kind_code(kind: ErrorKind) -> i32 {
    match kind {
        ErrorKind::Domain => EXIT_DOMAIN,
        ErrorKind::Scope => EXIT_SCOPE,
    }
}
