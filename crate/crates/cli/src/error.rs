use std::fmt;

/// Exit status 1: the input was well formed but the mathematics refused it.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status 2: bad flags, malformed expressions or malformed JSON.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "error: {m}"),
        }
    }
}

/// Wrap a library error as a domain error.
pub fn domain<E: fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

/// Wrap a parse failure as a usage error.
pub fn usage<E: fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}
