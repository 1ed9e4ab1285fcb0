use std::fmt;

use hypcm_core::domain::DomainId;

#[derive(Debug)]
pub enum Error {
    Core(hypcm_core::Error),
    UnknownCheck(String),
    Usage(String),
    Io(std::io::Error),
    Json(serde_json::Error),
    Csv(csv::Error),
}

impl Error {
    /// The violated domain, if this is a domain violation.
    pub fn domain(&self) -> Option<DomainId> {
        match self {
            Error::Core(hypcm_core::Error::DomainViolation { domain, .. }) => Some(*domain),
            _ => None,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Core(e) => write!(f, "{e}"),
            Error::UnknownCheck(s) => write!(f, "unknown check id `{s}`"),
            Error::Usage(s) => write!(f, "{s}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
            Error::Json(e) => write!(f, "json error: {e}"),
            Error::Csv(e) => write!(f, "csv error: {e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<hypcm_core::Error> for Error {
    fn from(e: hypcm_core::Error) -> Self {
        Error::Core(e)
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e)
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
