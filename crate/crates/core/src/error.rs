use thiserror::Error;

use crate::catalog::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown architecture `{0}`")]
    UnknownArchitecture(String),
    #[error("unknown grading scheme `{0}`")]
    UnknownScheme(String),
    #[error("unknown output format `{0}`")]
    UnknownFormat(String),
    #[error("unknown cost role `{0}`")]
    UnknownRole(String),
    #[error("unknown application id {0}")]
    UnknownApplication(u32),
    #[error("segment `{0}` is not in the catalog")]
    MissingSegment(String),
    #[error("bandwidth must be positive, got {0} bit/s")]
    NonPositiveBandwidth(i64),
    #[error("{0} must be non-negative")]
    NegativeInput(&'static str),
    #[error("in-house execution requires a mobile device, got {0:?}")]
    NotAMobileDevice(crate::catalog::NodeKind),
    #[error("invalid configuration:\n{}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("config parse error: {0}")]
    ConfigParse(String),
    #[error("unknown subscriber {0}")]
    UnknownImsi(String),
    #[error("malformed identifier: {0}")]
    MalformedIdentifier(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| format!("  - {x}"))
        .collect::<Vec<_>>()
        .join("\n")
}
