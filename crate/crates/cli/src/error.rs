use std::fmt;

use serde::Serialize;

/// Failure of a CLI run; rendered as `{"code": …, "message": …}` on stderr.
#[derive(Debug)]
pub enum CliError {
    Core(group_sampler::Error),
    Usage(String),
    Io(String),
    Parse(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Usage(_) => "E_USAGE",
            CliError::Io(_) => "E_IO",
            CliError::Parse(_) => "E_PARSE",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Payload<'a> {
            code: &'a str,
            message: String,
        }
        serde_json::to_string(&Payload {
            code: self.code(),
            message: self.to_string(),
        })
        .expect("plain strings serialize")
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) | CliError::Io(m) | CliError::Parse(m) => f.write_str(m),
        }
    }
}

impl From<group_sampler::Error> for CliError {
    fn from(e: group_sampler::Error) -> Self {
        match e {
            group_sampler::Error::Parse(m) => CliError::Parse(m),
            other => CliError::Core(other),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
