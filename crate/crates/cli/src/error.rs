use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{flag}: {message}")]
    BadFlag { flag: &'static str, message: String },

    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Input {
        path: String,
        source: shiftbound::Error,
    },

    #[error("{0}")]
    Compute(shiftbound::Error),

    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn bad_flag(flag: &'static str, message: impl Into<String>) -> Self {
        Self::BadFlag {
            flag,
            message: message.into(),
        }
    }

    /// 2 for bad invocations or inputs, 1 for failures of the tool itself.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::BadFlag { .. } | Self::Read { .. } | Self::Input { .. } => 2,
            Self::Compute(shiftbound::Error::NoConvergence { .. }) => 1,
            Self::Compute(_) => 2,
            Self::Write { .. } => 1,
        }
    }
}

impl From<shiftbound::Error> for CliError {
    fn from(e: shiftbound::Error) -> Self {
        Self::Compute(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
