use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("oracle entry {index}: {msg}")]
    Oracle { index: usize, msg: String },
    #[error("invalid --{flag}: {msg}")]
    Flag { flag: &'static str, msg: String },
    #[error("{var}: {msg}")]
    Env { var: &'static str, msg: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] intrinsic_core::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn flag(flag: &'static str, msg: impl Into<String>) -> Self {
        Error::Flag { flag, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
