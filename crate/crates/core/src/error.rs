//! Error types shared across the crate.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("config error: {0}")]
    Config(String),

    #[error("value out of range: {0}")]
    Range(String),

    #[error("bad argument: {0}")]
    Argument(String),

    #[error("{path}: not a detector stream file (bad magic)")]
    BadMagic { path: PathBuf },

    #[error("{path}: unsupported format version {found} (expected {expected})")]
    BadVersion {
        path: PathBuf,
        found: u32,
        expected: u32,
    },

    #[error("truncated payload at byte offset {offset}")]
    Truncated { offset: u64 },

    #[error("corrupt word {word:#010x} at byte offset {offset}")]
    CorruptWord { word: u32, offset: u64 },

    #[error("block overflow: {dropped} words beyond block_len {block_len}")]
    BlockOverflow { dropped: u64, block_len: u32 },

    #[error("no calibration for pixel {pixel}")]
    CalibrationCoverage { pixel: u16 },

    #[error("fit failed: {0}")]
    FitFailed(String),

    #[error("no aggressor pixel passes the DCR threshold of {threshold_cps} cps")]
    NoAggressors { threshold_cps: f64 },

    #[error("histogram window too narrow for a background sideband at 10 sigma")]
    WindowTooNarrow,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 config, 3 data/format, 4 fit failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::FitFailed(_) => 4,
            _ => 3,
        }
    }
}
