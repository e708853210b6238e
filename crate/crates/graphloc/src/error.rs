//! Crate-wide error type with stable machine-readable codes.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {lhs} vs {rhs}")]
    ShapeMismatch {
        op: &'static str,
        lhs: String,
        rhs: String,
    },

    #[error("top-k parameter k={k} out of range for {rows} rows")]
    KOutOfRange { k: usize, rows: usize },

    #[error("backward requires a 1x1 loss node, got {rows}x{cols}")]
    NonScalarLoss { rows: usize, cols: usize },

    #[error("video {0:?} has no segments")]
    EmptyVideo(String),

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("video {0:?} needs at least two segments to split foreground from background")]
    DegenerateVideo(String),

    #[error("training video carries no positive labels")]
    EmptyLabelSet,

    #[error("class {class} is not shared by both videos of a co-activity pair")]
    ClassNotShared { class: usize },

    #[error("{path}: bad magic, expected {expected:?}")]
    BadMagic { path: String, expected: &'static str },

    #[error("{path}: header promises {expected} payload bytes, file holds {found}")]
    Truncated {
        path: String,
        expected: u64,
        found: u64,
    },

    #[error("manifest schema: {0}")]
    Schema(String),

    #[error("infeasible synthesis spec: {0}")]
    InfeasibleSpec(String),

    #[error("no class has two or more videos; cannot build co-activity pairs")]
    NoPairableClass,

    #[error("training diverged at epoch {epoch}, iteration {iter}: {detail}")]
    Diverged {
        epoch: usize,
        iter: usize,
        detail: String,
    },

    #[error("degenerate interval [{start}, {end}]")]
    DegenerateInterval { start: f64, end: f64 },

    #[error("unknown video id {0:?}")]
    UnknownVideo(String),

    #[error("unknown class {0:?}")]
    UnknownClass(String),

    #[error("{path}: checkpoint format: {detail}")]
    CheckpointFormat { path: String, detail: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("gradient check failed: {0}")]
    GradCheck(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Stable code emitted on stderr by the CLI, one per variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ShapeMismatch { .. } => "shape-mismatch",
            Error::KOutOfRange { .. } => "k-out-of-range",
            Error::NonScalarLoss { .. } => "non-scalar-loss",
            Error::EmptyVideo(_) => "empty-video",
            Error::NonFinite(_) => "non-finite-input",
            Error::DegenerateVideo(_) => "degenerate-video",
            Error::EmptyLabelSet => "empty-label-set",
            Error::ClassNotShared { .. } => "class-not-shared",
            Error::BadMagic { .. } => "bad-magic",
            Error::Truncated { .. } => "truncated-file",
            Error::Schema(_) => "schema",
            Error::InfeasibleSpec(_) => "infeasible-spec",
            Error::NoPairableClass => "no-pairable-class",
            Error::Diverged { .. } => "diverged",
            Error::DegenerateInterval { .. } => "degenerate-interval",
            Error::UnknownVideo(_) => "unknown-video",
            Error::UnknownClass(_) => "unknown-class",
            Error::CheckpointFormat { .. } => "checkpoint-format",
            Error::Config(_) => "bad-config",
            Error::GradCheck(_) => "gradcheck-failed",
            Error::Io { .. } => "io",
        }
    }

    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
