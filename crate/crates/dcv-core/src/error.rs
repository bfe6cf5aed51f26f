//! Error types shared across the library.

use thiserror::Error;

/// Errors produced by the estimation pipeline and its I/O surfaces.
#[derive(Debug, Error)]
pub enum DcvError {
    /// Input matrix contains NaN or infinite entries.
    #[error("input matrix contains non-finite entries")]
    NonFiniteInput,

    /// Input matrix has zero rows or zero columns.
    #[error("input matrix has zero rows or columns")]
    EmptyMatrix,

    /// Shapes or index ranges are inconsistent with the requested operation.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A loading matrix with working factor count `d` has effective rank
    /// below `d`, so projection leverages and least-squares scores are
    /// undefined for it.
    #[error("loading matrix is rank deficient: effective rank {rank} < working d {d}")]
    RankDeficient { rank: usize, d: usize },

    /// A leverage reached 1 within tolerance: the variable is fully
    /// determined by the loading subspace and its leave-variable-out
    /// prediction is undefined.
    #[error("leverage saturated at variable {variable}: w = {leverage}")]
    LeverageSaturated { variable: usize, leverage: f64 },

    /// Requested fold count is outside 2..=n.
    #[error("fold count K = {k} invalid for n = {n}: need 2 <= K <= n")]
    BadFoldCount { k: usize, n: usize },

    /// A numerical failure inside the cross-validation loop, annotated with
    /// the fold index and working factor count where it occurred.
    #[error("fold {fold}, d = {d}: {source}")]
    AtFold {
        fold: usize,
        d: usize,
        #[source]
        source: Box<DcvError>,
    },

    /// Malformed input file.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// No usable rows remain after cleaning.
    #[error("panel is empty after cleaning")]
    EmptyPanel,

    /// Invalid experiment or run configuration.
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl DcvError {
    /// Wraps a numerical error with the (fold, d) position where it arose.
    pub fn at_fold(self, fold: usize, d: usize) -> Self {
        DcvError::AtFold {
            fold,
            d,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, DcvError>;
