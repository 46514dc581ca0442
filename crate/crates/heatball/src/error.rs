//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A result exceeded the representable range of the scalar type.
    #[error("overflow: {0}")]
    Overflow(String),

    /// No sign change could be established around the k-th root.
    #[error("failed to bracket root {index}: {detail}")]
    BracketFailure { index: usize, detail: String },

    /// A truncated spectral sum cannot meet the requested tolerance.
    #[error("insufficient modes: {available} available, {required} required for tol {tol:e}")]
    InsufficientModes {
        available: usize,
        required: usize,
        tol: f64,
    },

    /// Spectral sum evaluated left of its abscissa of convergence.
    #[error("zeta series diverges at s = {s} (requires s > -1/2)")]
    Divergence { s: f64 },

    /// Least-squares window with fewer samples than basis functions.
    #[error("rank-deficient fit window [{t_lo:e}, {t_hi:e}]: {samples} samples for {basis} basis functions")]
    RankDeficient {
        t_lo: f64,
        t_hi: f64,
        samples: usize,
        basis: usize,
    },

    /// A zeta special value or residue needed by a conversion is absent.
    #[error("missing zeta value at s = {s}")]
    MissingValue { s: f64 },

    /// An operation was called on data violating its stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Malformed file contents (CSV/JSON interchange).
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
