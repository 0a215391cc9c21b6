use thiserror::Error;

/// Errors raised by constructors and verdict-producing operations.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    /// A matrix or parameter contains a NaN or infinity.
    #[error("non-finite entry encountered")]
    NonFinite,

    /// Input fails the Hermiticity precondition `max |m - m†| <= 1e-12`.
    #[error("matrix is not Hermitian (entrywise defect {defect:e})")]
    NotHermitian {
        /// Largest entrywise modulus of `m - m†`.
        defect: f64,
    },

    /// A density matrix (or parameter set) does not have unit trace.
    #[error("trace is {trace} instead of 1")]
    TraceMismatch { trace: f64 },

    /// A density matrix has an eigenvalue below the PSD tolerance `-1e-10`.
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    /// A scalar parameter lies outside its documented range.
    #[error("{name} = {value} outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// The Jacobi eigensolver failed to reach the off-diagonal threshold
    /// within its sweep budget. Signals an internal numerical failure.
    #[error("eigensolver did not converge (off-diagonal norm {off_diagonal:e})")]
    NonConvergence { off_diagonal: f64 },

    /// Adaptive quadrature exhausted its refinement budget before reaching
    /// the requested relative error.
    #[error("quadrature failed to converge (error estimate {error_estimate:e})")]
    QuadratureFailure { error_estimate: f64 },

    /// A frame set must contain at least one frame.
    #[error("frame set is empty")]
    EmptyFrameSet,

    /// Frame rapidities must be strictly increasing.
    #[error("frame rapidities are not strictly increasing")]
    FramesNotSorted,
}

pub type Result<T> = core::result::Result<T, Error>;
