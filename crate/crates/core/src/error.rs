use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("unsupported matrix dimension {0} (only 2 and 4 are supported)")]
    UnsupportedDimension(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian (max |M - M^dagger| = {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("density matrix trace is {trace}, expected 1")]
    NotNormalized { trace: f64 },

    #[error("state vector norm squared is {norm_sqr}, expected 1")]
    NotUnitNorm { norm_sqr: f64 },

    #[error("eigenvalue {value:e} is below the roundoff floor")]
    NegativeEigenvalue { value: f64 },

    #[error("product spectrum has imaginary part {imag:e}")]
    ComplexEigenvalue { imag: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("mean photon number {value} is below the supported minimum {min}")]
    MeanPhotonTooSmall { value: f64, min: f64 },

    #[error("mixing parameter {0} is outside [0, 1]")]
    MixingOutOfRange(f64),

    #[error("concurrence {0} is outside [0, 1]")]
    ConcurrenceOutOfRange(f64),

    #[error("discord depends on the measurement phase (deviation {deviation:e}); state is outside the supported X-state class")]
    PhaseSensitive { deviation: f64 },
}
