use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector must have at least one entry")]
    EmptyVector,
    #[error("component count must be at least 1")]
    ZeroComponents,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("mean photon number must be non-negative, got {0}")]
    NegativeMean(f64),
    #[error("circle radius must be non-zero")]
    ZeroAmplitude,
    #[error("rotation label q={q} out of range for N={n}")]
    LabelOutOfRange { q: usize, n: usize },
    #[error("matrix is not Hermitian (asymmetry {0:e})")]
    NotHermitian(f64),
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("density matrix has eigenvalue {0:e} below the clipping threshold")]
    NegativeEigenvalue(f64),
    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),
    #[error("Fock cutoff {cutoff} below required {required}")]
    CutoffTooSmall { cutoff: usize, required: usize },
    #[error("state is not normalized (squared norm {0})")]
    NotNormalized(f64),
    #[error("residue weight underflowed for q={0}")]
    Underflow(usize),
    #[error("amplitude {0} outside the range 0 < |alpha0| <= 4 where the bound is established")]
    OutsideVerifiedRange(f64),
    #[error("invalid state descriptor: {0}")]
    Descriptor(String),
}
