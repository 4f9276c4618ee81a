//! Crate-wide error type.

use thiserror::Error;

use crate::model::Violation;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or physically inconsistent input parameters.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A spec failed validation; every violated invariant is listed.
    #[error("invalid lattice spec: {})", format_violations(.0))]
    InvalidSpec(Vec<Violation>),

    /// Config file could not be parsed.
    #[error("config error: {0}")]
    Config(String),

    /// State-vector length does not match the lattice size.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Adaptive integrator step size underflowed (stiff problem).
    #[error("step size underflow at t = {t:.6e} (step {dt:.3e}); problem too stiff")]
    StepSizeUnderflow { t: f64, dt: f64 },

    /// A steady state was required but the iterate did not converge.
    #[error("steady state not converged: {0}")]
    NotConverged(String),

    /// Drift is unstable or marginal; fluctuation moments do not exist.
    #[error("dynamics not strictly stable: max Im lambda(H_N) = {max_im_lambda:.6e}")]
    Unstable { max_im_lambda: f64 },

    /// Mean-field amplitude vanishes where a quadrature phase is needed.
    #[error("zero amplitude at site {site}: quadrature phase undefined")]
    ZeroAmplitude { site: usize },

    /// Two bands coalesce on the momentum grid.
    #[error("exceptional point at transition: min band separation {min_separation:.3e}")]
    AtTransition { min_separation: f64 },

    /// Reference point sits on the spectral curve.
    #[error("reference point lies on the curve (distance {distance:.3e})")]
    OnCurve { distance: f64 },

    /// Winding sum is not close to an integer; the grid under-resolves the curve.
    #[error("winding defect {defect:.3e} exceeds tolerance; refine the grid")]
    WindingDefect { defect: f64 },

    /// Frequency quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e}")]
    QuadratureNonConvergence { achieved: f64, requested: f64 },

    /// Diffusion matrix has a negative eigenvalue beyond tolerance.
    #[error("invalid diffusion matrix: eigenvalue {eigenvalue:.6e} below -{tolerance:.3e}")]
    InvalidDiffusion { eigenvalue: f64, tolerance: f64 },

    /// A trajectory diverged during stochastic integration.
    #[error("stochastic trajectory diverged at step {step} (norm {norm:.3e})")]
    TrajectoryDiverged { step: usize, norm: f64 },

    /// Dense linear algebra backend failure.
    #[error("linear algebra error: {0}")]
    Linalg(String),

    /// Filesystem or serialization failure in artifact handling.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Linalg(e.to_string())
    }
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
