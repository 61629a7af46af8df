use thiserror::Error;

/// Errors raised by the geometry, spectrum, dynamics and measure routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("naked singularity: spin {spin} exceeds mass {mass}")]
    NakedSingularity { mass: f64, spin: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("no dissipation: R undefined for the Boulware vacuum (A = B = 0)")]
    NoDissipation,

    #[error("degenerate null space of dimension {dimension}; supply a constraint")]
    DegenerateNullSpace { dimension: usize },

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// Domain errors describe inadmissible physical parameters rather than
    /// a failure of the numerics; sweeps record them per point.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NakedSingularity { .. } | Error::Domain(_) | Error::NoDissipation
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
