use crate::numerics::QuadResult;

/// Errors raised by the numerical routines.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no convergence after {subdivisions} subdivisions (best {best:?})")]
    NoConvergence { best: QuadResult, subdivisions: usize },

    #[error("integrand returned a non-finite value at {point:?}")]
    NonFinite { point: Vec<f64> },

    #[error("pole: {0}")]
    Pole(String),

    #[error("inverse transform has imaginary residue {0:e}")]
    InversionResidue(f64),

    #[error("only {hits} paths exited at the conditioning point (need {needed}); increase paths or w")]
    TooFewHits { hits: usize, needed: usize },

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the command-line tool: 2 for usage errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            _ => 1,
        }
    }

    /// Short machine-readable reason tag.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::NoConvergence { .. } => "no_convergence",
            Error::NonFinite { .. } => "non_finite",
            Error::Pole(_) => "pole",
            Error::InversionResidue(_) => "inversion_residue",
            Error::TooFewHits { .. } => "too_few_hits",
            Error::Usage(_) => "usage",
            Error::Io(_) => "io",
            Error::Csv(_) => "csv",
            Error::Json(_) => "json",
        }
    }
}
