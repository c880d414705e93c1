use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library reports.
///
/// The CLI maps [`Error::is_domain`] errors to exit status 3 and the rest to 2.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("generator {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i64, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("object mismatch: {left} vs {right}")]
    ObjectMismatch { left: usize, right: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate configuration: points {i} and {j} are within {tol:e}")]
    Degenerate { i: usize, j: usize, tol: f64 },
    #[error("loop resolution too coarse at frame {frame}: {reason}")]
    ResolutionTooCoarse { frame: usize, reason: String },
    #[error("loop is not generic after {attempts} perturbation attempts")]
    NonGeneric { attempts: usize },
    #[error("truncation mismatch: K={left} vs K={right}")]
    TruncationMismatch { left: u32, right: u32 },
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Errors caused by geometrically degenerate input rather than malformed syntax.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Degenerate { .. } | Error::ResolutionTooCoarse { .. } | Error::NonGeneric { .. }
        )
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
