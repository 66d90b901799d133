//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes of the numerical layer.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    Domain(String),
    /// A q-Pochhammer factor in a series denominator vanished before the
    /// series terminated.
    VanishedDenominator { parameter: f64, index: usize },
    /// A tolerance-mode series or infinite product failed to meet its
    /// tolerance within the term cap.
    NonConvergent { terms: usize },
    /// A state was passed to a process whose state space excludes it.
    InvalidState(String),
    /// Duality kind incompatible with the supplied configurations/parameters.
    KindMismatch(String),
    /// Parameter required by the operation is absent from `ModelParams`.
    MissingParameter(&'static str),
    /// A finite-difference stencil would leave the state space and no
    /// analytic derivative provider was given.
    StencilOutOfDomain { site: usize },
    /// Euler-Maruyama step-halving retries were exhausted.
    DtCollapse { retries: u32 },
    /// Exact enumeration of a particle-number slice would exceed the cap.
    SliceTooLarge { states: u64 },
    /// Probe states produced a rank-deficient linear system.
    RankDeficient,
    /// Parameter regime precondition of an identity was violated.
    RegimeViolation(String),
    /// Convergence condition of a summation formula was violated.
    ConditionViolated(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::VanishedDenominator { parameter, index } => write!(
                f,
                "vanished denominator Pochhammer: parameter {parameter} at term {index}"
            ),
            Error::NonConvergent { terms } => {
                write!(f, "non-convergent after {terms} terms")
            }
            Error::InvalidState(msg) => write!(f, "invalid state: {msg}"),
            Error::KindMismatch(msg) => write!(f, "kind/param mismatch: {msg}"),
            Error::MissingParameter(name) => write!(f, "missing parameter: {name}"),
            Error::StencilOutOfDomain { site } => {
                write!(f, "finite-difference stencil leaves state space at site {site}")
            }
            Error::DtCollapse { retries } => {
                write!(f, "dt collapse after {retries} step halvings")
            }
            Error::SliceTooLarge { states } => {
                write!(f, "slice too large: {states} states")
            }
            Error::RankDeficient => write!(f, "rank-deficient probe set"),
            Error::RegimeViolation(msg) => write!(f, "regime violation: {msg}"),
            Error::ConditionViolated(msg) => write!(f, "condition violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
