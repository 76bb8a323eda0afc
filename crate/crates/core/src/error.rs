use thiserror::Error;

use crate::poset::PosetViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("empty chain has no maximum")]
    EmptyChain,

    #[error("not extending the maximum: {value} <= {max}")]
    NotExtendingMax { max: u32, value: u32 },

    #[error("invalid poset: {0}")]
    InvalidPoset(PosetViolation),

    #[error("oracle budget exceeded: more than {limit} chains or {max_elements} elements")]
    OracleBudget { limit: u64, max_elements: usize },

    #[error("hom enumeration budget exceeded: {p}^{dim} > {budget}")]
    HomBudget { p: u32, dim: usize, budget: u64 },

    #[error("enumeration budget exceeded at dimension vector {dims:?}: {p}^{entries} > {budget}")]
    EnumerationBudget {
        dims: Vec<usize>,
        p: u32,
        entries: usize,
        budget: u64,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("{0} is not a supported prime (2..=97)")]
    NotPrime(u32),

    #[error("invalid representation: {0}")]
    InvalidRep(String),

    #[error("representations {0:?} and {1:?} are isomorphic")]
    DuplicateIso(String, String),

    #[error("summand outside poset: no member isomorphic to a summand of dimension vector {0:?}")]
    SummandOutsidePoset(Vec<usize>),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{step}: {source}")]
    Step {
        step: String,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown {kind} {name:?}; available: {available}")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },
}

impl Error {
    /// Budget failures are reported separately from input errors.
    pub fn is_budget(&self) -> bool {
        match self {
            Error::Step { source, .. } => source.is_budget(),
            other => matches!(
                other,
                Error::OracleBudget { .. } | Error::HomBudget { .. } | Error::EnumerationBudget { .. }
            ),
        }
    }

    /// Wraps the error with the name of the step that produced it.
    pub fn during(self, step: impl Into<String>) -> Error {
        Error::Step {
            step: step.into(),
            source: Box::new(self),
        }
    }
}
