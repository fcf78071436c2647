use thiserror::Error;

/// Everything that can go wrong while building or transforming belief structures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BeliefError {
    #[error("frame must contain between 1 and {max} elements, got {got}")]
    FrameSize { got: usize, max: usize },

    #[error("frame label at position {index} is empty")]
    EmptyLabel { index: usize },

    #[error("duplicate frame label {label:?}")]
    DuplicateLabel { label: String },

    #[error("unknown label {label:?}")]
    UnknownLabel { label: String },

    #[error("subset {bits:#x} references elements outside a frame of {n} elements")]
    SubsetOutOfFrame { bits: u32, n: usize },

    #[error("set {set} appears more than once")]
    DuplicateSet { set: String },

    #[error("negative mass {mass} on {set}")]
    NegativeMass { set: String, mass: f64 },

    #[error("masses sum to {sum}, expected 1 within 1e-9")]
    MassSum { sum: f64 },

    #[error("closed-world mass function assigns {mass} to the empty set")]
    ClosedWorldEmptyMass { mass: f64 },

    #[error("population must be positive")]
    EmptyPopulation,

    #[error("counts sum to {sum}, but the population is {population}")]
    CountMismatch { sum: u64, population: u64 },

    #[error("count attached to the empty set")]
    EmptySetCount,

    #[error("total conflict: all mass ({conflict}) lies on the empty set")]
    TotalConflict { conflict: f64 },

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("operands are defined on different frames")]
    FrameMismatch,

    #[error("operation requires a normalized mass function, but m(empty) = {mass}")]
    NotNormalized { mass: f64 },

    #[error("operation requires a closed-world mass function")]
    OpenWorld,

    #[error("input is not a belief function: recovered mass {mass} on {set}")]
    NotBelief { set: String, mass: f64 },

    #[error("invalid belief table: {0}")]
    InvalidBelief(String),

    #[error("invalid coefficient matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid closest-world map: {0}")]
    InvalidClosestMap(String),

    #[error("frame of {n} elements is too large for vertex enumeration (max {max})")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("conditional is undefined: every credal vertex gives zero probability to {set}")]
    UndefinedConditional { set: String },

    #[error("malformed document: {0}")]
    Document(String),
}

impl BeliefError {
    /// `true` for failures of a well-formed request (no solution, conflict, ...),
    /// `false` for malformed input data.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            BeliefError::TotalConflict { .. }
                | BeliefError::NoSolution(_)
                | BeliefError::FrameMismatch
                | BeliefError::NotNormalized { .. }
                | BeliefError::OpenWorld
                | BeliefError::NotBelief { .. }
                | BeliefError::EnumerationTooLarge { .. }
                | BeliefError::UndefinedConditional { .. }
        )
    }
}

pub type Result<T, E = BeliefError> = std::result::Result<T, E>;
