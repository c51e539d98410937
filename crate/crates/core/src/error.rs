use std::fmt;

use thiserror::Error;

/// Why a sign map failed chirotope validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    /// A triple carries sign 0.
    ZeroSign,
    /// A 4-subset forms a positive circuit (not realizable in the affine plane).
    Cyclic,
    /// A 5-subset restriction matches no realizable 5-point sign vector.
    NotRealizable,
}

/// The offending subset of a failed validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub subset: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::ZeroSign => "zero sign on triple",
            ViolationKind::Cyclic => "positive circuit on",
            ViolationKind::NotRealizable => "non-realizable restriction to",
        };
        write!(f, "{what} {:?}", self.subset)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("configuration is not generic: points {indices:?} are collinear or coincide")]
    NonGeneric { indices: Vec<usize> },

    #[error("record {record}: configuration is not generic: points {indices:?}")]
    NonGenericRecord { record: usize, indices: Vec<usize> },

    #[error("index {index} out of range for {n} points")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid chirotope: {0}")]
    InvalidChirotope(Violation),

    #[error("illegal flip of triple {triple:?}")]
    IllegalFlip { triple: [usize; 3] },

    #[error("points {pair:?} are not infinitesimally close")]
    NotClosePair { pair: [usize; 2] },

    #[error("cone {cone} out of range: point has {cones} cone pairs")]
    ConeOutOfRange { cone: usize, cones: usize },

    #[error("no placement satisfying the postcondition was found")]
    PlacementFailed,

    #[error("perturbation could not be certified within budget")]
    PerturbationFailed,

    #[error("rational approximation could not be certified within precision budget")]
    PrecisionExhausted,

    #[error("enumeration budget exceeded")]
    BudgetExceeded,

    #[error("malformed file: {0}")]
    MalformedFile(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
