//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text input; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("width and height must be positive")]
    EmptyDims,

    #[error("{count} tiles do not fill a {width}x{height} board ({} cells)", width * height)]
    TileCount { count: usize, width: usize, height: usize },

    #[error("tiling is {got_w}x{got_h} but the instance is {want_w}x{want_h}")]
    DimensionMismatch { got_w: usize, got_h: usize, want_w: usize, want_h: usize },

    #[error("tiling does not use the instance's tile multiset")]
    MultisetMismatch,

    #[error("{cells} cells exceed the brute-force bound of {max}")]
    BruteForceBound { cells: usize, max: usize },

    #[error("{vars} variables exceed the oracle bound of {max}")]
    OracleBound { vars: usize, max: usize },

    #[error("assignment covers {got} variables, instance has {want}")]
    AssignmentLength { got: usize, want: usize },

    #[error("assignment is not 1-in-3: clause {clause} has {true_count} true occurrences")]
    NotOneInThree { clause: usize, true_count: usize },

    #[error("tiling does not encode a truth value for variable {var}: bottoms {got}")]
    CorruptWitness { var: usize, got: String },

    #[error("cannot pad: {0}")]
    Pad(String),

    #[error("no uniquely solvable instance within budget ({attempts} attempts)")]
    UniqueBudgetExhausted { attempts: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, msg: msg.into() }
    }
}
