use thiserror::Error;

use crate::hypergraph::Triple;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("ground-set size mismatch: expected {expected}, found {found}")]
    GroundSetMismatch { expected: usize, found: usize },

    #[error("indices ({0}, {1}, {2}) do not form a strictly increasing triple")]
    UnsortedTriple(usize, usize, usize),

    #[error("triple {triple} has an index outside the ground set of size {n}")]
    TripleOutOfRange { triple: Triple, n: usize },

    #[error("edge list is not strictly increasing at position {0}")]
    UnorderedEdges(usize),

    #[error("entry {index} of {field} is negative ({value})")]
    NegativeEntry {
        field: &'static str,
        index: usize,
        value: i64,
    },

    #[error("promise violated: {0}")]
    PromiseViolated(String),

    #[error("instance too large for {what}: {detail}")]
    TooLarge { what: &'static str, detail: String },

    #[error("triple {triple} is not in {set}")]
    OutsideSet { triple: Triple, set: &'static str },

    #[error(
        "certificate does not realize the reduced sequence: \
         {negative_hits} edge(s) from the negative part, {positive_missing} positive triple(s) missing"
    )]
    ForcingViolated {
        negative_hits: usize,
        positive_missing: usize,
    },

    #[error("{field}: {message}")]
    Format { field: String, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
