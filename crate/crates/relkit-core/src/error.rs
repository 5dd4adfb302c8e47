use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{label}` in universe `{universe}`")]
    DuplicateLabel { universe: String, label: String },

    #[error("index {index} out of range for universe `{universe}` of size {size}")]
    IndexOutOfRange {
        universe: String,
        index: usize,
        size: usize,
    },

    #[error("construction of `{universe}` would have {requested} elements, above the cap of {cap}")]
    CapExceeded {
        universe: String,
        requested: u128,
        cap: usize,
    },

    #[error("type mismatch in {op}: `{left}` vs `{right}`")]
    TypeMismatch {
        op: &'static str,
        left: String,
        right: String,
    },

    #[error("relation on `{universe}` is not an equivalence")]
    NotAnEquivalence { universe: String },

    #[error("relation `{which}` is not a point")]
    NotAPoint { which: String },

    #[error("relation `{which}` is not a mapping")]
    NotAMapping { which: String },
}

pub type Result<T> = std::result::Result<T, Error>;
