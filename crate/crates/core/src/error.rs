use thiserror::Error;

/// Errors raised by poset construction and the enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relations contain a cycle through element {0}")]
    Cycle(u32),
    #[error("label {label} out of range 1..={n}")]
    Index { label: u32, n: usize },
    #[error("prefix union {0:?} of the flag is not an ideal")]
    Flag(Vec<u32>),
    #[error("blocks do not form an ordered set partition of 1..={0}")]
    Partition(usize),
    #[error("size {got} exceeds the supported bound {max} for {what}")]
    Size { what: &'static str, got: usize, max: usize },
    #[error("composition weight {got} does not match poset size {expected}")]
    Weight { got: u32, expected: usize },
    #[error("poset is not connected")]
    Connectivity,
}

pub type Result<T> = std::result::Result<T, Error>;
