use thiserror::Error;

/// Errors produced by group construction, graph queries and oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("group order {order} exceeds cap {cap}")]
    OrderCap { order: u64, cap: usize },

    #[error("not a p-group: order {order} has more than one prime factor")]
    NotPGroup { order: usize },

    #[error("vertex index {index} out of range for graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("graph on {n} vertices exceeds oracle cap {cap}")]
    OracleCap { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
