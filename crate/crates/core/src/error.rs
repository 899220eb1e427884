use thiserror::Error;

use crate::lattice::Subgroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group parameter: n must be at least 2, got {0}")]
    InvalidParameter(u64),

    #[error("{subgroup} is not a subgroup of D_{n}")]
    InvalidSubgroup { subgroup: Subgroup, n: u64 },

    #[error("co-maximality is defined for distinct subgroups, got {0} twice")]
    InvalidPair(Subgroup),

    #[error("vertex index {index} out of range for {len} vertices")]
    InvalidVertex { index: usize, len: usize },

    #[error("malformed hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("n = {n} exceeds the oracle cap of {cap}")]
    OracleCap { n: u64, cap: u64 },

    #[error("cannot parse subgroup from {0:?}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
