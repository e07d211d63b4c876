use thiserror::Error;

/// Errors raised while building groups, lattices, graphs, and catalogs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a permutation of 0..{degree}: {detail}")]
    NotAPermutation { degree: usize, detail: String },
    #[error("order limit exceeded: {what} would exceed {cap} elements")]
    OrderLimitExceeded { what: String, cap: usize },
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("lattice limit exceeded: more than {cap} subgroups")]
    LatticeLimitExceeded { cap: usize },
    #[error("group has no proper subgroups")]
    NoProperSubgroups,
    #[error("group of prime or unit order has no non-trivial proper subgroups")]
    NoVertices,
    #[error("no independent set of size {target} found (best {best})")]
    TargetNotReached { target: usize, best: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate group name `{0}`")]
    DuplicateName(String),
    #[error("unresolved reference `{name}` on line {line}")]
    UnresolvedReference { name: String, line: usize },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
