use thiserror::Error;

use crate::group::spec::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("order {order} exceeds the order budget {budget}")]
    BudgetExceeded { order: u128, budget: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not abelian")]
    NotAbelian(String),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("no generating set of size at most {cap}")]
    CapExceeded { cap: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("the trivial group has no proper subgroups")]
    TrivialGroup,
    #[error("subgroup count exceeded the guard of {guard}")]
    GuardExceeded { guard: usize },
    #[error("the given set generates the whole group")]
    Generating,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("structure digraph has an edge that does not increase the subgroup")]
    NotAcyclic,
    #[error("structure digraph has unsolved nodes")]
    Unsolved,
    #[error("type calculus is inconsistent at node {node}: options {options}")]
    Inconsistent { node: usize, options: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("the trivial group has no game")]
    TrivialGroup,
    #[error("group of order {0} is too large for the brute-force oracle")]
    OrderTooLarge(usize),
    #[error("position budget of {budget} entries exceeded")]
    BudgetExceeded { budget: usize },
    #[error("the position generates the whole group")]
    Generating,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
