use thiserror::Error;

use mediangle_core::GraphError;
use mediangle_periagroup::PeriagroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RotationError {
    #[error("generator {0} is not a permutation of the vertices")]
    BadPermutation(usize),
    #[error("generator {0} is not a graph automorphism")]
    NotAutomorphism(usize),
    #[error("group has more than {0} elements")]
    CapExceeded(usize),
    #[error("subgroup {0} contains a permutation outside the group")]
    NotInGroup(usize),
    #[error("subgroup {0} is trivial")]
    TrivialSubgroup(usize),
    #[error("generator index {index} in subgroup {subgroup} is out of range")]
    BadGeneratorIndex { subgroup: usize, index: usize },
    #[error("basepoint {0} is not a vertex")]
    BadBasepoint(usize),
    #[error("not a rotation system: {0}")]
    NotRotationSystem(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Periagroup(#[from] PeriagroupError),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = RotationError> = std::result::Result<T, E>;
