use thiserror::Error;

use mediangle_core::GraphError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PeriagroupError {
    #[error("invalid group table: {0}")]
    BadTable(String),
    #[error("unknown group {0:?}; expected \"Z\", \"Z/n\" or a table")]
    UnknownGroup(String),
    #[error("cyclic group order must be at least 2, got {0}")]
    BadOrder(u64),
    #[error("edge {u}-{v} has lambda {lambda} but lambda must be at least 2")]
    LambdaTooSmall { u: usize, v: usize, lambda: u32 },
    #[error("edge {u}-{v} has lambda {lambda} > 2 but vertex {vertex} does not have order two")]
    OrderConstraint {
        u: usize,
        v: usize,
        lambda: u32,
        vertex: usize,
    },
    #[error("vertex ids must be 0..{0} in order")]
    BadVertexIds(usize),
    #[error("vertex {0} is not in the presentation")]
    UnknownVertex(usize),
    #[error("element {element} is not in the group of vertex {vertex}")]
    BadElement { vertex: usize, element: i64 },
    #[error("{0} is not applicable")]
    MoveNotApplicable(String),
    #[error("flip closure exceeded the budget of {0} words")]
    BudgetExceeded(usize),
    #[error("vertex {0} carries an infinite group; balls need finite vertex groups")]
    InfiniteGroup(usize),
    #[error("ball exceeded the vertex cap of {0}")]
    VertexCapExceeded(usize),
    #[error("the Cayley ball is incomplete")]
    IncompleteBall,
    #[error("presentation is not Coxeter: vertex {0} does not have order two")]
    NotCoxeter(usize),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = PeriagroupError> = std::result::Result<T, E>;
