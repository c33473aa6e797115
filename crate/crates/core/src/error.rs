use thiserror::Error;

/// Errors raised by the algebra engine, the groupoid engine and the CLI layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{modulus} is not a prime")]
    NotPrime { modulus: u64 },

    #[error("enumeration budget exceeded: {what} needs {count} items, budget is {budget}")]
    BudgetExceeded { what: String, count: u128, budget: u64 },

    #[error("total dimension {found} exceeds the bound {bound}")]
    BoundExceeded { found: usize, bound: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("representations live on different quivers or fields")]
    QuiverMismatch,

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("quiver is not a simply-laced Dynkin quiver")]
    NotDynkin,

    #[error("morphism is not injective at vertex {vertex}")]
    NotInjective { vertex: usize },

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid short exact sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),

    #[error("invalid functor: {0}")]
    InvalidFunctor(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("functors do not share a codomain")]
    CodomainMismatch,

    #[error("spans are not composable: {0}")]
    NotComposable(String),

    #[error("unknown class label {0}")]
    UnknownClass(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
