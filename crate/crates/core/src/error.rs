use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `h(Im P)` is not contained in `Im P'`.
    #[error("map is not well defined on the cokernel: column {column} of h*P leaves the relation lattice")]
    WellDefinedness { column: usize },

    #[error("operation needs a finite group, got free rank {free_rank}")]
    InfiniteGroup { free_rank: usize },

    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    TooLarge { order: String, cap: u64 },

    #[error("gluing matrix has determinant {det}, expected -1")]
    Determinant { det: String },

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("Euler number undefined: the exceptional fiber has b = 0")]
    ZeroFiber,

    #[error("parity case (a, b) = ({a}, {b}) mod 2 is not normalized; apply (a, b) -> (-b, -a) first")]
    Parity { a: u8, b: u8 },

    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("invalid parameters: {0}")]
    Invalid(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
