use thiserror::Error;

/// Errors raised while building quivers, rings and classes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arrow with i >= j: {from} -> {to}")]
    ArrowOrder { from: usize, to: usize },

    #[error("arrow endpoint {vertex} out of range (vertices 0..={rho})")]
    ArrowOutOfRange { vertex: usize, rho: usize },

    #[error("no incoming arrows at vertex {0}")]
    NoIncomingArrows(usize),

    #[error("degenerate vertex {vertex}: s_i = {incoming} <= r_i = {rank}")]
    DegenerateVertex {
        vertex: usize,
        incoming: u64,
        rank: u64,
    },

    #[error("positive dimension required at vertex {0}")]
    ZeroDimension(usize),

    #[error("expected {expected} dimensions, found {found}")]
    DimensionCount { expected: usize, found: usize },

    #[error("a quiver needs at least one non-source vertex")]
    EmptyQuiver,

    #[error("quiver is not Fano at vertex {vertex} (s_i - s_i' = {excess})")]
    NotFano { vertex: usize, excess: i64 },

    #[error("vertex {vertex} does not exist (quiver has {rho} vertices)")]
    NoSuchVertex { vertex: usize, rho: usize },

    #[error("partition {partition} has more than {rows} rows")]
    TooLong { partition: String, rows: usize },

    #[error("partition {partition} does not fit the {rows}x{cols} box of vertex {vertex}")]
    OutsideBox {
        partition: String,
        vertex: usize,
        rows: usize,
        cols: usize,
    },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("classes belong to different quivers")]
    QuiverMismatch,

    #[error("class carries quantum parameters where a classical class is required")]
    QuantumTerms,

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
