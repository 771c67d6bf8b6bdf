use thiserror::Error;

/// Errors surfaced by graph construction, coloring, solving, and serialization.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order must be at least 1, got {0}")]
    InvalidOrder(i64),

    #[error("label bounds must satisfy r <= 0 <= s and s - r >= 1, got r={r}, s={s}")]
    InvalidBounds { r: i64, s: i64 },

    #[error("parameters must satisfy 1 <= m < i and 1 <= j < s, got i={i}, s={s}, m={m}, j={j}")]
    InvalidRemoval { i: i64, s: i64, m: i64, j: i64 },

    #[error("label {label} outside [{lo}, {hi}]")]
    LabelOutOfRange { label: i64, lo: i64, hi: i64 },

    #[error("labels are capped at |label| <= {max}, got {label}")]
    LabelLimit { label: i64, max: i64 },

    #[error("edge count requires |r| + s >= 3, got r={r}, s={s}")]
    EdgeCountRange { r: i64, s: i64 },

    #[error("degree piecewise form requires r < 0 < s, got r={r}, s={s}")]
    DegreeRange { r: i64, s: i64 },

    #[error("edge endpoints must be distinct, got {0}")]
    LoopEdge(i64),

    #[error("negation is only defined for interval families, not G_n")]
    NegateUnsupported,

    #[error("no construction case covers i={i}, s={s}, m={m}, j={j}; use the exact solver")]
    NoScheme { i: i64, s: i64, m: i64, j: i64 },

    #[error("no small-case claim covers the requested parameters")]
    NoSmallCase,

    #[error("chromatic index {chi} is impossible: it is below the maximum degree {delta}")]
    ImpossibleChromatic { chi: usize, delta: usize },

    #[error("graph has {edges} edges, above the solver cap of {max_edges}")]
    EdgeBudget { edges: usize, max_edges: usize },

    #[error("graph degree {delta} is above what the solver supports ({max})")]
    DegreeBudget { delta: usize, max: usize },

    #[error("coloring does not verify against the graph: {0}")]
    UnverifiedColoring(String),

    #[error("invalid graph payload: {0}")]
    InvalidPayload(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
