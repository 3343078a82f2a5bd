use thiserror::Error;

/// Errors surfaced by construction, parsing, and precondition checks.
///
/// Pure group arithmetic on validated data does not fail; everything that
/// can go wrong is caught at a boundary (loading a graph, parsing an
/// element literal, checking an operation precondition) and reported here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex id {vertex} out of range (graph has {vertex_count} vertices)")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("element {value} out of range for vertex {vertex} ({reason})")]
    InvalidElement {
        vertex: usize,
        value: i64,
        reason: String,
    },

    #[error("identity-valued syllable `{token}`; identity factors must be omitted")]
    IdentitySyllable { token: String },

    #[error("cannot parse element literal `{token}`: {reason}")]
    ParseElement { token: String, reason: String },

    #[error("edge ({u},{v}) is invalid: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("Cayley table is not a group: {0}")]
    GroupAxiom(String),

    #[error("length table violates the length-function axioms: {0}")]
    LengthAxiom(String),

    #[error("vertex set {{{vertices:?}}} is not a clique of the graph")]
    NotAClique { vertices: Vec<usize> },

    #[error("support of the function is not contained in the clique subgroup G_J, J={clique:?}")]
    SupportOutsideClique { clique: Vec<usize> },

    #[error("support of the function is not contained in the enumerated window ({0})")]
    SupportOutsideWindow(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("requested level {requested} exceeds the enumerated window ({what} max {max})")]
    WindowExceeded {
        what: String,
        requested: u64,
        max: u64,
    },

    #[error("growth fit needs at least {needed} usable data points, got {got}")]
    NotEnoughData { needed: usize, got: usize },

    #[error("growth fit is degenerate: {0}")]
    DegenerateFit(String),

    #[error("graph too large: {vertex_count} vertices (limit {limit})")]
    GraphTooLarge { vertex_count: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
