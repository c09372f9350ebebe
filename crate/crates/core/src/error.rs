use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has {0} vertices; at most {max} supported", max = crate::bitset::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex sets overlap at {0:?}")]
    OverlappingSets(Vec<usize>),
    #[error("empty vertex set")]
    EmptySet,
    #[error("invalid parameter for {pattern}: {constraint}")]
    InvalidParameter {
        pattern: &'static str,
        constraint: String,
    },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("oracle cap exceeded: {what} needs n = {n} but the cap is {cap}")]
    OracleCapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("coloring is partial: {covered} of {n} vertices colored")]
    PartialColoring { covered: usize, n: usize },
    #[error("{0:?} is not a clique")]
    NotAClique(Vec<usize>),
    #[error("clique of size {size} is not maximum (omega = {omega})")]
    NotMaximum { size: usize, omega: usize },
    #[error("threshold t = {0} is below 2")]
    ThresholdTooSmall(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("lift failed at vertex {vertex}: {outside_colors} distinct outside colors, block size {block}")]
    LiftFailure {
        vertex: usize,
        outside_degree: usize,
        outside_colors: usize,
        block: usize,
    },
    #[error("structural gap: {0}")]
    StructuralGap(String),
    #[error("literal C = {c} but the base colorer needed {used} colors")]
    LiteralCExceeded { c: usize, used: usize },
    #[error("rejection budget of {budget} attempts exhausted for sample {index}")]
    RejectionBudgetExhausted { index: usize, budget: usize },
    #[error("internal enumeration supports n <= {max}; supply a graph6 file from an external enumerator (e.g. nauty geng) for n = {n}")]
    EnumerationTooLarge { n: usize, max: usize },
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
    #[error("{0}")]
    Io(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
