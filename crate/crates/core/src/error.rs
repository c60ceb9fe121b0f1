use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    InvalidEdge(usize),
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("graph order {0} exceeds the supported maximum of 62")]
    OrderOverflow(usize),
    #[error("graph order must be at least 1")]
    EmptyOrder,
    #[error("malformed graph6{}: {reason}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    MalformedGraph6 { line: Option<usize>, reason: String },
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("vertex sets overlap")]
    InvalidPartition,
    #[error("invalid vector: {0}")]
    InvalidVector(String),
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("pattern side {t} is larger than graph order {n}")]
    PatternLargerThanGraph { t: usize, n: usize },
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("negative discriminant {0} in conjecture bound")]
    DiscriminantNegative(f64),
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("no {s}-regular graph of order {m} exists")]
    NoRegularGraphExists { m: usize, s: usize },
    #[error("could not certify K_{{{t},{}}}-freeness after {attempts} attempts", s + 1)]
    CannotCertifyFreeness { t: usize, s: usize, attempts: usize },
    #[error("invalid circulant offsets: {0}")]
    InvalidOffsets(String),
    #[error("random regular generation failed after {0} restarts")]
    GenerationFailed(usize),
    #[error("builtin enumeration supports n <= {max}, got {n}; supply a graph6 stream")]
    UseStreamSource { n: usize, max: usize },
    #[error("search budget must be positive")]
    InvalidBudget,
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
