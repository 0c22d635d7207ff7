use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Cartan type {family}{rank}")]
    UnsupportedType { family: char, rank: usize },
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("invalid root: {0}")]
    InvalidRoot(String),
    #[error("{0} is not a root of this system")]
    NotARoot(String),
    #[error("{0} is not a simple root")]
    NotSimple(String),
    #[error("{0} is not a positive root")]
    NotPositive(String),
    #[error("{0} is not a negative root")]
    NotNegative(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    SimpleIndex { index: usize, rank: usize },
    #[error("Weyl group order {order} exceeds the element cap {cap}")]
    ElementCap { order: usize, cap: usize },
    #[error("rank {rank} exceeds the enumeration limit {limit}")]
    RankGuard { rank: usize, limit: usize },
    #[error("set is not closed: {a} + {b} is a root missing from the set")]
    NotClosed { a: String, b: String },
    #[error("complement is not closed: {a} + {b} lies in the set")]
    NotCoClosed { a: String, b: String },
    #[error("nonempty inversion-set candidate contains no simple root")]
    NoSimpleRoot,
    #[error("not a Hessenberg space: {beta} + {alpha} = {sum} is missing")]
    NotHessenberg { beta: String, alpha: String, sum: String },
    #[error("malformed Hessenberg function: {0}")]
    HessenbergFunction(String),
    #[error("Hessenberg criterion holds; there is no disconnection witness")]
    NoWitness,
    #[error("Levi datum is the whole of the simple roots; the central case has no witness")]
    CentralLevi,
    #[error("{w} is not a fixed point of the nilpotent Hessenberg variety")]
    NotFixedPoint { w: String },
    #[error("{gamma} is not a maximal inversion of {w}")]
    NotMaximal { gamma: String, w: String },
    #[error("the identity has no descent")]
    IdentityDescent,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that indicate a broken mathematical property rather
    /// than bad input.
    pub fn is_violation(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::NoSimpleRoot)
    }
}
