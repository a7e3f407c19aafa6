use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not associative: ({a}{b}){c} != {a}({b}{c})")]
    NonAssociative { a: usize, b: usize, c: usize },

    #[error("entry {value} at row {row}, column {col} is out of range for size {size}")]
    IndexOutOfRange { row: usize, col: usize, value: usize, size: usize },

    #[error("semigroup is not regular: element {0} has no inverse")]
    NotRegular(usize),

    #[error("semigroup is not left reductive: elements {0} and {1} have the same right translation")]
    NotLeftReductive(usize, usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} is {value}, above the cap of {cap}")]
    CapExceeded { what: String, value: usize, cap: usize },

    #[error("cone search exceeded the cap of {0} partial assignments")]
    SearchSpaceTooLarge(usize),

    #[error("morphism {0} admits no normal factorization")]
    NoFactorization(usize),

    #[error("not a down-set: class {0} lies below member {1} but is missing")]
    NotDownClosed(usize, usize),

    #[error("object {0} is not the vertex of an idempotent cone in the down-set")]
    ObjectNotConnected(usize),

    #[error("cone {0} is not in the connection semigroup")]
    NotInConnectionSemigroup(usize),

    #[error("category is not supported: object {0} is connected by more than one class")]
    NotSupported(usize),

    #[error("map is not a homomorphism at ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },

    #[error("CC-morphism condition violated: {0}")]
    CCConditionViolated(String),

    #[error("isomorphism check failed: {0}")]
    IsoFailure(String),

    #[error("invalid category: {0}")]
    InvalidCategory(String),

    #[error("category is not normal: {0}")]
    NotNormal(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
