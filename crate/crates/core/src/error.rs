use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is malformed: {0}")]
    Malformed(String),
    #[error("order {0} exceeds the supported maximum of {max}", max = crate::group::MAX_ORDER)]
    OrderTooLargeForTable(usize),
    #[error("0 is not a two-sided identity: fails at element {0}")]
    NoIdentityAtZero(usize),
    #[error("not a Latin square: {kind} {index} repeats an entry")]
    NotLatinSquare { kind: &'static str, index: usize },
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("permutation set is not a regular subgroup: {0}")]
    NotRegular(String),
    #[error("regular subgroup is not normalized by the left regular representation")]
    NotNormalized,
    #[error("order {order} exceeds the oracle bound {bound}")]
    OrderTooLargeForOracle { order: usize, bound: usize },
    #[error("identities of the two operations differ")]
    IdentityMismatch,
    #[error("brace law violated at ({0}, {1}, {2})")]
    BraceLawViolated(usize, usize, usize),
    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("subset is not a left ideal")]
    NotALeftIdeal,
    #[error("action is not by brace automorphisms: {0}")]
    NotBraceAutomorphismAction(String),
    #[error("map does not land in N(G)/Z(G): {0}")]
    NotIntoNormModCenter(String),
    #[error("group is not nilpotent of class at most two")]
    NotClassTwo,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("brace is not bi-skew")]
    NotBiSkew,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("order {order} is outside the enumeration bound ({reason})")]
    OrderTooLarge { order: usize, reason: String },
    #[error("catalog does not list every isomorphism type of order {0}")]
    CatalogIncompleteForOrder(usize),
    #[error("unsupported catalog order {0}")]
    UnsupportedOrder(usize),
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid group table: {0}")]
    ValidationError(Box<Error>),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
