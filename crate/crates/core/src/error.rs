use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different variable contexts")]
    ContextMismatch,

    #[error("exponent overflow while multiplying monomials")]
    ExponentOverflow,

    #[error("invalid variable context: {0}")]
    InvalidContext(String),

    #[error("unknown block `{0}`")]
    UnknownBlock(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("exponent vector has length {found}, context expects {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("power must be at least 1 (got {0})")]
    ZeroPower(u32),

    #[error("operation is undefined on the zero ideal")]
    ZeroIdeal,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("substitution family is missing an entry for block {block} exponent {exponent}")]
    IncompleteFamily { block: usize, exponent: u32 },

    #[error("inclusion condition fails in block {block}: L({block},{larger}) is not contained in L({block},{smaller})")]
    InclusionViolated {
        block: usize,
        larger: u32,
        smaller: u32,
    },

    #[error("invalid substitution family: {0}")]
    InvalidFamily(String),

    #[error("ordering is not a permutation of the minimal generators")]
    NotAPermutation,

    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,

    #[error("resource bound exceeded: {what} needs {needed}, bound is {bound}")]
    ResourceBound {
        what: &'static str,
        needed: usize,
        bound: usize,
    },
}
