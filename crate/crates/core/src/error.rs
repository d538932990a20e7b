use thiserror::Error;

use crate::parser::ParseError;
use crate::poly::Poly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("negative exponent {0}")]
    NegativeExponent(i64),

    #[error("unknown variable `{0}` (expected x, y or z)")]
    UnknownVariable(String),

    #[error("{0}: the zero polynomial is not allowed here")]
    ZeroPolynomial(&'static str),

    #[error("s and t are not coprime: common factor {0}")]
    NotCoprime(Poly),

    #[error("not a Poisson triple: F.curl F = {0}")]
    NotPoissonTriple(Poly),

    #[error("ideal is not zero-dimensional (dimension {0})")]
    NotZeroDimensional(i32),

    #[error("factorization of {poly} is incomplete at total-degree bound {bound}")]
    IncompleteFactorization { poly: Poly, bound: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no point with fg != 0 in the box [-{0}, {0}]^3")]
    NoPointFound(u32),

    #[error("truncation caps differ: {0} vs {1}")]
    CapMismatch(u32, u32),

    #[error("invalid pencil parameter `{0}`")]
    InvalidPencil(String),

    #[error("corpus: {0}")]
    Corpus(String),
}
