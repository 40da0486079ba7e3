use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("scalars over different residue cardinalities (q = {0} and q = {1})")]
    MixedQ(u64, u64),

    #[error("cannot parse {what} from `{text}`")]
    Parse { what: &'static str, text: String },

    #[error("series expansion needs nonnegative exponents, found X^{0}")]
    NegativeExponent(i64),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("repeated parameters make the Vandermonde determinant vanish; use the Jacobi-Trudi evaluation")]
    RepeatedParameters,

    #[error("invalid local datum: {0}")]
    InvalidDatum(String),

    #[error("invalid representation: {0}")]
    InvalidRep(String),

    #[error("representation shape does not match the extension type {0}")]
    ExtensionMismatch(&'static str),

    #[error("argument {0} is within 1e-8 of a pole")]
    PoleProximity(String),

    #[error("integral does not converge: {0}")]
    NonConvergent(String),

    #[error("point lies on the integration contour Re(z) = {0}")]
    OnContour(f64),
}
