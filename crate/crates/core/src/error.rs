use alloc::string::String;

use crate::element::BasisIndex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index {index} lies below the basis lower bound {bound}")]
    OutOfDomainIndex { index: i64, bound: i64 },
    #[error("element uses parameter x{index} but the family has {available} parameters")]
    ParameterMismatch { index: usize, available: usize },
    #[error("no value given for parameter `{0}`")]
    MissingParameter(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("window cannot certify: {0}")]
    WindowTooSmall(String),
    #[error("central cocycle table has no entry for ({0}, {1})")]
    CentralOutOfTable(i64, i64),
    #[error("cochains of arity {0} are not supported")]
    ArityUnsupported(usize),
    #[error("cochain is not homogeneous: shifts {0} and {1} both occur")]
    NotHomogeneous(i64, i64),
    #[error("coefficient modes do not match")]
    ModeMismatch,
    #[error("exact solve needs rational entries but found a parameter-dependent one")]
    NonRational,
    #[error("no unit pivot available in column {0}")]
    NonUnitPivot(usize),
    #[error("ansatz solution on the window could not be certified: {0}")]
    AnsatzTooWeak(String),
    #[error("division by the zero function")]
    DivisionByZeroFunction,
    #[error("residue undefined: {0}")]
    EssentialOrUndefined(String),
    #[error("unsupported family `{0}` for this operation")]
    UnsupportedFamily(String),
    #[error("element is not in the realized algebra: {0}")]
    NotInAlgebra(String),
    #[error("basis re-expansion is not unique for bracket ({0}, {1})")]
    NonUniqueExpansion(i64, i64),
    #[error("locality upper bound violated at ({n}, {m})")]
    UpperBoundViolated { n: i64, m: i64 },
    #[error("degenerate line: discriminant vanishes")]
    DegenerateLine,
    #[error("degenerate curve sample ({0}, {1})")]
    DegenerateSample(String, String),
    #[error("rule has odd shift {0}; rescaling needs a square root")]
    OddShiftNotRescalable(i64),
    #[error("rescaling factor must be nonzero")]
    ZeroRescale,
    #[error("basis element {0:?} is not a vector index")]
    NotAVector(BasisIndex),
    #[error("parse error: {0}")]
    Parse(String),
}
