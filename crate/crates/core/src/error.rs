use thiserror::Error;

/// Every failure the library reports. Variants map onto the CLI exit codes.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not admissible at infinity: |gamma| = {modulus} lies within {band} of 1")]
    NotAdmissible { modulus: f64, band: f64 },
    #[error("the contour passes through (or too close to) a zero of f near {re} + {im}i")]
    CircleThroughZero { re: f64, im: f64 },
    #[error("zero set is not isolated: {boxes} unresolved boxes form a connected chain")]
    NonIsolatedZeroSet { boxes: usize },
    #[error("root count is not certified: {unresolved} unresolved boxes, {non_simple} non-simple roots")]
    Uncertified { unresolved: usize, non_simple: usize },
    #[error("{count} roots violate the ray constraint z^(2n) > 0")]
    RayViolation { count: usize },
    #[error("root set is not invariant under rotation by 2*pi/{n}")]
    NotInvariant { n: u32 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("polynomial is not squarefree on the requested interval")]
    NotSquarefree,
    #[error("degree violation: {0}")]
    DegreeViolation(String),
    #[error("point-mass positions must be distinct")]
    DuplicatePoles,
    #[error("z = 0 is a root of the lens polynomial")]
    ZeroIsRoot,
    #[error("polynomial is not in the required class: {0}")]
    NotInClass(String),
    #[error("weight ({p}, {q}) must be positive and coprime")]
    BadWeight { p: u32, q: u32 },
    #[error("weighted homogeneous polynomial is not convenient: {0}")]
    NotConvenient(String),
    #[error("polar degree deg_z f - deg_zbar f must be positive, got {0}")]
    NonPositivePolarDegree(i64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
