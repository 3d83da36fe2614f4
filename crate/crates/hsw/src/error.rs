//! Crate-wide error type.  Validation of algebraic axioms never goes through
//! here — axiom checks return [`crate::report::ValidationReport`]s instead —
//! this enum covers structural misuse (shape clashes, bad input data).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("exterior base dimension mismatch: {0} vs {1}")]
    BaseMismatch(usize, usize),
    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("gauge series did not terminate within {bound} terms")]
    NotNilpotent { bound: usize },
    #[error("invalid crossed module: {0}")]
    InvalidCrossedModule(String),
    #[error("invalid Maurer-Cartan element: {0}")]
    InvalidMC(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("not a chain homotopy inverse: {0}")]
    NotAChainHomotopyInverse(String),
    #[error("map is not surjective: {0}")]
    NotSurjective(String),
    #[error("invalid cover data: {0}")]
    InvalidCover(String),
    #[error("section applied outside its cover set: {0}")]
    DomainViolation(String),
    #[error("invalid VB groupoid: {0}")]
    InvalidVB(String),
    #[error("not a homotopy equivalence: {0}")]
    NotAHomotopyEquivalence(String),
    #[error("section is not projectable: {0}")]
    NotProjectable(String),
    #[error("invalid homotopy module: {0}")]
    InvalidModule(String),
    #[error("invalid right decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("invalid Manin quasi-triple: {0}")]
    InvalidTriple(String),
    #[error("matrix is not a point of the group: {0}")]
    PointNotInGroup(String),
    #[error("polyvector frame mismatch: {0}")]
    FrameMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
