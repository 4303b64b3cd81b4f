use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("form is not a symmetric Frobenius form: {0}")]
    InvalidForm(String),
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("algebra does not split over the rationals: {0}")]
    NotSplit(String),
    #[error("random central samples had repeated eigenvalues after {attempts} attempts")]
    DegenerateSample { attempts: usize },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("block count mismatch: {0} vs {1}")]
    BlockCountMismatch(usize, usize),
    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),
    #[error("invalid Morita context: {0}")]
    InvalidContext(String),
    #[error("missing Frobenius data: {0}")]
    MissingFrobeniusData(String),
    #[error("permutation mismatch between contexts")]
    PermMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("simple count mismatch: {0} vs {1}")]
    SimpleCountMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
