use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid basis: the coefficient a of (az+b) must be nonzero")]
    InvalidBasis,

    #[error("symbol psi_{index} has degree {degree} > order {order}; not representable in the (az+b) symbol matrix")]
    NotRepresentable { index: usize, degree: usize, order: usize },

    #[error("invalid conjugation parameters: {0}")]
    InvalidConjugation(String),

    #[error("unsupported operator shape: {0}")]
    UnsupportedShape(String),

    #[error("criterion not applicable: {0}")]
    CriterionNotApplicable(String),

    #[error("eigenvector must be nonzero")]
    ZeroEigenvector,

    #[error("repeated diagonal entry at index {index} leaves an inconsistent triangular system (generalized eigenvector)")]
    GeneralizedEigenvector { index: usize },

    #[error("no eigenfunction: {0}")]
    NoEigenfunction(String),

    #[error("top symbol is not a nonzero constant, so it has zeros")]
    NotZeroFree,

    #[error("quadrature needs at least 16 nodes, got {0}")]
    InvalidNodes(usize),

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
