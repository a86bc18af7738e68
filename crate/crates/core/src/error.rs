use thiserror::Error;

use crate::exactla::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("cannot parse scalar {input:?}: {reason}")]
    ParseScalar { input: String, reason: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("{value} is not an eigenvalue")]
    NotAnEigenvalue { value: Scalar },

    #[error("eigenvalue {value} has algebraic multiplicity {actual}, not {claimed}")]
    MultiplicityMismatch {
        value: Scalar,
        claimed: usize,
        actual: usize,
    },

    #[error("eigenvalues outside Q(i): found multiplicities summing to {found} of {needed}; supply the missing Gaussian eigenvalues explicitly")]
    EigenvaluesOutsideField { found: usize, needed: usize },

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("dimension must be even, got {0}")]
    OddDimension(usize),

    #[error("matrix is not lambda-symplectic")]
    NotLambdaSymplectic,

    #[error("matrix is not block-diagonal: {0}")]
    NotBlockDiagonal(String),

    #[error("{0} is not a member of the twisted symplectic algebra")]
    NotInSymplecticAlgebra(String),

    #[error("twisting map is not multiplicative")]
    NotMultiplicative,

    #[error("invalid Heisenberg Hom-Lie algebra: {}", .0.join("; "))]
    InvalidHeisenberg(Vec<String>),

    #[error("extension data rejected: {0}")]
    InvalidExtension(String),

    #[error("not a Heisenberg twisting map: {0}")]
    InvalidTwist(String),

    #[error("derived ideal is not one-dimensional and central: {0}")]
    NotHeisenbergType(String),

    #[error("no twist-invariant complement exists: {0}")]
    NoInvariantComplement(String),

    #[error("negative power of a singular twisting map requested (exponent {0})")]
    SingularPower(i64),

    #[error("derivation degree k = {0} is not supported (k >= -1 required)")]
    BadDegree(i64),

    #[error("matrix is not an alpha^{k}-derivation")]
    NotADerivation { k: i64 },

    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("representation dimensions are inconsistent: {0}")]
    RepresentationShape(String),

    #[error("coboundary does not square to zero in degree {degree}: image of the previous operator is not contained in the cocycles")]
    NotAComplex { degree: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("Hom-Lie axioms fail: {}", .0.join("; "))]
    InvalidAlgebra(Vec<String>),

    #[error("algebra dimension {dim} exceeds the limit {max}")]
    TooLarge { dim: usize, max: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Errors caused by the input rather than by this library.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_) | Error::NotAComplex { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
