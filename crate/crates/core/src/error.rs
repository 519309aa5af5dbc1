use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax {
        position: usize,
        message: &'static str,
    },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("variable kind does not match the declared space at position {position}")]
    WrongSpace { position: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("variable count mismatch: expected {expected}, found {found}")]
    NvarsMismatch { expected: usize, found: usize },
    #[error("operands live in incompatible variable spaces")]
    SpaceMismatch,
    #[error("matrix dimensions do not fit: {0}")]
    Dimension(&'static str),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix does not have determinant one")]
    NotUnimodular,
    #[error("tuple is not a homogeneous system of parameters: ideal piece of degree {degree} is not full")]
    NotFiniteColength { degree: usize },
    #[error("form is degenerate: ideal of partials is not full in degree {degree}")]
    Degenerate { degree: usize },
    #[error("socle functional is not unique: kernel has dimension {kernel_dim}")]
    DegenerateSocle { kernel_dim: usize },
    #[error("form has odd degree {0}")]
    OddDegree(usize),
    #[error("division by zero: {0} vanishes")]
    DivisionByZero(&'static str),
    #[error("form is not of the required shape: {0}")]
    NotInFamily(&'static str),
    #[error("parameter excluded: {0}")]
    ExcludedParameter(&'static str),
    #[error("family member is degenerate (discriminant vanishes)")]
    DegenerateFamilyMember,
    #[error("Sylvester frame is degenerate: X and Y are not independent linear forms")]
    DegenerateSylvesterFrame,
    #[error("quintic is degenerate: C40^2 - 128 C80 vanishes")]
    DegenerateQuintic,
    #[error("unsupported input: {0}")]
    Unsupported(&'static str),
}
