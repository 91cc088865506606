use thiserror::Error;

/// Errors raised by every module of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("negative exponent at position {pos} requires Laurent mode")]
    NegativeExponent { pos: usize },

    #[error("variable index {index} at position {pos} is outside x1..x{n}")]
    VariableOutOfRange { index: usize, n: usize, pos: usize },

    #[error("polynomial is zero after combining terms")]
    EmptyPolynomial,

    #[error("ambient dimension must be positive")]
    ZeroDimension,

    #[error("ambient dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("expected vectors of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("convex hull of an empty point set")]
    EmptyInput,

    #[error("recession cone contains a line; only pointed polyhedra are supported")]
    NotPointed,

    #[error("polytope has dimension {dim} in ambient dimension {ambient}; a full-dimensional polytope is required")]
    NotFullDimensional { dim: usize, ambient: usize },

    #[error("linear functional is unbounded below on the polyhedron")]
    UnboundedDirection,

    #[error("operation requires a bounded face or polytope")]
    Unbounded,

    #[error("operation requires integral vertices")]
    NotLattice,

    #[error("the origin lies on the face (or its affine span); lattice distance is undefined")]
    OriginInFace,

    #[error("empty face")]
    EmptyFace,

    #[error("point is not in the lattice spanned by the face and the origin")]
    NotInLattice,

    #[error("face does not belong to this polytope")]
    ForeignFace,

    #[error("Laurent polynomial not accepted here")]
    LaurentNotAllowed,

    #[error("local equation has a nonzero constant term")]
    ConstantTerm,

    #[error("eigenvalue {0} is atypical; the formula does not apply")]
    AtypicalEigenvalue(String),

    #[error("invalid eigenvalue: {0}")]
    InvalidEigenvalue(String),

    #[error("malformed scene: {0}")]
    Scene(String),
}

pub type Result<T> = std::result::Result<T, Error>;
