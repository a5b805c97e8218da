use thiserror::Error;

use crate::jordan::Ground;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {left_n}x{left_n} over {left_ground} vs {right_n}x{right_n} over {right_ground}")]
    ShapeMismatch {
        left_n: usize,
        left_ground: Ground,
        right_n: usize,
        right_ground: Ground,
    },

    #[error("{op} requires n = {expected}, got n = {found}")]
    UnsupportedSize {
        op: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{ground} Hermitian matrices of size {n} do not form a Jordan algebra")]
    NotJordan { ground: Ground, n: usize },

    #[error("{op} is not defined over {ground}")]
    UnsupportedGround { op: &'static str, ground: Ground },

    #[error("entry {position} has components outside {ground}")]
    OutsideGround { ground: Ground, position: String },

    #[error("expected {expected} entries in {field}, found {found}")]
    WrongLength {
        field: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("diagonal entry {index} has imaginary part {imag:e} (paper-strict mode requires real diagonals)")]
    ComplexDiagonal { index: usize, imag: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("characteristic cubic has a negative discriminant {discriminant:e} (limit {limit:e}); input is not a genuine Hermitian element")]
    NegativeDiscriminant { discriminant: f64, limit: f64 },

    #[error("zero vector does not define a projective point")]
    ZeroVector,

    #[error("octonionic components do not associate: |(φ1φ2)φ3 - φ1(φ2φ3)| = {norm:e}")]
    AssociatorViolation { norm: f64 },

    #[error("not a projection: |p∘p - p| = {residual:e}")]
    NotIdempotent { residual: f64 },

    #[error("expected trace {expected}, found {found}")]
    WrongTrace { expected: f64, found: f64 },

    #[error("points coincide; their join is undefined")]
    CoincidentPoints,

    #[error("lines coincide; their meet is undefined")]
    CoincidentLines,

    #[error("gauge structure constants are not antisymmetric at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("gauge index {index} out of range 1..={dim}")]
    GaugeIndex { index: usize, dim: usize },

    #[error("action has imaginary part {imag:e} above tolerance {limit:e}")]
    ImaginaryResidue { imag: f64, limit: f64 },

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
