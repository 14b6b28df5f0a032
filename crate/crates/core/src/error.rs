use thiserror::Error;

use crate::C64;

/// Errors raised by relation, extension and model operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RelError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("relations intersect nontrivially (intersection has dimension {dim})")]
    NonTrivialIntersection { dim: usize },

    #[error("relation is not an operator (multivalued part has dimension {mul_dim})")]
    NotAnOperator { mul_dim: usize },

    #[error("domain of the bounding relation is not contained in the domain of the bounded one")]
    DomainNotContained,

    #[error("relation pencil is not square: dim T = {dim}, ambient dimension {n}")]
    NonSquareRelation { dim: usize, n: usize },

    #[error("pencil G - zF is singular for every z; every point is an eigenvalue")]
    SingularPencil,

    #[error("relation is not symmetric")]
    NotSymmetric,

    #[error("relation is not dissipative")]
    NotDissipative,

    #[error("parameter is not a contraction (norm {norm:.6e})")]
    NotAContraction { norm: f64 },

    #[error("a lower half-plane point requires an isometric parameter")]
    LowerHalfPlaneRequiresIsometry,

    #[error("point {zeta} must be non-real")]
    RealPoint { zeta: C64 },

    #[error("domain basis column {column} is not in ker(A* - zI)")]
    DomainNotInDeficiencySpace { column: usize },

    #[error("range basis column {column} is not in ker(A* - conj(z)I)")]
    RangeNotInDeficiencySpace { column: usize },

    #[error("parameter shape {rows}x{cols} does not match deficiency data {expected_rows}x{expected_cols}")]
    ParameterShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("second relation is not an extension of the first")]
    NotAnExtension,

    #[error("alpha = {alpha} is not a quasi-regular point")]
    AlphaNotQuasiRegular { alpha: f64 },

    #[error("deficiency indices differ: ({plus}, {minus})")]
    IndicesUnequal { plus: usize, minus: usize },

    #[error("joined relation is not a contraction (form eigenvalue {value:.6e})")]
    JoinNotContractive { value: f64 },

    #[error("relations are not orthogonal")]
    NotOrthogonal,

    #[error("index identity violated: {detail}")]
    IndexMismatch { detail: String },

    #[error("z = {zeta} is an eigenvalue of the truncated Jacobi matrix")]
    ZetaIsEigenvalue { zeta: C64 },

    #[error("degenerate Moebius value: 1 + tau*m(conj z) vanishes")]
    DegenerateMobius,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid Jacobi model: {0}")]
    InvalidModel(String),

    #[error("root {root} is not in the open lower half-plane")]
    RootInUpperHalfPlaneOrReal { root: C64 },

    #[error("kernel matrix is not positive definite or is ill-conditioned: {0}")]
    KernelNotPositive(String),

    #[error("|tau| = {abs:.6} exceeds 1")]
    TauOutsideDisk { abs: f64 },

    #[error("w = {w} is not in the open upper half-plane")]
    WNotInUpperHalfPlane { w: C64 },

    #[error("lambda = {lambda} is not a root of phi_tau (residual {residual:.3e})")]
    LambdaNotARoot { lambda: C64, residual: f64 },

    #[error("reproducing kernel k(., w0) drops degree at w0 = {w0}")]
    DegenerateKernel { w0: C64 },

    #[error("tolerance profile invalid: {0}")]
    InvalidTolerance(String),
}

pub type Result<T, E = RelError> = std::result::Result<T, E>;
