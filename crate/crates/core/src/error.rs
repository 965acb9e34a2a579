use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("value does not fit in double precision: {0}")]
    NumericOverflow(String),

    #[error("non-finite numeric entry")]
    NonFinite,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("closure exceeded cap of {0} dimensions")]
    CapExceeded(usize),

    #[error("element does not normalize the algebra")]
    NotNormalizing,

    #[error("subspace is not contained in the algebra")]
    NotContained,

    #[error("components do not sum to the algebra (sum has dim {sum_dim}, algebra has dim {algebra_dim})")]
    ComponentSum { sum_dim: usize, algebra_dim: usize },

    #[error("grading law violated: [L_{gamma}, L_{delta}] not inside L_{target}")]
    GradingLaw {
        gamma: String,
        delta: String,
        target: String,
        witness: String,
    },

    #[error("group element {0} does not belong to the group")]
    NotInGroup(String),

    #[error("map is not a Lie algebra automorphism: {0}")]
    NotAutomorphism(String),

    #[error("map is not a Lie algebra endomorphism")]
    NotEndomorphism,

    #[error("automorphism order mismatch: phi^{0} is not the identity")]
    OrderMismatch(usize),

    #[error("numeric eigenspace could not be rationalized within tolerance")]
    Rationalization,

    #[error("eigenvalue iteration did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("numeric verification failed: residual {residual:e} exceeds tolerance {tol:e}")]
    Verification { residual: f64, tol: f64 },

    #[error("witness search exhausted: closure dimension {assoc_dim} < {full} but no invariant subspace found")]
    WitnessSearchExhausted { assoc_dim: usize, full: usize },

    #[error("structural identity failed: {0}")]
    IdentityFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
