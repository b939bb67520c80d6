use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("contraction parameter out of range: gamma*exp(-eta) = {value} exceeds 1 at eta = {eta}")]
    Domain { eta: f64, value: f64 },

    #[error("boost too small: dropped component {dropped:e} exceeds tolerance {tol:e}")]
    InsufficientBoost { dropped: f64, tol: f64 },

    #[error("four-potential violates A0 = Az (|A0 - Az| = {residual:e})")]
    LorentzConditionViolated { residual: f64 },

    #[error("spinor product must have at least one factor")]
    EmptyState,

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("cannot parse spinor product {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
