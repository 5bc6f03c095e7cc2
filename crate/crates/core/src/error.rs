use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("closure exceeds the order cap of {cap}")]
    ClosureTooLarge { cap: usize },
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("group is not {0}-separable")]
    NotPiSeparable(String),
    #[error("complement search exhausted for factor of order {order}")]
    ComplementSearchExhausted { order: usize },
    #[error("group of order {order} exceeds the H2 cap of {cap}")]
    GroupTooLargeForH2 { order: usize, cap: usize },
    #[error("modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: u64, found: u64 },
    #[error("table is not a normalized 2-cocycle")]
    NotACocycle,
    #[error("subgroup is not central")]
    NotCentral,
    #[error("subgroup is not cyclic")]
    NotCyclic,
    #[error("numeric degeneracy: {0}")]
    NumericDegeneracy(String),
    #[error("degree {value} is not integral within tolerance")]
    DegreeNotIntegral { value: f64 },
    #[error("internal cross-check failed: {0}")]
    CrossCheckMismatch(String),
    #[error("not a projective representation: {0}")]
    NotARepresentation(String),
    #[error("cocycles of the two representations differ")]
    CocycleMismatch,
    #[error("no intertwiner found: subgroup is not the inertia group")]
    InertiaMismatch,
    #[error("intertwiner phase could not be fixed")]
    PhaseInstability,
    #[error("factorization over the extension failed: {0}")]
    FactorizationFailure(String),
    #[error("reconstruction failed: {0}")]
    ReconstructionFailure(String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("coclass index {index} out of range ({count} coclasses)")]
    BadCoclassIndex { index: usize, count: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
