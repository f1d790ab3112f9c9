use num_rational::BigRational;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has {rows}x{cols} shape but {len} entries were supplied")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid plumbing graph: {0}")]
    InvalidGraph(String),

    #[error("intersection form is degenerate (not a rational homology sphere); H_1 has free rank {free_rank}")]
    NotRationalHomologySphere { free_rank: usize },

    #[error("group has free rank {0}; only finite groups are supported here")]
    FreeRankUnsupported(usize),

    #[error("cochain is not a mod-2 cocycle: A*x is not even")]
    NotACocycle,

    #[error("class is not 2-torsion")]
    NotTwoTorsion,

    #[error("no mod-2 cocycle maps onto the target class under the Bockstein homomorphism")]
    NoPreimageFound,

    #[error("classes live in different groups")]
    IncompatibleGroups,

    #[error("immersion classes live over non-isomorphic second cohomology groups")]
    IncomparableManifolds,

    #[error("quaternion is not a unit (norm squared = {0})")]
    NotUnit(BigRational),

    #[error("numerator {0} of the second Smale component is not divisible by 4")]
    NotDivisibleBy4(num_bigint::BigInt),

    #[error("formula evaluates to the non-integer {0}")]
    HalfIntegerResult(BigRational),

    #[error("consistency violation: {0}")]
    ConsistencyViolation(String),
}
