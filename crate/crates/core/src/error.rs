use thiserror::Error;

/// Errors raised by the geometric and linear-system operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("every input polynomial is zero")]
    AllZero,
    #[error("zero vector does not define a projective point")]
    ZeroVector,
    #[error("point is not on the flag threefold (p.l != 0)")]
    NotOnFlag,
    #[error("conj(p) is parallel to l; cross product vanishes")]
    DegenerateCross,
    #[error("conic L(q,m) is not smooth (q.m = 0)")]
    NotSmooth,
    #[error("the two conics coincide")]
    SameConic,
    #[error("conics share a q-point")]
    RepeatedConic,
    #[error("cross product of conic data vanishes")]
    ParallelData,
    #[error("configuration is not pairwise disjoint")]
    NotDisjoint,
    #[error("empty configuration")]
    EmptyConfiguration,
    #[error("bidegree {0:?} not allowed here: {1}")]
    BadBidegree((u32, u32), &'static str),
    #[error("form vanishes identically on the flag threefold")]
    ZeroOnFlag,
    #[error("divisor vanishes identically on the flag threefold")]
    ZeroDivisor,
    #[error("vertical vector is identically zero")]
    VerticalVectorZero,
    #[error("linear system has no members")]
    EmptySystem,
    #[error("point is not on the surface")]
    NotOnSurface,
    #[error("sampler exhausted {0} retries")]
    ExhaustedRetries(usize),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
