use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("player count must be at least {min}, got {got}")]
    PlayerCountTooSmall { min: usize, got: usize },
    #[error("player count must be at most {max}, got {got}")]
    PlayerCountTooLarge { max: usize, got: usize },
    #[error("player index must be at least 1")]
    PlayerIndexZero,
    #[error("player {player} is out of range for {n} players")]
    PlayerOutOfRange { player: usize, n: usize },
    #[error("coalition mask {mask:#b} is out of range for {n} players")]
    CoalitionOutOfRange { mask: u32, n: usize },
    #[error("coalition listed more than once (mask {mask:#b})")]
    DuplicateCoalition { mask: u32 },
    #[error("the empty coalition must have worth 0")]
    NonzeroEmptyWorth,
    #[error("coalition must be nonempty")]
    EmptyCoalition,
    #[error("player counts differ: {left} vs {right}")]
    PlayerCountMismatch { left: usize, right: usize },
    #[error("players must be distinct")]
    IdenticalPlayers,
    #[error("map is not a bijection on 1..={n}")]
    InvalidPermutation { n: usize },
    #[error("permutation enumeration needs n <= {max}, got {n}")]
    OracleLimitExceeded { n: usize, max: usize },
    #[error("invalid solution parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid rational literal: {0:?}")]
    InvalidRational(String),
    #[error("instance does not match the axiom's shape: {0}")]
    ShapeMismatch(String),
    #[error("instance violates the axiom's preconditions: {0}")]
    PreconditionViolated(String),
    #[error("invalid search strategy: {0}")]
    InvalidStrategy(String),
    #[error("unknown witness bundle id: {0:?}")]
    UnknownWitness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
