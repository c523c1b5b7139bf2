//! Exact-arithmetic toolkit for cooperative games with transferable
//! utility.
//!
//! The crate represents games over a fixed player set with arbitrary-
//! precision rational worths, so every identity it checks is decided
//! exactly, with zero tolerance. On top of the game algebra it provides:
//!
//! - [`solutions`]: a catalog of solution concepts (Shapley, equal
//!   division, the egalitarian family `α·ED + (1−α)·Sh` for any rational
//!   `α`, equal surplus division, and a set of deliberately ill-behaved
//!   foils).
//! - [`basis`]: coordinates in the unanimity basis (Harsanyi dividends)
//!   and the canonical basis, via `O(n·2^n)` subset sweeps.
//! - [`axioms`]: each fairness axiom as a decidable predicate on concrete
//!   instances, seeded instance generators, and exhaustive / randomized /
//!   witness-driven counterexample search.
//! - [`characterize`]: fits the family parameter `α` from unanimity games,
//!   verifies family membership on random games, and cross-checks the
//!   implications between the null-player and nullifying-player axioms.
//! - [`corpus`]: embedded witness games with machine-checked facts, used
//!   as a regression suite.
//!
//! Searches run in parallel via rayon when the `parallel` feature (on by
//! default) is enabled; results are deterministic either way, and the
//! sequential engine stays available for comparison.

pub mod axioms;
pub mod basis;
pub mod characterize;
pub mod coalition;
pub mod corpus;
pub mod error;
pub mod game;
pub mod rational;
pub mod solutions;

pub use coalition::{Coalition, MAX_PLAYERS, Permutation, PlayerId};
pub use error::{Error, Result};
pub use game::{Game, PayoffVector};
pub use rational::Rat;
pub use solutions::SolutionSpec;
