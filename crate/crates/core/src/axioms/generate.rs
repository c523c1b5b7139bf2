//! Seeded generators of admissible axiom instances.
//!
//! Each generator is constructive: the output satisfies the axiom's shape
//! preconditions by the way it is built, not by rejection sampling, and is
//! deterministic in `(axiom, n, seed)`.

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axioms::{AxiomId, AxiomInstance};
use crate::coalition::{Coalition, Permutation, PlayerId, coalitions_without, nonempty_coalitions, players};
use crate::error::{Error, Result};
use crate::game::Game;
use crate::rational::{Rat, rat, rint};

// The worth pool keeps arithmetic exact and small while still exercising
// negative, fractional, and zero worths (zero draws are what make null and
// nullifying players reachable).
fn worth_pool() -> Vec<Rat> {
    vec![rint(-2), rint(-1), rat(-1, 2), rint(0), rint(0), rat(1, 2), rint(1), rint(2), rint(3)]
}

fn nonnegative_pool() -> Vec<Rat> {
    vec![rint(0), rat(1, 2), rint(1), rint(2)]
}

pub(crate) fn draw<R: Rng>(pool: &[Rat], rng: &mut R) -> Rat {
    pool[rng.random_range(0..pool.len())].clone()
}

/// A game with every nonempty worth drawn from the pool.
pub(crate) fn random_game<R: Rng>(n: usize, rng: &mut R) -> Game {
    let pool = worth_pool();
    let mut game = Game::zero(n).expect("valid player count");
    for s in nonempty_coalitions(n) {
        game.set_worth(s, draw(&pool, rng));
    }
    game
}

/// A game in which `player` is null: worths are drawn freely on the
/// coalitions avoiding `player` and copied onto their extensions, so
/// `v(S ∪ i) = v(S)` holds everywhere by construction.
pub(crate) fn null_extension_game<R: Rng>(n: usize, player: PlayerId, rng: &mut R) -> Game {
    let pool = worth_pool();
    let mut game = Game::zero(n).expect("valid player count");
    for s in coalitions_without(n, player) {
        if s.is_empty() {
            continue;
        }
        let value = draw(&pool, rng);
        game.set_worth(s.insert(player), value.clone());
        game.set_worth(s, value);
    }
    // v({i}) = v(∅) = 0 stays in place.
    game
}

/// A game in which `player` is nullifying: every coalition containing the
/// player is zeroed, the rest are drawn freely.
pub(crate) fn nullifying_game<R: Rng>(n: usize, player: PlayerId, rng: &mut R) -> Game {
    let pool = worth_pool();
    let mut game = Game::zero(n).expect("valid player count");
    for s in nonempty_coalitions(n) {
        if !s.contains(player) {
            game.set_worth(s, draw(&pool, rng));
        }
    }
    game
}

/// A game that is constant across nonempty coalitions.
pub(crate) fn constant_game<R: Rng>(n: usize, rng: &mut R) -> Game {
    let pool = worth_pool();
    Game::constant(n, &draw(&pool, rng)).expect("valid player count")
}

fn random_player<R: Rng>(n: usize, rng: &mut R) -> PlayerId {
    PlayerId::new(rng.random_range(1..=n)).expect("positive index")
}

fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut image: Vec<usize> = (1..=n).collect();
    image.shuffle(rng);
    Permutation::from_one_based(image).expect("shuffled identity is a bijection")
}

/// The scalar pool used for linearity instances: small rationals with both
/// signs, including non-integers.
pub(crate) fn linearity_scalar_pool() -> Vec<Rat> {
    vec![rint(1), rint(-1), rint(2), rint(-2), rat(1, 2), rat(-1, 2), rat(3, 2), rat(-3, 2)]
}

/// Generates one admissible instance of the axiom on `n` players,
/// deterministically in `(axiom, n, seed)`.
pub fn generate_instance(axiom: AxiomId, n: usize, seed: u64) -> Result<AxiomInstance> {
    if n < 2 {
        return Err(Error::PlayerCountTooSmall { min: 2, got: n });
    }
    if n > crate::coalition::MAX_PLAYERS {
        return Err(Error::PlayerCountTooLarge { max: crate::coalition::MAX_PLAYERS, got: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;

    let instance = match axiom {
        AxiomId::Efficiency => AxiomInstance::new(vec![random_game(n, rng)], vec![], vec![]),
        AxiomId::Additivity => {
            AxiomInstance::new(vec![random_game(n, rng), random_game(n, rng)], vec![], vec![])
        }
        AxiomId::Linearity => {
            let pool = linearity_scalar_pool();
            AxiomInstance::new(
                vec![random_game(n, rng), random_game(n, rng)],
                vec![],
                vec![draw(&pool, rng), draw(&pool, rng)],
            )
        }
        AxiomId::Symmetry => {
            // Symmetrization: v(S) := v'(S) + v'(τS) for the transposition
            // τ = (i j) makes i and j symmetric.
            let i = random_player(n, rng);
            let j = loop {
                let j = random_player(n, rng);
                if j != i {
                    break j;
                }
            };
            let raw = random_game(n, rng);
            let tau = Permutation::transposition(n, i, j)?;
            let v = &raw + &raw.permute(&tau)?;
            AxiomInstance::new(vec![v], vec![i, j], vec![])
        }
        AxiomId::Anonymity => {
            let v = random_game(n, rng);
            let pi = random_permutation(n, rng);
            let i = random_player(n, rng);
            AxiomInstance::new(vec![v], vec![i], vec![]).with_permutation(pi)
        }
        AxiomId::NullPlayerProperty => {
            let i = random_player(n, rng);
            AxiomInstance::new(vec![null_extension_game(n, i, rng)], vec![i], vec![])
        }
        AxiomId::NullPlayerProductiveEnvironment => {
            let i = random_player(n, rng);
            let mut v = null_extension_game(n, i, rng);
            if v.grand_worth().is_negative() {
                // Negation preserves nullity and flips the grand worth.
                v = Game::linear_combine(&rint(-1), &v, &rint(0), &v)?;
            }
            AxiomInstance::new(vec![v], vec![i], vec![])
        }
        AxiomId::CoalitionalStrategicEquivalence => {
            let i = random_player(n, rng);
            let v = random_game(n, rng);
            let w = null_extension_game(n, i, rng);
            AxiomInstance::new(vec![v, w], vec![i], vec![])
        }
        AxiomId::NullPlayerNeutrality => {
            let i = random_player(n, rng);
            let v = random_game(n, rng);
            let w = null_extension_game(n, i, rng);
            let mut u = null_extension_game(n, i, rng);
            // Equalize grand worths: overwrite u on both N∖{i} and N with
            // w(N∖{i}); nullity of i forces u(N) = u(N∖{i}), and the
            // null-extension gives w(N) = w(N∖{i}) already.
            let rest = Coalition::full(n).remove(i);
            let c = w.worth(rest).clone();
            u.set_worth(rest, c.clone());
            u.set_worth(Coalition::full(n), c);
            AxiomInstance::new(vec![v, w, u], vec![i], vec![])
        }
        AxiomId::WeakMonotonicity => {
            // v := w + g where g has nonnegative worths off i and marginal
            // increments δ_S ≥ 0 for i, so both preconditions hold.
            let i = random_player(n, rng);
            let w = random_game(n, rng);
            let pool = nonnegative_pool();
            let mut g = Game::zero(n)?;
            for s in coalitions_without(n, i) {
                if !s.is_empty() {
                    g.set_worth(s, draw(&pool, rng));
                }
            }
            for s in coalitions_without(n, i) {
                let delta = draw(&pool, rng);
                let base = g.worth(s).clone();
                g.set_worth(s.insert(i), base + delta);
            }
            let v = &w + &g;
            AxiomInstance::new(vec![v, w], vec![i], vec![])
        }
        AxiomId::NullifyingPlayerProperty => {
            let i = random_player(n, rng);
            AxiomInstance::new(vec![nullifying_game(n, i, rng)], vec![i], vec![])
        }
        AxiomId::CoalitionalStandardEquivalence => {
            let i = random_player(n, rng);
            let v = random_game(n, rng);
            let w = nullifying_game(n, i, rng);
            AxiomInstance::new(vec![v, w], vec![i], vec![])
        }
        AxiomId::NullifyingPlayerNeutrality => {
            // Both added games have grand worth 0 by construction.
            let i = random_player(n, rng);
            let v = random_game(n, rng);
            let w = nullifying_game(n, i, rng);
            let u = nullifying_game(n, i, rng);
            AxiomInstance::new(vec![v, w, u], vec![i], vec![])
        }
    };
    debug_assert!(crate::axioms::validate_instance(axiom, &instance).is_ok());
    Ok(instance)
}

/// Mixed game distribution for the family-membership probe: mostly
/// unstructured draws, with periodic structured games (null players,
/// nullifying players, constant worths) so that solutions defined by
/// branching on game structure are exercised off the generic branch.
pub(crate) fn membership_probe_game<R: Rng>(n: usize, rng: &mut R) -> Game {
    match rng.random_range(0..8u32) {
        0 => {
            let i = players(n).nth(rng.random_range(0..n)).expect("in range");
            null_extension_game(n, i, rng)
        }
        1 => {
            let i = players(n).nth(rng.random_range(0..n)).expect("in range");
            nullifying_game(n, i, rng)
        }
        2 => constant_game(n, rng),
        _ => random_game(n, rng),
    }
}

/// Derives a per-trial seed from a base seed, splitmix-style, so trials can
/// be generated independently and in parallel.
pub(crate) fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed.wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
