//! Counterexample search over exhaustive grids, seeded random instances,
//! and the embedded witness corpus.
//!
//! # Exhaustive enumeration
//!
//! Exhaustive mode enumerates shape-admissible instances in a fixed
//! lexicographic order. A free game slot ranges over games whose nonempty
//! coalition worths take values in the grid, ordered with the lowest
//! coalition mask as the most significant digit. Constrained slots (games
//! in which a designated player must be null or nullifying) enumerate
//! exactly the admissible games: their free coordinates range over the
//! grid and the forced coordinates are filled in by construction.
//!
//! Full cross products over several game slots are intractable, so the
//! domain itself is budgeted, deterministically:
//!
//! - the free game slot of every multi-game shape is capped to the first
//!   [`FREE_GAME_SLOT_CAP`] games of its enumeration (both free slots for
//!   additivity, linearity, and weak monotonicity);
//! - linearity scalars range over the first [`SCALAR_PAIR_CAP`] pairs of
//!   the scalar pool, in pool order with the first scalar most
//!   significant;
//! - single-game shapes are never capped.
//!
//! `Passed` means this budgeted domain was enumerated completely. An
//! additional caller-supplied `max_instances` bound cuts the search off
//! early and yields `BudgetExhausted` instead; that run is sequential so
//! the cut point is exact.
//!
//! The paired axioms (strategic equivalence vs. null player neutrality,
//! standard equivalence vs. nullifying player neutrality) share the same
//! free-slot cap and constrained-slot enumeration, so their verdicts can
//! be compared instance-for-instance.

use num_traits::Signed;

use crate::axioms::exec::{self, ExecMode};
use crate::axioms::generate::{self, linearity_scalar_pool, trial_seed};
use crate::axioms::predicate::{predicate_sides, predicate_sides_borrowed};
use crate::axioms::{AxiomId, AxiomInstance, SearchStrategy, Value, Verdict};
use crate::coalition::{Coalition, Permutation, PlayerId, coalitions_without, players};
use crate::corpus;
use crate::error::{Error, Result};
use crate::game::Game;
use crate::rational::Rat;
use crate::solutions::SolutionSpec;

/// Cap on each free game slot in multi-game exhaustive shapes.
pub const FREE_GAME_SLOT_CAP: u64 = 64;

/// Cap on the number of `(a, b)` scalar pairs in exhaustive linearity.
pub const SCALAR_PAIR_CAP: u64 = 16;

/// The scalar pool used for linearity checks: `±1, ±2, ±1/2, ±3/2`.
pub fn scalar_pool() -> Vec<Rat> {
    linearity_scalar_pool()
}

type CounterRaw = (AxiomInstance, Value, Value);

fn counterexample(raw: CounterRaw) -> Verdict {
    Verdict::Counterexample { instance: Box::new(raw.0), lhs: raw.1, rhs: raw.2 }
}

/// Searches for a counterexample; `Passed` means none was found within
/// the strategy's budget. Identical inputs always produce identical
/// verdicts, with or without the `parallel` feature.
pub fn search_counterexample(
    axiom: AxiomId,
    solution: &SolutionSpec,
    strategy: &SearchStrategy,
) -> Result<Verdict> {
    run_search(axiom, solution, strategy, ExecMode::default_mode())
}

/// Reference single-threaded search; used by the benchmarks and by tests
/// of the determinism contract.
pub fn search_counterexample_sequential(
    axiom: AxiomId,
    solution: &SolutionSpec,
    strategy: &SearchStrategy,
) -> Result<Verdict> {
    run_search(axiom, solution, strategy, ExecMode::Sequential)
}

fn run_search(
    axiom: AxiomId,
    solution: &SolutionSpec,
    strategy: &SearchStrategy,
    mode: ExecMode,
) -> Result<Verdict> {
    solution.validate()?;
    strategy.validate()?;
    match strategy {
        SearchStrategy::Exhaustive { grid, n, max_instances } => {
            exhaustive(axiom, solution, grid, *n, *max_instances, mode)
        }
        SearchStrategy::Random { n, trials, seed } => {
            random(axiom, solution, *n, *trials, *seed, mode)
        }
        SearchStrategy::Witnesses { ids } => witnesses(axiom, solution, ids),
    }
}

/// Per-axiom verdict table under one strategy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    pub solution: SolutionSpec,
    pub strategy: SearchStrategy,
    pub rows: Vec<(AxiomId, Verdict)>,
}

impl AxiomReport {
    pub fn verdict(&self, axiom: AxiomId) -> Option<&Verdict> {
        self.rows.iter().find(|(a, _)| *a == axiom).map(|(_, v)| v)
    }

    pub fn failed(&self) -> Vec<AxiomId> {
        self.rows.iter().filter(|(_, v)| v.is_counterexample()).map(|(a, _)| *a).collect()
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|(_, v)| v.is_passed())
    }
}

/// Runs the search for each listed axiom and collects the verdicts.
pub fn axiom_report(
    solution: &SolutionSpec,
    axioms: &[AxiomId],
    strategy: &SearchStrategy,
) -> Result<AxiomReport> {
    let mut rows = Vec::with_capacity(axioms.len());
    for &axiom in axioms {
        rows.push((axiom, search_counterexample(axiom, solution, strategy)?));
    }
    Ok(AxiomReport { solution: solution.clone(), strategy: strategy.clone(), rows })
}

// ---------------------------------------------------------------------------
// random mode
// ---------------------------------------------------------------------------

fn random(
    axiom: AxiomId,
    solution: &SolutionSpec,
    n: usize,
    trials: u64,
    seed: u64,
    mode: ExecMode,
) -> Result<Verdict> {
    // Fail fast on player counts the generators reject.
    generate::generate_instance(axiom, n, trial_seed(seed, 0))?;
    let eval = |t: u64| -> Option<CounterRaw> {
        let instance = generate::generate_instance(axiom, n, trial_seed(seed, t))
            .expect("player count already validated");
        let (holds, lhs, rhs) =
            predicate_sides(axiom, solution, &instance).expect("generated instance is admissible");
        (!holds).then_some((instance, lhs, rhs))
    };
    Ok(match exec::find_first(mode, trials, eval) {
        Some(raw) => counterexample(raw),
        None => Verdict::Passed { instances_checked: trials },
    })
}

// ---------------------------------------------------------------------------
// witnesses mode
// ---------------------------------------------------------------------------

fn witnesses(axiom: AxiomId, solution: &SolutionSpec, ids: &[String]) -> Result<Verdict> {
    for id in ids {
        corpus::witness(id)?;
    }
    let pool = corpus::witness_instances(axiom);
    let mut checked = 0u64;
    for (bundle_id, instance) in &pool {
        if !ids.is_empty() && !ids.iter().any(|id| id == bundle_id) {
            continue;
        }
        let (holds, lhs, rhs) = predicate_sides(axiom, solution, instance)?;
        if !holds {
            return Ok(counterexample((instance.clone(), lhs, rhs)));
        }
        checked += 1;
    }
    Ok(Verdict::Passed { instances_checked: checked })
}

// ---------------------------------------------------------------------------
// exhaustive mode
// ---------------------------------------------------------------------------

struct GridCtx<'a> {
    grid: &'a [Rat],
    n: usize,
}

impl GridCtx<'_> {
    /// Number of grid games on `coords` free coordinates, or an error when
    /// the domain size overflows.
    fn domain(&self, coords: usize) -> Result<u64> {
        let g = self.grid.len() as u64;
        u32::try_from(coords)
            .ok()
            .and_then(|c| g.checked_pow(c))
            .ok_or_else(|| {
                Error::InvalidStrategy(
                    "exhaustive domain too large; reduce the grid or player count".into(),
                )
            })
    }

    fn free_coords(&self) -> usize {
        (1usize << self.n) - 1
    }

    /// The `index`-th grid game in lexicographic order (lowest coalition
    /// mask = most significant digit).
    fn game(&self, index: u64) -> Game {
        let g = self.grid.len() as u64;
        let mut game = Game::zero(self.n).expect("valid player count");
        let mut rem = index;
        for mask in (1..1u32 << self.n).rev() {
            let digit = (rem % g) as usize;
            rem /= g;
            game.set_worth(Coalition::from_mask(mask), self.grid[digit].clone());
        }
        game
    }

    /// Coordinates a null-constrained game is free on: the nonempty
    /// coalitions avoiding `player`, in mask order.
    fn base_masks(&self, player: PlayerId) -> Vec<Coalition> {
        coalitions_without(self.n, player).filter(|s| !s.is_empty()).collect()
    }

    /// The `index`-th game in which `player` is null: free coordinates
    /// range over the grid, extensions are copied so `v(S∪i) = v(S)`.
    fn null_game(&self, player: PlayerId, index: u64) -> Game {
        let g = self.grid.len() as u64;
        let mut game = Game::zero(self.n).expect("valid player count");
        let mut rem = index;
        for s in self.base_masks(player).into_iter().rev() {
            let digit = (rem % g) as usize;
            rem /= g;
            let value = self.grid[digit].clone();
            game.set_worth(s.insert(player), value.clone());
            game.set_worth(s, value);
        }
        game
    }

    /// The `index`-th game in which `player` is nullifying: coalitions
    /// containing the player stay at zero, the rest range over the grid.
    fn nullifying_game(&self, player: PlayerId, index: u64) -> Game {
        let g = self.grid.len() as u64;
        let mut game = Game::zero(self.n).expect("valid player count");
        let mut rem = index;
        for s in self.base_masks(player).into_iter().rev() {
            let digit = (rem % g) as usize;
            rem /= g;
            game.set_worth(s, self.grid[digit].clone());
        }
        game
    }

    /// The capped free-slot list: the first `FREE_GAME_SLOT_CAP` grid
    /// games in lexicographic order.
    fn capped_free_games(&self) -> Result<Vec<Game>> {
        let len = self.domain(self.free_coords())?.min(FREE_GAME_SLOT_CAP);
        Ok((0..len).map(|i| self.game(i)).collect())
    }
}

/// Drives one exhaustive plan: `outer_len` units, `count(idx)` admissible
/// instances per unit, `find(idx)` the first violation inside a unit.
fn run_plan<C, F>(
    mode: ExecMode,
    outer_len: u64,
    max_instances: Option<u64>,
    count: C,
    find: F,
) -> Verdict
where
    C: Fn(u64) -> u64 + Sync,
    F: Fn(u64) -> Option<CounterRaw> + Sync,
{
    if let Some(cap) = max_instances {
        // Budgeted runs are sequential so the cut point is exact and the
        // verdict does not depend on scheduling.
        let mut checked = 0u64;
        for idx in 0..outer_len {
            let unit = count(idx);
            if checked.saturating_add(unit) > cap {
                return Verdict::BudgetExhausted { instances_checked: checked };
            }
            if let Some(raw) = find(idx) {
                return counterexample(raw);
            }
            checked += unit;
        }
        return Verdict::Passed { instances_checked: checked };
    }
    match exec::find_first(mode, outer_len, &find) {
        Some(raw) => counterexample(raw),
        None => {
            Verdict::Passed { instances_checked: exec::sum_over(mode, outer_len, &count) }
        }
    }
}

fn exhaustive(
    axiom: AxiomId,
    solution: &SolutionSpec,
    grid: &[Rat],
    n: usize,
    max_instances: Option<u64>,
    mode: ExecMode,
) -> Result<Verdict> {
    let ctx = GridCtx { grid, n };
    // Evaluate on borrowed parts and materialize the owned instance only
    // for a violation; passing instances are never cloned.
    let eval = |games: &[&Game],
                players_: &[PlayerId],
                scalars: &[Rat],
                perm: Option<&Permutation>|
     -> Option<CounterRaw> {
        let (holds, lhs, rhs) =
            predicate_sides_borrowed(axiom, solution, games, players_, scalars, perm)
                .expect("enumerated instance is admissible");
        (!holds).then(|| {
            let mut instance = AxiomInstance::new(
                games.iter().map(|g| (*g).clone()).collect(),
                players_.to_vec(),
                scalars.to_vec(),
            );
            instance.permutation = perm.cloned();
            (instance, lhs, rhs)
        })
    };

    match axiom {
        AxiomId::Efficiency
        | AxiomId::Symmetry
        | AxiomId::Anonymity
        | AxiomId::NullPlayerProperty
        | AxiomId::NullPlayerProductiveEnvironment
        | AxiomId::NullifyingPlayerProperty => {
            let outer_len = ctx.domain(ctx.free_coords())?;
            let perms: Vec<Permutation> = if axiom == AxiomId::Anonymity {
                all_permutations(n)
            } else {
                Vec::new()
            };
            let count = |idx: u64| {
                let game = ctx.game(idx);
                single_game_units(axiom, &game, &perms).len() as u64
            };
            let find = |idx: u64| {
                let game = ctx.game(idx);
                for (players_, perm) in single_game_units(axiom, &game, &perms) {
                    if let Some(raw) = eval(&[&game], &players_, &[], perm) {
                        return Some(raw);
                    }
                }
                None
            };
            Ok(run_plan(mode, outer_len, max_instances, count, find))
        }
        AxiomId::CoalitionalStrategicEquivalence | AxiomId::CoalitionalStandardEquivalence => {
            let base = ctx.domain((1usize << (n - 1)) - 1)?;
            let outer_len = (n as u64).checked_mul(base).ok_or_else(domain_too_large)?;
            let free = ctx.capped_free_games()?;
            let constrained = |idx: u64| -> (PlayerId, Game) {
                let i = PlayerId::new((idx / base) as usize + 1).expect("positive");
                let w_idx = idx % base;
                let w = if axiom == AxiomId::CoalitionalStrategicEquivalence {
                    ctx.null_game(i, w_idx)
                } else {
                    ctx.nullifying_game(i, w_idx)
                };
                (i, w)
            };
            let count = |_: u64| free.len() as u64;
            let find = |idx: u64| {
                let (i, w) = constrained(idx);
                for v in &free {
                    if let Some(raw) = eval(&[v, &w], &[i], &[], None) {
                        return Some(raw);
                    }
                }
                None
            };
            Ok(run_plan(mode, outer_len, max_instances, count, find))
        }
        AxiomId::NullPlayerNeutrality | AxiomId::NullifyingPlayerNeutrality => {
            let base = ctx.domain((1usize << (n - 1)) - 1)?;
            let pairs = base.checked_mul(base).ok_or_else(domain_too_large)?;
            let outer_len = (n as u64).checked_mul(pairs).ok_or_else(domain_too_large)?;
            let free = ctx.capped_free_games()?;
            let constrained = |idx: u64| -> (PlayerId, Game, Game) {
                let i = PlayerId::new((idx / pairs) as usize + 1).expect("positive");
                let w_idx = (idx % pairs) / base;
                let u_idx = idx % base;
                if axiom == AxiomId::NullPlayerNeutrality {
                    (i, ctx.null_game(i, w_idx), ctx.null_game(i, u_idx))
                } else {
                    (i, ctx.nullifying_game(i, w_idx), ctx.nullifying_game(i, u_idx))
                }
            };
            let admissible = |w: &Game, u: &Game| w.grand_worth() == u.grand_worth();
            let count = |idx: u64| {
                let (_, w, u) = constrained(idx);
                if admissible(&w, &u) { free.len() as u64 } else { 0 }
            };
            let find = |idx: u64| {
                let (i, w, u) = constrained(idx);
                if !admissible(&w, &u) {
                    return None;
                }
                for v in &free {
                    if let Some(raw) = eval(&[v, &w, &u], &[i], &[], None) {
                        return Some(raw);
                    }
                }
                None
            };
            Ok(run_plan(mode, outer_len, max_instances, count, find))
        }
        AxiomId::Additivity | AxiomId::Linearity => {
            let free = ctx.capped_free_games()?;
            let len = free.len() as u64;
            let outer_len = len * len;
            let scalar_pairs: Vec<(Rat, Rat)> = if axiom == AxiomId::Linearity {
                let pool = linearity_scalar_pool();
                pool.iter()
                    .flat_map(|a| pool.iter().map(move |b| (a.clone(), b.clone())))
                    .take(SCALAR_PAIR_CAP as usize)
                    .collect()
            } else {
                Vec::new()
            };
            let per_unit = if axiom == AxiomId::Linearity { scalar_pairs.len() as u64 } else { 1 };
            let count = |_: u64| per_unit;
            let find = |idx: u64| {
                let v = &free[(idx / len) as usize];
                let w = &free[(idx % len) as usize];
                if axiom == AxiomId::Additivity {
                    return eval(&[v, w], &[], &[], None);
                }
                for (a, b) in &scalar_pairs {
                    if let Some(raw) = eval(&[v, w], &[], &[a.clone(), b.clone()], None) {
                        return Some(raw);
                    }
                }
                None
            };
            Ok(run_plan(mode, outer_len, max_instances, count, find))
        }
        AxiomId::WeakMonotonicity => {
            let free = ctx.capped_free_games()?;
            let len = free.len() as u64;
            let outer_len = (n as u64) * len;
            let admissible = |v: &Game, w: &Game, i: PlayerId| -> bool {
                v.grand_worth() >= w.grand_worth()
                    && coalitions_without(n, i).all(|s| {
                        v.worth(s.insert(i)) - v.worth(s) >= w.worth(s.insert(i)) - w.worth(s)
                    })
            };
            let unit = |idx: u64| -> (PlayerId, &Game) {
                let i = PlayerId::new((idx / len) as usize + 1).expect("positive");
                (i, &free[(idx % len) as usize])
            };
            let count = |idx: u64| {
                let (i, w) = unit(idx);
                free.iter().filter(|v| admissible(v, w, i)).count() as u64
            };
            let find = |idx: u64| {
                let (i, w) = unit(idx);
                for v in free.iter().filter(|v| admissible(v, w, i)) {
                    if let Some(raw) = eval(&[v, w], &[i], &[], None) {
                        return Some(raw);
                    }
                }
                None
            };
            Ok(run_plan(mode, outer_len, max_instances, count, find))
        }
    }
}

fn domain_too_large() -> Error {
    Error::InvalidStrategy("exhaustive domain too large; reduce the grid or player count".into())
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    use itertools::Itertools;
    (1..=n)
        .permutations(n)
        .map(|image| Permutation::from_one_based(image).expect("permuted identity"))
        .collect()
}

/// The admissible `(players, permutation)` combinations of a single-game
/// axiom at a fixed game.
fn single_game_units<'a>(
    axiom: AxiomId,
    game: &Game,
    perms: &'a [Permutation],
) -> Vec<(Vec<PlayerId>, Option<&'a Permutation>)> {
    let n = game.n();
    match axiom {
        AxiomId::Efficiency => vec![(Vec::new(), None)],
        AxiomId::Symmetry => {
            game.symmetric_pairs().into_iter().map(|(i, j)| (vec![i, j], None)).collect()
        }
        AxiomId::Anonymity => perms
            .iter()
            .flat_map(|pi| players(n).map(move |i| (vec![i], Some(pi))))
            .collect(),
        AxiomId::NullPlayerProperty => {
            game.null_players().into_iter().map(|i| (vec![i], None)).collect()
        }
        AxiomId::NullPlayerProductiveEnvironment => {
            if game.grand_worth().is_negative() {
                return Vec::new();
            }
            game.null_players().into_iter().map(|i| (vec![i], None)).collect()
        }
        AxiomId::NullifyingPlayerProperty => {
            game.nullifying_players().into_iter().map(|i| (vec![i], None)).collect()
        }
        _ => unreachable!("not a single-game axiom"),
    }
}
