//! Fairness axioms as decidable predicates, instance generators, and
//! counterexample search.
//!
//! Each axiom is universally quantified in its statement; testing can only
//! decide concrete instances. A [`Verdict::Passed`] therefore means "no
//! counterexample within the strategy's budget", never a proof, while a
//! [`Verdict::Counterexample`] is a concrete, re-checkable refutation.

mod generate;
mod predicate;
mod search;

pub(crate) mod exec;

pub use generate::generate_instance;
pub(crate) use generate::membership_probe_game as random_membership_game;
pub use predicate::{instance_holds, validate_instance};
pub use search::{
    AxiomReport, FREE_GAME_SLOT_CAP, SCALAR_PAIR_CAP, axiom_report, scalar_pool,
    search_counterexample, search_counterexample_sequential,
};

use std::fmt;

use crate::coalition::{Permutation, PlayerId};
use crate::game::{Game, PayoffVector};
use crate::rational::Rat;

/// The thirteen axioms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AxiomId {
    /// Payoffs sum to the worth of the grand coalition: `Σ_i φ_i(v) = v(N)`.
    Efficiency,
    /// `φ(v+w) = φ(v) + φ(w)`.
    Additivity,
    /// `φ(av+bw) = aφ(v) + bφ(w)`.
    Linearity,
    /// Symmetric players receive identical payoffs.
    Symmetry,
    /// `φ_i(v) = φ_{π(i)}(πv)` for every relabelling `π`.
    Anonymity,
    /// A null player receives 0.
    NullPlayerProperty,
    /// Adding a game in which `i` is null leaves `i`'s payoff unchanged:
    /// `φ_i(v+w) = φ_i(v)`.
    CoalitionalStrategicEquivalence,
    /// `φ_i(v+w) = φ_i(v+u)` whenever `i` is null in both `w` and `u` and
    /// `w(N) = u(N)`.
    NullPlayerNeutrality,
    /// A null player receives a nonnegative payoff whenever `v(N) ≥ 0`.
    NullPlayerProductiveEnvironment,
    /// `φ_i(v) ≥ φ_i(w)` whenever `v(N) ≥ w(N)` and `i`'s marginals in `v`
    /// dominate those in `w`.
    WeakMonotonicity,
    /// A nullifying player receives 0.
    NullifyingPlayerProperty,
    /// Adding a game in which `i` is nullifying leaves `i`'s payoff
    /// unchanged.
    CoalitionalStandardEquivalence,
    /// `φ_i(v+w) = φ_i(v+u)` whenever `i` is nullifying in both `w` and `u`
    /// and `w(N) = u(N)`.
    NullifyingPlayerNeutrality,
}

impl AxiomId {
    pub const ALL: [AxiomId; 13] = [
        AxiomId::Efficiency,
        AxiomId::Additivity,
        AxiomId::Linearity,
        AxiomId::Symmetry,
        AxiomId::Anonymity,
        AxiomId::NullPlayerProperty,
        AxiomId::CoalitionalStrategicEquivalence,
        AxiomId::NullPlayerNeutrality,
        AxiomId::NullPlayerProductiveEnvironment,
        AxiomId::WeakMonotonicity,
        AxiomId::NullifyingPlayerProperty,
        AxiomId::CoalitionalStandardEquivalence,
        AxiomId::NullifyingPlayerNeutrality,
    ];

    pub fn id(self) -> &'static str {
        match self {
            AxiomId::Efficiency => "efficiency",
            AxiomId::Additivity => "additivity",
            AxiomId::Linearity => "linearity",
            AxiomId::Symmetry => "symmetry",
            AxiomId::Anonymity => "anonymity",
            AxiomId::NullPlayerProperty => "null_player_property",
            AxiomId::CoalitionalStrategicEquivalence => "coalitional_strategic_equivalence",
            AxiomId::NullPlayerNeutrality => "null_player_neutrality",
            AxiomId::NullPlayerProductiveEnvironment => "null_player_productive_environment",
            AxiomId::WeakMonotonicity => "weak_monotonicity",
            AxiomId::NullifyingPlayerProperty => "nullifying_player_property",
            AxiomId::CoalitionalStandardEquivalence => "coalitional_standard_equivalence",
            AxiomId::NullifyingPlayerNeutrality => "nullifying_player_neutrality",
        }
    }

    /// Number of games in this axiom's instance shape.
    pub fn game_slots(self) -> usize {
        match self {
            AxiomId::Efficiency
            | AxiomId::Symmetry
            | AxiomId::Anonymity
            | AxiomId::NullPlayerProperty
            | AxiomId::NullPlayerProductiveEnvironment
            | AxiomId::NullifyingPlayerProperty => 1,
            AxiomId::Additivity
            | AxiomId::CoalitionalStrategicEquivalence
            | AxiomId::WeakMonotonicity
            | AxiomId::CoalitionalStandardEquivalence => 2,
            AxiomId::Linearity => 2,
            AxiomId::NullPlayerNeutrality | AxiomId::NullifyingPlayerNeutrality => 3,
        }
    }

    /// Number of players in this axiom's instance shape.
    pub fn player_slots(self) -> usize {
        match self {
            AxiomId::Efficiency | AxiomId::Additivity | AxiomId::Linearity => 0,
            AxiomId::Symmetry => 2,
            _ => 1,
        }
    }

    /// Number of scalars in this axiom's instance shape.
    pub fn scalar_slots(self) -> usize {
        match self {
            AxiomId::Linearity => 2,
            _ => 0,
        }
    }

    pub fn needs_permutation(self) -> bool {
        self == AxiomId::Anonymity
    }

    /// True for axioms whose predicate is an inequality rather than an
    /// equality.
    pub fn is_inequality(self) -> bool {
        matches!(
            self,
            AxiomId::NullPlayerProductiveEnvironment | AxiomId::WeakMonotonicity
        )
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// The quantified variables of one axiom check: the games, players, and
/// scalars the predicate consumes, plus the relabelling for anonymity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomInstance {
    pub games: Vec<Game>,
    pub players: Vec<PlayerId>,
    pub scalars: Vec<Rat>,
    pub permutation: Option<Permutation>,
}

impl AxiomInstance {
    pub fn new(games: Vec<Game>, players: Vec<PlayerId>, scalars: Vec<Rat>) -> AxiomInstance {
        AxiomInstance { games, players, scalars, permutation: None }
    }

    pub fn with_permutation(mut self, permutation: Permutation) -> AxiomInstance {
        self.permutation = Some(permutation);
        self
    }

    /// Builds an instance and checks it against the axiom's shape and
    /// preconditions.
    pub fn checked(
        axiom: AxiomId,
        games: Vec<Game>,
        players: Vec<PlayerId>,
        scalars: Vec<Rat>,
        permutation: Option<Permutation>,
    ) -> crate::Result<AxiomInstance> {
        let instance = AxiomInstance { games, players, scalars, permutation };
        validate_instance(axiom, &instance)?;
        Ok(instance)
    }
}

impl fmt::Display for AxiomInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "games: [")?;
        for (k, g) in self.games.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")?;
        if !self.players.is_empty() {
            write!(f, ", players: [")?;
            for (k, p) in self.players.iter().enumerate() {
                if k > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")?;
        }
        if !self.scalars.is_empty() {
            write!(f, ", scalars: [")?;
            for (k, s) in self.scalars.iter().enumerate() {
                if k > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, "]")?;
        }
        if let Some(pi) = &self.permutation {
            write!(f, ", permutation: {pi}")?;
        }
        Ok(())
    }
}

/// One side of an evaluated predicate: a single payoff or a whole vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value {
    Scalar(Rat),
    Vector(PayoffVector),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(r) => write!(f, "{r}"),
            Value::Vector(pv) => write!(f, "{pv}"),
        }
    }
}

/// The outcome of a counterexample search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// Every instance in the strategy's budget satisfied the predicate.
    Passed { instances_checked: u64 },
    /// A concrete violation; `instance` re-fails `instance_holds` when
    /// re-evaluated, and `lhs`/`rhs` are the two sides of the broken
    /// (in)equality.
    Counterexample { instance: Box<AxiomInstance>, lhs: Value, rhs: Value },
    /// A caller-imposed instance limit stopped the search before the
    /// strategy's domain was fully enumerated; distinct from `Passed`.
    BudgetExhausted { instances_checked: u64 },
}

impl Verdict {
    pub fn is_passed(&self) -> bool {
        matches!(self, Verdict::Passed { .. })
    }

    pub fn is_counterexample(&self) -> bool {
        matches!(self, Verdict::Counterexample { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Passed { instances_checked } => {
                write!(f, "passed ({instances_checked} instances)")
            }
            Verdict::Counterexample { instance, lhs, rhs } => {
                write!(f, "counterexample: {instance}; lhs = {lhs}, rhs = {rhs}")
            }
            Verdict::BudgetExhausted { instances_checked } => {
                write!(f, "budget exhausted after {instances_checked} instances (inconclusive)")
            }
        }
    }
}

/// How to look for counterexamples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SearchStrategy {
    /// Deterministic lexicographic enumeration of all shape-admissible
    /// instances over games whose nonempty-coalition worths range over
    /// `grid`. Multi-game shapes cap the free game slot (see
    /// [`FREE_GAME_SLOT_CAP`]); `max_instances` optionally bounds the
    /// whole search, reporting [`Verdict::BudgetExhausted`] when hit.
    Exhaustive { grid: Vec<Rat>, n: usize, max_instances: Option<u64> },
    /// `trials` generated instances, deterministic in `seed`.
    Random { n: usize, trials: u64, seed: u64 },
    /// The curated instances embedded in the corpus; an empty id list
    /// means all bundles.
    Witnesses { ids: Vec<String> },
}

impl SearchStrategy {
    /// The default grid `{-1, 0, 1, 2}` at `n = 3`: the smallest setting
    /// that reproduces every witness class in the corpus.
    pub fn exhaustive_default() -> SearchStrategy {
        use crate::rational::rint;
        SearchStrategy::Exhaustive {
            grid: vec![rint(-1), rint(0), rint(1), rint(2)],
            n: 3,
            max_instances: None,
        }
    }

    pub fn validate(&self) -> crate::Result<()> {
        use crate::error::Error;
        match self {
            SearchStrategy::Exhaustive { grid, n, .. } => {
                if grid.is_empty() {
                    return Err(Error::InvalidStrategy("exhaustive grid is empty".into()));
                }
                if *n < 2 {
                    return Err(Error::InvalidStrategy(format!(
                        "exhaustive search needs n >= 2, got {n}"
                    )));
                }
                Ok(())
            }
            SearchStrategy::Random { trials, n, .. } => {
                if *trials == 0 {
                    return Err(Error::InvalidStrategy("random search needs trials > 0".into()));
                }
                if *n < 2 {
                    return Err(Error::InvalidStrategy(format!(
                        "random search needs n >= 2, got {n}"
                    )));
                }
                Ok(())
            }
            SearchStrategy::Witnesses { .. } => Ok(()),
        }
    }
}

impl fmt::Display for SearchStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchStrategy::Exhaustive { grid, n, max_instances } => {
                write!(f, "exhaustive grid=[")?;
                for (k, g) in grid.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, "] n={n}")?;
                if let Some(cap) = max_instances {
                    write!(f, " max_instances={cap}")?;
                }
                Ok(())
            }
            SearchStrategy::Random { n, trials, seed } => {
                write!(f, "random n={n} trials={trials} seed={seed}")
            }
            SearchStrategy::Witnesses { ids } => {
                if ids.is_empty() {
                    write!(f, "witnesses (all bundles)")
                } else {
                    write!(f, "witnesses {ids:?}")
                }
            }
        }
    }
}
