//! Embedded witness games and machine-checkable facts about them.
//!
//! Each bundle holds a small set of named games plus the facts they
//! witness: player classifications, exact payoff values, and concrete
//! axiom violations. Every fact re-verifies through the public APIs of
//! the other modules, and `run_all_witnesses` replays the whole set as a
//! regression suite. Derived payoff values carry a provenance note saying
//! how they were computed.

use std::fmt;
use std::sync::LazyLock;

use crate::axioms::{AxiomId, AxiomInstance, instance_holds};
use crate::coalition::{Coalition, Permutation, PlayerId};
use crate::error::{Error, Result};
use crate::game::Game;
use crate::rational::{Rat, rat, rint};
use crate::solutions::{
    SolutionSpec, evaluate, shapley, shapley_oracle, shapley_via_dividends,
};

/// A named set of games plus the checkable facts they witness.
#[derive(Clone, Debug)]
pub struct WitnessBundle {
    pub id: &'static str,
    pub description: &'static str,
    pub games: Vec<(&'static str, Game)>,
    pub facts: Vec<Fact>,
}

impl WitnessBundle {
    pub fn game(&self, name: &str) -> Result<&Game> {
        self.games
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, g)| g)
            .ok_or_else(|| Error::UnknownWitness(format!("{}:{name}", self.id)))
    }

    fn sum(&self, names: &[String]) -> Result<Game> {
        let mut acc = self.game(&names[0])?.clone();
        for name in &names[1..] {
            acc = &acc + self.game(name)?;
        }
        Ok(acc)
    }
}

/// One checkable assertion, with a provenance note for its expected values.
#[derive(Clone, Debug)]
pub struct Fact {
    pub description: String,
    pub note: &'static str,
    pub kind: FactKind,
}

#[derive(Clone, Debug)]
pub enum FactKind {
    NullIn { game: String, player: PlayerId },
    NullifyingIn { game: String, player: PlayerId },
    GrandWorth { game: String, expected: Rat },
    GrandWorthsEqual { left: String, right: String },
    /// `solution` applied to the sum of the named games pays `player`
    /// exactly `expected`.
    PayoffIs { solution: SolutionSpec, games: Vec<String>, player: PlayerId, expected: Rat },
    /// The two summed games give `player` different payoffs.
    PayoffsDiffer {
        solution: SolutionSpec,
        left: Vec<String>,
        right: Vec<String>,
        player: PlayerId,
    },
    AxiomViolated { axiom: AxiomId, solution: SolutionSpec, instance: AxiomInstance },
    AxiomHolds { axiom: AxiomId, solution: SolutionSpec, instance: AxiomInstance },
    /// The three Shapley routes (weighted-marginal, dividends, permutation
    /// enumeration) agree on the sum of the named games.
    ShapleyRoutesAgree { games: Vec<String> },
}

/// Outcome of replaying one fact.
#[derive(Clone, Debug)]
pub struct FactOutcome {
    pub description: String,
    pub note: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct BundleReport {
    pub id: &'static str,
    pub description: &'static str,
    pub facts: Vec<FactOutcome>,
}

impl BundleReport {
    pub fn all_passed(&self) -> bool {
        self.facts.iter().all(|f| f.passed)
    }
}

#[derive(Clone, Debug)]
pub struct RegressionReport {
    pub bundles: Vec<BundleReport>,
}

impl RegressionReport {
    pub fn all_passed(&self) -> bool {
        self.bundles.iter().all(BundleReport::all_passed)
    }

    pub fn fact_count(&self) -> usize {
        self.bundles.iter().map(|b| b.facts.len()).sum()
    }
}

impl fmt::Display for RegressionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bundle in &self.bundles {
            writeln!(f, "{} — {}", bundle.id, bundle.description)?;
            for fact in &bundle.facts {
                writeln!(
                    f,
                    "  [{}] {}",
                    if fact.passed { "pass" } else { "FAIL" },
                    fact.description
                )?;
            }
        }
        Ok(())
    }
}

fn p(i: usize) -> PlayerId {
    PlayerId::new(i).expect("positive index")
}

fn c(members: &[usize]) -> Coalition {
    Coalition::from_players(members.iter().map(|&i| p(i)))
}

fn g(n: usize, rows: &[(&[usize], Rat)]) -> Game {
    Game::from_assignments(n, rows.iter().map(|(m, v)| (c(m), v.clone())))
        .expect("witness tables are well-formed")
}

fn fact(description: impl Into<String>, note: &'static str, kind: FactKind) -> Fact {
    Fact { description: description.into(), note, kind }
}

const STATED: &str = "value stated alongside the witness table";
const DERIVED_EVAL: &str = "value derived by direct branch evaluation";
const DERIVED_ORACLE: &str = "value derived via the permutation oracle";
const TABLE: &str = "read off the witness table";

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

static BUNDLES: LazyLock<Vec<WitnessBundle>> = LazyLock::new(|| {
    let mut bundles = Vec::new();

    // W1: phi1 pays a null player differently under two augmentations that
    // preserve the grand-coalition worth, even though it always pays null
    // players zero on their own games.
    {
        let v = g(3, &[(&[1], rint(1)), (&[2], rint(1)), (&[3], rint(1)), (&[1, 2, 3], rint(2))]);
        let w = g(
            3,
            &[(&[2], rint(2)), (&[1, 2], rint(2)), (&[2, 3], rint(2)), (&[1, 2, 3], rint(2))],
        );
        let u = g(3, &[(&[2, 3], rint(2)), (&[1, 2, 3], rint(2))]);
        let npn_instance = AxiomInstance::new(
            vec![v.clone(), w.clone(), u.clone()],
            vec![p(1)],
            vec![],
        );
        let npp_w = AxiomInstance::new(vec![w.clone()], vec![p(1)], vec![]);
        let npp_u = AxiomInstance::new(vec![u.clone()], vec![p(1)], vec![]);
        bundles.push(WitnessBundle {
            id: "W1",
            description: "phi1 keeps the null player property but not null player neutrality",
            games: vec![("v", v), ("w", w), ("u", u)],
            facts: vec![
                fact("player 1 is null in w", TABLE, FactKind::NullIn { game: "w".into(), player: p(1) }),
                fact("player 1 is null in u", TABLE, FactKind::NullIn { game: "u".into(), player: p(1) }),
                fact("w(N) = 2", TABLE, FactKind::GrandWorth { game: "w".into(), expected: rint(2) }),
                fact(
                    "w(N) = u(N)",
                    TABLE,
                    FactKind::GrandWorthsEqual { left: "w".into(), right: "u".into() },
                ),
                fact(
                    "phi1 pays player 1 exactly 4/5 on v+w",
                    DERIVED_EVAL,
                    FactKind::PayoffIs {
                        solution: SolutionSpec::Phi1,
                        games: names(&["v", "w"]),
                        player: p(1),
                        expected: rat(4, 5),
                    },
                ),
                fact(
                    "phi1 pays player 1 exactly 4/3 on v+u",
                    DERIVED_EVAL,
                    FactKind::PayoffIs {
                        solution: SolutionSpec::Phi1,
                        games: names(&["v", "u"]),
                        player: p(1),
                        expected: rat(4, 3),
                    },
                ),
                fact(
                    "phi1 pays player 1 differently on v+w and v+u",
                    STATED,
                    FactKind::PayoffsDiffer {
                        solution: SolutionSpec::Phi1,
                        left: names(&["v", "w"]),
                        right: names(&["v", "u"]),
                        player: p(1),
                    },
                ),
                fact(
                    "phi1 violates null player neutrality on (v, w, u, 1)",
                    STATED,
                    FactKind::AxiomViolated {
                        axiom: AxiomId::NullPlayerNeutrality,
                        solution: SolutionSpec::Phi1,
                        instance: npn_instance,
                    },
                ),
                fact(
                    "phi1 pays the null player zero on w itself",
                    DERIVED_EVAL,
                    FactKind::AxiomHolds {
                        axiom: AxiomId::NullPlayerProperty,
                        solution: SolutionSpec::Phi1,
                        instance: npp_w,
                    },
                ),
                fact(
                    "phi1 pays the null player zero on u itself",
                    DERIVED_EVAL,
                    FactKind::AxiomHolds {
                        axiom: AxiomId::NullPlayerProperty,
                        solution: SolutionSpec::Phi1,
                        instance: npp_u,
                    },
                ),
            ],
        });
    }

    // W2: max_v1 respects null players in productive environments but not
    // null player neutrality.
    {
        let v = Game::zero(3).expect("n = 3");
        let w = Game::zero(3).expect("n = 3");
        let u = g(3, &[(&[1], rint(1)), (&[1, 2], rint(1))]);
        let npn_instance =
            AxiomInstance::new(vec![v.clone(), w.clone(), u.clone()], vec![p(2)], vec![]);
        let nppe_instance = AxiomInstance::new(vec![u.clone()], vec![p(2)], vec![]);
        bundles.push(WitnessBundle {
            id: "W2",
            description: "max_v1 respects productive-environment nonnegativity but not null player neutrality",
            games: vec![("v", v), ("w", w), ("u", u)],
            facts: vec![
                fact("player 2 is null in w", TABLE, FactKind::NullIn { game: "w".into(), player: p(2) }),
                fact("player 2 is null in u", TABLE, FactKind::NullIn { game: "u".into(), player: p(2) }),
                fact(
                    "w(N) = u(N)",
                    TABLE,
                    FactKind::GrandWorthsEqual { left: "w".into(), right: "u".into() },
                ),
                fact(
                    "max_v1 pays player 2 exactly 0 on v+w",
                    STATED,
                    FactKind::PayoffIs {
                        solution: SolutionSpec::MaxV1,
                        games: names(&["v", "w"]),
                        player: p(2),
                        expected: rint(0),
                    },
                ),
                fact(
                    "max_v1 pays player 2 exactly 1 on v+u",
                    STATED,
                    FactKind::PayoffIs {
                        solution: SolutionSpec::MaxV1,
                        games: names(&["v", "u"]),
                        player: p(2),
                        expected: rint(1),
                    },
                ),
                fact(
                    "max_v1 violates null player neutrality on (v, w, u, 2)",
                    STATED,
                    FactKind::AxiomViolated {
                        axiom: AxiomId::NullPlayerNeutrality,
                        solution: SolutionSpec::MaxV1,
                        instance: npn_instance,
                    },
                ),
                fact(
                    "max_v1 pays the null player nonnegatively on u",
                    DERIVED_EVAL,
                    FactKind::AxiomHolds {
                        axiom: AxiomId::NullPlayerProductiveEnvironment,
                        solution: SolutionSpec::MaxV1,
                        instance: nppe_instance,
                    },
                ),
            ],
        });
    }

    // W3: phi2 keeps the nullifying player property but not nullifying
    // player neutrality.
    {
        let v = Game::constant(3, &rint(1)).expect("n = 3");
        let w = Game::zero(3).expect("n = 3");
        let u = g(3, &[(&[2], rint(1)), (&[3], rint(1)), (&[2, 3], rint(1))]);
        let nfpn_instance =
            AxiomInstance::new(vec![v.clone(), w.clone(), u.clone()], vec![p(1)], vec![]);
        let nfpp_w = AxiomInstance::new(vec![w.clone()], vec![p(1)], vec![]);
        let nfpp_u = AxiomInstance::new(vec![u.clone()], vec![p(1)], vec![]);
        bundles.push(WitnessBundle {
            id: "W3",
            description: "phi2 keeps the nullifying player property but not nullifying player neutrality",
            games: vec![("v", v), ("w", w), ("u", u)],
            facts: vec![
                fact(
                    "player 1 is nullifying in w",
                    TABLE,
                    FactKind::NullifyingIn { game: "w".into(), player: p(1) },
                ),
                fact(
                    "player 1 is nullifying in u",
                    TABLE,
                    FactKind::NullifyingIn { game: "u".into(), player: p(1) },
                ),
                fact(
                    "w(N) = u(N)",
                    TABLE,
                    FactKind::GrandWorthsEqual { left: "w".into(), right: "u".into() },
                ),
                fact(
                    "phi2 pays player 1 exactly 1/3 on v+w",
                    DERIVED_EVAL,
                    FactKind::PayoffIs {
                        solution: SolutionSpec::Phi2,
                        games: names(&["v", "w"]),
                        player: p(1),
                        expected: rat(1, 3),
                    },
                ),
                fact(
                    "phi2 pays player 1 exactly -1/3 on v+u",
                    DERIVED_ORACLE,
                    FactKind::PayoffIs {
                        solution: SolutionSpec::Phi2,
                        games: names(&["v", "u"]),
                        player: p(1),
                        expected: rat(-1, 3),
                    },
                ),
                fact(
                    "the three Shapley routes agree on v+u",
                    DERIVED_ORACLE,
                    FactKind::ShapleyRoutesAgree { games: names(&["v", "u"]) },
                ),
                fact(
                    "phi2 violates nullifying player neutrality on (v, w, u, 1)",
                    STATED,
                    FactKind::AxiomViolated {
                        axiom: AxiomId::NullifyingPlayerNeutrality,
                        solution: SolutionSpec::Phi2,
                        instance: nfpn_instance,
                    },
                ),
                fact(
                    "phi2 pays the nullifying player zero on w itself",
                    DERIVED_EVAL,
                    FactKind::AxiomHolds {
                        axiom: AxiomId::NullifyingPlayerProperty,
                        solution: SolutionSpec::Phi2,
                        instance: nfpp_w,
                    },
                ),
                fact(
                    "phi2 pays the nullifying player zero on u itself",
                    DERIVED_EVAL,
                    FactKind::AxiomHolds {
                        axiom: AxiomId::NullifyingPlayerProperty,
                        solution: SolutionSpec::Phi2,
                        instance: nfpp_u,
                    },
                ),
            ],
        });
    }

    // W4: independence witnesses for the egalitarian-family
    // characterization: dropping any one of efficiency, symmetry, or
    // neutrality admits a solution outside the family.
    {
        let zero = Game::zero(3).expect("n = 3");
        let u_grand = Game::unanimity(3, c(&[1, 2, 3])).expect("n = 3");
        let u_1 = Game::unanimity(3, c(&[1])).expect("n = 3");
        let u_2 = Game::unanimity(3, c(&[2])).expect("n = 3");
        let u_23 = Game::unanimity(3, c(&[2, 3])).expect("n = 3");
        let esd_npn = AxiomInstance::new(
            vec![zero.clone(), u_2.clone(), u_23.clone()],
            vec![p(1)],
            vec![],
        );
        let egal_npn = AxiomInstance::new(
            vec![zero.clone(), u_2.clone(), u_23.clone()],
            vec![p(1)],
            vec![],
        );
        let egal_nppe = AxiomInstance::new(vec![u_1.clone()], vec![p(3)], vec![]);
        let zero_eff = AxiomInstance::new(vec![u_grand.clone()], vec![], vec![]);
        let asym_sym = AxiomInstance::new(vec![u_grand.clone()], vec![p(1), p(2)], vec![]);
        bundles.push(WitnessBundle {
            id: "W4",
            description: "independence witnesses for the egalitarian-family characterization",
            games: vec![
                ("zero", zero),
                ("u_grand", u_grand),
                ("u_1", u_1),
                ("u_2", u_2),
                ("u_23", u_23),
            ],
            facts: vec![
                fact(
                    "the zero solution violates efficiency on u_grand",
                    STATED,
                    FactKind::AxiomViolated {
                        axiom: AxiomId::Efficiency,
                        solution: SolutionSpec::Zero,
                        instance: zero_eff,
                    },
                ),
                fact(
                    "asym_first_player violates symmetry on u_grand",
                    STATED,
                    FactKind::AxiomViolated {
                        axiom: AxiomId::Symmetry,
                        solution: SolutionSpec::AsymFirstPlayer,
                        instance: asym_sym,
                    },
                ),
                fact(
                    "equal_surplus_division violates null player neutrality on (zero, u_2, u_23, 1)",
                    STATED,
                    FactKind::AxiomViolated {
                        axiom: AxiomId::NullPlayerNeutrality,
                        solution: SolutionSpec::EqualSurplusDivision,
                        instance: esd_npn,
                    },
                ),
                fact(
                    "equal_surplus_division pays player 1 exactly 0 on zero+u_2",
                    DERIVED_EVAL,
                    FactKind::PayoffIs {
                        solution: SolutionSpec::EqualSurplusDivision,
                        games: names(&["zero", "u_2"]),
                        player: p(1),
                        expected: rint(0),
                    },
                ),
                fact(
                    "equal_surplus_division pays player 1 exactly 1/3 on zero+u_23",
                    DERIVED_EVAL,
                    FactKind::PayoffIs {
                        solution: SolutionSpec::EqualSurplusDivision,
                        games: names(&["zero", "u_23"]),
                        player: p(1),
                        expected: rat(1, 3),
                    },
                ),
                fact(
                    "egalitarian(-1) keeps null player neutrality on the same triple",
                    DERIVED_EVAL,
                    FactKind::AxiomHolds {
                        axiom: AxiomId::NullPlayerNeutrality,
                        solution: SolutionSpec::egalitarian(rint(-1)),
                        instance: egal_npn,
                    },
                ),
                fact(
                    "egalitarian(-1) pays a null player negatively in a productive environment",
                    DERIVED_EVAL,
                    FactKind::AxiomViolated {
                        axiom: AxiomId::NullPlayerProductiveEnvironment,
                        solution: SolutionSpec::egalitarian(rint(-1)),
                        instance: egal_nppe,
                    },
                ),
                fact(
                    "egalitarian(-1) pays player 3 exactly -1/3 on u_1",
                    DERIVED_EVAL,
                    FactKind::PayoffIs {
                        solution: SolutionSpec::egalitarian(rint(-1)),
                        games: names(&["u_1"]),
                        player: p(3),
                        expected: rat(-1, 3),
                    },
                ),
            ],
        });
    }

    // W5: independence witnesses for the equal-division characterization;
    // in particular Shapley fails nullifying player neutrality.
    {
        let zero = Game::zero(3).expect("n = 3");
        let u_grand = Game::unanimity(3, c(&[1, 2, 3])).expect("n = 3");
        let nf_u = g(3, &[(&[2], rint(1))]);
        let sh_nfpn = AxiomInstance::new(
            vec![zero.clone(), zero.clone(), nf_u.clone()],
            vec![p(1)],
            vec![],
        );
        let ed_nfpn = AxiomInstance::new(
            vec![zero.clone(), zero.clone(), nf_u.clone()],
            vec![p(1)],
            vec![],
        );
        let zero_eff = AxiomInstance::new(vec![u_grand.clone()], vec![], vec![]);
        let asym_sym = AxiomInstance::new(vec![u_grand.clone()], vec![p(2), p(3)], vec![]);
        bundles.push(WitnessBundle {
            id: "W5",
            description: "independence witnesses for the equal-division characterization",
            games: vec![("zero", zero), ("u_grand", u_grand), ("nf_u", nf_u)],
            facts: vec![
                fact(
                    "player 1 is nullifying in nf_u",
                    TABLE,
                    FactKind::NullifyingIn { game: "nf_u".into(), player: p(1) },
                ),
                fact(
                    "the zero solution violates efficiency on u_grand",
                    STATED,
                    FactKind::AxiomViolated {
                        axiom: AxiomId::Efficiency,
                        solution: SolutionSpec::Zero,
                        instance: zero_eff,
                    },
                ),
                fact(
                    "asym_first_player keeps symmetry between players 2 and 3 on u_grand",
                    DERIVED_EVAL,
                    FactKind::AxiomHolds {
                        axiom: AxiomId::Symmetry,
                        solution: SolutionSpec::AsymFirstPlayer,
                        instance: asym_sym,
                    },
                ),
                fact(
                    "shapley violates nullifying player neutrality on (zero, zero, nf_u, 1)",
                    STATED,
                    FactKind::AxiomViolated {
                        axiom: AxiomId::NullifyingPlayerNeutrality,
                        solution: SolutionSpec::Shapley,
                        instance: sh_nfpn,
                    },
                ),
                fact(
                    "shapley pays player 1 exactly -1/6 on zero+nf_u",
                    DERIVED_ORACLE,
                    FactKind::PayoffIs {
                        solution: SolutionSpec::Shapley,
                        games: names(&["zero", "nf_u"]),
                        player: p(1),
                        expected: rat(-1, 6),
                    },
                ),
                fact(
                    "the three Shapley routes agree on zero+nf_u",
                    DERIVED_ORACLE,
                    FactKind::ShapleyRoutesAgree { games: names(&["zero", "nf_u"]) },
                ),
                fact(
                    "equal_division keeps nullifying player neutrality on the same triple",
                    DERIVED_EVAL,
                    FactKind::AxiomHolds {
                        axiom: AxiomId::NullifyingPlayerNeutrality,
                        solution: SolutionSpec::EqualDivision,
                        instance: ed_nfpn,
                    },
                ),
            ],
        });
    }

    bundles
});

/// All embedded bundles, in id order.
pub fn all_witnesses() -> &'static [WitnessBundle] {
    &BUNDLES
}

/// Looks up one bundle by id.
pub fn witness(id: &str) -> Result<&'static WitnessBundle> {
    BUNDLES
        .iter()
        .find(|b| b.id == id)
        .ok_or_else(|| Error::UnknownWitness(id.to_string()))
}

fn check_fact(bundle: &WitnessBundle, kind: &FactKind) -> Result<bool> {
    Ok(match kind {
        FactKind::NullIn { game, player } => {
            bundle.game(game)?.null_players().contains(player)
        }
        FactKind::NullifyingIn { game, player } => {
            bundle.game(game)?.nullifying_players().contains(player)
        }
        FactKind::GrandWorth { game, expected } => bundle.game(game)?.grand_worth() == expected,
        FactKind::GrandWorthsEqual { left, right } => {
            bundle.game(left)?.grand_worth() == bundle.game(right)?.grand_worth()
        }
        FactKind::PayoffIs { solution, games, player, expected } => {
            evaluate(solution, &bundle.sum(games)?)?.get(*player) == expected
        }
        FactKind::PayoffsDiffer { solution, left, right, player } => {
            evaluate(solution, &bundle.sum(left)?)?.get(*player)
                != evaluate(solution, &bundle.sum(right)?)?.get(*player)
        }
        FactKind::AxiomViolated { axiom, solution, instance } => {
            !instance_holds(*axiom, solution, instance)?
        }
        FactKind::AxiomHolds { axiom, solution, instance } => {
            instance_holds(*axiom, solution, instance)?
        }
        FactKind::ShapleyRoutesAgree { games } => {
            let sum = bundle.sum(games)?;
            let direct = shapley(&sum);
            direct == shapley_via_dividends(&sum) && direct == shapley_oracle(&sum)?
        }
    })
}

/// Replays every fact of every bundle and reports pass/fail per fact. All
/// facts pass in a correct build.
pub fn run_all_witnesses() -> RegressionReport {
    let bundles = BUNDLES
        .iter()
        .map(|bundle| {
            let facts = bundle
                .facts
                .iter()
                .map(|fact| match check_fact(bundle, &fact.kind) {
                    Ok(passed) => FactOutcome {
                        description: fact.description.clone(),
                        note: fact.note,
                        passed,
                        detail: None,
                    },
                    Err(e) => FactOutcome {
                        description: fact.description.clone(),
                        note: fact.note,
                        passed: false,
                        detail: Some(e.to_string()),
                    },
                })
                .collect();
            BundleReport { id: bundle.id, description: bundle.description, facts }
        })
        .collect();
    RegressionReport { bundles }
}

/// The curated instance pool for witness-mode axiom searches, in the order
/// the searches evaluate them.
pub fn witness_instances(axiom: AxiomId) -> Vec<(String, AxiomInstance)> {
    let bundle_game = |id: &str, name: &str| -> Game {
        witness(id)
            .expect("embedded bundle")
            .game(name)
            .expect("embedded game")
            .clone()
    };
    let inst = |id: &str,
                games: &[&str],
                players_: &[usize],
                scalars: &[Rat]|
     -> (String, AxiomInstance) {
        (
            id.to_string(),
            AxiomInstance::new(
                games.iter().map(|g| bundle_game(id, g)).collect(),
                players_.iter().map(|&i| p(i)).collect(),
                scalars.to_vec(),
            ),
        )
    };

    match axiom {
        AxiomId::Efficiency => vec![
            inst("W4", &["u_grand"], &[], &[]),
            inst("W1", &["v"], &[], &[]),
            inst("W3", &["u"], &[], &[]),
        ],
        AxiomId::Additivity => vec![
            inst("W1", &["v", "w"], &[], &[]),
            inst("W3", &["v", "u"], &[], &[]),
            inst("W5", &["zero", "nf_u"], &[], &[]),
        ],
        AxiomId::Linearity => vec![
            inst("W1", &["v", "w"], &[], &[rint(1), rint(1)]),
            inst("W1", &["v", "w"], &[], &[rint(-1), rat(1, 2)]),
            inst("W3", &["v", "u"], &[], &[rint(1), rint(1)]),
            inst("W4", &["u_1", "u_2"], &[], &[rint(2), rint(-2)]),
        ],
        AxiomId::Symmetry => vec![
            inst("W4", &["u_grand"], &[1, 2], &[]),
            inst("W4", &["u_23"], &[2, 3], &[]),
        ],
        AxiomId::Anonymity => {
            let (id, instance) = inst("W4", &["u_grand"], &[1], &[]);
            let tau = Permutation::from_one_based(vec![2, 1, 3]).expect("bijection");
            vec![(id, instance.with_permutation(tau))]
        }
        AxiomId::NullPlayerProperty => vec![
            inst("W4", &["u_1"], &[3], &[]),
            inst("W4", &["u_1"], &[2], &[]),
            inst("W1", &["w"], &[1], &[]),
            inst("W2", &["u"], &[2], &[]),
        ],
        AxiomId::NullPlayerProductiveEnvironment => vec![
            inst("W4", &["u_1"], &[3], &[]),
            inst("W2", &["u"], &[2], &[]),
        ],
        AxiomId::CoalitionalStrategicEquivalence => vec![
            inst("W1", &["v", "w"], &[1], &[]),
            inst("W1", &["v", "u"], &[1], &[]),
        ],
        AxiomId::NullPlayerNeutrality => vec![
            inst("W1", &["v", "w", "u"], &[1], &[]),
            inst("W2", &["v", "w", "u"], &[2], &[]),
            inst("W4", &["zero", "u_2", "u_23"], &[1], &[]),
        ],
        AxiomId::WeakMonotonicity => vec![inst("W4", &["u_1", "zero"], &[1], &[])],
        AxiomId::NullifyingPlayerProperty => vec![
            inst("W3", &["u"], &[1], &[]),
            inst("W3", &["w"], &[1], &[]),
            inst("W5", &["nf_u"], &[1], &[]),
        ],
        AxiomId::CoalitionalStandardEquivalence => vec![
            inst("W3", &["v", "u"], &[1], &[]),
            inst("W5", &["zero", "nf_u"], &[1], &[]),
        ],
        AxiomId::NullifyingPlayerNeutrality => vec![
            inst("W3", &["v", "w", "u"], &[1], &[]),
            inst("W5", &["zero", "zero", "nf_u"], &[1], &[]),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::validate_instance;

    #[test]
    fn all_facts_pass() {
        let report = run_all_witnesses();
        for bundle in &report.bundles {
            for fact in &bundle.facts {
                assert!(
                    fact.passed,
                    "{}: {} ({})",
                    bundle.id,
                    fact.description,
                    fact.detail.clone().unwrap_or_default()
                );
            }
        }
        assert!(report.fact_count() >= 30);
    }

    #[test]
    fn bundle_lookup() {
        assert_eq!(witness("W1").unwrap().id, "W1");
        assert!(matches!(witness("nope"), Err(Error::UnknownWitness(_))));
        assert!(witness("W1").unwrap().game("v").is_ok());
        assert!(witness("W1").unwrap().game("zebra").is_err());
    }

    #[test]
    fn witness_games_are_stable_across_calls() {
        let a = witness("W3").unwrap().game("u").unwrap();
        let b = witness("W3").unwrap().game("u").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn witness_pool_instances_are_admissible() {
        for axiom in AxiomId::ALL {
            for (bundle_id, instance) in witness_instances(axiom) {
                validate_instance(axiom, &instance)
                    .unwrap_or_else(|e| panic!("{axiom} from {bundle_id}: {e}"));
            }
        }
    }
}
