//! Property-based invariants spanning the game algebra, the basis
//! transforms, the solution catalog, and the search machinery.

use num_traits::Zero;
use proptest::prelude::*;

use tug_core::axioms::{
    AxiomId, SearchStrategy, generate_instance, instance_holds, search_counterexample,
    search_counterexample_sequential, validate_instance,
};
use tug_core::basis::{Basis, from_coefficients, null_players_via_dividends, to_coefficients};
use tug_core::coalition::{Coalition, Permutation, PlayerId, nonempty_coalitions};
use tug_core::game::Game;
use tug_core::rational::{Rat, rat, rint};
use tug_core::solutions::{
    SolutionSpec, equal_division, egalitarian_shapley, equal_surplus_division, evaluate, phi1,
    phi2, shapley, shapley_oracle, shapley_via_dividends,
};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

/// A game on `n` players with small rational worths.
fn game(n: usize) -> impl Strategy<Value = Game> {
    prop::collection::vec(small_rat(), (1 << n) - 1).prop_map(move |worths| {
        Game::from_assignments(
            n,
            nonempty_coalitions(n).zip(worths),
        )
        .expect("in-range coalitions")
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |(), mut rng| {
        let mut image: Vec<usize> = (1..=n).collect();
        for k in (1..n).rev() {
            let j = (rng.next_u64() % (k as u64 + 1)) as usize;
            image.swap(k, j);
        }
        Permutation::from_one_based(image).expect("shuffle keeps bijectivity")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_roundtrip_identity(v in game(4)) {
        for basis in [Basis::Unanimity, Basis::Canonical] {
            prop_assert_eq!(&from_coefficients(&to_coefficients(&v, basis)), &v);
        }
    }

    #[test]
    fn dividend_null_players_match_definition(v in game(4)) {
        prop_assert_eq!(null_players_via_dividends(&v), v.null_players());
    }

    #[test]
    fn permutation_action_composes(v in game(4), pi in permutation(4), sigma in permutation(4)) {
        let stepwise = v.permute(&pi).unwrap().permute(&sigma).unwrap();
        let composed = v.permute(&sigma.compose_after(&pi)).unwrap();
        prop_assert_eq!(stepwise, composed);
    }

    #[test]
    fn shapley_routes_agree(v in game(4)) {
        let direct = shapley(&v);
        prop_assert_eq!(&shapley_via_dividends(&v), &direct);
        prop_assert_eq!(&shapley_oracle(&v).unwrap(), &direct);
    }

    #[test]
    fn efficient_solutions_distribute_grand_worth(v in game(4), alpha in small_rat()) {
        for payoffs in [
            shapley(&v),
            equal_division(&v),
            egalitarian_shapley(&alpha, &v),
            equal_surplus_division(&v),
        ] {
            prop_assert_eq!(&payoffs.total(), v.grand_worth());
        }
    }

    #[test]
    fn egalitarian_endpoints_collapse(v in game(4)) {
        prop_assert_eq!(egalitarian_shapley(&rint(0), &v), shapley(&v));
        prop_assert_eq!(egalitarian_shapley(&rint(1), &v), equal_division(&v));
    }

    #[test]
    fn null_players_get_zero_from_shapley_and_alpha_share_from_family(
        v in game(4),
        alpha in small_rat(),
    ) {
        let sh = shapley(&v);
        let fam = egalitarian_shapley(&alpha, &v);
        let alpha_share = &alpha * v.grand_worth() / rint(4);
        for i in v.null_players() {
            prop_assert!(sh.get(i).is_zero());
            prop_assert_eq!(fam.get(i), &alpha_share);
        }
    }

    #[test]
    fn phi1_respects_null_players(v in game(4)) {
        let payoffs = phi1(&v);
        for i in v.null_players() {
            prop_assert!(payoffs.get(i).is_zero());
        }
    }

    #[test]
    fn phi2_respects_nullifying_players(v in game(4)) {
        let payoffs = phi2(&v);
        for i in v.nullifying_players() {
            prop_assert!(payoffs.get(i).is_zero());
        }
    }

    #[test]
    fn nullifying_player_forces_zero_grand_worth(v in game(3)) {
        if !v.nullifying_players().is_empty() {
            prop_assert!(v.grand_worth().is_zero());
        }
    }

    #[test]
    fn all_null_iff_zero_game(v in game(3)) {
        prop_assert_eq!(v.null_players().len() == 3, v.is_zero());
    }

    #[test]
    fn generators_always_satisfy_preconditions(seed in any::<u64>(), n in 2usize..=4) {
        for axiom in AxiomId::ALL {
            let instance = generate_instance(axiom, n, seed).unwrap();
            prop_assert!(validate_instance(axiom, &instance).is_ok(), "{}", axiom);
        }
    }

    /// Strategic equivalence implies null player neutrality instance-wise:
    /// if augmenting by w and by u both leave the payoff unchanged, the
    /// two augmentations agree.
    #[test]
    fn strategic_equivalence_implies_neutrality_instancewise(seed in any::<u64>()) {
        let npn = generate_instance(AxiomId::NullPlayerNeutrality, 3, seed).unwrap();
        let (v, w, u) = (&npn.games[0], &npn.games[1], &npn.games[2]);
        let i = npn.players[0];
        for solution in SolutionSpec::catalog() {
            let cse_w = instance_holds(
                AxiomId::CoalitionalStrategicEquivalence,
                &solution,
                &tug_core::axioms::AxiomInstance::new(
                    vec![v.clone(), w.clone()],
                    vec![i],
                    vec![],
                ),
            )
            .unwrap();
            let cse_u = instance_holds(
                AxiomId::CoalitionalStrategicEquivalence,
                &solution,
                &tug_core::axioms::AxiomInstance::new(
                    vec![v.clone(), u.clone()],
                    vec![i],
                    vec![],
                ),
            )
            .unwrap();
            if cse_w && cse_u {
                prop_assert!(instance_holds(AxiomId::NullPlayerNeutrality, &solution, &npn).unwrap());
            }
        }
    }

    /// Every admissible nullifying-neutrality instance has zero grand
    /// worths on the added games, and replacing the second added game by
    /// the zero game turns the predicate into standard equivalence.
    #[test]
    fn nullifying_neutrality_collapses_to_standard_equivalence(seed in any::<u64>()) {
        let nfpn = generate_instance(AxiomId::NullifyingPlayerNeutrality, 3, seed).unwrap();
        prop_assert!(nfpn.games[1].grand_worth().is_zero());
        prop_assert!(nfpn.games[2].grand_worth().is_zero());
        let (v, w) = (&nfpn.games[0], &nfpn.games[1]);
        let i = nfpn.players[0];
        let with_zero = tug_core::axioms::AxiomInstance::new(
            vec![v.clone(), w.clone(), Game::zero(3).unwrap()],
            vec![i],
            vec![],
        );
        let standard = tug_core::axioms::AxiomInstance::new(
            vec![v.clone(), w.clone()],
            vec![i],
            vec![],
        );
        for solution in [SolutionSpec::Shapley, SolutionSpec::EqualDivision, SolutionSpec::Phi2] {
            prop_assert_eq!(
                instance_holds(AxiomId::NullifyingPlayerNeutrality, &solution, &with_zero).unwrap(),
                instance_holds(AxiomId::CoalitionalStandardEquivalence, &solution, &standard).unwrap()
            );
        }
    }
}

/// Counterexamples returned by every strategy re-fail `instance_holds`.
#[test]
fn counterexamples_are_sound() {
    let cases = [
        (
            AxiomId::NullPlayerProperty,
            SolutionSpec::EqualDivision,
            SearchStrategy::Exhaustive { grid: vec![rint(0), rint(1)], n: 3, max_instances: None },
        ),
        (
            AxiomId::NullifyingPlayerNeutrality,
            SolutionSpec::Shapley,
            SearchStrategy::Exhaustive {
                grid: vec![rint(-1), rint(0), rint(1)],
                n: 3,
                max_instances: None,
            },
        ),
        (
            AxiomId::NullPlayerNeutrality,
            SolutionSpec::Phi1,
            SearchStrategy::Witnesses { ids: vec![] },
        ),
        (
            AxiomId::Linearity,
            SolutionSpec::MaxV1,
            SearchStrategy::Random { n: 3, trials: 400, seed: 3 },
        ),
    ];
    for (axiom, solution, strategy) in cases {
        let verdict = search_counterexample(axiom, &solution, &strategy).unwrap();
        let tug_core::axioms::Verdict::Counterexample { instance, .. } = verdict else {
            panic!("{axiom} / {solution}: expected counterexample, got {verdict}");
        };
        assert!(!instance_holds(axiom, &solution, &instance).unwrap());
    }
}

/// The verdict is independent of the execution engine.
#[test]
fn search_is_deterministic_across_engines() {
    let strategy = SearchStrategy::Exhaustive {
        grid: vec![rint(-1), rint(1)],
        n: 3,
        max_instances: None,
    };
    for axiom in AxiomId::ALL {
        for solution in [SolutionSpec::EqualDivision, SolutionSpec::Phi2] {
            let a = search_counterexample(axiom, &solution, &strategy).unwrap();
            let b = search_counterexample_sequential(axiom, &solution, &strategy).unwrap();
            let c = search_counterexample(axiom, &solution, &strategy).unwrap();
            assert_eq!(a, b, "{axiom} / {solution}");
            assert_eq!(a, c, "{axiom} / {solution}");
        }
    }
}

/// Enlarging the grid never flips a counterexample back to passed.
#[test]
fn counterexamples_are_monotone_in_the_grid() {
    let small = SearchStrategy::Exhaustive {
        grid: vec![rint(0), rint(1)],
        n: 3,
        max_instances: None,
    };
    let large = SearchStrategy::Exhaustive {
        grid: vec![rint(0), rint(1), rint(-1), rint(2)],
        n: 3,
        max_instances: None,
    };
    for (axiom, solution) in [
        (AxiomId::NullPlayerProperty, SolutionSpec::EqualDivision),
        (AxiomId::NullifyingPlayerProperty, SolutionSpec::Shapley),
        (AxiomId::CoalitionalStrategicEquivalence, SolutionSpec::EqualDivision),
    ] {
        let v_small = search_counterexample(axiom, &solution, &small).unwrap();
        let v_large = search_counterexample(axiom, &solution, &large).unwrap();
        if v_small.is_counterexample() {
            assert!(v_large.is_counterexample(), "{axiom} flipped on the larger grid");
        }
    }
}

/// Unanimity and canonical games coincide exactly when T = N; dividends of
/// a unanimity game are the indicator of T.
#[test]
fn basis_games_and_coordinates() {
    let full = Coalition::full(3);
    assert_eq!(Game::unanimity(3, full).unwrap(), Game::canonical(3, full).unwrap());
    for t in nonempty_coalitions(3) {
        let coeffs = to_coefficients(&Game::unanimity(3, t).unwrap(), Basis::Unanimity);
        for s in nonempty_coalitions(3) {
            assert_eq!(coeffs.coeff(s), &rint(i64::from(s == t)));
        }
    }
}

/// The documented default strategy reproduces the equal-division verdict
/// table: it fails exactly the two null-player axioms.
#[test]
fn equal_division_verdict_table_on_default_grid() {
    let strategy = SearchStrategy::Exhaustive {
        grid: vec![rint(-1), rint(0), rint(1)],
        n: 3,
        max_instances: None,
    };
    let report =
        tug_core::axioms::axiom_report(&SolutionSpec::EqualDivision, &AxiomId::ALL, &strategy)
            .unwrap();
    assert_eq!(
        report.failed(),
        vec![AxiomId::NullPlayerProperty, AxiomId::CoalitionalStrategicEquivalence]
    );
    for axiom in [
        AxiomId::Efficiency,
        AxiomId::Linearity,
        AxiomId::Symmetry,
        AxiomId::NullPlayerNeutrality,
        AxiomId::NullPlayerProductiveEnvironment,
        AxiomId::NullifyingPlayerNeutrality,
        AxiomId::CoalitionalStandardEquivalence,
    ] {
        assert!(report.verdict(axiom).unwrap().is_passed(), "{axiom}");
    }
}

/// Probe the evaluator against hand-expanded payoffs on one asymmetric
/// game, all ten catalog entries at once.
#[test]
fn catalog_spot_check() {
    let p = |i: usize| PlayerId::new(i).unwrap();
    let v = Game::from_assignments(
        3,
        [
            (Coalition::singleton(p(1)), rint(2)),
            (Coalition::from_players([p(1), p(2)]), rint(2)),
            (Coalition::full(3), rint(4)),
        ],
    )
    .unwrap();
    let expect = |spec: &SolutionSpec, values: [Rat; 3]| {
        let payoffs = evaluate(spec, &v).unwrap();
        for (k, expected) in values.into_iter().enumerate() {
            assert_eq!(payoffs.get(p(k + 1)), &expected, "{spec} player {}", k + 1);
        }
    };
    // order-by-order marginal averages, computed by the oracle route
    assert_eq!(shapley_oracle(&v).unwrap(), shapley(&v));
    expect(&SolutionSpec::EqualDivision, [rat(4, 3), rat(4, 3), rat(4, 3)]);
    expect(&SolutionSpec::EqualSurplusDivision, [rat(8, 3), rat(2, 3), rat(2, 3)]);
    expect(&SolutionSpec::Phi1, [rint(4), rint(0), rint(0)]);
    expect(&SolutionSpec::Zero, [rint(0), rint(0), rint(0)]);
    expect(&SolutionSpec::AsymFirstPlayer, [rint(0), rint(2), rint(2)]);
    expect(&SolutionSpec::MaxV1, [rint(2), rint(2), rint(2)]);
    expect(&SolutionSpec::ViPlusA { a: rint(1) }, [rint(3), rint(1), rint(1)]);
}
