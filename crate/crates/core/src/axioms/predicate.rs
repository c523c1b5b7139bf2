//! Shape validation and exact predicate evaluation for axiom instances.

use num_traits::{Signed, Zero};

use crate::axioms::{AxiomId, AxiomInstance, Value};
use crate::coalition::coalitions_without;
use crate::error::{Error, Result};
use crate::game::{Game, PayoffVector};
use crate::rational::Rat;
use crate::solutions::{SolutionSpec, evaluate};

/// Checks that an instance matches the axiom's shape (slot counts and
/// matching player counts) and satisfies its preconditions (nullity,
/// symmetry, marginal dominance, and so on).
pub fn validate_instance(axiom: AxiomId, instance: &AxiomInstance) -> Result<()> {
    let shape_err = |msg: String| Err(Error::ShapeMismatch(msg));
    let pre_err = |msg: String| Err(Error::PreconditionViolated(msg));

    if instance.games.len() != axiom.game_slots() {
        return shape_err(format!(
            "{axiom} takes {} game(s), got {}",
            axiom.game_slots(),
            instance.games.len()
        ));
    }
    if instance.players.len() != axiom.player_slots() {
        return shape_err(format!(
            "{axiom} takes {} player(s), got {}",
            axiom.player_slots(),
            instance.players.len()
        ));
    }
    if instance.scalars.len() != axiom.scalar_slots() {
        return shape_err(format!(
            "{axiom} takes {} scalar(s), got {}",
            axiom.scalar_slots(),
            instance.scalars.len()
        ));
    }
    if axiom.needs_permutation() != instance.permutation.is_some() {
        return shape_err(format!(
            "{axiom} {} a permutation",
            if axiom.needs_permutation() { "requires" } else { "does not take" }
        ));
    }

    let n = instance.games[0].n();
    for g in &instance.games[1..] {
        if g.n() != n {
            return shape_err(format!("games have different player counts: {n} vs {}", g.n()));
        }
    }
    for p in &instance.players {
        if !p.in_range(n) {
            return Err(Error::PlayerOutOfRange { player: p.index(), n });
        }
    }
    if let Some(pi) = &instance.permutation
        && pi.n() != n
    {
        return shape_err(format!("permutation is on {} players, games on {n}", pi.n()));
    }

    match axiom {
        AxiomId::Efficiency | AxiomId::Additivity | AxiomId::Linearity | AxiomId::Anonymity => {}
        AxiomId::Symmetry => {
            let [i, j] = [instance.players[0], instance.players[1]];
            if !instance.games[0].symmetric_pair(i, j)? {
                return pre_err(format!("players {i} and {j} are not symmetric"));
            }
        }
        AxiomId::NullPlayerProperty => {
            let i = instance.players[0];
            if !instance.games[0].null_players().contains(&i) {
                return pre_err(format!("player {i} is not null"));
            }
        }
        AxiomId::NullPlayerProductiveEnvironment => {
            let i = instance.players[0];
            if !instance.games[0].null_players().contains(&i) {
                return pre_err(format!("player {i} is not null"));
            }
            if instance.games[0].grand_worth().is_negative() {
                return pre_err("grand coalition worth is negative".into());
            }
        }
        AxiomId::CoalitionalStrategicEquivalence => {
            let i = instance.players[0];
            if !instance.games[1].null_players().contains(&i) {
                return pre_err(format!("player {i} is not null in the added game"));
            }
        }
        AxiomId::NullPlayerNeutrality => {
            let i = instance.players[0];
            for g in &instance.games[1..] {
                if !g.null_players().contains(&i) {
                    return pre_err(format!("player {i} is not null in both added games"));
                }
            }
            if instance.games[1].grand_worth() != instance.games[2].grand_worth() {
                return pre_err("added games have different grand coalition worths".into());
            }
        }
        AxiomId::WeakMonotonicity => {
            let i = instance.players[0];
            let (v, w) = (&instance.games[0], &instance.games[1]);
            if v.grand_worth() < w.grand_worth() {
                return pre_err("first game has smaller grand coalition worth".into());
            }
            for s in coalitions_without(n, i) {
                let lhs = v.worth(s.insert(i)) - v.worth(s);
                let rhs = w.worth(s.insert(i)) - w.worth(s);
                if lhs < rhs {
                    return pre_err(format!("marginal of {i} at {s} is not dominated"));
                }
            }
        }
        AxiomId::NullifyingPlayerProperty => {
            let i = instance.players[0];
            if !instance.games[0].nullifying_players().contains(&i) {
                return pre_err(format!("player {i} is not nullifying"));
            }
        }
        AxiomId::CoalitionalStandardEquivalence => {
            let i = instance.players[0];
            if !instance.games[1].nullifying_players().contains(&i) {
                return pre_err(format!("player {i} is not nullifying in the added game"));
            }
        }
        AxiomId::NullifyingPlayerNeutrality => {
            let i = instance.players[0];
            for g in &instance.games[1..] {
                if !g.nullifying_players().contains(&i) {
                    return pre_err(format!("player {i} is not nullifying in both added games"));
                }
            }
            if instance.games[1].grand_worth() != instance.games[2].grand_worth() {
                return pre_err("added games have different grand coalition worths".into());
            }
        }
    }
    Ok(())
}

fn payoff(solution: &SolutionSpec, v: &Game) -> Result<PayoffVector> {
    evaluate(solution, v)
}

/// Evaluates the axiom's predicate on a validated instance, returning the
/// verdict together with both sides of the (in)equality.
pub(crate) fn predicate_sides(
    axiom: AxiomId,
    solution: &SolutionSpec,
    instance: &AxiomInstance,
) -> Result<(bool, Value, Value)> {
    let games: Vec<&Game> = instance.games.iter().collect();
    predicate_sides_borrowed(
        axiom,
        solution,
        &games,
        &instance.players,
        &instance.scalars,
        instance.permutation.as_ref(),
    )
}

/// Predicate evaluation over borrowed parts; the search engine uses this
/// so it only materializes an owned instance when a violation is found.
pub(crate) fn predicate_sides_borrowed(
    axiom: AxiomId,
    solution: &SolutionSpec,
    games: &[&Game],
    players: &[crate::coalition::PlayerId],
    scalars: &[Rat],
    permutation: Option<&crate::coalition::Permutation>,
) -> Result<(bool, Value, Value)> {
    match axiom {
        AxiomId::Efficiency => {
            let total = payoff(solution, games[0])?.total();
            let grand = games[0].grand_worth().clone();
            Ok((total == grand, Value::Scalar(total), Value::Scalar(grand)))
        }
        AxiomId::Additivity => {
            let lhs = payoff(solution, &(games[0] + games[1]))?;
            let rhs = &payoff(solution, games[0])? + &payoff(solution, games[1])?;
            Ok((lhs == rhs, Value::Vector(lhs), Value::Vector(rhs)))
        }
        AxiomId::Linearity => {
            let (a, b) = (&scalars[0], &scalars[1]);
            let combined = Game::linear_combine(a, games[0], b, games[1])?;
            let lhs = payoff(solution, &combined)?;
            let rhs = PayoffVector::linear_combine(
                a,
                &payoff(solution, games[0])?,
                b,
                &payoff(solution, games[1])?,
            );
            Ok((lhs == rhs, Value::Vector(lhs), Value::Vector(rhs)))
        }
        AxiomId::Symmetry => {
            let payoffs = payoff(solution, games[0])?;
            let lhs = payoffs.get(players[0]).clone();
            let rhs = payoffs.get(players[1]).clone();
            Ok((lhs == rhs, Value::Scalar(lhs), Value::Scalar(rhs)))
        }
        AxiomId::Anonymity => {
            let pi = permutation.expect("validated");
            let i = players[0];
            let lhs = payoff(solution, games[0])?.get(i).clone();
            let rhs = payoff(solution, &games[0].permute(pi)?)?.get(pi.apply(i)).clone();
            Ok((lhs == rhs, Value::Scalar(lhs), Value::Scalar(rhs)))
        }
        AxiomId::NullPlayerProperty | AxiomId::NullifyingPlayerProperty => {
            let lhs = payoff(solution, games[0])?.get(players[0]).clone();
            Ok((lhs.is_zero(), Value::Scalar(lhs), Value::Scalar(Rat::zero())))
        }
        AxiomId::NullPlayerProductiveEnvironment => {
            let lhs = payoff(solution, games[0])?.get(players[0]).clone();
            Ok((!lhs.is_negative(), Value::Scalar(lhs), Value::Scalar(Rat::zero())))
        }
        AxiomId::CoalitionalStrategicEquivalence | AxiomId::CoalitionalStandardEquivalence => {
            let i = players[0];
            let lhs = payoff(solution, &(games[0] + games[1]))?.get(i).clone();
            let rhs = payoff(solution, games[0])?.get(i).clone();
            Ok((lhs == rhs, Value::Scalar(lhs), Value::Scalar(rhs)))
        }
        AxiomId::NullPlayerNeutrality | AxiomId::NullifyingPlayerNeutrality => {
            let i = players[0];
            let lhs = payoff(solution, &(games[0] + games[1]))?.get(i).clone();
            let rhs = payoff(solution, &(games[0] + games[2]))?.get(i).clone();
            Ok((lhs == rhs, Value::Scalar(lhs), Value::Scalar(rhs)))
        }
        AxiomId::WeakMonotonicity => {
            let i = players[0];
            let lhs = payoff(solution, games[0])?.get(i).clone();
            let rhs = payoff(solution, games[1])?.get(i).clone();
            Ok((lhs >= rhs, Value::Scalar(lhs), Value::Scalar(rhs)))
        }
    }
}

/// Exact evaluation of one axiom predicate on one instance. The instance
/// is validated first; evaluation itself uses no tolerance of any kind.
pub fn instance_holds(
    axiom: AxiomId,
    solution: &SolutionSpec,
    instance: &AxiomInstance,
) -> Result<bool> {
    validate_instance(axiom, instance)?;
    predicate_sides(axiom, solution, instance).map(|(holds, _, _)| holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::{Coalition, Permutation, PlayerId};
    use crate::rational::{rat, rint};

    fn p(i: usize) -> PlayerId {
        PlayerId::new(i).unwrap()
    }

    fn c(members: &[usize]) -> Coalition {
        Coalition::from_players(members.iter().map(|&i| p(i)))
    }

    fn witness_games() -> (Game, Game, Game) {
        let v = Game::from_assignments(
            3,
            [(c(&[1]), rint(1)), (c(&[2]), rint(1)), (c(&[3]), rint(1)), (c(&[1, 2, 3]), rint(2))],
        )
        .unwrap();
        let w = Game::from_assignments(
            3,
            [
                (c(&[2]), rint(2)),
                (c(&[1, 2]), rint(2)),
                (c(&[2, 3]), rint(2)),
                (c(&[1, 2, 3]), rint(2)),
            ],
        )
        .unwrap();
        let u =
            Game::from_assignments(3, [(c(&[2, 3]), rint(2)), (c(&[1, 2, 3]), rint(2))]).unwrap();
        (v, w, u)
    }

    #[test]
    fn efficiency_of_shapley_on_unanimity() {
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        let instance = AxiomInstance::new(vec![u12], vec![], vec![]);
        assert!(instance_holds(AxiomId::Efficiency, &SolutionSpec::Shapley, &instance).unwrap());
    }

    #[test]
    fn equal_division_violates_null_player_property() {
        let u1 = Game::unanimity(3, c(&[1])).unwrap();
        let instance = AxiomInstance::new(vec![u1], vec![p(3)], vec![]);
        assert!(
            !instance_holds(AxiomId::NullPlayerProperty, &SolutionSpec::EqualDivision, &instance)
                .unwrap()
        );
    }

    #[test]
    fn phi1_violates_null_player_neutrality_on_witness_triple() {
        let (v, w, u) = witness_games();
        let instance = AxiomInstance::new(vec![v, w, u], vec![p(1)], vec![]);
        let (holds, lhs, rhs) =
            predicate_sides(AxiomId::NullPlayerNeutrality, &SolutionSpec::Phi1, &instance)
                .unwrap();
        assert!(!holds);
        assert_eq!(lhs, Value::Scalar(rat(4, 5)));
        assert_eq!(rhs, Value::Scalar(rat(4, 3)));
        // but the instance itself is admissible
        validate_instance(AxiomId::NullPlayerNeutrality, &instance).unwrap();
    }

    #[test]
    fn shape_and_precondition_errors() {
        let (v, w, _) = witness_games();

        let wrong_arity = AxiomInstance::new(vec![v.clone()], vec![], vec![]);
        assert!(matches!(
            validate_instance(AxiomId::Additivity, &wrong_arity),
            Err(Error::ShapeMismatch(_))
        ));

        // player 2 is not null in w
        let bad_null = AxiomInstance::new(vec![v.clone(), w.clone()], vec![p(2)], vec![]);
        assert!(matches!(
            validate_instance(AxiomId::CoalitionalStrategicEquivalence, &bad_null),
            Err(Error::PreconditionViolated(_))
        ));

        // unequal grand worths for neutrality
        let zero = Game::zero(3).unwrap();
        let bad_grand =
            AxiomInstance::new(vec![v.clone(), w.clone(), zero], vec![p(1)], vec![]);
        assert!(matches!(
            validate_instance(AxiomId::NullPlayerNeutrality, &bad_grand),
            Err(Error::PreconditionViolated(_))
        ));

        // missing permutation
        let no_perm = AxiomInstance::new(vec![v.clone()], vec![p(1)], vec![]);
        assert!(matches!(
            validate_instance(AxiomId::Anonymity, &no_perm),
            Err(Error::ShapeMismatch(_))
        ));

        // non-symmetric players
        let not_sym = AxiomInstance::new(vec![w], vec![p(1), p(2)], vec![]);
        assert!(matches!(
            validate_instance(AxiomId::Symmetry, &not_sym),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn anonymity_holds_for_shapley() {
        let (v, _, _) = witness_games();
        let pi = Permutation::from_one_based(vec![3, 1, 2]).unwrap();
        let instance = AxiomInstance::new(vec![v], vec![p(2)], vec![]).with_permutation(pi);
        assert!(instance_holds(AxiomId::Anonymity, &SolutionSpec::Shapley, &instance).unwrap());
    }

    #[test]
    fn linearity_scalars_apply() {
        let (v, w, _) = witness_games();
        let instance =
            AxiomInstance::new(vec![v.clone(), w.clone()], vec![], vec![rat(1, 2), rint(-2)]);
        assert!(instance_holds(AxiomId::Linearity, &SolutionSpec::Shapley, &instance).unwrap());

        // max_v1 breaks once the first singleton worth is scaled negative:
        // max{-1, 0} = 0 on the left but -1 on the right.
        let negated = AxiomInstance::new(vec![v, w], vec![], vec![rint(-1), rat(1, 2)]);
        assert!(!instance_holds(AxiomId::Linearity, &SolutionSpec::MaxV1, &negated).unwrap());
    }

    #[test]
    fn weak_monotonicity_preconditions() {
        let u1 = Game::unanimity(3, c(&[1])).unwrap();
        let zero = Game::zero(3).unwrap();
        // marginals of player 1 in u_1 dominate those in the zero game
        let ok = AxiomInstance::new(vec![u1.clone(), zero.clone()], vec![p(1)], vec![]);
        assert!(instance_holds(AxiomId::WeakMonotonicity, &SolutionSpec::Shapley, &ok).unwrap());

        // reversed order breaks the grand-worth precondition
        let bad = AxiomInstance::new(vec![zero, u1], vec![p(1)], vec![]);
        assert!(matches!(
            validate_instance(AxiomId::WeakMonotonicity, &bad),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn nullifying_neutrality_grand_worths_are_zero() {
        // Any admissible instance has w(N) = u(N) = 0 because a nullifying
        // player zeroes every containing coalition, including N.
        let w = Game::from_assignments(3, [(c(&[2]), rint(1))]).unwrap();
        let u = Game::zero(3).unwrap();
        let v = Game::unanimity(3, c(&[2])).unwrap();
        let instance = AxiomInstance::new(vec![v, w.clone(), u], vec![p(1)], vec![]);
        validate_instance(AxiomId::NullifyingPlayerNeutrality, &instance).unwrap();
        assert!(w.grand_worth().is_zero());
    }
}
