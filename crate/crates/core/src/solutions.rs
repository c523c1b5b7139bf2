//! The catalog of solution concepts, each an exact map from games to
//! payoff vectors.
//!
//! The marginalist and egalitarian poles are the Shapley and equal division
//! solutions; `egalitarian(α)` spans all their real linear combinations
//! (restricted here to rational `α`). The remaining entries are foils used
//! by the axiom searches: each satisfies some axioms and violates others in
//! a documented way.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::basis::harsanyi_dividends;
use crate::coalition::{Coalition, PlayerId, nonempty_coalitions, players};
use crate::error::{Error, Result};
use crate::game::{Game, PayoffVector};
use crate::rational::{Rat, rint};

/// Largest player count accepted by [`shapley_oracle`]; the enumeration
/// costs `n! · n` work.
pub const ORACLE_MAX_PLAYERS: usize = 8;

/// A solution concept plus its parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolutionSpec {
    Shapley,
    EqualDivision,
    /// `α·ED + (1−α)·Shapley` for any rational `α`.
    Egalitarian { alpha: Rat },
    EqualSurplusDivision,
    /// Proportional-to-singletons split with special cases for a zero
    /// singleton sum; satisfies the null player property.
    Phi1,
    /// Zero to nullifying players, equal split of the grand worth among the
    /// rest; equal division on constant games, Shapley otherwise.
    Phi2,
    /// The zero solution: every player gets 0.
    Zero,
    /// Player 1 gets 0; everyone else gets `v(N)/(n−1)`.
    AsymFirstPlayer,
    /// Every player gets `max{v({1}), 0}`.
    MaxV1,
    /// Every player gets `v({i}) + a`, with `a ≠ 0`.
    ViPlusA { a: Rat },
}

impl SolutionSpec {
    pub fn egalitarian(alpha: Rat) -> SolutionSpec {
        SolutionSpec::Egalitarian { alpha }
    }

    pub fn vi_plus_a(a: Rat) -> Result<SolutionSpec> {
        let spec = SolutionSpec::ViPlusA { a };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            SolutionSpec::ViPlusA { a } if a.is_zero() => {
                Err(Error::InvalidParameter("vi_plus_a requires a != 0".into()))
            }
            _ => Ok(()),
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            SolutionSpec::Shapley => "shapley",
            SolutionSpec::EqualDivision => "equal_division",
            SolutionSpec::Egalitarian { .. } => "egalitarian",
            SolutionSpec::EqualSurplusDivision => "equal_surplus_division",
            SolutionSpec::Phi1 => "phi1",
            SolutionSpec::Phi2 => "phi2",
            SolutionSpec::Zero => "zero",
            SolutionSpec::AsymFirstPlayer => "asym_first_player",
            SolutionSpec::MaxV1 => "max_v1",
            SolutionSpec::ViPlusA { .. } => "vi_plus_a",
        }
    }

    /// The fixed list of catalog entries used by reports and regression
    /// checks. `egalitarian` is represented at α = 1/2 and α = −1;
    /// `vi_plus_a` uses the default a = 1.
    pub fn catalog() -> Vec<SolutionSpec> {
        vec![
            SolutionSpec::Shapley,
            SolutionSpec::EqualDivision,
            SolutionSpec::egalitarian(crate::rational::rat(1, 2)),
            SolutionSpec::egalitarian(rint(-1)),
            SolutionSpec::EqualSurplusDivision,
            SolutionSpec::Phi1,
            SolutionSpec::Phi2,
            SolutionSpec::Zero,
            SolutionSpec::AsymFirstPlayer,
            SolutionSpec::MaxV1,
            SolutionSpec::ViPlusA { a: rint(1) },
        ]
    }
}

impl fmt::Display for SolutionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionSpec::Egalitarian { alpha } => write!(f, "egalitarian({alpha})"),
            SolutionSpec::ViPlusA { a } => write!(f, "vi_plus_a({a})"),
            other => f.write_str(other.id()),
        }
    }
}

// n <= MAX_PLAYERS = 16 keeps every factorial well inside u64.
fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// The Shapley solution via the weighted-marginal formula:
/// `φ_i = Σ_{S ∋ i} (s−1)!(n−s)!/n! · (v(S) − v(S∖i))`.
pub fn shapley(v: &Game) -> PayoffVector {
    let n = v.n();
    let n_fact = factorial(n);
    // weight by coalition size s = 1..=n
    let weights: Vec<Rat> = (0..=n)
        .map(|s| {
            if s == 0 {
                Rat::zero()
            } else {
                Rat::new(
                    BigInt::from(factorial(s - 1) * factorial(n - s)),
                    BigInt::from(n_fact),
                )
            }
        })
        .collect();
    let payoffs = players(n)
        .map(|i| {
            let mut acc = Rat::zero();
            for s in nonempty_coalitions(n).filter(|s| s.contains(i)) {
                let marginal = v.worth(s) - v.worth(s.remove(i));
                if !marginal.is_zero() {
                    acc += &weights[s.size()] * marginal;
                }
            }
            acc
        })
        .collect();
    PayoffVector::new(payoffs)
}

/// The Shapley solution via Harsanyi dividends: `φ_i = Σ_{T ∋ i} λ_T / |T|`.
/// Must agree with [`shapley`] on every game.
pub fn shapley_via_dividends(v: &Game) -> PayoffVector {
    let n = v.n();
    let dividends = harsanyi_dividends(v);
    let mut payoffs = vec![Rat::zero(); n];
    for (t, coeff) in dividends.nonzero_entries() {
        let share = coeff / rint(t.size() as i64);
        for i in t.members() {
            payoffs[i.index() - 1] += &share;
        }
    }
    PayoffVector::new(payoffs)
}

/// Reference implementation of the Shapley solution by literal enumeration
/// of all `n!` arrival orders, averaging each player's marginal
/// contribution. Kept independent of [`shapley`] as an oracle.
pub fn shapley_oracle(v: &Game) -> Result<PayoffVector> {
    let n = v.n();
    if n > ORACLE_MAX_PLAYERS {
        return Err(Error::OracleLimitExceeded { n, max: ORACLE_MAX_PLAYERS });
    }
    let mut totals = vec![Rat::zero(); n];
    let order_count: usize = (1..=n).product();
    for order in players(n).permutations(n) {
        let mut formed = Coalition::EMPTY;
        let mut prev = Rat::zero();
        for i in order {
            formed = formed.insert(i);
            let current = v.worth(formed).clone();
            totals[i.index() - 1] += &current - &prev;
            prev = current;
        }
    }
    let divisor = rint(order_count as i64);
    Ok(PayoffVector::new(totals.into_iter().map(|t| t / &divisor).collect()))
}

/// The equal division solution: every player gets `v(N)/n`.
pub fn equal_division(v: &Game) -> PayoffVector {
    let share = v.grand_worth() / rint(v.n() as i64);
    PayoffVector::new(vec![share; v.n()])
}

/// `α·ED(v) + (1−α)·Shapley(v)`, exactly.
pub fn egalitarian_shapley(alpha: &Rat, v: &Game) -> PayoffVector {
    let one_minus = Rat::one() - alpha;
    PayoffVector::linear_combine(alpha, &equal_division(v), &one_minus, &shapley(v))
}

/// Equal surplus division: `φ_i = v(i) + (v(N) − Σ_j v(j))/n`.
pub fn equal_surplus_division(v: &Game) -> PayoffVector {
    let n = v.n();
    let singles: Vec<Rat> =
        players(n).map(|i| v.worth(Coalition::singleton(i)).clone()).collect();
    let singles_sum = singles.iter().fold(Rat::zero(), |acc, s| acc + s);
    let surplus_share = (v.grand_worth() - singles_sum) / rint(n as i64);
    PayoffVector::new(singles.into_iter().map(|s| s + &surplus_share).collect())
}

/// Proportional-to-singletons solution with a two-way split when the
/// singleton worths sum to zero: null players get 0, the rest share `v(N)`
/// equally.
pub fn phi1(v: &Game) -> PayoffVector {
    let n = v.n();
    let singles: Vec<Rat> =
        players(n).map(|i| v.worth(Coalition::singleton(i)).clone()).collect();
    let singles_sum = singles.iter().fold(Rat::zero(), |acc, s| acc + s);
    if !singles_sum.is_zero() {
        let factor = v.grand_worth() / singles_sum;
        return PayoffVector::new(singles.into_iter().map(|s| s * &factor).collect());
    }
    let nulls = v.null_players();
    let non_null_count = n - nulls.len();
    if non_null_count == 0 {
        // All players null forces v ≡ 0, so everyone gets 0 and the
        // equal-split branch (with its zero divisor) is never reached.
        debug_assert!(v.is_zero());
        return PayoffVector::new(vec![Rat::zero(); n]);
    }
    let share = v.grand_worth() / rint(non_null_count as i64);
    PayoffVector::new(
        players(n)
            .map(|i| if nulls.contains(&i) { Rat::zero() } else { share.clone() })
            .collect(),
    )
}

/// Zero to nullifying players and an equal split of `v(N)` among the rest;
/// when no player is nullifying, equal division on games that are constant
/// across nonempty coalitions and Shapley otherwise. Branches are evaluated
/// in that order.
pub fn phi2(v: &Game) -> PayoffVector {
    let n = v.n();
    let nullifying = v.nullifying_players();
    if !nullifying.is_empty() {
        // A nullifying player forces v(N) = 0, so when everyone is
        // nullifying the equal-split branch is never consulted.
        if nullifying.len() == n {
            return PayoffVector::new(vec![Rat::zero(); n]);
        }
        let share = v.grand_worth() / rint((n - nullifying.len()) as i64);
        return PayoffVector::new(
            players(n)
                .map(|i| if nullifying.contains(&i) { Rat::zero() } else { share.clone() })
                .collect(),
        );
    }
    if v.is_constant_on_nonempty() {
        return equal_division(v);
    }
    shapley(v)
}

fn zero_solution(v: &Game) -> PayoffVector {
    PayoffVector::new(vec![Rat::zero(); v.n()])
}

fn asym_first_player(v: &Game) -> Result<PayoffVector> {
    let n = v.n();
    if n < 2 {
        return Err(Error::PlayerCountTooSmall { min: 2, got: n });
    }
    let share = v.grand_worth() / rint((n - 1) as i64);
    let mut payoffs = vec![share; n];
    payoffs[0] = Rat::zero();
    Ok(PayoffVector::new(payoffs))
}

fn max_v1(v: &Game) -> PayoffVector {
    let first = v.worth(Coalition::singleton(PlayerId::new(1).expect("positive index")));
    let value = if first.is_negative() { Rat::zero() } else { first.clone() };
    PayoffVector::new(vec![value; v.n()])
}

fn vi_plus_a(a: &Rat, v: &Game) -> PayoffVector {
    PayoffVector::new(
        players(v.n()).map(|i| v.worth(Coalition::singleton(i)) + a).collect(),
    )
}

/// Evaluates a catalog solution on a game.
pub fn evaluate(spec: &SolutionSpec, v: &Game) -> Result<PayoffVector> {
    spec.validate()?;
    match spec {
        SolutionSpec::Shapley => Ok(shapley(v)),
        SolutionSpec::EqualDivision => Ok(equal_division(v)),
        SolutionSpec::Egalitarian { alpha } => Ok(egalitarian_shapley(alpha, v)),
        SolutionSpec::EqualSurplusDivision => Ok(equal_surplus_division(v)),
        SolutionSpec::Phi1 => Ok(phi1(v)),
        SolutionSpec::Phi2 => Ok(phi2(v)),
        SolutionSpec::Zero => Ok(zero_solution(v)),
        SolutionSpec::AsymFirstPlayer => asym_first_player(v),
        SolutionSpec::MaxV1 => Ok(max_v1(v)),
        SolutionSpec::ViPlusA { a } => Ok(vi_plus_a(a, v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(i: usize) -> PlayerId {
        PlayerId::new(i).unwrap()
    }

    fn c(members: &[usize]) -> Coalition {
        Coalition::from_players(members.iter().map(|&i| p(i)))
    }

    fn pv(values: &[Rat]) -> PayoffVector {
        PayoffVector::new(values.to_vec())
    }

    fn witness_v() -> Game {
        Game::from_assignments(
            3,
            [(c(&[1]), rint(1)), (c(&[2]), rint(1)), (c(&[3]), rint(1)), (c(&[1, 2, 3]), rint(2))],
        )
        .unwrap()
    }

    fn witness_w() -> Game {
        Game::from_assignments(
            3,
            [
                (c(&[2]), rint(2)),
                (c(&[1, 2]), rint(2)),
                (c(&[2, 3]), rint(2)),
                (c(&[1, 2, 3]), rint(2)),
            ],
        )
        .unwrap()
    }

    fn witness_u() -> Game {
        Game::from_assignments(3, [(c(&[2, 3]), rint(2)), (c(&[1, 2, 3]), rint(2))]).unwrap()
    }

    #[test]
    fn shapley_on_unanimity_game() {
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        let expected = pv(&[rat(1, 2), rat(1, 2), rint(0)]);
        assert_eq!(shapley(&u12), expected);
        assert_eq!(shapley_via_dividends(&u12), expected);
        assert_eq!(shapley_oracle(&u12).unwrap(), expected);
    }

    #[test]
    fn shapley_of_zero_game() {
        let zero = Game::zero(3).unwrap();
        assert_eq!(shapley(&zero), pv(&[rint(0), rint(0), rint(0)]));
    }

    #[test]
    fn shapley_of_summed_witness_games() {
        // Frozen from the permutation-enumeration oracle.
        let vu = &witness_v() + &witness_u();
        let expected = pv(&[rat(2, 3), rat(5, 3), rat(5, 3)]);
        assert_eq!(shapley(&vu), expected);
        assert_eq!(shapley_via_dividends(&vu), expected);
        assert_eq!(shapley_oracle(&vu).unwrap(), expected);
    }

    #[test]
    fn oracle_on_fully_symmetric_game() {
        // All three players pairwise symmetric + efficiency force v(N)/3.
        let v = witness_v();
        assert_eq!(shapley_oracle(&v).unwrap(), pv(&[rat(2, 3), rat(2, 3), rat(2, 3)]));
    }

    #[test]
    fn oracle_guards_player_count() {
        let big = Game::zero(9).unwrap();
        assert_eq!(
            shapley_oracle(&big),
            Err(Error::OracleLimitExceeded { n: 9, max: ORACLE_MAX_PLAYERS })
        );
    }

    #[test]
    fn equal_division_splits_grand_worth() {
        assert_eq!(equal_division(&witness_v()), pv(&[rat(2, 3), rat(2, 3), rat(2, 3)]));
        assert_eq!(equal_division(&Game::zero(3).unwrap()), pv(&[rint(0), rint(0), rint(0)]));
        let u1 = Game::unanimity(3, c(&[1])).unwrap();
        assert_eq!(equal_division(&u1), pv(&[rat(1, 3), rat(1, 3), rat(1, 3)]));
    }

    #[test]
    fn egalitarian_endpoints_and_negative_alpha() {
        let v = &witness_v() + &witness_u();
        assert_eq!(egalitarian_shapley(&rint(0), &v), shapley(&v));
        assert_eq!(egalitarian_shapley(&rint(1), &v), equal_division(&v));

        // At α = −1 on u_{1}: −1·(1/3,1/3,1/3) + 2·(1,0,0); the negative
        // payoff to the null players is the point of this entry.
        let u1 = Game::unanimity(3, c(&[1])).unwrap();
        assert_eq!(
            egalitarian_shapley(&rint(-1), &u1),
            pv(&[rat(5, 3), rat(-1, 3), rat(-1, 3)])
        );
    }

    #[test]
    fn egalitarian_on_unanimity_games() {
        // Off-T payoff α/n, on-T payoff α/n + (1−α)/t.
        let n = 3;
        for alpha in [rat(7, 3), rint(-2), rat(1, 2)] {
            for t in nonempty_coalitions(n) {
                let u = Game::unanimity(n, t).unwrap();
                let got = egalitarian_shapley(&alpha, &u);
                let off = &alpha / rint(n as i64);
                let on = &off + (Rat::one() - &alpha) / rint(t.size() as i64);
                for i in players(n) {
                    let expected = if t.contains(i) { &on } else { &off };
                    assert_eq!(got.get(i), expected, "alpha={alpha} T={t} i={i}");
                }
            }
        }
    }

    #[test]
    fn equal_surplus_division_formula() {
        assert_eq!(
            equal_surplus_division(&witness_v()),
            pv(&[rat(2, 3), rat(2, 3), rat(2, 3)])
        );
        assert_eq!(
            equal_surplus_division(&Game::zero(3).unwrap()),
            pv(&[rint(0), rint(0), rint(0)])
        );
        let u1 = Game::unanimity(3, c(&[1])).unwrap();
        assert_eq!(equal_surplus_division(&u1), pv(&[rint(1), rint(0), rint(0)]));
    }

    #[test]
    fn phi1_branches() {
        // Nonzero singleton sum: proportional to singletons.
        let vw = &witness_v() + &witness_w();
        assert_eq!(phi1(&vw).get(p(1)), &rat(4, 5));
        let vu = &witness_v() + &witness_u();
        assert_eq!(phi1(&vu).get(p(1)), &rat(4, 3));
        assert_ne!(phi1(&vw).get(p(1)), phi1(&vu).get(p(1)));

        // All players null: branch for zero singleton sum.
        assert_eq!(phi1(&Game::zero(3).unwrap()), pv(&[rint(0), rint(0), rint(0)]));

        // Zero singleton sum with non-null players: equal split among them.
        let u12 = Game::unanimity(3, c(&[1, 2])).unwrap();
        assert_eq!(phi1(&u12), pv(&[rat(1, 2), rat(1, 2), rint(0)]));
    }

    #[test]
    fn phi1_gives_null_players_zero() {
        for v in [witness_w(), witness_u(), Game::unanimity(3, c(&[2])).unwrap()] {
            let payoffs = phi1(&v);
            for i in v.null_players() {
                assert!(payoffs.get(i).is_zero(), "player {i} in {v}");
            }
        }
    }

    #[test]
    fn phi2_branches() {
        // Constant on nonempty coalitions: equal division.
        let constant = Game::constant(3, &rint(1)).unwrap();
        assert_eq!(phi2(&constant), pv(&[rat(1, 3), rat(1, 3), rat(1, 3)]));

        // No nullifying players, not constant: Shapley. Frozen from the
        // permutation oracle.
        let u = Game::from_assignments(
            3,
            [(c(&[2]), rint(1)), (c(&[3]), rint(1)), (c(&[2, 3]), rint(1))],
        )
        .unwrap();
        let vu = &constant + &u;
        assert_eq!(phi2(&vu), shapley(&vu));
        assert_eq!(phi2(&vu).get(p(1)), &rat(-1, 3));
        assert_eq!(shapley_oracle(&vu).unwrap().get(p(1)), &rat(-1, 3));

        // Nullifying players get zero, the rest split v(N) = 0.
        assert_eq!(phi2(&u), pv(&[rint(0), rint(0), rint(0)]));

        // All players nullifying (zero game): first branch.
        assert_eq!(phi2(&Game::zero(3).unwrap()), pv(&[rint(0), rint(0), rint(0)]));
    }

    #[test]
    fn phi2_gives_nullifying_players_zero() {
        let u = Game::from_assignments(3, [(c(&[2]), rint(2))]).unwrap();
        let payoffs = phi2(&u);
        for i in u.nullifying_players() {
            assert!(payoffs.get(i).is_zero());
        }
    }

    #[test]
    fn remaining_catalog_entries() {
        let u_n = Game::unanimity(3, Coalition::full(3)).unwrap();

        // zero: sum 0 ≠ 1 = v(N) witnesses inefficiency.
        let z = evaluate(&SolutionSpec::Zero, &u_n).unwrap();
        assert_eq!(z, pv(&[rint(0), rint(0), rint(0)]));
        assert_ne!(z.total(), *u_n.grand_worth());

        // asym_first_player on u_N.
        assert_eq!(
            evaluate(&SolutionSpec::AsymFirstPlayer, &u_n).unwrap(),
            pv(&[rint(0), rat(1, 2), rat(1, 2)])
        );

        // max_v1 on the two-coalition witness game.
        let u = Game::from_assignments(3, [(c(&[1]), rint(1)), (c(&[1, 2]), rint(1))]).unwrap();
        assert_eq!(evaluate(&SolutionSpec::MaxV1, &u).unwrap(), pv(&[rint(1), rint(1), rint(1)]));
        let neg = Game::from_assignments(3, [(c(&[1]), rint(-2))]).unwrap();
        assert_eq!(
            evaluate(&SolutionSpec::MaxV1, &neg).unwrap(),
            pv(&[rint(0), rint(0), rint(0)])
        );

        // vi_plus_a.
        let spec = SolutionSpec::vi_plus_a(rint(1)).unwrap();
        let v = witness_v();
        assert_eq!(evaluate(&spec, &v).unwrap(), pv(&[rint(2), rint(2), rint(2)]));
        assert!(SolutionSpec::vi_plus_a(rint(0)).is_err());
        assert!(evaluate(&SolutionSpec::ViPlusA { a: rint(0) }, &v).is_err());
    }

    #[test]
    fn efficient_solutions_are_efficient() {
        let games = [witness_v(), &witness_v() + &witness_w(), Game::unanimity(3, c(&[1, 3])).unwrap()];
        let alpha = rat(-3, 2);
        for v in &games {
            for payoffs in [
                shapley(v),
                equal_division(v),
                egalitarian_shapley(&alpha, v),
                equal_surplus_division(v),
            ] {
                assert_eq!(payoffs.total(), *v.grand_worth(), "{v}");
            }
        }
    }

    #[test]
    fn catalog_is_valid_and_displayable() {
        for spec in SolutionSpec::catalog() {
            spec.validate().unwrap();
            assert!(!spec.to_string().is_empty());
        }
        assert_eq!(SolutionSpec::egalitarian(rat(7, 3)).to_string(), "egalitarian(7/3)");
    }
}
