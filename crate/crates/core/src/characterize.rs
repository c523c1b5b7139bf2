//! Desk-verification of the two characterizations: fitting the family
//! parameter `α` from unanimity games, probing family membership on random
//! games, and cross-checking the implications between the null-player and
//! nullifying-player axioms.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::axioms::{AxiomId, SearchStrategy, Verdict, search_counterexample};
use crate::coalition::{Coalition, PlayerId, nonempty_coalitions, players};
use crate::error::{Error, Result};
use crate::game::{Game, PayoffVector};
use crate::rational::{Rat, rint};
use crate::solutions::{SolutionSpec, equal_division, evaluate, shapley};

/// Witness of a failed unanimity-payoff sweep: the probe predicted `α`,
/// but `φ_i(u_T)` came out different from the family value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FitWitness {
    pub coalition: Coalition,
    pub player: PlayerId,
    pub expected: Rat,
    pub actual: Rat,
}

/// Result of fitting the family parameter from unanimity games.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FitResult {
    /// Every unanimity payoff matches the family with this `α = n·η`,
    /// where `η` is the common payoff of null players.
    ConsistentFit { alpha: Rat, eta: Rat },
    Inconsistent { witness: FitWitness },
}

impl fmt::Display for FitResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitResult::ConsistentFit { alpha, eta } => {
                write!(f, "consistent fit: alpha = {alpha} (eta = {eta})")
            }
            FitResult::Inconsistent { witness } => write!(
                f,
                "inconsistent at T = {}, i = {}: expected {}, got {}",
                witness.coalition, witness.player, witness.expected, witness.actual
            ),
        }
    }
}

/// Verdict of the family-membership probe. `InFamily` is evidence within
/// the trial budget, not a proof.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MembershipVerdict {
    InFamily { alpha: Rat, trials: u64 },
    NotInFamily { witness: Game, expected: PayoffVector, actual: PayoffVector },
}

impl MembershipVerdict {
    pub fn is_in_family(&self) -> bool {
        matches!(self, MembershipVerdict::InFamily { .. })
    }
}

impl fmt::Display for MembershipVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MembershipVerdict::InFamily { alpha, trials } => write!(
                f,
                "in family with alpha = {alpha} ({trials} random games checked; evidence, not a proof)"
            ),
            MembershipVerdict::NotInFamily { witness, expected, actual } => write!(
                f,
                "not in family: on {witness} the family predicts {expected} but the solution gives {actual}"
            ),
        }
    }
}

/// `α·ED(v) + (1−α)·Sh(v)`: the family member at parameter `α`.
pub fn family_payoff(alpha: &Rat, v: &Game) -> PayoffVector {
    use num_traits::One;
    let one_minus = Rat::one() - alpha;
    PayoffVector::linear_combine(alpha, &equal_division(v), &one_minus, &shapley(v))
}

fn check_min_players(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::PlayerCountTooSmall { min: 3, got: n });
    }
    if n > crate::coalition::MAX_PLAYERS {
        return Err(Error::PlayerCountTooLarge { max: crate::coalition::MAX_PLAYERS, got: n });
    }
    Ok(())
}

/// Fits the family parameter from unanimity games. The probe reads
/// `η := φ_n(u_{1})` (player `n` is null there) and sets `α := n·η`; the
/// sweep then checks `φ_i(u_T) = α/n` off `T` and `α/n + (1−α)/t` on `T`
/// for every nonempty `T` and every `i`, exactly. Any null player on any
/// unanimity game must yield the same `η` for the fit to be consistent,
/// so the choice of probe is checked, not assumed.
pub fn fit_alpha(solution: &SolutionSpec, n: usize) -> Result<FitResult> {
    check_min_players(n)?;
    let probe_game = Game::unanimity(n, Coalition::singleton(PlayerId::new(1)?))?;
    let last = PlayerId::new(n)?;
    let eta = evaluate(solution, &probe_game)?.get(last).clone();
    let alpha = &eta * rint(n as i64);

    let off_t = &alpha / rint(n as i64);
    for t in nonempty_coalitions(n) {
        let u_t = Game::unanimity(n, t)?;
        let payoffs = evaluate(solution, &u_t)?;
        let on_t = {
            use num_traits::One;
            &off_t + (Rat::one() - &alpha) / rint(t.size() as i64)
        };
        // Null players first, mirroring how the probe read η.
        let sweep = players(n).filter(|i| !t.contains(*i)).chain(players(n).filter(|i| t.contains(*i)));
        for i in sweep {
            let expected = if t.contains(i) { &on_t } else { &off_t };
            let actual = payoffs.get(i);
            if actual != expected {
                return Ok(FitResult::Inconsistent {
                    witness: FitWitness {
                        coalition: t,
                        player: i,
                        expected: expected.clone(),
                        actual: actual.clone(),
                    },
                });
            }
        }
    }
    Ok(FitResult::ConsistentFit { alpha, eta })
}

/// Fits `α`, then checks `φ(v) = α·ED(v) + (1−α)·Sh(v)` on `trials` seeded
/// random games. The game distribution mixes unstructured draws with
/// structured ones (null players, nullifying players, constant games) so
/// solutions that branch on game structure are probed off their generic
/// branch.
pub fn verify_family_membership(
    solution: &SolutionSpec,
    n: usize,
    trials: u64,
    seed: u64,
) -> Result<MembershipVerdict> {
    check_min_players(n)?;
    if trials == 0 {
        return Err(Error::InvalidStrategy("membership check needs trials > 0".into()));
    }
    let alpha = match fit_alpha(solution, n)? {
        FitResult::ConsistentFit { alpha, .. } => alpha,
        FitResult::Inconsistent { witness } => {
            let u_t = Game::unanimity(n, witness.coalition)?;
            let actual = evaluate(solution, &u_t)?;
            // Report the family line through the probe's α so the witness
            // is re-checkable against a concrete expected vector.
            let probe = Game::unanimity(n, Coalition::singleton(PlayerId::new(1)?))?;
            let eta = evaluate(solution, &probe)?.get(PlayerId::new(n)?).clone();
            let alpha = &eta * rint(n as i64);
            let expected = family_payoff(&alpha, &u_t);
            return Ok(MembershipVerdict::NotInFamily { witness: u_t, expected, actual });
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let v = crate::axioms::random_membership_game(n, &mut rng);
        let expected = family_payoff(&alpha, &v);
        let actual = evaluate(solution, &v)?;
        if actual != expected {
            return Ok(MembershipVerdict::NotInFamily { witness: v, expected, actual });
        }
    }
    Ok(MembershipVerdict::InFamily { alpha, trials })
}

/// One implication check: `applicable` when the hypotheses held, and then
/// `consistent` when the conclusion matched. The implications are
/// theorems, so an inconsistent observation flags an implementation bug.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ImplicationCheck {
    pub applicable: bool,
    pub consistent: bool,
}

impl ImplicationCheck {
    fn vacuous() -> ImplicationCheck {
        ImplicationCheck { applicable: false, consistent: true }
    }
}

/// The observed verdicts and implication checks for one solution.
#[derive(Clone, Debug)]
pub struct CrosscheckReport {
    pub solution: SolutionSpec,
    pub linearity: Verdict,
    pub productive_environment: Verdict,
    pub null_neutrality: Verdict,
    pub nullifying_property: Verdict,
    pub nullifying_neutrality: Verdict,
    pub standard_equivalence: Verdict,
    /// Linear + nonnegative-on-null-in-productive ⇒ null player neutrality.
    pub productive_implies_neutrality: ImplicationCheck,
    /// Nullifying player neutrality ⇔ coalitional standard equivalence
    /// (verdict kinds must match).
    pub neutrality_equals_standard: ImplicationCheck,
    /// Under linearity, nullifying player property ⇔ nullifying player
    /// neutrality (verdict kinds must match).
    pub property_equals_neutrality: ImplicationCheck,
}

impl CrosscheckReport {
    pub fn all_consistent(&self) -> bool {
        self.productive_implies_neutrality.consistent
            && self.neutrality_equals_standard.consistent
            && self.property_equals_neutrality.consistent
    }
}

impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "crosscheck for {}", self.solution)?;
        writeln!(f, "  linearity: {}", self.linearity)?;
        writeln!(f, "  null_player_productive_environment: {}", self.productive_environment)?;
        writeln!(f, "  null_player_neutrality: {}", self.null_neutrality)?;
        writeln!(f, "  nullifying_player_property: {}", self.nullifying_property)?;
        writeln!(f, "  nullifying_player_neutrality: {}", self.nullifying_neutrality)?;
        writeln!(f, "  coalitional_standard_equivalence: {}", self.standard_equivalence)?;
        let show = |c: ImplicationCheck| {
            if !c.applicable {
                "vacuous"
            } else if c.consistent {
                "consistent"
            } else {
                "INCONSISTENT (implementation bug)"
            }
        };
        writeln!(
            f,
            "  productive environment + linearity => neutrality: {}",
            show(self.productive_implies_neutrality)
        )?;
        writeln!(
            f,
            "  nullifying neutrality == standard equivalence: {}",
            show(self.neutrality_equals_standard)
        )?;
        write!(
            f,
            "  nullifying property == nullifying neutrality (linear): {}",
            show(self.property_equals_neutrality)
        )
    }
}

/// Runs the axiom searches a solution needs for the three implication
/// checks and reports whether the observed verdict pattern is consistent
/// with them. The checks compare search verdicts, not the (undecidable)
/// truth of the axioms; a "Passed" hypothesis is evidence within the
/// strategy budget.
pub fn implication_crosscheck(
    solution: &SolutionSpec,
    strategy: &SearchStrategy,
) -> Result<CrosscheckReport> {
    let run = |axiom: AxiomId| search_counterexample(axiom, solution, strategy);
    let linearity = run(AxiomId::Linearity)?;
    let productive_environment = run(AxiomId::NullPlayerProductiveEnvironment)?;
    let null_neutrality = run(AxiomId::NullPlayerNeutrality)?;
    let nullifying_property = run(AxiomId::NullifyingPlayerProperty)?;
    let nullifying_neutrality = run(AxiomId::NullifyingPlayerNeutrality)?;
    let standard_equivalence = run(AxiomId::CoalitionalStandardEquivalence)?;

    let productive_implies_neutrality =
        if linearity.is_passed() && productive_environment.is_passed() {
            ImplicationCheck { applicable: true, consistent: null_neutrality.is_passed() }
        } else {
            ImplicationCheck::vacuous()
        };

    let neutrality_equals_standard = ImplicationCheck {
        applicable: true,
        consistent: nullifying_neutrality.is_passed() == standard_equivalence.is_passed(),
    };

    let property_equals_neutrality = if linearity.is_passed() {
        ImplicationCheck {
            applicable: true,
            consistent: nullifying_property.is_passed() == nullifying_neutrality.is_passed(),
        }
    } else {
        ImplicationCheck::vacuous()
    };

    Ok(CrosscheckReport {
        solution: solution.clone(),
        linearity,
        productive_environment,
        null_neutrality,
        nullifying_property,
        nullifying_neutrality,
        standard_equivalence,
        productive_implies_neutrality,
        neutrality_equals_standard,
        property_equals_neutrality,
    })
}
