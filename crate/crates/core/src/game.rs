//! Games on a fixed player set, their algebra, and player classification.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use num_traits::{One, Zero};

use crate::coalition::{
    Coalition, MAX_PLAYERS, PlayerId, all_coalitions, coalitions_without, nonempty_coalitions,
    players,
};
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::Permutation;

/// A game with transferable utility: a worth for every coalition of a fixed
/// player set, with the empty coalition worth pinned to zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Game {
    n: usize,
    // worth[s.mask()], length 2^n, worth[0] == 0
    worth: Vec<Rat>,
}

fn check_player_count(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::PlayerCountTooSmall { min: 1, got: n });
    }
    if n > MAX_PLAYERS {
        return Err(Error::PlayerCountTooLarge { max: MAX_PLAYERS, got: n });
    }
    Ok(())
}

impl Game {
    /// The zero game: every coalition is worth 0.
    pub fn zero(n: usize) -> Result<Game> {
        check_player_count(n)?;
        Ok(Game { n, worth: vec![Rat::zero(); 1 << n] })
    }

    /// Builds a game from a sparse list of `(coalition, worth)` assignments;
    /// unlisted coalitions default to worth 0. The empty coalition may be
    /// listed only with worth 0, and no coalition may appear twice.
    pub fn from_assignments<I>(n: usize, assignments: I) -> Result<Game>
    where
        I: IntoIterator<Item = (Coalition, Rat)>,
    {
        let mut game = Game::zero(n)?;
        let mut seen = vec![false; 1 << n];
        for (coalition, value) in assignments {
            if !coalition.fits(n) {
                return Err(Error::CoalitionOutOfRange { mask: coalition.mask(), n });
            }
            let idx = coalition.mask() as usize;
            if seen[idx] {
                return Err(Error::DuplicateCoalition { mask: coalition.mask() });
            }
            seen[idx] = true;
            if coalition.is_empty() {
                if !value.is_zero() {
                    return Err(Error::NonzeroEmptyWorth);
                }
                continue;
            }
            game.worth[idx] = value;
        }
        Ok(game)
    }

    /// The unanimity game `u_T`: worth 1 exactly on the supersets of `T`.
    pub fn unanimity(n: usize, t: Coalition) -> Result<Game> {
        check_player_count(n)?;
        if t.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if !t.fits(n) {
            return Err(Error::CoalitionOutOfRange { mask: t.mask(), n });
        }
        let mut game = Game::zero(n)?;
        for s in all_coalitions(n) {
            if t.is_subset_of(s) {
                game.worth[s.mask() as usize] = Rat::one();
            }
        }
        Ok(game)
    }

    /// The canonical game `e_T`: worth 1 exactly on `T` itself.
    pub fn canonical(n: usize, t: Coalition) -> Result<Game> {
        check_player_count(n)?;
        if t.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if !t.fits(n) {
            return Err(Error::CoalitionOutOfRange { mask: t.mask(), n });
        }
        let mut game = Game::zero(n)?;
        game.worth[t.mask() as usize] = Rat::one();
        Ok(game)
    }

    /// The game that is worth `c` on every nonempty coalition.
    pub fn constant(n: usize, c: &Rat) -> Result<Game> {
        check_player_count(n)?;
        let mut game = Game::zero(n)?;
        for s in nonempty_coalitions(n) {
            game.worth[s.mask() as usize] = c.clone();
        }
        Ok(game)
    }

    pub(crate) fn from_worths(n: usize, worth: Vec<Rat>) -> Game {
        debug_assert_eq!(worth.len(), 1 << n);
        debug_assert!(worth[0].is_zero());
        Game { n, worth }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn worth(&self, s: Coalition) -> &Rat {
        &self.worth[s.mask() as usize]
    }

    pub(crate) fn set_worth(&mut self, s: Coalition, value: Rat) {
        debug_assert!(!s.is_empty() || value.is_zero());
        self.worth[s.mask() as usize] = value;
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::full(self.n)
    }

    /// `v(N)`, the worth of the grand coalition.
    pub fn grand_worth(&self) -> &Rat {
        self.worth(self.grand_coalition())
    }

    pub fn is_zero(&self) -> bool {
        self.worth.iter().all(Rat::is_zero)
    }

    /// The nonempty coalitions with a nonzero worth, in mask order.
    pub fn nonzero_worths(&self) -> impl Iterator<Item = (Coalition, &Rat)> {
        nonempty_coalitions(self.n)
            .map(|s| (s, self.worth(s)))
            .filter(|(_, w)| !w.is_zero())
    }

    /// True when every nonempty coalition has the same worth.
    pub fn is_constant_on_nonempty(&self) -> bool {
        let first = &self.worth[1];
        self.worth[2..].iter().all(|w| w == first)
    }

    /// `a·v + b·w`, the coalition-wise linear combination.
    pub fn linear_combine(a: &Rat, v: &Game, b: &Rat, w: &Game) -> Result<Game> {
        if v.n != w.n {
            return Err(Error::PlayerCountMismatch { left: v.n, right: w.n });
        }
        let worth = v
            .worth
            .iter()
            .zip(&w.worth)
            .map(|(x, y)| a * x + b * y)
            .collect();
        Ok(Game { n: v.n, worth })
    }

    /// The players who contribute nothing to any coalition:
    /// `v(S ∪ i) = v(S)` for every `S ⊆ N \ {i}`.
    pub fn null_players(&self) -> BTreeSet<PlayerId> {
        players(self.n)
            .filter(|&i| {
                coalitions_without(self.n, i).all(|s| self.worth(s.insert(i)) == self.worth(s))
            })
            .collect()
    }

    /// The players whose presence forces every containing coalition to zero:
    /// `v(S ∪ i) = 0` for every `S ⊆ N \ {i}`.
    pub fn nullifying_players(&self) -> BTreeSet<PlayerId> {
        players(self.n)
            .filter(|&i| {
                coalitions_without(self.n, i).all(|s| self.worth(s.insert(i)).is_zero())
            })
            .collect()
    }

    /// True when `i` and `j` contribute the same to any coalition:
    /// `v(S ∪ i) = v(S ∪ j)` for every `S ⊆ N \ {i, j}`.
    pub fn symmetric_pair(&self, i: PlayerId, j: PlayerId) -> Result<bool> {
        if i == j {
            return Err(Error::IdenticalPlayers);
        }
        for p in [i, j] {
            if !p.in_range(self.n) {
                return Err(Error::PlayerOutOfRange { player: p.index(), n: self.n });
            }
        }
        Ok(all_coalitions(self.n)
            .filter(|s| !s.contains(i) && !s.contains(j))
            .all(|s| self.worth(s.insert(i)) == self.worth(s.insert(j))))
    }

    /// All symmetric pairs `(i, j)` with `i < j`.
    pub fn symmetric_pairs(&self) -> Vec<(PlayerId, PlayerId)> {
        let mut pairs = Vec::new();
        for i in players(self.n) {
            for j in players(self.n).filter(|j| j > &i) {
                if self.symmetric_pair(i, j).expect("distinct in-range players") {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    /// The relabelled game `πv` with `(πv)(πS) = v(S)`.
    pub fn permute(&self, pi: &Permutation) -> Result<Game> {
        if pi.n() != self.n {
            return Err(Error::PlayerCountMismatch { left: self.n, right: pi.n() });
        }
        let mut worth = vec![Rat::zero(); 1 << self.n];
        for s in all_coalitions(self.n) {
            worth[pi.apply_coalition(s).mask() as usize] = self.worth(s).clone();
        }
        Ok(Game { n: self.n, worth })
    }
}

impl Add for &Game {
    type Output = Game;

    /// Coalition-wise sum. Panics when the player counts differ; use
    /// [`Game::linear_combine`] for the checked form.
    fn add(self, rhs: &Game) -> Game {
        assert_eq!(self.n, rhs.n, "player counts differ");
        let worth = self.worth.iter().zip(&rhs.worth).map(|(x, y)| x + y).collect();
        Game { n: self.n, worth }
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{n={}", self.n)?;
        for (s, w) in self.nonzero_worths() {
            write!(f, ", {s}={w}")?;
        }
        write!(f, "}}")
    }
}

/// A payoff vector: one exact rational per player.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PayoffVector {
    payoffs: Vec<Rat>,
}

impl PayoffVector {
    pub fn new(payoffs: Vec<Rat>) -> PayoffVector {
        PayoffVector { payoffs }
    }

    pub fn n(&self) -> usize {
        self.payoffs.len()
    }

    pub fn get(&self, player: PlayerId) -> &Rat {
        &self.payoffs[player.index() - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rat> {
        self.payoffs.iter()
    }

    /// The sum of all payoffs.
    pub fn total(&self) -> Rat {
        self.payoffs.iter().fold(Rat::zero(), |acc, p| acc + p)
    }

    /// `a·x + b·y`, component-wise.
    pub fn linear_combine(a: &Rat, x: &PayoffVector, b: &Rat, y: &PayoffVector) -> PayoffVector {
        assert_eq!(x.n(), y.n(), "payoff lengths differ");
        PayoffVector {
            payoffs: x.payoffs.iter().zip(&y.payoffs).map(|(p, q)| a * p + b * q).collect(),
        }
    }
}

impl Add for &PayoffVector {
    type Output = PayoffVector;

    fn add(self, rhs: &PayoffVector) -> PayoffVector {
        assert_eq!(self.n(), rhs.n(), "payoff lengths differ");
        PayoffVector {
            payoffs: self.payoffs.iter().zip(&rhs.payoffs).map(|(p, q)| p + q).collect(),
        }
    }
}

impl fmt::Display for PayoffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.payoffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
