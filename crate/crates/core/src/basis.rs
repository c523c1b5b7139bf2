//! Coordinates of a game in the unanimity and canonical bases.
//!
//! Every game decomposes uniquely as `v = Σ_T λ_T u_T = Σ_T γ_T e_T` over
//! the nonempty coalitions. The canonical coordinates are read off directly
//! (`γ_T = v(T)`); the unanimity coordinates (the Harsanyi dividends) are
//! computed by an in-place Möbius sweep, one bit dimension at a time, in
//! `O(n·2^n)` rational operations.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::coalition::{Coalition, PlayerId, nonempty_coalitions, players};
use crate::game::Game;
use crate::rational::Rat;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    Unanimity,
    Canonical,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Unanimity => "unanimity",
            Basis::Canonical => "canonical",
        })
    }
}

/// The coordinates of a game in one of the two bases, indexed by the
/// `2^n - 1` nonempty coalitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientMap {
    basis: Basis,
    n: usize,
    // coeff[t.mask()], entry 0 unused and kept at zero
    coeff: Vec<Rat>,
}

impl CoefficientMap {
    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The coefficient of the nonempty coalition `t`.
    pub fn coeff(&self, t: Coalition) -> &Rat {
        assert!(!t.is_empty(), "coefficients are indexed by nonempty coalitions");
        &self.coeff[t.mask() as usize]
    }

    /// All `(coalition, coefficient)` entries with a nonzero coefficient,
    /// in mask order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (Coalition, &Rat)> {
        nonempty_coalitions(self.n)
            .map(|t| (t, &self.coeff[t.mask() as usize]))
            .filter(|(_, c)| !c.is_zero())
    }
}

/// Coordinates of `v` in the requested basis.
pub fn to_coefficients(v: &Game, basis: Basis) -> CoefficientMap {
    let n = v.n();
    let mut coeff: Vec<Rat> = (0..1u64 << n)
        .map(|m| v.worth(Coalition::from_mask(m as u32)).clone())
        .collect();
    if basis == Basis::Unanimity {
        // Möbius sweep: after processing bit b, coeff[m] holds the
        // alternating subset sum over the dimensions handled so far.
        for b in 0..n {
            let bit = 1usize << b;
            for m in 0..coeff.len() {
                if m & bit != 0 {
                    let prev = coeff[m ^ bit].clone();
                    coeff[m] -= prev;
                }
            }
        }
    }
    coeff[0] = Rat::zero();
    CoefficientMap { basis, n, coeff }
}

/// The game `Σ_T coeff(T) · basis_game(T)`, reconstructed exactly.
pub fn from_coefficients(c: &CoefficientMap) -> Game {
    let mut worth = c.coeff.clone();
    worth[0] = Rat::zero();
    if c.basis == Basis::Unanimity {
        // Zeta sweep, the inverse of the Möbius sweep above.
        for b in 0..c.n {
            let bit = 1usize << b;
            for m in 0..worth.len() {
                if m & bit != 0 {
                    let prev = worth[m ^ bit].clone();
                    worth[m] += prev;
                }
            }
        }
    }
    Game::from_worths(c.n, worth)
}

/// The Harsanyi dividends of `v` (unanimity-basis coordinates).
pub fn harsanyi_dividends(v: &Game) -> CoefficientMap {
    to_coefficients(v, Basis::Unanimity)
}

/// Null players detected through the dividend criterion: `i` is null iff
/// `λ_T = 0` for every coalition `T` containing `i`. Independent of the
/// definitional check in [`Game::null_players`].
pub fn null_players_via_dividends(v: &Game) -> BTreeSet<PlayerId> {
    let dividends = harsanyi_dividends(v);
    players(v.n())
        .filter(|&i| {
            nonempty_coalitions(v.n())
                .filter(|t| t.contains(i))
                .all(|t| dividends.coeff(t).is_zero())
        })
        .collect()
}
