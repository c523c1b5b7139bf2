//! Players, coalitions, and permutations of the player set.
//!
//! Players are 1-based everywhere in the public API, matching the usual
//! tabular presentation of games. Internally a coalition is a bitmask with
//! player `i` on bit `i - 1`, which fixes iteration order and makes the
//! basis transforms straightforward dimension sweeps.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the player count; a game stores all `2^n` worths.
pub const MAX_PLAYERS: usize = 16;

/// A player, identified by a 1-based index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PlayerId(usize);

impl PlayerId {
    pub fn new(index: usize) -> Result<Self> {
        if index == 0 {
            return Err(Error::PlayerIndexZero);
        }
        Ok(PlayerId(index))
    }

    /// The 1-based index.
    pub fn index(self) -> usize {
        self.0
    }

    pub(crate) fn bit(self) -> u32 {
        (self.0 - 1) as u32
    }

    pub(crate) fn from_bit(bit: u32) -> Self {
        PlayerId(bit as usize + 1)
    }

    pub fn in_range(self, n: usize) -> bool {
        self.0 <= n
    }
}

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// All players `1..=n`.
pub fn players(n: usize) -> impl Iterator<Item = PlayerId> {
    (1..=n).map(PlayerId)
}

/// A coalition: a subset of the player set, encoded as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    /// The grand coalition on `n` players.
    pub fn full(n: usize) -> Coalition {
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(player: PlayerId) -> Coalition {
        Coalition(1 << player.bit())
    }

    pub fn from_players<I: IntoIterator<Item = PlayerId>>(members: I) -> Coalition {
        let mut mask = 0;
        for p in members {
            mask |= 1 << p.bit();
        }
        Coalition(mask)
    }

    pub fn from_mask(mask: u32) -> Coalition {
        Coalition(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    /// Number of members, `s = |S|`.
    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, player: PlayerId) -> bool {
        self.0 & (1 << player.bit()) != 0
    }

    pub fn insert(self, player: PlayerId) -> Coalition {
        Coalition(self.0 | 1 << player.bit())
    }

    pub fn remove(self, player: PlayerId) -> Coalition {
        Coalition(self.0 & !(1 << player.bit()))
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when the coalition only uses players `1..=n`.
    pub fn fits(self, n: usize) -> bool {
        u64::from(self.0) < (1u64 << n)
    }

    /// Members in increasing player order.
    pub fn members(self) -> impl Iterator<Item = PlayerId> {
        let mask = self.0;
        (0..u32::BITS).filter(move |b| mask & (1 << b) != 0).map(PlayerId::from_bit)
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// All `2^n` coalitions in mask order, starting with the empty one.
pub fn all_coalitions(n: usize) -> impl Iterator<Item = Coalition> {
    (0..1u64 << n).map(|m| Coalition(m as u32))
}

/// The `2^n - 1` nonempty coalitions in mask order.
pub fn nonempty_coalitions(n: usize) -> impl Iterator<Item = Coalition> {
    (1..1u64 << n).map(|m| Coalition(m as u32))
}

/// All coalitions `S` with `S ⊆ N \ {player}`, in mask order.
pub fn coalitions_without(n: usize, player: PlayerId) -> impl Iterator<Item = Coalition> {
    all_coalitions(n).filter(move |s| !s.contains(player))
}

/// A bijection on the player set `{1..n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    // image[b] is the 0-based image of the player on bit b
    image: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n as u32).collect() }
    }

    pub fn transposition(n: usize, a: PlayerId, b: PlayerId) -> Result<Permutation> {
        for p in [a, b] {
            if !p.in_range(n) {
                return Err(Error::PlayerOutOfRange { player: p.index(), n });
            }
        }
        let mut image: Vec<u32> = (0..n as u32).collect();
        image.swap(a.bit() as usize, b.bit() as usize);
        Ok(Permutation { image })
    }

    /// Builds a permutation from the image list `[π(1), π(2), ..., π(n)]`.
    pub fn from_one_based(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        let mut bits = Vec::with_capacity(n);
        for &target in &image {
            if target == 0 || target > n || seen[target - 1] {
                return Err(Error::InvalidPermutation { n });
            }
            seen[target - 1] = true;
            bits.push((target - 1) as u32);
        }
        Ok(Permutation { image: bits })
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.image.iter().map(|&b| b as usize + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, player: PlayerId) -> PlayerId {
        PlayerId::from_bit(self.image[player.bit() as usize])
    }

    pub fn apply_coalition(&self, s: Coalition) -> Coalition {
        let mut mask = 0u32;
        for b in 0..self.image.len() {
            if s.0 & (1 << b) != 0 {
                mask |= 1 << self.image[b];
            }
        }
        Coalition(mask)
    }

    /// Composition `self ∘ first`: apply `first`, then `self`.
    pub fn compose_after(&self, first: &Permutation) -> Permutation {
        assert_eq!(self.n(), first.n(), "permutation sizes differ");
        let image = first.image.iter().map(|&b| self.image[b as usize]).collect();
        Permutation { image }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, t) in self.to_one_based().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}
