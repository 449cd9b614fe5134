//! Monotone surjections `[n] → [n−r]` encoded as strictly decreasing index
//! tuples, their total order, and the index pairs of the hypercrossed
//! pairings.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A strictly decreasing tuple `(i_r, …, i_1)` with entries in `[0, n−1]`.
/// The empty tuple is `∅_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SurjIndex {
    n: usize,
    entries: Vec<usize>,
}

impl SurjIndex {
    /// Entries in any order; they are sorted decreasingly.
    pub fn new(n: usize, entries: &[usize]) -> Result<Self> {
        let mut e = entries.to_vec();
        e.sort_unstable_by(|a, b| b.cmp(a));
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!(
                "repeated entry in {entries:?}"
            )));
        }
        if let Some(&top) = e.first() {
            if top >= n {
                return Err(Error::Range {
                    what: "surjection index entry",
                    value: top,
                    min: 0,
                    max: n.saturating_sub(1),
                });
            }
        }
        Ok(SurjIndex { n, entries: e })
    }

    pub fn empty(n: usize) -> Self {
        SurjIndex {
            n,
            entries: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Entries as written, largest first.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `#α`, the number of degeneracies in `s_α`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.entries.contains(&i)
    }

    pub fn is_disjoint(&self, other: &SurjIndex) -> bool {
        self.entries.iter().all(|i| !other.contains(*i))
    }

    /// Degeneracy indices in application order: `s_α = s_{i_r} ∘ … ∘ s_{i_1}`
    /// applies `s_{i_1}` first.
    pub fn application_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().rev().copied()
    }
}

impl Ord for SurjIndex {
    /// Read both tuples from the smallest entry upward; at the first
    /// difference the larger entry comes first, and a proper prefix comes
    /// before its extensions.
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.entries.iter().rev();
        let b = other.entries.iter().rev();
        for (x, y) in a.zip(b) {
            if x != y {
                return y.cmp(x);
            }
        }
        self.len().cmp(&other.len()).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for SurjIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SurjIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "∅{}", self.n);
        }
        let parts: Vec<String> = self.entries.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for SurjIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An ordered pair `(α, β)` of disjoint elements of `S(n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairingIndex {
    pub alpha: SurjIndex,
    pub beta: SurjIndex,
}

impl PairingIndex {
    pub fn new(alpha: SurjIndex, beta: SurjIndex) -> Result<Self> {
        if alpha.ambient() != beta.ambient() {
            return Err(Error::Precondition("pairing indices of different n".into()));
        }
        if !alpha.is_disjoint(&beta) {
            return Err(Error::Precondition(format!(
                "pairing indices {alpha} and {beta} overlap"
            )));
        }
        Ok(PairingIndex { alpha, beta })
    }

    pub fn ambient(&self) -> usize {
        self.alpha.ambient()
    }
}

impl fmt::Display for PairingIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.alpha, self.beta)
    }
}

impl Serialize for PairingIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// All `2^n` elements of `S(n)` in increasing order.
pub fn s_set(n: usize) -> Vec<SurjIndex> {
    let mut out: Vec<SurjIndex> = (0u32..(1u32 << n))
        .map(|mask| {
            let entries: Vec<usize> = (0..n).rev().filter(|i| mask & (1 << i) != 0).collect();
            SurjIndex { n, entries }
        })
        .collect();
    out.sort();
    out
}

const P3: [(&[usize], &[usize]); 6] = [
    (&[1, 0], &[2]),
    (&[2, 0], &[1]),
    (&[0], &[2, 1]),
    (&[2], &[0]),
    (&[2], &[1]),
    (&[1], &[0]),
];

/// Pairings for `n = 4` in the row order of the ∂₄-image table.
pub(crate) const P4: [(&[usize], &[usize]); 25] = [
    (&[3, 2, 1], &[0]),
    (&[3, 2, 0], &[1]),
    (&[3, 1, 0], &[2]),
    (&[2, 1, 0], &[3]),
    (&[3, 2], &[1, 0]),
    (&[3, 1], &[2, 0]),
    (&[3, 0], &[2, 1]),
    (&[3, 2], &[1]),
    (&[3, 2], &[0]),
    (&[3, 1], &[2]),
    (&[3, 1], &[0]),
    (&[3, 0], &[2]),
    (&[3, 0], &[1]),
    (&[2, 1], &[3]),
    (&[0], &[2, 1]),
    (&[2, 0], &[3]),
    (&[2, 0], &[1]),
    (&[1, 0], &[3]),
    (&[1, 0], &[2]),
    (&[3], &[2]),
    (&[3], &[1]),
    (&[3], &[0]),
    (&[2], &[1]),
    (&[2], &[0]),
    (&[1], &[0]),
];

fn build(n: usize, table: &[(&[usize], &[usize])]) -> Vec<PairingIndex> {
    table
        .iter()
        .map(|(a, b)| {
            PairingIndex::new(
                SurjIndex::new(n, a).expect("static index"),
                SurjIndex::new(n, b).expect("static index"),
            )
            .expect("static pairing")
        })
        .collect()
}

/// The pairing index set `P(n)` for `2 ≤ n ≤ 4`. For `n = 3, 4` these are
/// the fixed published lists (for `n = 4` in table-row order).
pub fn p_set(n: usize) -> Result<Vec<PairingIndex>> {
    match n {
        2 => Ok(build(2, &[(&[1], &[0])])),
        3 => Ok(build(3, &P3)),
        4 => Ok(build(4, &P4)),
        _ => Err(Error::Range {
            what: "pairing level n",
            value: n,
            min: 2,
            max: 4,
        }),
    }
}
