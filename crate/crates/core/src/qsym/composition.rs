use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::poset::Mask;

/// An ordered list of positive parts; the empty composition has weight 0.
///
/// Ordered by weight, then length, then lexicographically on the parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    /// Panics if any part is zero.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let parts = parts.into();
        assert!(parts.iter().all(|&p| p > 0), "composition parts must be positive: {parts:?}");
        Self(parts)
    }

    pub fn try_new(parts: impl Into<Vec<u32>>) -> Option<Self> {
        let parts = parts.into();
        parts.iter().all(|&p| p > 0).then_some(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub(crate) fn from_masks(blocks: &[Mask]) -> Self {
        Self(blocks.iter().map(|b| b.count_ones()).collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts `k(α)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `D(α) = {α_1, α_1 + α_2, ..., α_1 + ... + α_{k-1}}`.
    pub fn descent_set(&self) -> Vec<u32> {
        self.0
            .iter()
            .take(self.0.len().saturating_sub(1))
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Inverse of [`descent_set`](Self::descent_set) for compositions of `n`.
    /// `descents` must be a subset of `1..n`; order and duplicates are ignored.
    pub fn from_descents(n: u32, descents: &[u32]) -> Self {
        if n == 0 {
            return Self::empty();
        }
        let mut cuts: Vec<u32> = descents.iter().copied().filter(|&d| d > 0 && d < n).collect();
        cuts.sort_unstable();
        cuts.dedup();
        cuts.push(n);
        let mut prev = 0;
        Self(
            cuts.into_iter()
                .map(|c| {
                    let part = c - prev;
                    prev = c;
                    part
                })
                .collect(),
        )
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }

    /// `(α, i)`.
    pub fn append(&self, part: u32) -> Self {
        assert!(part > 0);
        let mut parts = self.0.clone();
        parts.push(part);
        Self(parts)
    }

    pub fn split_at(&self, i: usize) -> (Self, Self) {
        (Self(self.0[..i].to_vec()), Self(self.0[i..].to_vec()))
    }

    /// Every `β` with `D(β) ⊆ D(α)`, i.e. every way of merging adjacent parts.
    pub fn coarsenings(&self) -> Vec<Self> {
        let d = self.descent_set();
        let n = self.weight();
        d.iter()
            .copied()
            .powerset()
            .map(|keep| Self::from_descents(n, &keep))
            .collect()
    }

    /// Every `β` with `D(α) ⊆ D(β)`.
    pub fn refinements(&self) -> Vec<Self> {
        let n = self.weight();
        let d = self.descent_set();
        let free: Vec<u32> = (1..n).filter(|x| !d.contains(x)).collect();
        free.into_iter()
            .powerset()
            .map(|extra| Self::from_descents(n, &[d.clone(), extra].concat()))
            .collect()
    }

    /// All compositions of `n`, in the crate's term order.
    pub fn all_of(n: u32) -> Vec<Self> {
        if n == 0 {
            return vec![Self::empty()];
        }
        let mut out: Vec<Self> = (1..n).powerset().map(|d| Self::from_descents(n, &d)).collect();
        out.sort();
        out
    }
}

/// `β ⪯ α`: true iff `D(β) ⊆ D(α)`, so `α` refines `β`.
pub fn refines(beta: &Composition, alpha: &Composition) -> bool {
    if beta.weight() != alpha.weight() {
        return false;
    }
    let da = alpha.descent_set();
    beta.descent_set().iter().all(|d| da.contains(d))
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}
