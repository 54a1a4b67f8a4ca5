use std::cmp::Ordering;
use std::fmt;

use super::{count_components, full_mask, labels_of, mask_of, Mask, Poset, SubposetRelation};
use crate::error::{Error, Result};
use crate::qsym::Composition;

/// An ordered set partition `(B_1, ..., B_k)` of `{1..n}`; against a host
/// poset every prefix union `B_1 ∪ ... ∪ B_i` is an ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IdealFlag {
    n: usize,
    blocks: Vec<Mask>,
}

impl IdealFlag {
    /// Validates that `blocks` is an ordered set partition of `{1..n}` whose
    /// prefix unions are ideals of `host`.
    pub fn new(host: &Poset, blocks: &[Vec<u32>]) -> Result<Self> {
        let n = host.n();
        let mut seen: Mask = 0;
        let mut masks = Vec::with_capacity(blocks.len());
        for b in blocks {
            if b.is_empty() || b.iter().any(|&i| i == 0 || i as usize > n) {
                return Err(Error::Partition(n));
            }
            let m = mask_of(b.iter().copied());
            if m & seen != 0 || m.count_ones() as usize != b.len() {
                return Err(Error::Partition(n));
            }
            seen |= m;
            if !host.is_ideal_mask(seen) {
                return Err(Error::Flag(labels_of(seen)));
            }
            masks.push(m);
        }
        if seen != full_mask(n) {
            return Err(Error::Partition(n));
        }
        Ok(Self { n, blocks: masks })
    }

    pub(crate) fn from_masks(n: usize, blocks: Vec<Mask>) -> Self {
        Self { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks `k`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> Vec<Vec<u32>> {
        self.blocks.iter().map(|&b| labels_of(b)).collect()
    }

    pub fn block_masks(&self) -> &[Mask] {
        &self.blocks
    }

    /// `(|B_1|, ..., |B_k|)`.
    pub fn composition(&self) -> Composition {
        Composition::from_masks(&self.blocks)
    }

    /// The opposite flag: blocks in reverse order.
    pub fn opposite(&self) -> IdealFlag {
        Self { n: self.n, blocks: self.blocks.iter().rev().copied().collect() }
    }

    /// `P/F`: the relations of `host` between elements of the same block.
    pub fn quotient(&self, host: &Poset) -> Result<SubposetRelation> {
        self.check_against(host)?;
        Ok(quotient_masks(host, &self.blocks))
    }

    /// `n - Σ c(P|_{B_i})`.
    pub fn rank(&self, host: &Poset) -> Result<usize> {
        self.check_against(host)?;
        Ok(rank_masks(host, &self.blocks))
    }

    fn check_against(&self, host: &Poset) -> Result<()> {
        if host.n() != self.n {
            return Err(Error::Partition(host.n()));
        }
        let mut prefix = 0;
        for &b in &self.blocks {
            prefix |= b;
            if !host.is_ideal_mask(prefix) {
                return Err(Error::Flag(labels_of(prefix)));
            }
        }
        Ok(())
    }
}

impl Ord for IdealFlag {
    fn cmp(&self, other: &Self) -> Ordering {
        self.blocks
            .len()
            .cmp(&other.blocks.len())
            .then_with(|| self.blocks().cmp(&other.blocks()))
    }
}

impl PartialOrd for IdealFlag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IdealFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, b) in self.blocks().iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            let s: Vec<String> = b.iter().map(|i| i.to_string()).collect();
            write!(f, "{}", s.join(","))?;
        }
        write!(f, ")")
    }
}

pub(crate) fn quotient_masks(host: &Poset, blocks: &[Mask]) -> SubposetRelation {
    let mut below = host.below_masks().to_vec();
    for &b in blocks {
        for j in labels_of(b) {
            below[j as usize - 1] &= b;
        }
    }
    SubposetRelation::from_below(below)
}

pub(crate) fn rank_masks(host: &Poset, blocks: &[Mask]) -> usize {
    let adj = host.comparability();
    host.n() - blocks.iter().map(|&b| count_components(&adj, b)).sum::<usize>()
}

/// Quotient and rank of a flag given as block masks, for use with
/// [`for_each_flag`]. The blocks are assumed to form a flag of ideals.
pub fn quotient_rank(host: &Poset, blocks: &[Mask]) -> (SubposetRelation, usize) {
    (quotient_masks(host, blocks), rank_masks(host, blocks))
}

/// Calls `visit` on every flag of ideals extending the prefix `stack`, whose
/// union is `placed`, using only blocks accepted by `allow`.
pub(crate) fn extend_flags<A, V>(p: &Poset, placed: Mask, stack: &mut Vec<Mask>, allow: &A, visit: &mut V)
where
    A: Fn(Mask) -> bool,
    V: FnMut(&[Mask]),
{
    let full = p.full();
    if placed == full {
        visit(stack);
        return;
    }
    let rest = full & !placed;
    let below = p.below_masks();
    let mut sub = rest;
    while sub != 0 {
        let ideal = placed | sub;
        let ok = labels_of(sub).into_iter().all(|j| below[j as usize - 1] & !ideal == 0);
        if ok && allow(sub) {
            stack.push(sub);
            extend_flags(p, ideal, stack, allow, visit);
            stack.pop();
        }
        sub = (sub - 1) & rest;
    }
}

/// Nonempty ideals, i.e. the admissible first blocks of a flag.
pub(crate) fn first_blocks(p: &Poset) -> Vec<Mask> {
    let full = p.full();
    let mut out = Vec::new();
    let mut sub = full;
    while sub != 0 {
        if p.is_ideal_mask(sub) {
            out.push(sub);
        }
        sub = (sub - 1) & full;
    }
    out
}

/// Visits every flag of ideals of `p` as a slice of block masks, in
/// unspecified order. For `n = 0` the empty flag is visited once.
pub fn for_each_flag<V: FnMut(&[Mask])>(p: &Poset, mut visit: V) {
    extend_flags(p, 0, &mut Vec::new(), &|_| true, &mut visit);
}

/// All flags of ideals, ordered by number of blocks and then
/// lexicographically on the sequence of sorted blocks.
pub fn ideal_flags(p: &Poset) -> Vec<IdealFlag> {
    let mut out = Vec::new();
    for_each_flag(p, |blocks| out.push(IdealFlag::from_masks(p.n(), blocks.to_vec())));
    out.sort();
    out
}
