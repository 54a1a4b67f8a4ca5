//! Finite posets on `{1..n}` and the structural operations the enumerators use.
//!
//! Labels are 1-based at the API surface. Internally element `i` occupies bit
//! `i - 1` of a `u64` mask, which bounds the ground set at 64 elements.

mod canonical;
mod circuits;
mod extensions;
mod flags;

pub use canonical::{all_posets, canonical_form, canonical_representative, MAX_CANONICAL_N, MAX_GENERATED_N};
pub use extensions::linear_extensions;
pub use flags::{for_each_flag, ideal_flags, quotient_rank, IdealFlag};
pub(crate) use flags::{extend_flags, first_blocks, quotient_masks, rank_masks};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_N: usize = 64;

/// Bitmask over the ground set; bit `i - 1` stands for label `i`.
pub type Mask = u64;

pub fn mask_of(labels: impl IntoIterator<Item = u32>) -> Mask {
    labels.into_iter().fold(0, |m, i| m | 1 << (i - 1))
}

pub fn labels_of(mask: Mask) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() + 1);
        m &= m - 1;
    }
    out
}

pub(crate) fn full_mask(n: usize) -> Mask {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Connected components of the graph with adjacency `adj`, restricted to `within`.
/// Components are returned in order of their smallest element.
pub(crate) fn components_in(adj: &[Mask], within: Mask) -> Vec<Mask> {
    let mut rest = within;
    let mut out = Vec::new();
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & within & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        rest &= !comp;
        out.push(comp);
    }
    out
}

pub(crate) fn count_components(adj: &[Mask], within: Mask) -> usize {
    let mut rest = within;
    let mut count = 0;
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & within & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        rest &= !comp;
        count += 1;
    }
    count
}

/// A strict partial order on `{1..n}`, stored transitively closed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `below[j]` holds every `i` with `i < j`.
    below: Vec<Mask>,
    above: Vec<Mask>,
}

impl Poset {
    /// Builds the transitive closure of `pairs`, each `(i, j)` meaning `i < j`.
    pub fn from_relations(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::Size { what: "poset", got: n, max: MAX_N });
        }
        let mut below = vec![0; n];
        for &(i, j) in pairs {
            for label in [i, j] {
                if label == 0 || label as usize > n {
                    return Err(Error::Index { label, n });
                }
            }
            if i == j {
                return Err(Error::Cycle(i));
            }
            below[j as usize - 1] |= 1 << (i - 1);
        }
        // Warshall over bitsets.
        for k in 0..n {
            let bk = below[k];
            for b in below.iter_mut() {
                if *b & (1 << k) != 0 {
                    *b |= bk;
                }
            }
        }
        for (j, &b) in below.iter().enumerate() {
            if b & (1 << j) != 0 {
                return Err(Error::Cycle(j as u32 + 1));
            }
        }
        Ok(Self::from_closed_below(below))
    }

    /// `below` must already be transitively closed and acyclic.
    pub(crate) fn from_closed_below(below: Vec<Mask>) -> Self {
        let n = below.len();
        let mut above = vec![0; n];
        for (j, &b) in below.iter().enumerate() {
            for i in labels_of(b) {
                above[i as usize - 1] |= 1 << j;
            }
        }
        Self { n, below, above }
    }

    pub fn empty() -> Self {
        Self::from_closed_below(Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Mask {
        full_mask(self.n)
    }

    /// Whether `i <_P j`.
    pub fn less(&self, i: u32, j: u32) -> bool {
        self.below[j as usize - 1] & (1 << (i - 1)) != 0
    }

    pub fn below(&self, j: u32) -> Mask {
        self.below[j as usize - 1]
    }

    pub fn above(&self, i: u32) -> Mask {
        self.above[i as usize - 1]
    }

    pub(crate) fn below_masks(&self) -> &[Mask] {
        &self.below
    }

    /// Comparability adjacency, one mask per element.
    pub(crate) fn comparability(&self) -> Vec<Mask> {
        self.below.iter().zip(&self.above).map(|(b, a)| b | a).collect()
    }

    /// All pairs `(i, j)` with `i < j`, sorted.
    pub fn relations(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.n as u32 {
            for j in labels_of(self.above(i)) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn num_relations(&self) -> usize {
        self.below.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Cover relations `i ⋖ j`, sorted.
    pub fn covers(&self) -> Vec<(u32, u32)> {
        self.relations()
            .into_iter()
            .filter(|&(i, j)| self.above(i) & self.below(j) == 0)
            .collect()
    }

    pub fn is_ideal(&self, set: &[u32]) -> bool {
        self.is_ideal_mask(mask_of(set.iter().copied()))
    }

    pub fn is_ideal_mask(&self, set: Mask) -> bool {
        labels_of(set).into_iter().all(|j| self.below(j) & !set == 0)
    }

    pub fn is_antichain_mask(&self, set: Mask) -> bool {
        labels_of(set).into_iter().all(|j| self.below(j) & set == 0)
    }

    pub fn maximal(&self) -> Mask {
        (0..self.n).filter(|&i| self.above[i] == 0).fold(0, |m, i| m | 1 << i)
    }

    pub fn minimal(&self) -> Mask {
        (0..self.n).filter(|&i| self.below[i] == 0).fold(0, |m, i| m | 1 << i)
    }

    /// Connected components of the comparability graph, ordered by least element.
    pub fn connected_components(&self) -> Vec<Vec<u32>> {
        components_in(&self.comparability(), self.full()).into_iter().map(labels_of).collect()
    }

    pub fn num_components(&self) -> usize {
        count_components(&self.comparability(), self.full())
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// `n - c(P)`, the dimension of the poset cone.
    pub fn rank(&self) -> usize {
        self.n - self.num_components()
    }

    /// Restriction to `set`, relabelled order-preservingly onto `{1..|set|}`.
    pub fn restriction(&self, set: Mask) -> Poset {
        let kept = labels_of(set);
        let below = kept
            .iter()
            .map(|&j| {
                kept.iter()
                    .enumerate()
                    .filter(|&(_, &i)| self.less(i, j))
                    .fold(0, |m, (pos, _)| m | 1 << pos)
            })
            .collect();
        Self::from_closed_below(below)
    }

    /// Relabels element `i` as `perm[i - 1]`.
    pub fn relabel(&self, perm: &[u32]) -> Poset {
        assert_eq!(perm.len(), self.n);
        let mut below = vec![0; self.n];
        for (i, j) in self.relations() {
            let (a, b) = (perm[i as usize - 1], perm[j as usize - 1]);
            below[b as usize - 1] |= 1 << (a - 1);
        }
        Self::from_closed_below(below)
    }

    pub fn chain(n: usize) -> Self {
        let below = (0..n).map(full_mask).collect();
        Self::from_closed_below(below)
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_closed_below(vec![0; n])
    }

    /// `i ⋖ n` for every `i < n`.
    pub fn star(n: usize) -> Self {
        let mut below = vec![0; n];
        if n > 0 {
            below[n - 1] = full_mask(n - 1);
        }
        Self::from_closed_below(below)
    }

    /// `i < j` for `i ∈ [m]`, `j ∈ [m+n] ∖ [m]`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let below = (0..m + n).map(|j| if j < m { 0 } else { full_mask(m) }).collect();
        Self::from_closed_below(below)
    }

    /// Disjoint union; labels of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let shift = self.n;
        let mut below = self.below.clone();
        below.extend(other.below.iter().map(|b| b << shift));
        Self::from_closed_below(below)
    }

    /// Series composition: every element of `self` lies below every element of
    /// `other`, whose labels are shifted by `self.n()`.
    pub fn series_composition(&self, other: &Poset) -> Poset {
        let shift = self.n;
        let mut below = self.below.clone();
        below.extend(other.below.iter().map(|b| (b << shift) | self.full()));
        Self::from_closed_below(below)
    }

    pub fn opposite(&self) -> Poset {
        Self::from_closed_below(self.above.clone())
    }

    /// Whether the Hasse diagram, as an undirected graph, is a tree.
    pub fn hasse_is_tree(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let covers = self.covers();
        if covers.len() != self.n - 1 {
            return false;
        }
        let mut adj = vec![0; self.n];
        for (i, j) in covers {
            adj[i as usize - 1] |= 1 << (j - 1);
            adj[j as usize - 1] |= 1 << (i - 1);
        }
        count_components(&adj, self.full()) == 1
    }

    /// `i <_P j` implies `i > j` as integers.
    pub fn is_well_labelled(&self) -> bool {
        self.relations().into_iter().all(|(i, j)| i > j)
    }

    /// Isomorphic copy labelled by a reversed linear extension, so that
    /// [`is_well_labelled`](Self::is_well_labelled) holds.
    pub fn well_labelling(&self) -> Poset {
        let ext = extensions::first_linear_extension(self);
        let n = self.n as u32;
        let mut perm = vec![0; self.n];
        for (pos, &v) in ext.iter().enumerate() {
            perm[v as usize - 1] = n - pos as u32;
        }
        self.relabel(&perm)
    }

    pub fn as_relation(&self) -> SubposetRelation {
        SubposetRelation { below: self.below.clone() }
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({}: ", self.n)?;
        let covers = self.covers();
        for (k, (i, j)) in covers.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}<{j}")?;
        }
        write!(f, ")")
    }
}

/// A transitively closed subset of a host poset's relations, on the host's
/// ground set. Quotients `P/F` and positive subposets live here.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubposetRelation {
    below: Vec<Mask>,
}

impl SubposetRelation {
    pub fn from_pairs(n: usize, pairs: &[(u32, u32)]) -> Self {
        let mut below = vec![0; n];
        for &(i, j) in pairs {
            below[j as usize - 1] |= 1 << (i - 1);
        }
        Self { below }
    }

    pub(crate) fn from_below(below: Vec<Mask>) -> Self {
        Self { below }
    }

    pub fn host_n(&self) -> usize {
        self.below.len()
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        self.below[j as usize - 1] & (1 << (i - 1)) != 0
    }

    pub fn pairs(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self
            .below
            .iter()
            .enumerate()
            .flat_map(|(j, &b)| labels_of(b).into_iter().map(move |i| (i, j as u32 + 1)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn len(&self) -> usize {
        self.below.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.below.iter().all(|&b| b == 0)
    }

    pub fn is_transitively_closed(&self) -> bool {
        self.below
            .iter()
            .all(|&b| labels_of(b).into_iter().all(|i| self.below[i as usize - 1] & !b == 0))
    }

    pub fn is_subrelation_of(&self, host: &Poset) -> bool {
        self.below.len() == host.n() && self.below.iter().zip(host.below_masks()).all(|(q, p)| q & !p == 0)
    }

    fn adjacency(&self) -> Vec<Mask> {
        let mut adj = self.below.clone();
        for (j, &b) in self.below.iter().enumerate() {
            for i in labels_of(b) {
                adj[i as usize - 1] |= 1 << j;
            }
        }
        adj
    }

    pub fn connected_components(&self) -> Vec<Vec<u32>> {
        components_in(&self.adjacency(), full_mask(self.host_n()))
            .into_iter()
            .map(labels_of)
            .collect()
    }

    pub fn num_components(&self) -> usize {
        count_components(&self.adjacency(), full_mask(self.host_n()))
    }

    /// `n - c`, the dimension of the cone of this relation.
    pub fn dimension(&self) -> usize {
        self.host_n() - self.num_components()
    }

    /// Reads the relation as a poset on the same ground set.
    pub fn to_poset(&self) -> Poset {
        debug_assert!(self.is_transitively_closed());
        Poset::from_closed_below(self.below.clone())
    }
}

impl fmt::Debug for SubposetRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rel({}: {:?})", self.host_n(), self.pairs())
    }
}

/// Comparability-graph components of a poset or relation.
pub trait Components {
    fn components(&self) -> Vec<Vec<u32>>;
}

impl Components for Poset {
    fn components(&self) -> Vec<Vec<u32>> {
        self.connected_components()
    }
}

impl Components for SubposetRelation {
    fn components(&self) -> Vec<Vec<u32>> {
        self.connected_components()
    }
}

pub use circuits::is_positive_subposet;

#[cfg(test)]
mod tests {
    use super::*;

    fn k22() -> Poset {
        Poset::from_relations(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn closure_and_errors() {
        assert_eq!(k22().num_relations(), 4);
        assert_eq!(Poset::from_relations(1, &[]).unwrap().n(), 1);
        let c = Poset::from_relations(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(c.relations(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(c, Poset::chain(3));
        assert_eq!(Poset::from_relations(3, &[(1, 2), (2, 3), (3, 1)]), Err(Error::Cycle(1)));
        assert_eq!(Poset::from_relations(2, &[(1, 2), (2, 1)]), Err(Error::Cycle(1)));
        assert_eq!(Poset::from_relations(2, &[(1, 1)]), Err(Error::Cycle(1)));
        assert!(matches!(Poset::from_relations(2, &[(1, 3)]), Err(Error::Index { label: 3, n: 2 })));
        assert!(matches!(Poset::from_relations(2, &[(0, 1)]), Err(Error::Index { .. })));
    }

    #[test]
    fn ideals() {
        let p = k22();
        assert!(p.is_ideal(&[1]));
        assert!(!p.is_ideal(&[3]));
        assert!(p.is_ideal(&[]));
        assert!(p.is_ideal(&[1, 2, 3, 4]));
        assert!(p.is_ideal(&[1, 2, 4]));
    }

    #[test]
    fn components_and_rank() {
        assert_eq!(k22().connected_components().len(), 1);
        assert_eq!(k22().rank(), 3);
        assert_eq!(Poset::antichain(5).connected_components().len(), 5);
        assert_eq!(Poset::antichain(5).rank(), 0);
        let q = SubposetRelation::from_pairs(4, &[(2, 3), (2, 4)]);
        assert_eq!(q.components(), vec![vec![1], vec![2, 3, 4]]);
        assert_eq!(Poset::empty().rank(), 0);
    }

    #[test]
    fn constructors() {
        assert_eq!(Poset::star(2), Poset::chain(2));
        assert_eq!(Poset::complete_bipartite(1, 1), Poset::chain(2));
        assert_eq!(Poset::complete_bipartite(2, 2), k22());
        assert_eq!(Poset::chain(2).opposite().relations(), vec![(2, 1)]);
        assert_eq!(Poset::star(4).covers(), vec![(1, 4), (2, 4), (3, 4)]);
        let d = Poset::chain(2).disjoint_union(&Poset::chain(2));
        assert_eq!(d.relations(), vec![(1, 2), (3, 4)]);
        let s = Poset::antichain(2).series_composition(&Poset::antichain(2));
        assert_eq!(s, k22());
    }

    #[test]
    fn well_labelling() {
        assert!(!Poset::chain(2).is_well_labelled());
        assert!(Poset::from_relations(2, &[(2, 1)]).unwrap().is_well_labelled());
        let w = Poset::chain(3).well_labelling();
        assert_eq!(w.relations(), vec![(2, 1), (3, 1), (3, 2)]);
        assert!(Poset::antichain(4).is_well_labelled());
        assert!(k22().well_labelling().is_well_labelled());
    }

    #[test]
    fn tree_hasse() {
        assert!(Poset::star(5).hasse_is_tree());
        assert!(Poset::chain(4).hasse_is_tree());
        assert!(!k22().hasse_is_tree());
        assert!(!Poset::antichain(2).hasse_is_tree());
        assert!(Poset::antichain(1).hasse_is_tree());
    }

    #[test]
    fn restriction_relabels() {
        let r = k22().restriction(mask_of([2, 3, 4]));
        assert_eq!(r.relations(), vec![(1, 2), (1, 3)]);
    }
}
