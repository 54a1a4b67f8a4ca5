//! Brute-force geometry of poset cones, independent of the flag-sum
//! enumerator: integer points of the normal fan, faces as quotients and as
//! positive subposets, and the signed flag count of each normal cone.

use std::collections::{BTreeMap, BTreeSet};

use crate::enumerator::{decode, grid_size};
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::poset::{for_each_flag, is_positive_subposet, mask_of, quotient_masks, rank_masks, Mask, Poset, SubposetRelation};
use crate::qsym::{Composition, QPoly, TruncatedExpansion};

pub const MAX_CROSS_CHECK_N: usize = 4;

/// A vector of positive integers, read as a linear functional.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(entries: Vec<u32>) -> Option<Self> {
        entries.iter().all(|&w| w >= 1).then_some(Self(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Level sets of a weight vector, ordered by increasing value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelFlag {
    pub blocks: Vec<Vec<u32>>,
    pub values: Vec<u32>,
}

impl LevelFlag {
    pub fn composition(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.len() as u32).collect::<Vec<_>>())
    }

    pub fn block_masks(&self) -> Vec<Mask> {
        self.blocks.iter().map(|b| mask_of(b.iter().copied())).collect()
    }
}

/// `ω ∈ N(C(P))` iff `ω_i ≤ ω_j` whenever `i <_P j`.
pub fn in_normal_fan(p: &Poset, omega: &WeightVector) -> bool {
    assert_eq!(omega.len(), p.n());
    monotone(p, omega.entries())
}

fn monotone(p: &Poset, w: &[u32]) -> bool {
    p.relations().into_iter().all(|(i, j)| w[i as usize - 1] <= w[j as usize - 1])
}

pub fn level_flag(omega: &WeightVector) -> LevelFlag {
    let mut levels: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (i, &w) in omega.entries().iter().enumerate() {
        levels.entry(w).or_default().push(i as u32 + 1);
    }
    LevelFlag { values: levels.keys().copied().collect(), blocks: levels.into_values().collect() }
}

fn level_masks(w: &[u32], m: usize) -> Vec<Mask> {
    let mut by_value = vec![0 as Mask; m + 1];
    for (i, &v) in w.iter().enumerate() {
        by_value[v as usize] |= 1 << i;
    }
    by_value.into_iter().filter(|&b| b != 0).collect()
}

/// `Σ_{ω ∈ [m]^n ∩ N(C(P))} q^{rk_P(F_ω)} x_{ω_1} ⋯ x_{ω_n}`.
pub fn fq_integer_points(p: &Poset, m: usize) -> Result<TruncatedExpansion> {
    fq_integer_points_with(p, m, Strategy::default())
}

pub fn fq_integer_points_with(p: &Poset, m: usize, strategy: Strategy) -> Result<TruncatedExpansion> {
    let n = p.n();
    let total = grid_size(m, n)?;
    let relations = p.relations();
    Ok(par::range_fold(
        strategy,
        0..total,
        || TruncatedExpansion::new(m),
        |mut acc, code| {
            let w = decode(code, m, n);
            if relations.iter().all(|&(i, j)| w[i as usize - 1] <= w[j as usize - 1]) {
                let rank = rank_masks(p, &level_masks(&w, m));
                acc.add_word(&w, &QPoly::monomial(1, rank));
            }
            acc
        },
        TruncatedExpansion::merge,
    ))
}

/// Faces of `C(P)` as the distinct quotients `P/F`, each with its dimension
/// `n - c(P/F)`, sorted by dimension and then by relation.
pub fn face_lattice(p: &Poset) -> Vec<(SubposetRelation, usize)> {
    let mut faces = BTreeSet::new();
    for_each_flag(p, |blocks| {
        faces.insert(quotient_masks(p, blocks));
    });
    let mut out: Vec<_> = faces
        .into_iter()
        .map(|q| {
            let d = q.dimension();
            (q, d)
        })
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.pairs().cmp(&b.0.pairs())));
    out
}

/// `Σ_i f_i q^i` counted from [`face_lattice`].
pub fn face_count_polynomial(p: &Poset) -> QPoly {
    face_lattice(p)
        .into_iter()
        .fold(QPoly::zero(), |acc, (_, d)| acc + QPoly::monomial(1, d))
}

/// Every transitively closed subset of the relations of `p` that is a
/// positive subposet.
pub fn positive_subposets(p: &Poset) -> Result<BTreeSet<SubposetRelation>> {
    if p.n() > MAX_CROSS_CHECK_N {
        return Err(Error::Size { what: "positive subposet enumeration", got: p.n(), max: MAX_CROSS_CHECK_N });
    }
    let rels = p.relations();
    let mut out = BTreeSet::new();
    for choice in 0u64..(1 << rels.len()) {
        let pairs: Vec<(u32, u32)> = rels
            .iter()
            .enumerate()
            .filter(|(k, _)| choice & (1 << k) != 0)
            .map(|(_, &r)| r)
            .collect();
        let q = SubposetRelation::from_pairs(p.n(), &pairs);
        if q.is_transitively_closed() && is_positive_subposet(p, &q) {
            out.insert(q);
        }
    }
    Ok(out)
}

/// The quotients `P/F` are exactly the positive subposets.
pub fn positive_subposet_cross_check(p: &Poset) -> Result<bool> {
    let positive = positive_subposets(p)?;
    let quotients: BTreeSet<SubposetRelation> = face_lattice(p).into_iter().map(|(q, _)| q).collect();
    Ok(positive == quotients)
}

/// For each face `Q`, the flags with quotient `Q` triangulate the relatively
/// open normal cone of `Q`, so `Σ (-1)^{#blocks} = (-1)^{n - dim C(Q)}`.
pub fn euler_flag_identity(p: &Poset) -> bool {
    euler_flag_sums(p).into_iter().all(|(q, sum)| {
        let expected = if (p.n() - q.dimension()).is_multiple_of(2) { 1 } else { -1 };
        sum == expected
    })
}

/// `Σ_{F : P/F = Q} (-1)^{#blocks of F}` for every face `Q`.
pub fn euler_flag_sums(p: &Poset) -> BTreeMap<SubposetRelation, i64> {
    let mut sums = BTreeMap::new();
    for_each_flag(p, |blocks| {
        let sign = if blocks.len() % 2 == 0 { 1 } else { -1 };
        *sums.entry(quotient_masks(p, blocks)).or_insert(0) += sign;
    });
    sums
}
