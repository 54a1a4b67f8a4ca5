//! Weighted quasisymmetric enumerators of poset cones, computed as sums over
//! flags of ideals, together with the identities they satisfy.
//!
//! `fq_poset_cone(P) = Σ_F q^{rk_P(F)} M_{type(F)}` where `F` runs over flags
//! of ideals of `P` and `rk_P(F) = n - Σ_i c(P|_{B_i})`.

mod closed_forms;
mod ppartition;
pub(crate) use ppartition::{decode, grid_size};

pub use closed_forms::{closed_form_bipartite, closed_form_bipartite_fpoly, closed_form_chain, closed_form_star};
pub use ppartition::{ppartitions_bruteforce, ppartitions_bruteforce_with, ppartitions_via_extensions};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::poset::{canonical_form, count_components, extend_flags, first_blocks, for_each_flag, labels_of, quotient_masks, Mask, Poset, SubposetRelation};
use crate::qsym::{Composition, QPoly, QSymFunction, Tensor};

type Tally = HashMap<(Vec<u32>, usize), u64>;

fn tally_to_function(tally: Tally) -> QSymFunction {
    QSymFunction::from_terms(
        tally
            .into_iter()
            .map(|((parts, rank), count)| (Composition::new(parts), QPoly::monomial(count as i64, rank))),
    )
}

fn sum_flags(p: &Poset, strategy: Strategy, antichain_blocks_only: bool) -> QSymFunction {
    if p.n() == 0 {
        return QSymFunction::one();
    }
    let adj = p.comparability();
    let n = p.n();
    let allow = |b: Mask| !antichain_blocks_only || p.is_antichain_mask(b);
    let branches: Vec<Mask> = first_blocks(p).into_iter().filter(|&b| allow(b)).collect();
    par::map_reduce(
        strategy,
        &branches,
        |&first| {
            let mut tally = Tally::new();
            let mut stack = vec![first];
            extend_flags(p, first, &mut stack, &allow, &mut |blocks: &[Mask]| {
                let parts: Vec<u32> = blocks.iter().map(|b| b.count_ones()).collect();
                let rank = n - blocks.iter().map(|&b| count_components(&adj, b)).sum::<usize>();
                *tally.entry((parts, rank)).or_default() += 1;
            });
            tally_to_function(tally)
        },
        QSymFunction::zero,
        |a, b| a + b,
    )
}

/// `F_q(C(P)) = Σ_{F ∈ 𝔉(P)} q^{rk_P(F)} M_{type(F)}`.
pub fn fq_poset_cone(p: &Poset) -> QSymFunction {
    fq_poset_cone_with(p, Strategy::default())
}

pub fn fq_poset_cone_with(p: &Poset, strategy: Strategy) -> QSymFunction {
    sum_flags(p, strategy, false)
}

/// Coefficient of `M_α` in [`fq_poset_cone`].
pub fn zeta_coefficient(p: &Poset, alpha: &Composition) -> Result<QPoly> {
    if alpha.weight() as usize != p.n() {
        return Err(Error::Weight { got: alpha.weight(), expected: p.n() });
    }
    let adj = p.comparability();
    let mut out = QPoly::zero();
    for_each_flag(p, |blocks| {
        if blocks.len() == alpha.len() && blocks.iter().zip(alpha.parts()).all(|(b, &a)| b.count_ones() == a) {
            let rank = p.n() - blocks.iter().map(|&b| count_components(&adj, b)).sum::<usize>();
            out += &QPoly::monomial(1, rank);
        }
    });
    Ok(out)
}

/// Face-count polynomial `Σ f_i q^i` of the poset cone, read off the
/// enumerator by principal specialization at `-1`.
pub fn f_polynomial(p: &Poset) -> QPoly {
    f_polynomial_from(&fq_poset_cone(p), p.n())
}

/// `(-1)^n ps¹(F_{-q})(-1)` for an enumerator of weight `n`.
pub fn f_polynomial_from(fq: &QSymFunction, n: usize) -> QPoly {
    // A prefactor of (-1)^{n-1} would be off by a sign; with ps¹(M_α)(-1) = (-1)^{k(α)}
    // that yields -(1 + q) on the 2-chain, so the sign here is (-1)^n.
    let ps = fq.scale_q(-1).principal_specialization(-1);
    if n.is_multiple_of(2) {
        ps
    } else {
        -ps
    }
}

/// `F(P) = F_0(C(P))`: the sum over flags whose quotient is discrete, i.e.
/// whose blocks are antichains.
pub fn f0(p: &Poset) -> QSymFunction {
    f0_with(p, Strategy::default())
}

pub fn f0_with(p: &Poset, strategy: Strategy) -> QSymFunction {
    sum_flags(p, strategy, true)
}

/// `(-1)^n Σ_{G ∈ 𝔉(P)} f(C(P/G), -q) M_{G^op}`.
pub fn antipode_rhs(p: &Poset) -> QSymFunction {
    let mut fpolys: HashMap<SubposetRelation, QPoly> = HashMap::new();
    let mut out = QSymFunction::zero();
    for_each_flag(p, |blocks| {
        let quotient = quotient_masks(p, blocks);
        let f = fpolys
            .entry(quotient)
            .or_insert_with_key(|q| f_polynomial(&q.to_poset()).scale_q(-1));
        let reversed: Vec<u32> = blocks.iter().rev().map(|b| b.count_ones()).collect();
        out.add_term(Composition::new(reversed), f);
    });
    if p.n() % 2 == 1 {
        -&out
    } else {
        out
    }
}

/// `F_q(C(P^op)) = rev(F_q(C(P)))`.
pub fn opposite_identity_check(p: &Poset) -> bool {
    fq_poset_cone(&p.opposite()) == fq_poset_cone(p).reverse()
}

/// `F(P_1 * ... * P_k) = F(P_1) ∘ ... ∘ F(P_k)` for the series composition.
pub fn series_identity_check(parts: &[Poset]) -> bool {
    let whole = parts.iter().fold(Poset::empty(), |acc, q| acc.series_composition(q));
    let rhs = parts.iter().fold(QSymFunction::one(), |acc, q| acc.concat(&f0(q)));
    f0(&whole) == rhs
}

/// `F(P)` via `F(P) = Σ_{∅ ≠ A ⊆ Max(P)} (F(P|_{[n]∖A}))_{|A|}`, memoized on
/// canonical forms of the restrictions.
pub fn max_recursion(p: &Poset) -> Result<QSymFunction> {
    if !p.is_connected() {
        return Err(Error::Connectivity);
    }
    let mut memo = HashMap::new();
    max_recursion_inner(p, &mut memo)
}

// The recursion itself holds for every poset, so restrictions are not required
// to stay connected.
fn max_recursion_inner(p: &Poset, memo: &mut HashMap<Vec<u8>, QSymFunction>) -> Result<QSymFunction> {
    if p.n() == 0 {
        return Ok(QSymFunction::one());
    }
    let key = canonical_form(p)?;
    if let Some(f) = memo.get(&key) {
        return Ok(f.clone());
    }
    let max = p.maximal();
    let mut out = QSymFunction::zero();
    let mut a = max;
    while a != 0 {
        let rest = p.restriction(p.full() & !a);
        out += &max_recursion_inner(&rest, memo)?.append(a.count_ones());
        a = (a - 1) & max;
    }
    memo.insert(key, out.clone());
    Ok(out)
}

/// `fq(P_1 ⊔ P_2) = fq(P_1) · fq(P_2)`.
pub fn product_check(p1: &Poset, p2: &Poset) -> bool {
    fq_poset_cone(&p1.disjoint_union(p2)) == fq_poset_cone(p1).quasi_shuffle(&fq_poset_cone(p2))
}

/// `Σ_{S ◁ P} fq(P|_S) ⊗ fq(P|_{S^c})`, restrictions relabelled onto initial
/// segments.
pub fn restriction_coproduct(p: &Poset) -> Tensor {
    let full = p.full();
    let mut out = Tensor::zero();
    let mut s = full;
    loop {
        if p.is_ideal_mask(s) {
            let left = fq_poset_cone(&p.restriction(s));
            let right = fq_poset_cone(&p.restriction(full & !s));
            out += &Tensor::product(&left, &right);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & full;
    }
    out
}

/// `Δ(fq(P))` equals the restriction coproduct.
pub fn coproduct_check(p: &Poset) -> bool {
    fq_poset_cone(p).coproduct() == restriction_coproduct(p)
}

/// Product and coproduct compatibility of `P ↦ fq(P)`.
pub fn hopf_morphism_checks(p1: &Poset, p2: &Poset) -> bool {
    product_check(p1, p2) && coproduct_check(p1) && coproduct_check(p2) && coproduct_check(&p1.disjoint_union(p2))
}

/// Ideals of `p` as label lists, for reporting.
pub fn ideals(p: &Poset) -> Vec<Vec<u32>> {
    let full = p.full();
    let mut out = Vec::new();
    let mut s = full;
    loop {
        if p.is_ideal_mask(s) {
            out.push(labels_of(s));
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & full;
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn qm(k: i64, d: usize, parts: &[u32]) -> QSymFunction {
        QSymFunction::term(c(parts), QPoly::monomial(k, d))
    }

    fn sum(terms: &[QSymFunction]) -> QSymFunction {
        terms.iter().fold(QSymFunction::zero(), |a, b| &a + b)
    }

    pub(crate) fn k22_expected() -> QSymFunction {
        sum(&[
            qm(1, 3, &[4]),
            qm(2, 2, &[1, 3]),
            qm(2, 2, &[3, 1]),
            qm(4, 1, &[1, 2, 1]),
            qm(1, 0, &[2, 2]),
            qm(2, 0, &[1, 1, 2]),
            qm(2, 0, &[2, 1, 1]),
            qm(4, 0, &[1, 1, 1, 1]),
        ])
    }

    #[test]
    fn fq_examples() {
        let k22 = Poset::complete_bipartite(2, 2);
        assert_eq!(fq_poset_cone(&k22), k22_expected());
        assert_eq!(fq_poset_cone_with(&k22, Strategy::Sequential), k22_expected());
        assert_eq!(fq_poset_cone(&Poset::chain(1)), qm(1, 0, &[1]));
        assert_eq!(fq_poset_cone(&Poset::chain(2)), &qm(1, 0, &[1, 1]) + &qm(1, 1, &[2]));
        assert_eq!(fq_poset_cone(&Poset::empty()), QSymFunction::one());
    }

    #[test]
    fn zeta_values() {
        let k22 = Poset::complete_bipartite(2, 2);
        assert_eq!(zeta_coefficient(&k22, &c(&[1, 3])).unwrap(), QPoly::monomial(2, 2));
        assert_eq!(zeta_coefficient(&k22, &c(&[2, 2])).unwrap(), QPoly::one());
        assert_eq!(zeta_coefficient(&k22, &c(&[4])).unwrap(), QPoly::monomial(1, 3));
        assert_eq!(zeta_coefficient(&k22, &c(&[3])), Err(Error::Weight { got: 3, expected: 4 }));
    }

    #[test]
    fn f_polynomials() {
        assert_eq!(f_polynomial(&Poset::complete_bipartite(2, 2)), QPoly::from_coeffs(&[1, 4, 4, 1]));
        assert_eq!(f_polynomial(&Poset::star(4)), QPoly::one_plus_q_pow(3));
        assert_eq!(f_polynomial(&Poset::chain(2)), QPoly::from_coeffs(&[1, 1]));
        for n in 1..=4 {
            assert_eq!(f_polynomial(&Poset::antichain(n)), QPoly::one());
        }
    }

    #[test]
    fn f0_values() {
        assert_eq!(f0(&Poset::chain(2)), qm(1, 0, &[1, 1]));
        let k22 = Poset::complete_bipartite(2, 2);
        assert_eq!(f0(&k22), fq_poset_cone(&k22).at_q_zero());
        let m1 = QSymFunction::monomial(c(&[1]));
        assert_eq!(f0(&Poset::complete_bipartite(2, 3)), m1.power(2).concat(&m1.power(3)));
    }

    #[test]
    fn antipode_rhs_examples() {
        assert_eq!(antipode_rhs(&Poset::chain(1)), qm(-1, 0, &[1]));
        let chain = Poset::chain(2);
        let expected = &QSymFunction::term(c(&[2]), QPoly::from_coeffs(&[1, -1])) + &qm(1, 0, &[1, 1]);
        assert_eq!(antipode_rhs(&chain), expected);
        assert_eq!(fq_poset_cone(&chain).antipode(), expected);
        assert_eq!(antipode_rhs(&Poset::antichain(2)), &qm(1, 0, &[2]) + &qm(2, 0, &[1, 1]));
    }

    #[test]
    fn opposite_examples() {
        assert!(opposite_identity_check(&Poset::chain(2)));
        assert!(opposite_identity_check(&Poset::complete_bipartite(2, 2)));
        assert!(opposite_identity_check(&Poset::star(4)));
    }

    #[test]
    fn series_and_max() {
        let d2 = Poset::antichain(2);
        assert!(series_identity_check(&[d2.clone(), d2.clone()]));
        let m1 = QSymFunction::monomial(c(&[1]));
        let sq = &qm(2, 0, &[1, 1]) + &QSymFunction::monomial(c(&[2]));
        assert_eq!(m1.power(2), sq);
        assert_eq!(f0(&d2.series_composition(&d2)), sq.concat(&sq));
        assert_eq!(max_recursion(&Poset::chain(2)).unwrap(), qm(1, 0, &[1, 1]));
        let k22 = Poset::complete_bipartite(2, 2);
        assert_eq!(max_recursion(&k22).unwrap(), f0(&k22));
        assert_eq!(max_recursion(&Poset::antichain(2)), Err(Error::Connectivity));
    }

    #[test]
    fn hopf_examples() {
        let pt = Poset::chain(1);
        assert!(hopf_morphism_checks(&pt, &pt));
        assert_eq!(fq_poset_cone(&Poset::antichain(2)), &qm(2, 0, &[1, 1]) + &qm(1, 0, &[2]));
        assert!(hopf_morphism_checks(&Poset::chain(2), &pt));
        let k22 = Poset::complete_bipartite(2, 2);
        assert_eq!(ideals(&k22).len(), 7);
        assert!(coproduct_check(&k22));
    }
}
