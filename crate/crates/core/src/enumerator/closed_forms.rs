//! Closed-form enumerators for stars, chains and complete bipartite posets,
//! assembled from quasi-shuffle powers of `M_(1)`, appends and concatenation.

use crate::qsym::{binomial, Composition, QPoly, QSymFunction};

fn m1() -> QSymFunction {
    QSymFunction::monomial(Composition::new(vec![1]))
}

fn big_monomial(coeff: num_bigint::BigInt, degree: usize) -> QPoly {
    QPoly::big_monomial(coeff, degree)
}

/// `Σ_{i=0}^{n-1} binom(n-1, i) (M_(1)^{n-1-i})_{i+1} q^i`.
pub fn closed_form_star(n: usize) -> QSymFunction {
    let mut out = QSymFunction::zero();
    for i in 0..n {
        let coeff = big_monomial(binomial(n as i64 - 1, i), i);
        out += &m1().power(n - 1 - i).append(i as u32 + 1).scale(&coeff);
    }
    out
}

/// `Σ_i (Σ_{k(α) = n-i} M_α) q^i`.
pub fn closed_form_chain(n: usize) -> QSymFunction {
    QSymFunction::from_terms(
        Composition::all_of(n as u32)
            .into_iter()
            .map(|a| {
                let rank = n - a.len();
                (a, QPoly::monomial(1, rank))
            }),
    )
}

/// `M_(1)^m ∘ M_(1)^n + Σ_{k=1}^{m+n-1} q^k Σ_{t1+t2=k+1} binom(m,t1) binom(n,t2)
/// M_(1)^{m-t1} ∘ M_(k+1) ∘ M_(1)^{n-t2}` with `1 ≤ t1 ≤ m`, `1 ≤ t2 ≤ n`.
pub fn closed_form_bipartite(m: usize, n: usize) -> QSymFunction {
    let mut out = m1().power(m).concat(&m1().power(n));
    for (k, t1, t2, coeff) in bipartite_terms(m, n) {
        let middle = QSymFunction::monomial(Composition::new(vec![k as u32 + 1]));
        let term = m1().power(m - t1).concat(&middle).concat(&m1().power(n - t2));
        out += &term.scale(&big_monomial(coeff, k));
    }
    out
}

/// `1 + Σ_k q^k Σ_{t1+t2=k+1} binom(m,t1) binom(n,t2)`.
pub fn closed_form_bipartite_fpoly(m: usize, n: usize) -> QPoly {
    bipartite_terms(m, n)
        .into_iter()
        .fold(QPoly::one(), |acc, (k, _, _, c)| acc + big_monomial(c, k))
}

fn bipartite_terms(m: usize, n: usize) -> Vec<(usize, usize, usize, num_bigint::BigInt)> {
    let mut out = Vec::new();
    for k in 1..(m + n) {
        for t1 in 1..=m {
            let Some(t2) = (k + 1).checked_sub(t1) else { continue };
            if (1..=n).contains(&t2) {
                out.push((k, t1, t2, binomial(m as i64, t1) * binomial(n as i64, t2)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerator::fq_poset_cone;
    use crate::poset::Poset;

    #[test]
    fn small_cases() {
        let chain2 = &QSymFunction::monomial(Composition::new(vec![1, 1])) + &QSymFunction::term(Composition::new(vec![2]), QPoly::q());
        assert_eq!(closed_form_chain(2), chain2);
        assert_eq!(closed_form_star(2), closed_form_chain(2));
        assert_eq!(closed_form_bipartite(2, 2), fq_poset_cone(&Poset::complete_bipartite(2, 2)));
        assert_eq!(closed_form_bipartite_fpoly(2, 2), QPoly::from_coeffs(&[1, 4, 4, 1]));
    }
}
