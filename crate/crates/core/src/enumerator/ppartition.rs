//! P-partitions of labelled posets, where the integer labels supply the
//! second order: `i <_P j` forces `f(i) ≤ f(j)` when `i < j` as integers and
//! `f(i) < f(j)` when `i > j`.

use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::poset::{linear_extensions, Poset};
use crate::qsym::{Composition, QPoly, QSymFunction, TruncatedExpansion};

/// Sum of `x_{f(1)} ⋯ x_{f(n)}` over all P-partitions `f: [n] → [m]`.
pub fn ppartitions_bruteforce(p: &Poset, m: usize) -> Result<TruncatedExpansion> {
    ppartitions_bruteforce_with(p, m, Strategy::default())
}

pub fn ppartitions_bruteforce_with(p: &Poset, m: usize, strategy: Strategy) -> Result<TruncatedExpansion> {
    let n = p.n();
    let total = grid_size(m, n)?;
    let relations = p.relations();
    let one = QPoly::one();
    Ok(par::range_fold(
        strategy,
        0..total,
        || TruncatedExpansion::new(m),
        |mut acc, code| {
            let values = decode(code, m, n);
            let ok = relations.iter().all(|&(i, j)| {
                let (a, b) = (values[i as usize - 1], values[j as usize - 1]);
                if i < j {
                    a <= b
                } else {
                    a < b
                }
            });
            if ok {
                acc.add_word(&values, &one);
            }
            acc
        },
        TruncatedExpansion::merge,
    ))
}

/// `m^n`, the number of maps `[n] → [m]`.
pub(crate) fn grid_size(m: usize, n: usize) -> Result<u64> {
    (m as u64)
        .checked_pow(n as u32)
        .filter(|&t| t <= 1 << 40)
        .ok_or(Error::Size { what: "vector enumeration (m^n)", got: n, max: 40 })
}

/// Digits of `code` in base `m`, shifted to `1..=m`.
pub(crate) fn decode(mut code: u64, m: usize, n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push((code % m as u64) as u32 + 1);
        code /= m as u64;
    }
    out
}

/// `Σ_{(i_1..i_n) ∈ L(P)} L_{α}` with `D(α) = {j : i_j > i_{j+1}}`, expanded
/// in the monomial basis.
pub fn ppartitions_via_extensions(p: &Poset) -> QSymFunction {
    let n = p.n() as u32;
    let mut out = QSymFunction::zero();
    for ext in linear_extensions(p) {
        let descents: Vec<u32> = ext
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(j, _)| j as u32 + 1)
            .collect();
        out += &QSymFunction::fundamental(&Composition::from_descents(n, &descents));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bruteforce_examples() {
        let strict = Poset::from_relations(2, &[(2, 1)]).unwrap();
        let t = ppartitions_bruteforce(&strict, 2).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(&[1, 1]), QPoly::one());

        let weak = ppartitions_bruteforce(&Poset::chain(2), 2).unwrap();
        assert_eq!(weak.len(), 3);
        for e in [[1, 1], [2, 0], [0, 2]] {
            assert_eq!(weak.get(&e), QPoly::one());
        }

        let anti = ppartitions_bruteforce(&Poset::antichain(2), 1).unwrap();
        assert_eq!(anti.len(), 1);
        assert_eq!(anti.get(&[2]), QPoly::one());
        assert_eq!(
            ppartitions_bruteforce_with(&Poset::antichain(3), 3, Strategy::Sequential).unwrap(),
            ppartitions_bruteforce(&Poset::antichain(3), 3).unwrap()
        );
    }

    #[test]
    fn extension_examples() {
        let c = |p: &[u32]| Composition::new(p.to_vec());
        let strict = Poset::from_relations(2, &[(2, 1)]).unwrap();
        assert_eq!(ppartitions_via_extensions(&strict), QSymFunction::fundamental(&c(&[1, 1])));
        assert_eq!(ppartitions_via_extensions(&Poset::chain(2)), QSymFunction::fundamental(&c(&[2])));
        assert_eq!(
            ppartitions_via_extensions(&Poset::antichain(2)),
            &QSymFunction::fundamental(&c(&[2])) + &QSymFunction::fundamental(&c(&[1, 1]))
        );
    }
}
