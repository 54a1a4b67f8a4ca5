//! Whether `F(P)` separates isomorphism classes, and a search for classes that
//! `F(P)` merges but `F_q(C(P))` tells apart.

use std::collections::BTreeMap;

use crate::enumerator::{f0_with, fq_poset_cone_with};
use crate::error::Result;
use crate::par::{self, Strategy};
use crate::poset::{all_posets, Poset};
use crate::qsym::{Composition, QPoly, QSymFunction};

#[derive(Debug, Clone)]
pub struct SurveyReport {
    pub n: usize,
    pub classes: usize,
    /// Groups of non-isomorphic posets sharing the same `F(P)`.
    pub collisions: Vec<Vec<Poset>>,
}

/// A pair with equal `F(P)` and the first composition where their `ζ_α` differ.
#[derive(Debug, Clone)]
pub struct Collision {
    pub first: Poset,
    pub second: Poset,
    pub f0: QSymFunction,
    pub alpha: Composition,
    pub zeta_first: QPoly,
    pub zeta_second: QPoly,
}

fn group_by_f0(n: usize, strategy: Strategy) -> Result<(usize, Vec<Vec<Poset>>)> {
    let classes = all_posets(n)?;
    // Strategy applies to the outer loop; the inner sums stay sequential.
    let values = par::map_collect(strategy, &classes, |p| f0_with(p, Strategy::Sequential));
    let mut groups: BTreeMap<String, (QSymFunction, Vec<Poset>)> = BTreeMap::new();
    for (p, f) in classes.iter().zip(values) {
        groups.entry(f.to_string()).or_insert_with(|| (f, Vec::new())).1.push(p.clone());
    }
    let shared = groups.into_values().filter(|(_, g)| g.len() > 1).map(|(_, g)| g).collect();
    Ok((classes.len(), shared))
}

pub fn f0_survey(n: usize, strategy: Strategy) -> Result<SurveyReport> {
    let (classes, collisions) = group_by_f0(n, strategy)?;
    Ok(SurveyReport { n, classes, collisions })
}

pub fn search_collision(n: usize, strategy: Strategy) -> Result<Vec<Collision>> {
    let (_, groups) = group_by_f0(n, strategy)?;
    let mut out = Vec::new();
    for group in groups {
        let fqs: Vec<QSymFunction> = group.iter().map(|p| fq_poset_cone_with(p, strategy)).collect();
        for a in 0..group.len() {
            for b in a + 1..group.len() {
                if fqs[a] == fqs[b] {
                    continue;
                }
                let alpha = Composition::all_of(n as u32)
                    .into_iter()
                    .find(|al| fqs[a].coeff(al) != fqs[b].coeff(al))
                    .expect("unequal functions differ on some composition");
                out.push(Collision {
                    first: group[a].clone(),
                    second: group[b].clone(),
                    f0: fqs[a].at_q_zero(),
                    zeta_first: fqs[a].coeff(&alpha),
                    zeta_second: fqs[b].coeff(&alpha),
                    alpha,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_surveys() {
        let r = f0_survey(3, Strategy::default()).unwrap();
        assert_eq!((r.classes, r.collisions.len()), (5, 0));
        assert!(search_collision(4, Strategy::Sequential).unwrap().is_empty());
    }
}
