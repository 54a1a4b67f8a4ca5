#![allow(dead_code)]

use poset_cone::poset::Poset;
use poset_cone::qsym::{Composition, QPoly, QSymFunction};
use proptest::prelude::*;

/// Random labelled poset: random relations compatible with a random order.
pub fn poset_strategy(max_n: usize) -> impl Strategy<Value = Poset> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(proptest::bool::weighted(0.4), pairs),
        )
            .prop_map(move |(perm, picks)| {
                let mut rels = Vec::new();
                let mut k = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if picks[k] {
                            rels.push((perm[a], perm[b]));
                        }
                        k += 1;
                    }
                }
                Poset::from_relations(n, &rels).unwrap()
            })
    })
}

pub fn composition_strategy(max_weight: u32) -> impl Strategy<Value = Composition> {
    (0..=max_weight).prop_flat_map(|w| {
        proptest::collection::vec(any::<bool>(), w.saturating_sub(1) as usize).prop_map(move |cuts| {
            let d: Vec<u32> = cuts.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| i as u32 + 1).collect();
            Composition::from_descents(w, &d)
        })
    })
}

/// Small homogeneous-or-not element with coefficients in `{-2..2}[q]`.
pub fn function_strategy(max_weight: u32) -> impl Strategy<Value = QSymFunction> {
    proptest::collection::vec((composition_strategy(max_weight), -2i64..=2, 0usize..=2), 0..=3)
        .prop_map(|terms| QSymFunction::from_terms(terms.into_iter().map(|(a, c, d)| (a, QPoly::monomial(c, d)))))
}

pub fn m(parts: &[u32]) -> QSymFunction {
    QSymFunction::monomial(Composition::new(parts.to_vec()))
}
