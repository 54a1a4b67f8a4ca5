mod common;

use common::*;
use poset_cone::qsym::{Composition, QPoly, QSymFunction};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn all_up_to(w: u32) -> Vec<Composition> {
    (0..=w).flat_map(Composition::all_of).collect()
}

#[test]
fn antipode_axiom_up_to_weight_six() {
    for alpha in all_up_to(6) {
        let lhs = QSymFunction::monomial(alpha.clone())
            .coproduct()
            .contract(|l| QSymFunction::monomial(l.clone()).antipode(), |r| QSymFunction::monomial(r.clone()));
        let rhs = QSymFunction::monomial(alpha.clone())
            .coproduct()
            .contract(|l| QSymFunction::monomial(l.clone()), |r| QSymFunction::monomial(r.clone()).antipode());
        let expected = if alpha.is_empty() { QSymFunction::one() } else { QSymFunction::zero() };
        assert_eq!(lhs, expected, "S * id on {alpha:?}");
        assert_eq!(rhs, expected, "id * S on {alpha:?}");
    }
}

#[test]
fn basis_round_trip_up_to_weight_seven() {
    for alpha in all_up_to(7) {
        let l = QSymFunction::fundamental(&alpha);
        let back = l.to_fundamental();
        assert_eq!(back.len(), 1);
        assert_eq!(back[&alpha], QPoly::one());
        let f = QSymFunction::monomial(alpha.clone());
        assert_eq!(QSymFunction::from_fundamental(&f.to_fundamental()), f);
    }
}

#[test]
fn coassociativity() {
    type Triple = (Composition, Composition, Composition);
    for alpha in all_up_to(5) {
        let delta = QSymFunction::monomial(alpha.clone()).coproduct();
        let mut left: BTreeMap<Triple, QPoly> = BTreeMap::new();
        let mut right: BTreeMap<Triple, QPoly> = BTreeMap::new();
        for ((l, r), c) in delta.terms() {
            for ((ll, lr), c2) in QSymFunction::monomial(l.clone()).coproduct().terms() {
                *left.entry((ll.clone(), lr.clone(), r.clone())).or_default() += &(c * c2);
            }
            for ((rl, rr), c2) in QSymFunction::monomial(r.clone()).coproduct().terms() {
                *right.entry((l.clone(), rl.clone(), rr.clone())).or_default() += &(c * c2);
            }
        }
        assert_eq!(left, right, "{alpha:?}");
        assert_eq!(left.len(), (alpha.len() + 1) * (alpha.len() + 2) / 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quasi_shuffle_commutative_associative(a in function_strategy(3), b in function_strategy(2), c in function_strategy(2)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &QSymFunction::one(), a.clone());
    }

    #[test]
    fn truncate_is_ring_morphism(a in function_strategy(2), b in function_strategy(2), mvars in 0usize..=4) {
        prop_assert_eq!((&a * &b).truncate(mvars), &a.truncate(mvars) * &b.truncate(mvars));
    }

    #[test]
    fn principal_specialization_multiplicative(a in function_strategy(2), b in function_strategy(2), at in 0i64..=3) {
        let lhs = (&a * &b).principal_specialization(at);
        let rhs = &a.principal_specialization(at) * &b.principal_specialization(at);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reverse_is_algebra_involution(a in function_strategy(3), b in function_strategy(2)) {
        prop_assert_eq!(a.reverse().reverse(), a.clone());
        prop_assert_eq!((&a * &b).reverse(), &a.reverse() * &b.reverse());
    }

    #[test]
    fn antipode_is_anti_morphism(a in function_strategy(3), b in function_strategy(2)) {
        // QSym is commutative, so S is an algebra morphism.
        prop_assert_eq!((&a * &b).antipode(), &a.antipode() * &b.antipode());
        prop_assert_eq!(a.antipode().antipode(), a.clone());
    }

    #[test]
    fn coproduct_counit(a in function_strategy(4)) {
        prop_assert_eq!(a.coproduct().counit_left(), a.clone());
        prop_assert_eq!(a.coproduct().counit_right(), a.clone());
    }

    #[test]
    fn descents_round_trip(alpha in composition_strategy(8)) {
        prop_assert_eq!(Composition::from_descents(alpha.weight(), &alpha.descent_set()), alpha.clone());
        prop_assert_eq!(alpha.reverse().reverse(), alpha);
    }
}
