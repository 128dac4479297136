mod common;

use common::*;
use proptest::prelude::*;
use qlab::enumerate::{enumerate_cyclic, enumerate_cyclic_with};
use qlab::field::FieldCtx;
use qlab::perm::Perm;
use qlab::quandle::{Congruence, Quandle};

fn alexander_strategy() -> impl Strategy<Value = Quandle> {
    prop::sample::select(vec![3u64, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]).prop_flat_map(|q| {
        (1..q as usize).prop_map(move |a| {
            let f = FieldCtx::of_order(q).unwrap();
            Quandle::alexander(&f, f.elem(a).unwrap()).unwrap()
        })
    })
}

fn relabelled_strategy() -> impl Strategy<Value = (Quandle, Vec<usize>)> {
    alexander_strategy().prop_flat_map(|q| {
        let n = q.size();
        (Just(q), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbit_stabilizer_identity(gens in generators_strategy()) {
        prop_assert_eq!(orbit_stabilizer(&gens), Ok(()));
    }

    #[test]
    fn chain_order_matches_closure(gens in generators_strategy()) {
        prop_assert_eq!(bsgs_matches_closure(&gens), Ok(()));
    }

    #[test]
    fn random_frobenius_groups_have_trivial_center(gens in generators_strategy()) {
        let g = qlab::perm::PermGroup::from_generators(&gens).unwrap();
        prop_assert!(frobenius_center(&g).is_ok());
    }

    #[test]
    fn membership_of_products(gens in generators_strategy(), k in 0usize..20) {
        let g = qlab::perm::PermGroup::from_generators(&gens).unwrap();
        let word = (0..k).fold(Perm::identity(g.degree()), |acc, i| acc.mul(&gens[i % gens.len()]));
        prop_assert!(g.contains(&word));
    }

    #[test]
    fn alexander_quandles_validate_and_round_trip(q in alexander_strategy()) {
        let text = q.to_qnd_string();
        let back = Quandle::parse_qnd(&text).unwrap();
        prop_assert_eq!(back.digest(), q.digest());
        prop_assert_eq!(&back, &q);
    }

    #[test]
    fn relabelling_is_detected_and_preserves_invariants((q, sigma) in relabelled_strategy()) {
        let r = relabel(&q, &sigma);
        let f = q.is_isomorphic(&r).expect("relabelled copy is isomorphic");
        for x in 0..q.size() {
            for y in 0..q.size() {
                prop_assert_eq!(f[q.op(x, y)], r.op(f[x], f[y]));
            }
        }
        if q.size() <= 16 {
            prop_assert_eq!(q.classify(), r.classify());
        }
    }

    #[test]
    fn principal_congruences_give_quotients(q in alexander_strategy(), a in 0usize..64, b in 0usize..64) {
        let n = q.size();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let c = q.principal_congruence(a, b).unwrap();
        prop_assert!(c.is_congruence(&q));
        prop_assert_eq!(c.block_of[a], c.block_of[b]);
        let quotient = q.quotient(&c).unwrap();
        prop_assert_eq!(quotient.size(), c.block_count());
        prop_assert!(q.quotient(&Congruence::equality(n)).unwrap() == q);
    }

    #[test]
    fn cyclic_type_definition_matches_shortcut(q in alexander_strategy()) {
        prop_assert_eq!(q.is_cyclic_type().unwrap(), q.cyclic_type_shortcut().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Fixing `φ_0` to any other `(n−1)`-cycle finds the same classes.
    #[test]
    fn cyclic_search_normalization(n in 5usize..=9, order in Just((1usize..9).collect::<Vec<_>>()).prop_shuffle()) {
        let cycle: Vec<usize> = order.into_iter().filter(|&x| x < n).collect();
        let phi0 = Perm::from_cycles(n, &[&cycle]).unwrap();
        let other = enumerate_cyclic_with(n, &phi0, 13).unwrap();
        let standard = enumerate_cyclic(n).unwrap();
        prop_assert_eq!(other.quandles.len(), standard.quandles.len());
        for q in &other.quandles {
            prop_assert!(standard.quandles.iter().any(|s| s.is_isomorphic(q).is_some()));
        }
    }
}

#[test]
fn known_frobenius_groups_have_trivial_center() {
    for (name, g) in frobenius_test_groups() {
        assert_eq!(frobenius_center(&g), Ok(true), "{name}");
    }
}
