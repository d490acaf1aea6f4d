mod common;

use ladder_core::amalgam::{amalgamate, tau, verify_lower_covers, AmalgamInput};
use ladder_core::enumerate::naturally_labeled_posets;
use ladder_core::forcing::{extend_into_sk_a, in_sk_a, is_condition};
use ladder_core::lattice::FiniteLattice;
use ladder_core::ladders::is_k_ladder;
use ladder_core::morass::canonical_chain;
use ladder_core::normed::{norm_from_enumeration, NormedLattice};
use ladder_core::poset::{ElementId, FinitePoset};
use proptest::prelude::*;
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn posets_of(n: usize) -> &'static [FinitePoset] {
    static CACHE: OnceLock<Vec<Vec<FinitePoset>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        (0..=6)
            .map(|k| naturally_labeled_posets(k).unwrap())
            .collect()
    });
    &all[n]
}

fn lattices_of(n: usize) -> &'static [FiniteLattice] {
    static CACHE: OnceLock<Vec<Vec<FiniteLattice>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        (0..=6)
            .map(|k| {
                posets_of(k)
                    .iter()
                    .filter(|p| p.is_lattice())
                    .map(|p| FiniteLattice::new(p.clone()).unwrap())
                    .collect()
            })
            .collect()
    });
    &all[n]
}

fn poset_strategy(max: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max)
        .prop_flat_map(|n| (Just(n), any::<prop::sample::Index>()))
        .prop_map(|(n, i)| posets_of(n)[i.index(posets_of(n).len())].clone())
}

/// A random lattice of at most `max` elements carrying a random
/// creation-order norm.
fn normed_strategy(max: usize) -> impl Strategy<Value = NormedLattice> {
    (2..=max)
        .prop_flat_map(|n| (Just(n), any::<prop::sample::Index>()))
        .prop_flat_map(|(n, i)| {
            let k = lattices_of(n)[i.index(lattices_of(n).len())].clone();
            let ids: Vec<ElementId> = k.elements().collect();
            (Just(k), Just(ids).prop_shuffle())
        })
        .prop_map(|(k, order)| norm_from_enumeration(k, &order).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn breadth_is_self_dual(p in poset_strategy(6)) {
        prop_assert_eq!(p.dual().breadth(), p.breadth());
    }

    #[test]
    fn join_breadth_agrees_with_tuple_breadth(p in poset_strategy(6)) {
        match p.join_breadth() {
            Some(b) => {
                prop_assert!(p.is_join_semilattice());
                prop_assert_eq!(b, p.breadth());
            }
            None => prop_assert!(!p.is_join_semilattice()),
        }
    }

    #[test]
    fn lower_subsets_never_gain_breadth(
        p in poset_strategy(6),
        pick in any::<prop::sample::Index>(),
    ) {
        let ids: Vec<ElementId> = p.elements().collect();
        let mask = pick.index(1usize << ids.len());
        let seed: Vec<ElementId> = ids
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let down: BTreeSet<ElementId> = p
            .elements()
            .filter(|&y| seed.iter().any(|&x| p.leq(y, x)))
            .collect();
        let (sub, _) = p.induced(&down);
        prop_assert!(sub.breadth() <= p.breadth());
    }

    #[test]
    fn random_norms_satisfy_the_projection_laws(k in normed_strategy(5)) {
        let p = k.poset();
        for x in k.elements() {
            for y in k.elements() {
                // Below something, projecting to your norm keeps your norm.
                if p.leq(x, y) {
                    let proj = k.projection(y, k.norm(x)).unwrap();
                    prop_assert_eq!(k.norm(proj), k.norm(x));
                }
                // The projection lands below exactly when it is the meet.
                let proj = k.projection(x, k.norm(y)).unwrap();
                let meet = k.lattice().meet(x, y);
                prop_assert_eq!(p.leq(proj, y), meet == proj);
                // Isotonicity over the whole norm grid.
                if p.leq(x, y) {
                    for xi in 0..k.range_bound() {
                        for eta in xi..k.range_bound() {
                            let lo = k.projection(x, xi).unwrap();
                            let hi = k.projection(y, eta).unwrap();
                            prop_assert!(p.leq(lo, hi));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn random_norms_make_projection_order_a_tree(k in normed_strategy(5)) {
        for x in k.elements() {
            prop_assert!(k.tri_below(x, x));
            for y in k.elements() {
                if k.tri_below(x, y) && k.tri_below(y, x) {
                    prop_assert_eq!(x, y);
                }
                for z in k.elements() {
                    if k.tri_below(x, y) && k.tri_below(y, z) {
                        prop_assert!(k.tri_below(x, z));
                    }
                    // Elements tri-below a common point are comparable.
                    if k.tri_below(x, z) && k.tri_below(y, z) {
                        prop_assert!(k.poset().comparable(x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn anchored_extension_reaches_any_anchor_sequence(
        k in normed_strategy(5),
        picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..5),
    ) {
        let ids: Vec<ElementId> = k.elements().collect();
        let mut e: BTreeSet<ElementId> = BTreeSet::new();
        prop_assert!(is_condition(&k, &e));
        for pick in picks {
            let a = ids[pick.index(ids.len())];
            let bigger = extend_into_sk_a(&k, &e, a).unwrap();
            prop_assert!(bigger.is_superset(&e));
            prop_assert!(is_condition(&k, &bigger));
            prop_assert!(in_sk_a(&k, &bigger, a));
            e = bigger;
        }
    }

    #[test]
    fn random_amalgams_verify_end_to_end(
        k in normed_strategy(6),
        dpick in any::<prop::sample::Index>(),
    ) {
        let k = k.compacted();
        prop_assume!(is_k_ladder(k.lattice(), 3));
        let theta = k.range_bound();
        prop_assume!(theta >= 2);
        let delta = 1 + dpick.index(theta - 1);
        let chain = canonical_chain(&k, delta).unwrap();
        let input = AmalgamInput::new(k.clone(), delta, &chain).unwrap();
        let result = amalgamate(&input).unwrap();

        prop_assert_eq!(result.theta_prime, 2 * theta - delta);
        prop_assert_eq!(result.kbar.range_bound(), result.theta_prime);
        prop_assert!(result.kbar.is_transitive());
        for x in k.elements() {
            prop_assert_eq!(
                result.kbar.norm(result.f[x.index()]),
                tau(delta, theta, k.norm(x))
            );
        }

        let report = verify_lower_covers(&result).unwrap();
        prop_assert!(report.mismatches.is_empty());
        prop_assert!(report.clean());
    }
}
