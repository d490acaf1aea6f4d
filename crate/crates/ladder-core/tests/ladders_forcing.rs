mod common;

use common::{by, paper_diamond, renormed_diamond};
use ladder_core::enumerate::{boolean, m3};
use ladder_core::forcing::{
    extend_into_sk_a, full_dense_family, generic_filter, in_sk_a, is_centred, is_condition,
    skeleton_from_generic,
};
use ladder_core::ladders::{
    cofinal_copy_in_product, is_k_ladder, is_preskeleton, is_skeleton, preskeleton_violation,
    skeleton_from_chain, verify_preskeleton_structure,
};
use ladder_core::lattice::FiniteLattice;
use ladder_core::normed::norm_from_enumeration;
use ladder_core::poset::{ElementId, FinitePoset};
use ladder_core::Error;
use std::collections::BTreeSet;

#[test]
fn ladder_grades() {
    let chain = FiniteLattice::new(FinitePoset::chain(4)).unwrap();
    assert!(is_k_ladder(&chain, 1));
    let m3 = m3().unwrap();
    assert!(is_k_ladder(&m3, 3));
    assert!(!is_k_ladder(&m3, 2));
    let b3 = boolean(3).unwrap();
    assert!(is_k_ladder(&b3, 3));
    assert!(!is_k_ladder(&b3, 2));
}

#[test]
fn preskeletons_on_the_diamond() {
    let k = paper_diamond();
    let p = k.poset();
    let (bottom, a, b, top) = (by(p, "{}"), by(p, "{0}"), by(p, "{1}"), by(p, "{0,1}"));

    let good: BTreeSet<ElementId> = [bottom, a, top].into_iter().collect();
    assert!(is_preskeleton(&k, &good));
    assert!(is_skeleton(&k, &good));
    let report = verify_preskeleton_structure(&k, &good).unwrap();
    assert!(report.clean());
    assert!(report.meet_closed);
    assert!(report.max_lower_covers_within <= 2);
    assert_eq!(report.two_ladder, Some(true));

    // Drops the projection of the top to level 1: not projectable.
    let bad: BTreeSet<ElementId> = [bottom, b, top].into_iter().collect();
    assert!(!is_preskeleton(&k, &bad));
    assert!(preskeleton_violation(&k, &bad).is_some());

    // Projectable but misses the level-2 cofinality: preskeleton only.
    let low: BTreeSet<ElementId> = [bottom, a].into_iter().collect();
    assert!(is_preskeleton(&k, &low));
    assert!(!is_skeleton(&k, &low));
}

#[test]
fn skeleton_from_chain_on_the_diamond() {
    let k = paper_diamond();
    let p = k.poset();
    let top = by(p, "{0,1}");
    let skel = skeleton_from_chain(&k, &[top]).unwrap();
    let expected: BTreeSet<ElementId> =
        [by(p, "{}"), by(p, "{0}"), top].into_iter().collect();
    assert_eq!(skel, expected);

    let apex = by(p, "{1}");
    assert!(matches!(
        skeleton_from_chain(&k, &[apex]),
        Err(Error::NotCofinal { .. })
    ));
    assert!(matches!(
        skeleton_from_chain(&k, &[by(p, "{0}"), apex]),
        Err(Error::NotAChain { .. })
    ));
}

#[test]
fn anchored_extension_is_dense() {
    for k in [paper_diamond(), renormed_diamond()] {
        for a in k.elements() {
            let extended = extend_into_sk_a(&k, &BTreeSet::new(), a).unwrap();
            assert!(is_condition(&k, &extended));
            assert!(in_sk_a(&k, &extended, a));
            // Extending an existing condition keeps it inside.
            let base: BTreeSet<ElementId> = [k.lattice().bottom()].into_iter().collect();
            let bigger = extend_into_sk_a(&k, &base, a).unwrap();
            assert!(base.is_subset(&bigger));
            assert!(in_sk_a(&k, &bigger, a));
        }
    }
}

#[test]
fn centred_families() {
    let k = paper_diamond();
    let p = k.poset();
    let left: BTreeSet<ElementId> = [by(p, "{}"), by(p, "{0}")].into_iter().collect();
    let right: BTreeSet<ElementId> = [by(p, "{}"), by(p, "{1}")].into_iter().collect();
    // Distinct levels: the union is still a condition.
    assert!(is_centred(&k, &[left.clone(), right.clone()]));

    let k = renormed_diamond();
    // Same level 1, incomparable: the union breaks the level chain.
    assert!(!is_centred(&k, &[left.clone(), right]));
    assert!(is_centred(&k, &[left]));
}

#[test]
fn generic_filter_reaches_a_skeleton() {
    let fixtures = vec![
        paper_diamond(),
        renormed_diamond(),
        {
            let b3 = boolean(3).unwrap();
            let order: Vec<ElementId> = b3.elements().collect();
            norm_from_enumeration(b3, &order).unwrap()
        },
    ];
    for k in fixtures {
        let targets = full_dense_family(&k);
        assert_eq!(targets.len(), k.len());
        let stages = generic_filter(&k, &BTreeSet::new(), &targets).unwrap();
        for pair in stages.windows(2) {
            assert!(pair[0].is_subset(&pair[1]));
        }
        let skel = skeleton_from_generic(&k, &stages).unwrap();
        assert!(is_skeleton(&k, &skel));
        for stage in &stages {
            assert!(is_condition(&k, stage));
        }
    }
}

#[test]
fn generic_skeleton_on_paper_diamond_is_frozen() {
    let k = paper_diamond();
    let p = k.poset();
    let stages = generic_filter(&k, &BTreeSet::new(), &full_dense_family(&k)).unwrap();
    let skel = skeleton_from_generic(&k, &stages).unwrap();
    let expected: BTreeSet<ElementId> =
        [by(p, "{}"), by(p, "{0}"), by(p, "{0,1}")].into_iter().collect();
    assert_eq!(skel, expected);
}

#[test]
fn stair_copy_into_product() {
    let k = common::diamond();
    let p = k.poset();
    let stairs = vec![by(p, "{}"), by(p, "{0}"), by(p, "{0,1}")];
    let copy = cofinal_copy_in_product(&k, &stairs, 4).unwrap();
    assert_eq!(copy.copy.len(), k.len());
    assert_eq!(copy.heights[by(p, "{}").index()], 0);
    assert_eq!(copy.heights[by(p, "{0,1}").index()], 2);
    // The image is meet-closed within the product.
    let product_lattice = FiniteLattice::new(copy.product.clone()).unwrap();
    assert!(product_lattice.is_meet_closed(&copy.image()));

    assert!(matches!(
        cofinal_copy_in_product(&k, &[by(p, "{0}")], 4),
        Err(Error::BadParameter { .. })
    ));
}
