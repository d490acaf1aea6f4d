mod common;

use ladder_core::counterexample::{build_counterexample, search_breadth2_extension};
use ladder_core::Error;
use std::collections::BTreeSet;

#[test]
fn depth_zero_is_rejected() {
    assert!(matches!(
        build_counterexample(0),
        Err(Error::BadParameter { .. })
    ));
}

#[test]
fn depth_one_fixture_shape() {
    let fix = build_counterexample(1).unwrap();
    assert_eq!(fix.lattice.len(), 11);
    assert_eq!(fix.depth, 1);

    // The ideal is everything below the cap: no marked element, no top.
    assert_eq!(fix.ideal.len(), 9);
    assert!(!fix.ideal.contains(&fix.top));
    assert!(!fix.ideal.contains(&fix.ts[0]));
    assert!(fix.lattice.poset().is_lower_subset(&fix.ideal));
    assert!(fix.ideal.iter().all(|&v| fix.lattice.leq(v, fix.xs[1])));

    // The canonical ladder: meet-closed, breadth two, four elements.
    assert_eq!(fix.ladder.len(), 4);
    assert!(fix.lattice.is_meet_closed(&fix.ladder));
    let (sub, _) = fix.lattice.poset().induced(&fix.ladder);
    assert_eq!(sub.breadth(), 2);

    // The violation tuples of the gadget cross exactly off the diagonal.
    let (lower, upper) = fix.block_tuple(0);
    for i in 0..3 {
        for k in 0..3 {
            assert_eq!(fix.lattice.leq(lower[i], upper[k]), i != k);
        }
    }
}

#[test]
fn depth_one_sweep_is_frozen() {
    let fix = build_counterexample(1).unwrap();
    let out = search_breadth2_extension(&fix, 2_000_000);
    assert_eq!(out.candidates, 14);
    assert_eq!(out.marked, 2);
    assert!(!out.cap_hit);
    assert!(out.all_exceed_breadth_two);
    assert!(out.counterexample.is_none());

    let witness = out.witness.unwrap();
    assert_eq!(witness.block, 0);
    assert_eq!(witness.xs, [fix.qs[0], fix.ps[0], fix.ms[0]]);
    assert_eq!(witness.ys, [fix.xs[0], fix.ys[0], fix.zs[0]]);
    assert!(witness.extension.is_superset(&fix.ladder));
    assert!(witness.extension.contains(&fix.ts[0]));
    assert!(witness.extension.contains(&fix.top));
}

#[test]
fn depth_two_sweep_is_frozen() {
    let fix = build_counterexample(2).unwrap();
    assert_eq!(fix.lattice.len(), 19);
    assert_eq!(fix.ladder.len(), 7);
    let out = search_breadth2_extension(&fix, 2_000_000);
    assert_eq!(out.candidates, 98);
    assert_eq!(out.marked, 26);
    assert!(!out.cap_hit);
    assert!(out.all_exceed_breadth_two);
}

#[test]
fn tiny_caps_are_reported() {
    let fix = build_counterexample(2).unwrap();
    let out = search_breadth2_extension(&fix, 5);
    assert!(out.cap_hit);
    assert!(out.candidates <= 5);
}

#[test]
fn every_candidate_is_a_cofinal_meet_closed_extension() {
    let fix = build_counterexample(1).unwrap();
    let mut base: BTreeSet<_> = fix.ladder.clone();
    base.insert(fix.top);
    let (candidates, cap_hit) = fix.lattice.meet_closed_supersets(&base, 1_000_000);
    assert!(!cap_hit);
    assert_eq!(candidates.len(), 14);
    for cand in &candidates {
        assert!(cand.is_superset(&base));
        assert!(fix.lattice.is_meet_closed(cand));
        assert!(fix.lattice.poset().is_cofinal(cand));
    }
}
