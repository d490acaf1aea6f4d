mod common;

use ladder_core::morass::{
    build_truncated_morass, build_truncated_morass_with_theta0, check_mor2tree, verify_axioms,
    AxiomOutcome, MorassTruncation,
};
use ladder_core::Error;
use std::collections::BTreeMap;

#[test]
fn empty_tower() {
    let m = build_truncated_morass(&[]).unwrap();
    assert_eq!(m.thetas, vec![2]);
    assert_eq!(m.maps(0, 0), &[vec![0, 1]]);
    let report = verify_axioms(&m);
    assert!(report.all_hold());
    assert_eq!(report.p2, AxiomOutcome::Vacuous);
    assert_eq!(report.p3, AxiomOutcome::Vacuous);
    assert_eq!(report.p5, AxiomOutcome::Vacuous);
    assert!(check_mor2tree(&m).pass);
}

#[test]
fn one_step_tower() {
    let m = build_truncated_morass(&[1]).unwrap();
    assert_eq!(m.thetas, vec![2, 3]);
    assert_eq!(m.maps(0, 1), &[vec![0, 1], vec![0, 2]]);
    assert!(verify_axioms(&m).all_hold());
    assert!(check_mor2tree(&m).pass);
}

#[test]
fn two_step_tower_composites() {
    let m = build_truncated_morass(&[1, 2]).unwrap();
    assert_eq!(m.thetas, vec![2, 3, 4]);
    assert_eq!(m.maps(1, 2), &[vec![0, 1, 2], vec![0, 1, 3]]);
    // The long family: exactly the three composites.
    assert_eq!(m.maps(0, 2), &[vec![0, 1], vec![0, 2], vec![0, 3]]);
    assert!(verify_axioms(&m).all_hold());
    assert!(check_mor2tree(&m).pass);
}

#[test]
fn three_step_tower() {
    let m = build_truncated_morass(&[1, 2, 2]).unwrap();
    assert_eq!(m.thetas, vec![2, 3, 4, 6]);
    assert_eq!(
        m.maps(0, 3),
        &[vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4], vec![0, 5]]
    );
    assert!(verify_axioms(&m).all_hold());
    assert!(check_mor2tree(&m).pass);
}

#[test]
fn widened_base_reports_the_width_axiom() {
    let m = build_truncated_morass_with_theta0(3, &[2, 1]).unwrap();
    assert_eq!(m.thetas, vec![3, 4, 7]);
    assert_eq!(m.maps(0, 2).len(), 4);
    let report = verify_axioms(&m);
    assert!(matches!(report.p0, AxiomOutcome::Fail(_)));
    assert!(report.p2.holds() && report.p3.holds() && report.p5.holds());
    assert!(!report.all_hold());
    assert!(check_mor2tree(&m).pass);
}

#[test]
fn rejects_out_of_range_cuts() {
    assert!(matches!(
        build_truncated_morass(&[2]),
        Err(Error::BadParameter { .. })
    ));
    assert!(matches!(
        build_truncated_morass(&[0]),
        Err(Error::BadParameter { .. })
    ));
    assert!(matches!(
        build_truncated_morass(&[1, 5]),
        Err(Error::BadParameter { .. })
    ));
}

#[test]
fn tree_check_catches_prefix_disagreement() {
    // Hand-built: two maps agreeing at a point with different prefixes.
    let mut maps: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    maps.insert((0, 0), vec![vec![0, 1]]);
    maps.insert((1, 1), vec![vec![0, 1, 2]]);
    maps.insert((0, 1), vec![vec![0, 2], vec![1, 2]]);
    let m = MorassTruncation {
        thetas: vec![2, 3],
        deltas: vec![1],
        maps,
    };
    let report = check_mor2tree(&m);
    assert!(!report.pass);
    let (a, b, f0, f1, xi0, xi1) = report.witness.unwrap();
    assert_eq!((a, b), (0, 1));
    assert_eq!(f0[xi0], f1[xi1]);
}

#[test]
fn composition_axiom_catches_a_missing_map() {
    let good = build_truncated_morass(&[1, 2]).unwrap();
    let mut broken = good.clone();
    broken
        .maps
        .get_mut(&(0, 2))
        .unwrap()
        .retain(|f| f != &vec![0, 3]);
    let report = verify_axioms(&broken);
    assert!(matches!(report.p2, AxiomOutcome::Fail(_)));
}

#[test]
fn step_axiom_catches_a_wrong_width() {
    let good = build_truncated_morass(&[1]).unwrap();
    let mut broken = good.clone();
    broken.thetas[1] = 4;
    let report = verify_axioms(&broken);
    assert!(matches!(report.p3, AxiomOutcome::Fail(_)));
}

#[test]
fn coverage_axiom_catches_an_unreached_point() {
    let good = build_truncated_morass(&[1]).unwrap();
    let mut broken = good.clone();
    // Strip the shift map so that point 2 is never an image.
    broken.maps.insert((0, 1), vec![vec![0, 1]]);
    let report = verify_axioms(&broken);
    assert!(matches!(report.p5, AxiomOutcome::Fail(_)));
}
