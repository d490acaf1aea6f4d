mod common;

use common::{by, normed_two_chain, paper_diamond, renormed_diamond};
use ladder_core::amalgam::{amalgamate, tau, verify_lower_covers, AmalgamInput, FPair};
use ladder_core::poset::{is_lower_embedding, ElementId};
use ladder_core::Error;
use std::collections::BTreeSet;

#[test]
fn shift_map_values() {
    assert_eq!(tau(1, 2, 0), 0);
    assert_eq!(tau(1, 2, 1), 2);
    assert_eq!(tau(2, 3, 2), 3);
    assert_eq!(tau(2, 3, 4), 5);
}

#[test]
fn two_chain_amalgam() {
    let k = normed_two_chain();
    let top = ElementId::new(1);
    let input = AmalgamInput::new(k, 1, &[top]).unwrap();
    assert_eq!(input.theta(), 2);
    let result = amalgamate(&input).unwrap();
    assert_eq!(result.kbar.len(), 4);
    assert_eq!(result.kbar.range_bound(), 3);
    assert_eq!(result.theta_prime, 3);
    let labels: Vec<&str> = result.kbar.elements().map(|x| result.kbar.label(x)).collect();
    assert_eq!(labels, vec!["c0", "c1", "f(c1)", "(c1,c1)"]);
    assert_eq!(result.kbar.norms(), &[0, 1, 2, 2]);
    assert_eq!(result.pairs, vec![FPair { c: top, u: top }]);

    let report = verify_lower_covers(&result).unwrap();
    assert!(report.clean());
    assert_eq!(report.checked_pairs, 1);
    assert_eq!(report.max_lower_covers, 2);
    let cap = result.pair_ids[0];
    let covers = result.kbar.poset().lower_covers(cap);
    assert_eq!(covers, vec![top, result.f[top.index()]]);
}

#[test]
fn diamond_amalgam_at_the_upper_cut() {
    let k = paper_diamond();
    let p = k.poset();
    let (bottom, a, b, top) = (by(p, "{}"), by(p, "{0}"), by(p, "{1}"), by(p, "{0,1}"));
    let input = AmalgamInput::new(k, 2, &[b, top]).unwrap();
    assert_eq!(input.least(), b);
    let result = amalgamate(&input).unwrap();

    assert_eq!(result.kbar.len(), 8);
    assert_eq!(result.kbar.range_bound(), 4);
    let labels: Vec<&str> = result.kbar.elements().map(|x| result.kbar.label(x)).collect();
    assert_eq!(
        labels,
        vec!["{}", "{0}", "{1}", "{0,1}", "f({1})", "f({0,1})", "({1},{1})", "({0,1},{0,1})"]
    );
    assert_eq!(result.kbar.norms(), &[0, 1, 2, 2, 3, 3, 3, 3]);

    // The glue is fixed pointwise; the rest is copied.
    assert_eq!(result.f[bottom.index()], bottom);
    assert_eq!(result.f[a.index()], a);
    assert_eq!(result.f[b.index()], ElementId::new(4));
    assert_eq!(result.f[top.index()], ElementId::new(5));
    assert!(is_lower_embedding(
        result.base.poset(),
        result.kbar.poset(),
        &result.f
    ));

    assert_eq!(
        result.pairs,
        vec![FPair { c: b, u: b }, FPair { c: top, u: top }]
    );
    // Block norm sets.
    let base_norms: BTreeSet<usize> =
        result.base_block().iter().map(|&x| result.kbar.norm(x)).collect();
    assert_eq!(base_norms, (0..3).collect());
    let copy_norms: BTreeSet<usize> =
        result.copy_image().iter().map(|&x| result.kbar.norm(x)).collect();
    assert_eq!(copy_norms, [0, 1, 3].into_iter().collect());
    let pair_norms: BTreeSet<usize> =
        result.pair_block().iter().map(|&x| result.kbar.norm(x)).collect();
    assert_eq!(pair_norms, [3].into_iter().collect());

    // Each cap element is the join of its legs.
    for (pair, &pid) in result.pairs.iter().zip(&result.pair_ids) {
        assert_eq!(
            result.kbar.lattice().join(pair.c, result.f[pair.u.index()]),
            pid
        );
    }

    // The top cap has the full three-cover fan.
    let report = verify_lower_covers(&result).unwrap();
    assert!(report.clean());
    assert_eq!(report.max_lower_covers, 3);
    let cap = result.pair_id(FPair { c: top, u: top }).unwrap();
    let covers: BTreeSet<ElementId> =
        result.kbar.poset().lower_covers(cap).into_iter().collect();
    let expected: BTreeSet<ElementId> = [
        top,
        result.pair_id(FPair { c: b, u: b }).unwrap(),
        result.f[top.index()],
    ]
    .into_iter()
    .collect();
    assert_eq!(covers, expected);
}

#[test]
fn diamond_amalgam_at_the_lower_cut() {
    let k = paper_diamond();
    let p = k.poset();
    let (a, top) = (by(p, "{0}"), by(p, "{0,1}"));
    let input = AmalgamInput::new(k, 1, &[a, top]).unwrap();
    let result = amalgamate(&input).unwrap();
    assert_eq!(result.kbar.len(), 10);
    assert_eq!(result.kbar.range_bound(), 5);
    assert_eq!(result.kbar.norms(), &[0, 1, 2, 2, 3, 4, 4, 3, 3, 4]);
    assert_eq!(
        result.pairs,
        vec![
            FPair { c: a, u: a },
            FPair { c: top, u: a },
            FPair { c: top, u: top }
        ]
    );
    let report = verify_lower_covers(&result).unwrap();
    assert!(report.clean());
    assert_eq!(report.max_lower_covers, 2);
}

#[test]
fn renormed_diamond_amalgam() {
    let k = renormed_diamond();
    let p = k.poset();
    let (a, top) = (by(p, "{0}"), by(p, "{0,1}"));
    let result = amalgamate(&AmalgamInput::new(k, 1, &[a, top]).unwrap()).unwrap();
    assert_eq!(result.kbar.len(), 9);
    assert_eq!(result.kbar.range_bound(), 3);
    assert!(result.kbar.lattice().is_atomistic());
    assert!(verify_lower_covers(&result).unwrap().clean());
}

#[test]
fn least_cap_above() {
    let k = paper_diamond();
    let p = k.poset();
    let (a, b, top) = (by(p, "{0}"), by(p, "{1}"), by(p, "{0,1}"));
    let input = AmalgamInput::new(k, 2, &[b, top]).unwrap();
    assert_eq!(
        input.f_least(a, b).unwrap(),
        FPair { c: top, u: top }
    );
    assert_eq!(input.f_least(b, b).unwrap(), FPair { c: b, u: b });
    let result = amalgamate(&input).unwrap();

    // Joining a base element of norm at least the cut with a copy lands on
    // the least cap above: the chain element over both legs, projected to
    // the copy leg's norm.
    assert_eq!(
        result.kbar.lattice().join(b, result.f[b.index()]),
        result.pair_id(FPair { c: b, u: b }).unwrap()
    );
    assert_eq!(
        result.kbar.lattice().join(top, result.f[b.index()]),
        result.pair_id(FPair { c: top, u: top }).unwrap()
    );
    // A base element below the cut is glue — it equals its own copy, so its
    // join with a copy stays inside the copy block instead.
    assert_eq!(result.f[a.index()], a);
    assert_eq!(
        result.kbar.lattice().join(a, result.f[b.index()]),
        result.f[top.index()]
    );
}

#[test]
fn rejected_inputs() {
    let p = paper_diamond();
    let poset = p.poset().clone();
    let (a, b, top) = (by(&poset, "{0}"), by(&poset, "{1}"), by(&poset, "{0,1}"));

    // Cut out of range.
    assert!(matches!(
        AmalgamInput::new(paper_diamond(), 0, &[top]),
        Err(Error::BadParameter { .. })
    ));
    assert!(matches!(
        AmalgamInput::new(paper_diamond(), 3, &[top]),
        Err(Error::BadParameter { .. })
    ));
    // Chain not cofinal.
    assert!(matches!(
        AmalgamInput::new(paper_diamond(), 2, &[b]),
        Err(Error::NotCofinal { .. })
    ));
    // Not a chain.
    assert!(matches!(
        AmalgamInput::new(paper_diamond(), 1, &[a, b, top]),
        Err(Error::NotAChain { .. })
    ));
    // Least chain element off the cut level.
    assert!(matches!(
        AmalgamInput::new(paper_diamond(), 1, &[b, top]),
        Err(Error::BadParameter { .. })
    ));
    // Base norms must form an initial segment.
    let gapped = ladder_core::normed::NormedLattice::new(
        ladder_core::lattice::FiniteLattice::new(poset).unwrap(),
        vec![0, 2, 2, 2],
    )
    .unwrap();
    assert!(matches!(
        AmalgamInput::new(gapped, 1, &[top]),
        Err(Error::BadParameter { .. })
    ));
}
