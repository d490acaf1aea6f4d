mod common;

use common::{by, diamond, id};
use ladder_core::enumerate::{boolean, chain_lattice, grid, m3, n5, naturally_labeled_posets};
use ladder_core::lattice::{generator_breadth, generates_by_joins, join_irreducibles};
use ladder_core::poset::{is_strong_amalgam, FinitePoset};
use ladder_core::Error;
use std::collections::BTreeSet;

#[test]
fn rejects_cycles() {
    let labels = vec!["a".to_string(), "b".to_string()];
    assert!(matches!(
        FinitePoset::from_relations(labels, &[(0, 1), (1, 0)]),
        Err(Error::Antisymmetry { .. })
    ));
}

#[test]
fn chains_have_breadth_one() {
    for n in 1..=7 {
        assert_eq!(FinitePoset::chain(n).breadth(), 1, "chain of {n}");
    }
}

#[test]
fn named_lattice_breadths() {
    assert_eq!(m3().unwrap().poset().breadth(), 2);
    assert_eq!(n5().unwrap().poset().breadth(), 2);
    assert_eq!(diamond().poset().breadth(), 2);
    assert_eq!(boolean(3).unwrap().poset().breadth(), 3);
    assert_eq!(grid(3, 4).unwrap().poset().breadth(), 2);
    assert_eq!(grid(2, 5).unwrap().poset().breadth(), 2);
}

#[test]
fn breadth_violation_shape_on_m3() {
    let l = m3().unwrap();
    let v = l.poset().breadth_violation(1).expect("breadth exceeds 1");
    assert_eq!(v.xs.len(), 2);
    assert_eq!(v.ys.len(), 2);
    for (i, &x) in v.xs.iter().enumerate() {
        for (j, &y) in v.ys.iter().enumerate() {
            assert_eq!(l.poset().leq(x, y), i != j);
        }
    }
    assert!(l.poset().breadth_violation(2).is_none());
}

#[test]
fn enumeration_counts_are_frozen() {
    let expected = [1usize, 1, 2, 7, 40, 357, 4824];
    let expected_semilattices = [1usize, 1, 1, 2, 7, 39, 320];
    for n in 0..=6 {
        let posets = naturally_labeled_posets(n).unwrap();
        assert_eq!(posets.len(), expected[n], "poset count at {n}");
        let semis = posets.iter().filter(|p| p.is_join_semilattice()).count();
        assert_eq!(semis, expected_semilattices[n], "semilattice count at {n}");
    }
    assert!(matches!(
        naturally_labeled_posets(7),
        Err(Error::BadParameter { .. })
    ));
}

#[test]
fn breadth_is_self_dual_up_to_five() {
    for n in 0..=5 {
        for p in naturally_labeled_posets(n).unwrap() {
            assert_eq!(p.breadth(), p.dual().breadth());
        }
    }
}

#[test]
fn join_breadth_matches_breadth_on_semilattices() {
    for n in 1..=6 {
        for p in naturally_labeled_posets(n).unwrap() {
            if let Some(jb) = p.join_breadth() {
                assert!(p.is_join_semilattice());
                assert_eq!(jb, p.breadth(), "join breadth disagrees on {p:?}");
            } else {
                assert!(!p.is_join_semilattice());
            }
        }
    }
}

#[test]
fn generator_breadth_matches_oracle_on_small_semilattices() {
    for n in 1..=5 {
        for p in naturally_labeled_posets(n).unwrap() {
            if !p.is_join_semilattice() {
                continue;
            }
            let everything: BTreeSet<_> = p.elements().collect();
            assert_eq!(generator_breadth(&p, &everything), Some(p.breadth()));
            let irreducibles: BTreeSet<_> = join_irreducibles(&p).into_iter().collect();
            assert!(generates_by_joins(&p, &irreducibles));
            assert_eq!(generator_breadth(&p, &irreducibles), Some(p.breadth()));
        }
    }
}

#[test]
fn covers_and_sets_on_diamond() {
    let d = diamond();
    let p = d.poset();
    let bottom = by(p, "{}");
    let top = by(p, "{0,1}");
    let a = by(p, "{0}");
    let b = by(p, "{1}");
    assert_eq!(p.upper_covers(bottom), vec![a, b]);
    assert_eq!(p.lower_covers(top), vec![a, b]);
    assert_eq!(p.down_set(top).len(), 4);
    assert_eq!(p.up_set(bottom).len(), 4);
    assert!(p.is_antichain(&[a, b]));
    assert!(p.is_chain_subset([&bottom, &a, &top]));
    assert_eq!(d.join(a, b), top);
    assert_eq!(d.meet(a, b), bottom);
    assert_eq!(d.atoms(), vec![a, b]);
    assert!(d.is_atomistic());
}

#[test]
fn strong_amalgam_on_diamond() {
    let d = diamond();
    let p = d.poset();
    let bottom = by(p, "{}");
    let a = by(p, "{0}");
    let b = by(p, "{1}");
    let top = by(p, "{0,1}");
    let left: BTreeSet<_> = [bottom, a].into_iter().collect();
    let right: BTreeSet<_> = [bottom, b].into_iter().collect();
    let glue: BTreeSet<_> = [bottom].into_iter().collect();
    let slab = p.induced(&[bottom, a, b].into_iter().collect()).0;
    assert!(is_strong_amalgam(
        &slab,
        &[id(0), id(1)].into_iter().collect(),
        &[id(0), id(2)].into_iter().collect(),
        &[id(0)].into_iter().collect()
    ));
    // Symmetric in the two sides.
    assert!(is_strong_amalgam(
        &slab,
        &[id(0), id(2)].into_iter().collect(),
        &[id(0), id(1)].into_iter().collect(),
        &[id(0)].into_iter().collect()
    ));
    // The full diamond is not a strong amalgam of the two slabs over the
    // bottom: the top is outside the union.
    assert!(!is_strong_amalgam(p, &left, &right, &glue));
    let _ = top;
}

#[test]
fn product_and_induced() {
    let c2 = FinitePoset::chain(2);
    let c3 = FinitePoset::chain(3);
    let prod = c2.product(&c3);
    assert_eq!(prod.len(), 6);
    assert!(prod.is_lattice());
    assert_eq!(prod.breadth(), 2);
    let lower: BTreeSet<_> = [id(0), id(1), id(3)].into_iter().collect();
    let (induced, back) = prod.induced(&lower);
    assert_eq!(induced.len(), 3);
    assert_eq!(back.len(), 3);
    assert!(chain_lattice(4).unwrap().poset().is_lattice());
}
