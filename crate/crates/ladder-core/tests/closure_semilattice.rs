mod common;

use common::by;
use ladder_core::closure::{
    breadth_at_most_via_generators, build_semilattice, closure_from_f0, f0_linear,
};
use ladder_core::enumerate::{m3, naturally_labeled_posets};
use ladder_core::lattice::{generates_by_joins, join_irreducibles};
use ladder_core::Error;
use std::collections::BTreeSet;

fn set(items: &[usize]) -> BTreeSet<usize> {
    items.iter().copied().collect()
}

#[test]
fn linear_seed_values() {
    let seed = f0_linear(5, 1).unwrap();
    // The seed of a pair is everything strictly below its maximum.
    assert_eq!(seed[&set(&[1, 3])], set(&[0, 1, 2]));
    assert_eq!(seed[&set(&[0, 1])], set(&[0]));
    assert_eq!(seed[&set(&[0, 4])], set(&[0, 1, 2, 3]));

    assert!(matches!(f0_linear(3, 2), Err(Error::BadParameter { .. })));
    assert!(f0_linear(4, 2).is_ok());
    assert!(matches!(f0_linear(5, 0), Err(Error::BadParameter { .. })));
}

#[test]
fn closing_a_pair_fills_the_initial_segment() {
    let seed = f0_linear(5, 1).unwrap();
    let cl = closure_from_f0(&seed, 5, 1).unwrap();
    assert_eq!(cl.close(&set(&[1, 3])), set(&[0, 1, 2, 3]));
    // Small sets are already closed.
    assert_eq!(cl.close(&set(&[])), set(&[]));
    for i in 0..5 {
        assert_eq!(cl.close(&set(&[i])), set(&[i]));
    }
}

#[test]
fn iterating_past_the_fixpoint_changes_nothing() {
    let seed = f0_linear(5, 1).unwrap();
    let cl = closure_from_f0(&seed, 5, 1).unwrap();
    for mask in 0u32..(1 << 5) {
        let x: BTreeSet<usize> = (0..5).filter(|i| mask >> i & 1 == 1).collect();
        let closed = cl.close(&x);
        let mut y = x;
        for _ in 0..8 {
            y = cl.step(&y);
        }
        assert_eq!(y, closed);
        assert_eq!(cl.step(&closed), closed);
    }
}

#[test]
fn five_point_semilattice_is_frozen() {
    let seed = f0_linear(5, 1).unwrap();
    let cl = closure_from_f0(&seed, 5, 1).unwrap();
    let sl = build_semilattice(&cl).unwrap();
    assert_eq!(sl.lattice.len(), 10);

    let expected: Vec<BTreeSet<usize>> = vec![
        set(&[]),
        set(&[0]),
        set(&[1]),
        set(&[2]),
        set(&[3]),
        set(&[4]),
        set(&[0, 1]),
        set(&[0, 1, 2]),
        set(&[0, 1, 2, 3]),
        set(&[0, 1, 2, 3, 4]),
    ];
    let mut got = sl.sets.clone();
    got.sort();
    let mut want = expected;
    want.sort();
    assert_eq!(got, want);

    assert!(sl.lattice.is_atomistic());
    assert_eq!(sl.generators.len(), 5);

    // Joins are closures of unions.
    let a = by(sl.lattice.poset(), "{1}");
    let b = by(sl.lattice.poset(), "{3}");
    let join = sl.lattice.join(a, b);
    assert_eq!(sl.lattice.poset().label(join), "{0,1,2,3}");

    assert_eq!(sl.lattice.poset().breadth(), 2);
}

#[test]
fn breadth_tracks_the_seed_arity() {
    for (m, n, size, expected_breadth) in [(6, 1, 12, 2), (6, 2, 26, 3)] {
        let seed = f0_linear(m, n).unwrap();
        let cl = closure_from_f0(&seed, m, n).unwrap();
        let sl = build_semilattice(&cl).unwrap();
        assert_eq!(sl.lattice.len(), size, "size for ground {m}, arity {n}");
        assert!(sl.lattice.is_atomistic());
        assert_eq!(
            sl.lattice.poset().breadth(),
            expected_breadth,
            "breadth for ground {m}, arity {n}"
        );
        assert!(
            breadth_at_most_via_generators(sl.lattice.poset(), &sl.generators, n + 1).unwrap()
        );
    }
}

#[test]
fn generator_criterion_on_a_small_lattice() {
    let k = m3().unwrap();
    let p = k.poset();
    let gens: BTreeSet<_> = ["a", "b", "c"].iter().map(|l| by(p, l)).collect();
    assert!(breadth_at_most_via_generators(p, &gens, 2).unwrap());
    assert!(!breadth_at_most_via_generators(p, &gens, 1).unwrap());

    // A non-generating set is rejected outright.
    let partial: BTreeSet<_> = ["a", "b"].iter().map(|l| by(p, l)).collect();
    assert!(matches!(
        breadth_at_most_via_generators(p, &partial, 2),
        Err(Error::BadParameter { .. })
    ));
}

#[test]
fn generator_criterion_matches_breadth_exhaustively() {
    // Over every join-semilattice with at most five elements, and both the
    // full generator set and the join-irreducibles, the criterion at n
    // holds exactly when the breadth is at most n.
    for size in 1..=5 {
        for p in naturally_labeled_posets(size).unwrap() {
            if !p.is_join_semilattice() {
                continue;
            }
            let b = p.breadth();
            let all: BTreeSet<_> = p.elements().collect();
            let irr: BTreeSet<_> = join_irreducibles(&p).into_iter().collect();
            for gens in [all, irr] {
                if !generates_by_joins(&p, &gens) {
                    continue;
                }
                for n in 1..=3 {
                    assert_eq!(
                        breadth_at_most_via_generators(&p, &gens, n).unwrap(),
                        b <= n,
                        "size {size}, n {n}"
                    );
                }
            }
        }
    }
}

#[test]
fn oversized_grounds_are_rejected() {
    let seed = f0_linear(13, 1).unwrap();
    assert!(matches!(
        closure_from_f0(&seed, 13, 1),
        Err(Error::BadParameter { .. })
    ));
}
