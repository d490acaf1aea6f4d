//! Named example structures shared by the command-line tool and the
//! acceptance battery: a corpus of small normed lattices, admissible
//! amalgamation inputs derived from them, and seeded random corpora that
//! are byte-reproducible from their seed.

use ladder_core::amalgam::AmalgamInput;
use ladder_core::counterexample::build_counterexample;
use ladder_core::enumerate::{boolean, chain_lattice, grid, m3, n5};
use ladder_core::growth::grow_3ladder;
use ladder_core::ladders::is_k_ladder;
use ladder_core::lattice::FiniteLattice;
use ladder_core::morass::{
    base_lattice, build_truncated_morass, canonical_chain, morass_to_ladder, BaseKind,
};
use ladder_core::normed::{norm_from_enumeration, NormedLattice};
use ladder_core::poset::{ElementId, FinitePoset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Norms every element by its creation stage when elements arrive in id
/// order: the norm of `x` is the least enumeration prefix whose generated
/// ideal contains `x`.
fn created(k: FiniteLattice) -> NormedLattice {
    let order: Vec<ElementId> = k.elements().collect();
    norm_from_enumeration(k, &order).expect("creation-stage norms are always admissible")
}

/// The named corpus of small normed lattices (each at most 50 elements).
/// `export` writes these to disk, and the acceptance battery runs the
/// projection laws and serialization round trips over them.
pub fn normed_fixtures() -> Vec<(String, NormedLattice)> {
    let mut out: Vec<(String, NormedLattice)> = Vec::new();

    out.push((
        "diamond-paper".into(),
        base_lattice(BaseKind::Paper).expect("diamond base"),
    ));
    out.push((
        "diamond-renormed".into(),
        base_lattice(BaseKind::Renormed).expect("diamond base"),
    ));
    out.push((
        "two-chain".into(),
        NormedLattice::new(chain_lattice(2).expect("chain"), vec![0, 1]).expect("chain norm"),
    ));
    out.push((
        "chain-5".into(),
        NormedLattice::new(chain_lattice(5).expect("chain"), vec![0, 1, 2, 3, 4])
            .expect("chain norm"),
    ));
    out.push(("b3-created".into(), created(boolean(3).expect("cube"))));
    out.push(("b4-created".into(), created(boolean(4).expect("cube"))));
    out.push((
        "grid-3x3-created".into(),
        created(grid(3, 3).expect("grid")),
    ));
    out.push((
        "grid-2x5-created".into(),
        created(grid(2, 5).expect("grid")),
    ));
    out.push(("m3-created".into(), created(m3().expect("m3"))));
    out.push(("n5-created".into(), created(n5().expect("n5"))));

    let grown = grow_3ladder(5).expect("growth tower");
    out.push(("grown-3ladder-16".into(), created(grown.last().clone())));

    let tower = build_truncated_morass(&[1, 2]).expect("tower");
    let sys = morass_to_ladder(&tower, BaseKind::Renormed, canonical_chain)
        .expect("ladder system over the tower");
    out.push((
        "morass-level-17".into(),
        sys.levels.last().expect("tower has levels").clone(),
    ));

    let gadget = build_counterexample(1).expect("gadget");
    out.push(("gadget-depth1-11".into(), created(gadget.lattice)));

    out
}

/// The fixture of the given name, if any.
pub fn fixture_by_name(name: &str) -> Option<NormedLattice> {
    normed_fixtures()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, k)| k)
}

/// Admissible amalgamation inputs: every corpus member that is a 3-ladder
/// (compacting its norm onto an initial segment first) is cut at every
/// positive norm below the top of its range, with the canonical chain
/// above the cut. Each input is named `<fixture>-cut<delta>`.
pub fn amalgam_fixtures() -> Vec<(String, AmalgamInput)> {
    let mut out: Vec<(String, AmalgamInput)> = Vec::new();
    for (name, k) in normed_fixtures() {
        let k = if k.is_transitive() { k } else { k.compacted() };
        if !is_k_ladder(k.lattice(), 3) {
            continue;
        }
        for delta in 1..k.range_bound() {
            let Ok(chain) = canonical_chain(&k, delta) else {
                continue;
            };
            if let Ok(input) = AmalgamInput::new(k.clone(), delta, &chain) {
                out.push((format!("{name}-cut{delta}"), input));
            }
        }
    }
    out
}

fn mask_label(mask: u32, ground: usize) -> String {
    let mut body = String::new();
    for x in 0..ground {
        if mask & (1 << x) != 0 {
            if !body.is_empty() {
                body.push(',');
            }
            body.push_str(&x.to_string());
        }
    }
    format!("{{{body}}}")
}

/// One random intersection-closed set family over `0..ground` containing
/// the full set, realized as a lattice under inclusion: meets are
/// intersections and joins are least containing members. Ids ascend with
/// the bitmask and labels are set notation, so the result is determined
/// by the family alone.
fn random_closure_lattice(rng: &mut ChaCha8Rng, ground: usize) -> FiniteLattice {
    let full: u32 = (1u32 << ground) - 1;
    let picks = rng.gen_range(1..=ground * 2);
    let mut family: BTreeSet<u32> = BTreeSet::new();
    family.insert(full);
    for _ in 0..picks {
        family.insert(rng.gen_range(0..=full));
    }
    loop {
        let snapshot: Vec<u32> = family.iter().copied().collect();
        let before = family.len();
        for (i, &a) in snapshot.iter().enumerate() {
            for &b in &snapshot[i + 1..] {
                family.insert(a & b);
            }
        }
        if family.len() == before {
            break;
        }
    }
    let masks: Vec<u32> = family.into_iter().collect();
    let labels: Vec<String> = masks.iter().map(|&m| mask_label(m, ground)).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            if i != j && a & b == a {
                pairs.push((i, j));
            }
        }
    }
    let poset = FinitePoset::from_relations(labels, &pairs).expect("containment is a partial order");
    FiniteLattice::new(poset).expect("intersection-closed families with a top form lattices")
}

/// `count` seeded random lattices over a ground set of the given size
/// (1 through 4), each with at most `2^ground` elements. The same seed
/// always produces the same corpus.
pub fn random_lattices(count: usize, ground: usize, seed: u64) -> Vec<FiniteLattice> {
    assert!((1..=4).contains(&ground), "ground size must be 1..=4");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_closure_lattice(&mut rng, ground))
        .collect()
}

/// `count` seeded random normed lattices: each random lattice carries the
/// creation-stage norm of a random enumeration of its elements.
pub fn random_normed(count: usize, ground: usize, seed: u64) -> Vec<NormedLattice> {
    assert!((1..=4).contains(&ground), "ground size must be 1..=4");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = random_closure_lattice(&mut rng, ground);
            let mut order: Vec<ElementId> = k.elements().collect();
            order.shuffle(&mut rng);
            norm_from_enumeration(k, &order).expect("creation-stage norms are always admissible")
        })
        .collect()
}
