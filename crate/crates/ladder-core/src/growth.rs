//! Iterated ladder growth.
//!
//! Two ways to grow a lattice stage by stage, each stage an ideal of the
//! next: the breadth-two tower, which adjoins a fresh atom and a fresh top
//! per stage, and the skeleton-doubling tower, which norms the stage,
//! forces a skeleton through it, and glues on an order-copy of that
//! skeleton. Every stage is re-verified from scratch.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::forcing::{full_dense_family, generic_filter, skeleton_from_generic};
use crate::ladders::is_k_ladder;
use crate::lattice::FiniteLattice;
use crate::normed::norm_from_enumeration;
use crate::poset::{ElementId, FinitePoset};
use crate::{Error, Result};

/// How a stage of a growth trace came to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// The starting lattice, as given.
    Seed,
    /// A fresh atom over the bottom plus a fresh top over everything.
    FreshAtomAndTop,
    /// A glued-on copy of a forced skeleton.
    SkeletonDouble,
}

/// A growth run: `stages[0]` is the seed and each later stage extends the
/// previous one as an ideal. `kinds` is parallel to `stages`.
#[derive(Clone, Debug)]
pub struct GrowthTrace {
    pub stages: Vec<FiniteLattice>,
    pub kinds: Vec<StepKind>,
}

impl GrowthTrace {
    /// The last stage.
    pub fn last(&self) -> &FiniteLattice {
        self.stages.last().expect("traces hold at least the seed")
    }
}

fn check(ok: bool, name: &'static str, detail: String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification {
            check: name,
            detail,
        })
    }
}

/// Verifies that the first `old_len` ids of `next` carry exactly the order
/// of `prev` and form an ideal of `next`.
fn check_stage_extension(prev: &FiniteLattice, next: &FiniteLattice) -> Result<()> {
    let old: BTreeSet<ElementId> = (0..prev.len()).map(ElementId::new).collect();
    for a in prev.elements() {
        for b in prev.elements() {
            check(
                prev.leq(a, b) == next.leq(a, b),
                "growth-restriction",
                format!(
                    "order between {} and {} changed across the stage",
                    prev.label(a),
                    prev.label(b)
                ),
            )?;
        }
    }
    check(
        next.poset().is_ideal(&old),
        "growth-ideal",
        String::from("previous stage must be an ideal of the next"),
    )?;
    check(
        next.len() > prev.len(),
        "growth-strict",
        String::from("stages must strictly grow"),
    )?;
    Ok(())
}

/// Grows a breadth-two tower for `n` stages from `seed`: each stage adds a
/// fresh atom over the bottom and a fresh top over everything, and is
/// verified to be a 2-ladder extending the previous stage as an ideal.
pub fn grow_2ladder(n: usize, seed: &FiniteLattice) -> Result<GrowthTrace> {
    if !is_k_ladder(seed, 2) {
        return Err(Error::BadParameter {
            what: String::from("seed must be a 2-ladder"),
        });
    }
    let mut trace = GrowthTrace {
        stages: vec![seed.clone()],
        kinds: vec![StepKind::Seed],
    };
    for stage in 1..=n {
        let prev = trace.last();
        let mut labels: Vec<String> = prev.poset().labels().to_vec();
        let atom = labels.len();
        labels.push(format!("p{stage}"));
        let top = labels.len();
        labels.push(format!("1{stage}"));
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in prev.elements() {
            for b in prev.elements() {
                if a != b && prev.leq(a, b) {
                    pairs.push((a.index(), b.index()));
                }
            }
        }
        pairs.push((prev.bottom().index(), atom));
        pairs.push((atom, top));
        for a in prev.elements() {
            pairs.push((a.index(), top));
        }
        let next = FiniteLattice::new(FinitePoset::from_relations(labels, &pairs)?)?;
        check(
            is_k_ladder(&next, 2),
            "growth-2ladder",
            format!("stage {stage} is not a 2-ladder"),
        )?;
        check_stage_extension(prev, &next)?;
        trace.stages.push(next);
        trace.kinds.push(StepKind::FreshAtomAndTop);
    }
    Ok(trace)
}

/// The result of gluing an order-copy of a skeleton on top of a lattice.
#[derive(Clone, Debug)]
pub struct SkeletonExtension {
    /// The extended lattice; the original ids embed identically.
    pub extended: FiniteLattice,
    /// New id of the copy of each skeleton element.
    pub copy: BTreeMap<ElementId, ElementId>,
}

/// Glues a copy of the cofinal meet-closed 2-ladder `f` on top of `k`,
/// with `x <= copy(y)` exactly when `x <= y`. Verifies the preconditions
/// on `f`, then that the result is a lattice extending `k` as an ideal
/// with the original order intact, that the copy of each element covers
/// exactly the element itself plus the copies of its covers within `f`,
/// and that the only new atom is the copy of the bottom of `f` (present
/// exactly when `f` reaches down to the bottom of `k`).
pub fn extend_with_skeleton(k: &FiniteLattice, f: &BTreeSet<ElementId>) -> Result<SkeletonExtension> {
    if f.is_empty() || f.iter().any(|x| x.index() >= k.len()) {
        return Err(Error::BadParameter {
            what: String::from("skeleton must be a nonempty subset of the lattice"),
        });
    }
    if let Some(missed) = k.poset().cofinality_gap(f) {
        return Err(Error::NotCofinal {
            missed: k.label(missed).into(),
        });
    }
    if !k.is_meet_closed(f) {
        return Err(Error::BadParameter {
            what: String::from("skeleton must be meet-closed"),
        });
    }
    let (f_poset, f_back) = k.poset().induced(f);
    let f_lattice = FiniteLattice::new(f_poset)?;
    if !is_k_ladder(&f_lattice, 2) {
        return Err(Error::BadParameter {
            what: String::from("skeleton must be a 2-ladder"),
        });
    }

    let mut labels: Vec<String> = k.poset().labels().to_vec();
    let mut copy: BTreeMap<ElementId, ElementId> = BTreeMap::new();
    for &x in f {
        copy.insert(x, ElementId::new(labels.len()));
        // Iterated extensions may copy an element whose preferred copy
        // name is already taken; number the copy map in that case.
        let mut name = format!("f({})", k.label(x));
        let mut tick = 1usize;
        while labels.contains(&name) {
            tick += 1;
            name = format!("f{tick}({})", k.label(x));
        }
        labels.push(name);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in k.elements() {
        for b in k.elements() {
            if a != b && k.leq(a, b) {
                pairs.push((a.index(), b.index()));
            }
        }
    }
    for &y in f {
        for x in k.elements() {
            if k.leq(x, y) {
                pairs.push((x.index(), copy[&y].index()));
            }
        }
        for &z in f {
            if y != z && k.leq(y, z) {
                pairs.push((copy[&y].index(), copy[&z].index()));
            }
        }
    }
    let extended = FiniteLattice::new(FinitePoset::from_relations(labels, &pairs)?)?;
    check_stage_extension(k, &extended)?;
    check(
        is_k_ladder(&extended, 3),
        "skeleton-extension",
        String::from("extension must be a 3-ladder"),
    )?;

    // Cover shape of each copied element: the element itself plus the
    // copies of its covers within the skeleton.
    for (fi, &x) in f_back.iter().enumerate() {
        let mut expected: BTreeSet<ElementId> = f_lattice
            .poset()
            .lower_covers(ElementId::new(fi))
            .into_iter()
            .map(|c| copy[&f_back[c.index()]])
            .collect();
        expected.insert(x);
        let actual: BTreeSet<ElementId> = extended
            .poset()
            .lower_covers(copy[&x])
            .into_iter()
            .collect();
        check(
            expected == actual,
            "skeleton-extension",
            format!("copy of {} has unexpected lower covers", k.label(x)),
        )?;
    }

    // Atom bookkeeping: the only possible new atom is the copy of the
    // skeleton's bottom, and it appears exactly when that bottom is the
    // bottom of the whole lattice.
    let f_bottom = f_back[f_lattice.bottom().index()];
    let mut expected_atoms: BTreeSet<ElementId> = k.atoms().into_iter().collect();
    if f_bottom == k.bottom() {
        expected_atoms.insert(copy[&f_bottom]);
    }
    let actual_atoms: BTreeSet<ElementId> = extended.atoms().into_iter().collect();
    check(
        expected_atoms == actual_atoms,
        "skeleton-extension",
        String::from("atoms must be the old atoms plus at most the copied bottom"),
    )?;

    Ok(SkeletonExtension { extended, copy })
}

/// Grows a skeleton-doubling tower for `n` stages from `seed`: each stage
/// is normed by the order its elements were created in, a skeleton is
/// forced through every anchor, and a copy of that skeleton is glued on
/// top. Stages are verified to be 3-ladders, each an ideal of the next.
pub fn grow_3ladder_from(seed: FiniteLattice, n: usize) -> Result<GrowthTrace> {
    let mut trace = GrowthTrace {
        stages: vec![seed],
        kinds: vec![StepKind::Seed],
    };
    check(
        is_k_ladder(trace.last(), 3),
        "growth-3ladder",
        String::from("seed is not a 3-ladder"),
    )?;
    for _ in 1..=n {
        let prev = trace.last().clone();
        let order: Vec<ElementId> = prev.elements().collect();
        let normed = norm_from_enumeration(prev.clone(), &order)?;
        let targets = full_dense_family(&normed);
        let stages = generic_filter(&normed, &BTreeSet::new(), &targets)?;
        let skeleton = skeleton_from_generic(&normed, &stages)?;
        let next = extend_with_skeleton(&prev, &skeleton)?.extended;
        check(
            is_k_ladder(&next, 3),
            "growth-3ladder",
            String::from("stage is not a 3-ladder"),
        )?;
        trace.stages.push(next);
        trace.kinds.push(StepKind::SkeletonDouble);
    }
    Ok(trace)
}

/// The skeleton-doubling tower from a single point.
pub fn grow_3ladder(n: usize) -> Result<GrowthTrace> {
    grow_3ladder_from(FiniteLattice::new(FinitePoset::chain(1))?, n)
}
