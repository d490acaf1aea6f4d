//! Finite-condition forcing over a normed lattice.
//!
//! Conditions are finite preskeletons, ordered by reverse containment: a
//! stronger condition is a larger preskeleton. For each element `a` the
//! anchored set — all conditions containing some `x >= a` of the same norm
//! as `a` — is dense, and a deterministic run through a family of dense
//! targets produces an increasing chain of conditions whose union, when the
//! family covers every anchor, is a skeleton.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::ladders::{is_preskeleton, is_skeleton, preskeleton_violation};
use crate::normed::NormedLattice;
use crate::poset::ElementId;
use crate::{Error, Result};

/// Whether `f` meets the anchored set of `a`: some member lies above `a`
/// on the same level.
pub fn in_sk_a(k: &NormedLattice, f: &BTreeSet<ElementId>, a: ElementId) -> bool {
    f.iter()
        .any(|&x| k.lattice().leq(a, x) && k.norm(x) == k.norm(a))
}

/// Whether `f` is a condition, i.e. a preskeleton.
pub fn is_condition(k: &NormedLattice, f: &BTreeSet<ElementId>) -> bool {
    is_preskeleton(k, f)
}

/// Strengthens the condition `e` into the anchored set of `a`: joins `a`
/// with everything in `e` and adjoins all projections of the result. The
/// output is verified to be a condition meeting the anchor.
pub fn extend_into_sk_a(
    k: &NormedLattice,
    e: &BTreeSet<ElementId>,
    a: ElementId,
) -> Result<BTreeSet<ElementId>> {
    if let Some(err) = preskeleton_violation(k, e) {
        return Err(err);
    }
    let above = k.lattice().join(a, k.lattice().join_of(e.iter().copied()));
    let mut f = e.clone();
    f.extend(k.proj_set(above));
    if let Some(err) = preskeleton_violation(k, &f) {
        return Err(err);
    }
    if !in_sk_a(k, &f, a) {
        return Err(Error::Verification {
            check: "extend-anchored",
            detail: "extension misses its own anchor".to_string(),
        });
    }
    Ok(f)
}

/// Whether finitely many conditions have a common strengthening, which
/// happens exactly when their union is itself a condition.
pub fn is_centred(k: &NormedLattice, family: &[BTreeSet<ElementId>]) -> bool {
    let union: BTreeSet<ElementId> = family.iter().flatten().copied().collect();
    is_condition(k, &union)
}

/// A dense set of conditions to be met during a generic run.
#[derive(Clone)]
pub enum DenseTarget {
    /// The anchored set of one element; met via `extend_into_sk_a`.
    LevelAnchor(ElementId),
    /// An arbitrary predicate, met by the first condition (in a
    /// deterministic breadth-first order) reachable by adding at most
    /// `bound` elements.
    Custom {
        name: &'static str,
        bound: usize,
        pred: fn(&NormedLattice, &BTreeSet<ElementId>) -> bool,
    },
}

impl core::fmt::Debug for DenseTarget {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DenseTarget::LevelAnchor(a) => write!(f, "LevelAnchor({a})"),
            DenseTarget::Custom { name, bound, .. } => {
                write!(f, "Custom {{ name: {name:?}, bound: {bound} }}")
            }
        }
    }
}

/// One anchored target per element, in id order. A run through this family
/// meets every anchor, so its union is a skeleton.
pub fn full_dense_family(k: &NormedLattice) -> Vec<DenseTarget> {
    k.elements().map(DenseTarget::LevelAnchor).collect()
}

/// First condition satisfying `pred` that is reachable from `from` by
/// inserting at most `bound` elements, scanning insertions breadth-first
/// in id order.
fn bounded_extension_search(
    k: &NormedLattice,
    from: &BTreeSet<ElementId>,
    bound: usize,
    pred: fn(&NormedLattice, &BTreeSet<ElementId>) -> bool,
) -> Option<BTreeSet<ElementId>> {
    let mut seen: BTreeSet<BTreeSet<ElementId>> = BTreeSet::new();
    let mut queue = vec![from.clone()];
    seen.insert(from.clone());
    let mut head = 0;
    while head < queue.len() {
        let current = queue[head].clone();
        head += 1;
        if is_condition(k, &current) && pred(k, &current) {
            return Some(current);
        }
        if current.len() - from.len() < bound {
            for e in k.elements() {
                if current.contains(&e) {
                    continue;
                }
                let mut grown = current.clone();
                grown.insert(e);
                if seen.insert(grown.clone()) {
                    queue.push(grown);
                }
            }
        }
    }
    None
}

/// Deterministic generic run: starting from the condition `start`, meets
/// each target in the given order and records every stage. The result is
/// an increasing chain `stages[0] = start ⊆ stages[1] ⊆ …` with one stage
/// per target; a stage already meeting its target is kept as is.
pub fn generic_filter(
    k: &NormedLattice,
    start: &BTreeSet<ElementId>,
    targets: &[DenseTarget],
) -> Result<Vec<BTreeSet<ElementId>>> {
    if let Some(err) = preskeleton_violation(k, start) {
        return Err(err);
    }
    let mut stages = vec![start.clone()];
    for target in targets {
        let current = stages.last().expect("stages start nonempty");
        let next = match target {
            DenseTarget::LevelAnchor(a) => {
                if in_sk_a(k, current, *a) {
                    current.clone()
                } else {
                    extend_into_sk_a(k, current, *a)?
                }
            }
            DenseTarget::Custom { name, bound, pred } => {
                if pred(k, current) {
                    current.clone()
                } else {
                    bounded_extension_search(k, current, *bound, *pred).ok_or(
                        Error::NotDenseWithinBound {
                            target: name.to_string(),
                        },
                    )?
                }
            }
        };
        stages.push(next);
    }
    Ok(stages)
}

/// Union of the stages of a generic run, verified to be a skeleton.
pub fn skeleton_from_generic(
    k: &NormedLattice,
    stages: &[BTreeSet<ElementId>],
) -> Result<BTreeSet<ElementId>> {
    for pair in stages.windows(2) {
        if !pair[0].is_subset(&pair[1]) {
            return Err(Error::Verification {
                check: "generic-chain",
                detail: "stages are not increasing".to_string(),
            });
        }
    }
    let union: BTreeSet<ElementId> = stages.iter().flatten().copied().collect();
    if let Some(err) = preskeleton_violation(k, &union) {
        return Err(err);
    }
    if !is_skeleton(k, &union) {
        return Err(Error::Verification {
            check: "generic-skeleton",
            detail: "union of the stages is not cofinal on every level".to_string(),
        });
    }
    Ok(union)
}
