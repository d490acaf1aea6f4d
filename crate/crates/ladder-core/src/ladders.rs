//! Ladders, preskeletons, and skeletons.
//!
//! A k-ladder is a (finite, hence lower finite) lattice in which every
//! element has at most k lower covers. A preskeleton of a normed lattice is a
//! subset meeting every level in a chain and closed under projections; a
//! skeleton is a preskeleton whose level sections are cofinal in their
//! levels. Preskeletons are automatically meet-closed with at most two lower
//! covers inside themselves, which is what makes skeletons 2-ladders.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::lattice::FiniteLattice;
use crate::normed::NormedLattice;
use crate::poset::{ElementId, FinitePoset};
use crate::{Error, Result};

/// Does every element of `l` have at most `k` lower covers?
pub fn is_k_ladder(l: &FiniteLattice, k: usize) -> bool {
    l.elements().all(|x| l.poset().lower_covers(x).len() <= k)
}

/// Why a subset fails to be a preskeleton, if it does.
pub fn preskeleton_violation(k: &NormedLattice, f: &BTreeSet<ElementId>) -> Option<Error> {
    for xi in k.range() {
        let section: Vec<ElementId> =
            f.iter().copied().filter(|&x| k.norm(x) == xi).collect();
        for (i, &a) in section.iter().enumerate() {
            for &b in &section[i + 1..] {
                if !k.poset().comparable(a, b) {
                    return Some(Error::NotAPreskeleton {
                        reason: format!(
                            "{} and {} share level {xi} but are incomparable",
                            k.lattice().label(a),
                            k.lattice().label(b)
                        ),
                    });
                }
            }
        }
    }
    for &x in f {
        for p in k.proj_set(x) {
            if !f.contains(&p) {
                return Some(Error::NotAPreskeleton {
                    reason: format!(
                        "projection {} of {} is missing",
                        k.lattice().label(p),
                        k.lattice().label(x)
                    ),
                });
            }
        }
    }
    None
}

/// Per-level chains plus closure under projections.
pub fn is_preskeleton(k: &NormedLattice, f: &BTreeSet<ElementId>) -> bool {
    preskeleton_violation(k, f).is_none()
}

/// A preskeleton whose section of every level is cofinal in that level.
pub fn is_skeleton(k: &NormedLattice, f: &BTreeSet<ElementId>) -> bool {
    if !is_preskeleton(k, f) {
        return false;
    }
    k.range().into_iter().all(|xi| {
        let level = k.level(xi);
        level.iter().all(|&x| {
            level
                .iter()
                .any(|&y| f.contains(&y) && k.poset().leq(x, y))
        })
    })
}

/// Builds a skeleton as the union of the projection chains of a cofinal
/// chain's members. The skeleton property of the result is verified, not
/// assumed.
pub fn skeleton_from_chain(
    k: &NormedLattice,
    chain: &[ElementId],
) -> Result<BTreeSet<ElementId>> {
    for (i, &a) in chain.iter().enumerate() {
        for &b in &chain[i + 1..] {
            if !k.poset().comparable(a, b) {
                return Err(Error::NotAChain {
                    a: k.lattice().label(a).to_string(),
                    b: k.lattice().label(b).to_string(),
                });
            }
        }
    }
    let members: BTreeSet<ElementId> = chain.iter().copied().collect();
    if let Some(missed) = k.poset().cofinality_gap(&members) {
        return Err(Error::NotCofinal { missed: k.lattice().label(missed).to_string() });
    }
    let mut f = BTreeSet::new();
    for &c in chain {
        f.extend(k.proj_set(c));
    }
    if !is_skeleton(k, &f) {
        return Err(Error::Verification {
            check: "skeleton-from-chain",
            detail: "projection union of a cofinal chain is not a skeleton".into(),
        });
    }
    Ok(f)
}

/// Structural facts about a preskeleton, all of which must hold for valid
/// preskeletons; a dirty report indicates an implementation bug.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreskeletonReport {
    /// Closed under meets of the ambient lattice.
    pub meet_closed: bool,
    /// Largest number of lower covers any member has inside the subset.
    pub max_lower_covers_within: usize,
    /// Whether the subset is upward directed.
    pub upward_directed: bool,
    /// When upward directed, the subset is a lattice; is it a 2-ladder?
    pub two_ladder: Option<bool>,
}

impl PreskeletonReport {
    /// Every structural fact holds.
    pub fn clean(&self) -> bool {
        self.meet_closed
            && self.max_lower_covers_within <= 2
            && self.two_ladder.unwrap_or(true)
    }
}

/// Checks the structural facts for preskeletons: meet-closure, at most two
/// lower covers within the subset, and 2-ladderhood when upward directed.
pub fn verify_preskeleton_structure(
    k: &NormedLattice,
    f: &BTreeSet<ElementId>,
) -> Result<PreskeletonReport> {
    if let Some(err) = preskeleton_violation(k, f) {
        return Err(err);
    }
    let meet_closed = k.lattice().is_meet_closed(f);
    let (induced, _) = k.poset().induced(f);
    let max_lower_covers_within = induced
        .elements()
        .map(|x| induced.lower_covers(x).len())
        .max()
        .unwrap_or(0);
    let upward_directed = k.poset().is_upward_directed(f);
    let two_ladder = if upward_directed && !f.is_empty() {
        let sub = FiniteLattice::new(induced)?;
        Some(is_k_ladder(&sub, 2))
    } else {
        None
    };
    Ok(PreskeletonReport {
        meet_closed,
        max_lower_covers_within,
        upward_directed,
        two_ladder,
    })
}

/// A copy of a lattice sitting inside a product with a finite chain,
/// cofinally in the slab the stair sequence reaches.
#[derive(Clone, Debug)]
pub struct CofinalCopy {
    /// The ambient product of the lattice with the chain `0..=m`.
    pub product: FinitePoset,
    /// Product id of the copy of each lattice element, in element order.
    pub copy: Vec<ElementId>,
    /// The stair heights `f(x)` (largest `i` with `a[i] <= x`), in element
    /// order.
    pub heights: Vec<usize>,
}

impl CofinalCopy {
    pub fn image(&self) -> BTreeSet<ElementId> {
        self.copy.iter().copied().collect()
    }
}

/// Embeds `k` into `k x chain(m+1)` along the stair function of a strictly
/// increasing sequence `a` starting at the bottom: each `x` goes to
/// `(x, f(x))` with `f(x)` the largest `i` such that `a[i] <= x`. Verifies
/// that the image is a meet-closed order-isomorphic copy, cofinal in the slab
/// with second coordinate below `a.len()`.
pub fn cofinal_copy_in_product(
    k: &FiniteLattice,
    a: &[ElementId],
    m: usize,
) -> Result<CofinalCopy> {
    if a.is_empty() || a[0] != k.bottom() {
        return Err(Error::BadParameter {
            what: "stair sequence must start at the bottom".into(),
        });
    }
    if a.len() > m + 1 {
        return Err(Error::BadParameter {
            what: format!("stair sequence of length {} exceeds chain height {}", a.len(), m + 1),
        });
    }
    for w in a.windows(2) {
        if !k.poset().lt(w[0], w[1]) {
            return Err(Error::BadParameter {
                what: format!(
                    "stair sequence is not strictly increasing at {} -> {}",
                    k.label(w[0]),
                    k.label(w[1])
                ),
            });
        }
    }
    let ladder = FinitePoset::chain(m + 1);
    let product = k.poset().product(&ladder);
    let heights: Vec<usize> = k
        .elements()
        .map(|x| {
            (0..a.len())
                .rev()
                .find(|&i| k.leq(a[i], x))
                .expect("a[0] is the bottom")
        })
        .collect();
    let copy: Vec<ElementId> = k
        .elements()
        .map(|x| k.poset().product_id(&ladder, x, ElementId::new(heights[x.index()])))
        .collect();
    if !crate::poset::is_order_embedding(k.poset(), &product, &copy) {
        return Err(Error::Verification {
            check: "cofinal-copy-isomorphism",
            detail: "stair map is not an order embedding".into(),
        });
    }
    for x in k.elements() {
        for y in k.elements() {
            let hm = heights[x.index()].min(heights[y.index()]);
            if heights[k.meet(x, y).index()] != hm {
                return Err(Error::Verification {
                    check: "cofinal-copy-meets",
                    detail: format!(
                        "stair height of {} ^ {} is not the minimum height",
                        k.label(x),
                        k.label(y)
                    ),
                });
            }
        }
    }
    let image = copy.iter().copied().collect::<BTreeSet<_>>();
    for x in k.elements() {
        for i in 0..a.len() {
            let slab = k.poset().product_id(&ladder, x, ElementId::new(i));
            if !image.iter().any(|&c| product.leq(slab, c)) {
                return Err(Error::Verification {
                    check: "cofinal-copy-cofinality",
                    detail: format!("({}, {i}) is not dominated by the copy", k.label(x)),
                });
            }
        }
    }
    Ok(CofinalCopy { product, copy, heights })
}
