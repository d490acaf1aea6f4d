//! Lattices carrying a norm compatible with joins.
//!
//! A norm assigns each element a natural number so that the norm of a join is
//! the max of the norms. That single axiom makes the norm monotone, makes
//! every set `{x : norm(x) <= xi}` an ideal (when nonempty), and gives each
//! element `x` a well-defined projection to each level: the largest element
//! below `x` of norm at most `xi`. Projections of a fixed element form a
//! chain, which induces the `tri_below` partial order used by the skeleton
//! machinery.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::lattice::FiniteLattice;
use crate::poset::{ElementId, FinitePoset};
use crate::{Error, Result};

/// A finite lattice with a max-compatible norm into the naturals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormedLattice {
    lattice: FiniteLattice,
    norm: Vec<usize>,
}

impl NormedLattice {
    /// Validates max-compatibility (`norm(x v y) = max(norm x, norm y)`) and
    /// that every nonempty down-level is an ideal, then wraps the lattice.
    pub fn new(lattice: FiniteLattice, norm: Vec<usize>) -> Result<Self> {
        if norm.len() != lattice.len() {
            return Err(Error::NormLengthMismatch {
                expected: lattice.len(),
                got: norm.len(),
            });
        }
        for a in lattice.elements() {
            for b in lattice.elements() {
                let j = lattice.join(a, b);
                if norm[j.index()] != norm[a.index()].max(norm[b.index()]) {
                    return Err(Error::NormNotCompatible {
                        a: lattice.label(a).to_string(),
                        b: lattice.label(b).to_string(),
                    });
                }
            }
        }
        let normed = NormedLattice { lattice, norm };
        for xi in normed.range() {
            let ideal = normed.level_at_most(xi);
            if !normed.lattice.poset().is_ideal(&ideal) {
                return Err(Error::Verification {
                    check: "down-level-ideal",
                    detail: alloc::format!("level <= {xi} is not an ideal"),
                });
            }
        }
        Ok(normed)
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn poset(&self) -> &FinitePoset {
        self.lattice.poset()
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        self.lattice.elements()
    }

    pub fn label(&self, x: ElementId) -> &str {
        self.lattice.label(x)
    }

    pub fn norm(&self, x: ElementId) -> usize {
        self.norm[x.index()]
    }

    pub fn norms(&self) -> &[usize] {
        &self.norm
    }

    /// The set of norm values in use.
    pub fn range(&self) -> BTreeSet<usize> {
        self.norm.iter().copied().collect()
    }

    pub fn max_norm(&self) -> usize {
        *self.norm.iter().max().expect("nonempty")
    }

    /// One past the maximum norm; for a transitive norm this is the number of
    /// levels.
    pub fn range_bound(&self) -> usize {
        self.max_norm() + 1
    }

    /// A norm is transitive when its range is an initial segment `{0..=max}`
    /// of the naturals.
    pub fn is_transitive(&self) -> bool {
        let range = self.range();
        (0..=self.max_norm()).all(|v| range.contains(&v))
    }

    /// The level `{x : norm(x) = xi}`.
    pub fn level(&self, xi: usize) -> BTreeSet<ElementId> {
        self.elements().filter(|&x| self.norm(x) == xi).collect()
    }

    /// The down-level `{x : norm(x) <= xi}` (an ideal when nonempty).
    pub fn level_at_most(&self, xi: usize) -> BTreeSet<ElementId> {
        self.elements().filter(|&x| self.norm(x) <= xi).collect()
    }

    /// The full increasing chain of down-levels for `xi = 0..=max_norm`.
    pub fn levels_chain(&self) -> Vec<BTreeSet<ElementId>> {
        (0..=self.max_norm()).map(|xi| self.level_at_most(xi)).collect()
    }

    /// The projection of `x` to level `xi`: the largest element of
    /// `{y <= x : norm(y) <= xi}`. That set is join-closed and downward
    /// closed, so when nonempty its join is its largest member; the
    /// membership of the join is still verified defensively.
    pub fn projection(&self, x: ElementId, xi: usize) -> Result<ElementId> {
        let below: Vec<ElementId> = self
            .elements()
            .filter(|&y| self.lattice.leq(y, x) && self.norm(y) <= xi)
            .collect();
        if below.is_empty() {
            return Err(Error::EmptyProjection {
                x: self.lattice.label(x).to_string(),
                xi,
            });
        }
        let join = self.lattice.join_of(below.iter().copied());
        if self.lattice.leq(join, x) && self.norm(join) <= xi {
            Ok(join)
        } else {
            Err(Error::NoLargestProjection {
                x: self.lattice.label(x).to_string(),
                xi,
            })
        }
    }

    /// `{projection(x, xi) : xi a norm value}`, deduplicated and sorted
    /// ascending. Always a chain containing `x` itself.
    pub fn proj_set(&self, x: ElementId) -> Vec<ElementId> {
        let mut out: Vec<ElementId> = Vec::new();
        for xi in self.range() {
            let p = self
                .projection(x, xi)
                .expect("projection at a norm value cannot be empty");
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out.sort_by_key(|&p| self.norm(p));
        out
    }

    /// `a` is tri-below `b` when `a` is one of `b`'s projections.
    pub fn tri_below(&self, a: ElementId, b: ElementId) -> bool {
        self.projection(b, self.norm(a)) == Ok(a)
    }

    /// Same lattice with norm values renumbered onto an initial segment
    /// (order-preserving), making the norm transitive.
    pub fn compacted(&self) -> NormedLattice {
        let values: Vec<usize> = self.range().into_iter().collect();
        let norm = self
            .norm
            .iter()
            .map(|v| values.binary_search(v).expect("value present"))
            .collect();
        NormedLattice::new(self.lattice.clone(), norm)
            .expect("renumbering preserves max-compatibility")
    }
}

/// Norm induced by an enumeration of all elements: the norm of `x` is the
/// least `a` such that `x` lies in the ideal generated by the first `a`
/// elements of `order` (the ideal generated by nothing being the bottom
/// alone). Not transitive in general, but the bottom always gets norm 0.
pub fn norm_from_enumeration(lattice: FiniteLattice, order: &[ElementId]) -> Result<NormedLattice> {
    let n = lattice.len();
    let mut seen = alloc::vec![false; n];
    for &e in order {
        if e.index() >= n || seen[e.index()] {
            return Err(Error::NotAPermutation);
        }
        seen[e.index()] = true;
    }
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut norm = alloc::vec![usize::MAX; n];
    let mut prefix: BTreeSet<ElementId> = BTreeSet::new();
    for a in 0..=n {
        if a > 0 {
            prefix.insert(order[a - 1]);
        }
        let ideal = lattice.ideal_closure(&prefix);
        for x in &ideal {
            if norm[x.index()] == usize::MAX {
                norm[x.index()] = a;
            }
        }
        if ideal.len() == n {
            break;
        }
    }
    NormedLattice::new(lattice, norm)
}

/// Norm induced by an increasing chain of down-levels: the norm of `x` is the
/// least index whose entry contains it. Entries must be ideals or empty,
/// increase under inclusion, and jointly exhaust the lattice; the chain of
/// down-levels of any normed lattice round-trips through this.
pub fn norm_from_ideal_chain(
    lattice: FiniteLattice,
    chain: &[BTreeSet<ElementId>],
) -> Result<NormedLattice> {
    for (i, entry) in chain.iter().enumerate() {
        if !entry.is_empty() && !lattice.poset().is_ideal(entry) {
            return Err(Error::BadIdealChain {
                index: i,
                reason: "entry is not an ideal".into(),
            });
        }
        if i + 1 < chain.len() && !entry.is_subset(&chain[i + 1]) {
            return Err(Error::BadIdealChain {
                index: i,
                reason: "entries are not increasing".into(),
            });
        }
    }
    let mut norm = alloc::vec![usize::MAX; lattice.len()];
    for (i, entry) in chain.iter().enumerate().rev() {
        for x in entry {
            norm[x.index()] = i;
        }
    }
    if norm.iter().any(|&v| v == usize::MAX) {
        return Err(Error::BadIdealChain {
            index: chain.len(),
            reason: "entries do not exhaust the lattice".into(),
        });
    }
    NormedLattice::new(lattice, norm)
}
