//! Finite lattices with precomputed join and meet tables.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::poset::{ElementId, FinitePoset};
use crate::{Error, Result};

/// A nonempty finite lattice. Joins and meets are tabulated at construction,
/// so lookups are O(1) and the bottom and top are known to exist.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteLattice {
    poset: FinitePoset,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl FiniteLattice {
    /// Validates that `poset` is a lattice and tabulates its operations.
    pub fn new(poset: FinitePoset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::EmptyLattice);
        }
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for a in poset.elements() {
            for b in poset.elements() {
                let j = poset.least_upper_bound(a, b).ok_or_else(|| Error::NoJoin {
                    a: poset.label(a).to_string(),
                    b: poset.label(b).to_string(),
                })?;
                let m = poset.greatest_lower_bound(a, b).ok_or_else(|| Error::NoMeet {
                    a: poset.label(a).to_string(),
                    b: poset.label(b).to_string(),
                })?;
                join.push(j.index());
                meet.push(m.index());
            }
        }
        Ok(FiniteLattice { poset, join, meet })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        self.poset.elements()
    }

    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.poset.leq(a, b)
    }

    pub fn label(&self, x: ElementId) -> &str {
        self.poset.label(x)
    }

    pub fn bottom(&self) -> ElementId {
        self.poset.least().expect("a finite lattice has a bottom")
    }

    pub fn top(&self) -> ElementId {
        self.poset.greatest().expect("a finite lattice has a top")
    }

    pub fn join(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId::new(self.join[a.index() * self.len() + b.index()])
    }

    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId::new(self.meet[a.index() * self.len() + b.index()])
    }

    /// Join of any finite set; the empty join is the bottom.
    pub fn join_of<I: IntoIterator<Item = ElementId>>(&self, items: I) -> ElementId {
        items.into_iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    /// Meet of any finite set; the empty meet is the top.
    pub fn meet_of<I: IntoIterator<Item = ElementId>>(&self, items: I) -> ElementId {
        items.into_iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    pub fn is_join_closed(&self, subset: &BTreeSet<ElementId>) -> bool {
        subset.iter().all(|&a| subset.iter().all(|&b| subset.contains(&self.join(a, b))))
    }

    pub fn is_meet_closed(&self, subset: &BTreeSet<ElementId>) -> bool {
        subset.iter().all(|&a| subset.iter().all(|&b| subset.contains(&self.meet(a, b))))
    }

    pub fn is_sublattice(&self, subset: &BTreeSet<ElementId>) -> bool {
        !subset.is_empty() && self.is_join_closed(subset) && self.is_meet_closed(subset)
    }

    pub fn join_closure(&self, seed: &BTreeSet<ElementId>) -> BTreeSet<ElementId> {
        let mut out = seed.clone();
        loop {
            let mut grew = false;
            let items: Vec<ElementId> = out.iter().copied().collect();
            for &a in &items {
                for &b in &items {
                    if out.insert(self.join(a, b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return out;
            }
        }
    }

    pub fn meet_closure(&self, seed: &BTreeSet<ElementId>) -> BTreeSet<ElementId> {
        let mut out = seed.clone();
        loop {
            let mut grew = false;
            let items: Vec<ElementId> = out.iter().copied().collect();
            for &a in &items {
                for &b in &items {
                    if out.insert(self.meet(a, b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return out;
            }
        }
    }

    /// The smallest ideal containing `seed`: downward closed, closed under
    /// binary joins, and always containing the bottom.
    pub fn ideal_closure(&self, seed: &BTreeSet<ElementId>) -> BTreeSet<ElementId> {
        let mut out = seed.clone();
        out.insert(self.bottom());
        loop {
            let mut grew = false;
            let items: Vec<ElementId> = out.iter().copied().collect();
            for &a in &items {
                for &b in &items {
                    if out.insert(self.join(a, b)) {
                        grew = true;
                    }
                }
                for y in self.elements() {
                    if self.leq(y, a) && out.insert(y) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return out;
            }
        }
    }

    /// Upper covers of the bottom.
    pub fn atoms(&self) -> Vec<ElementId> {
        self.poset.upper_covers(self.bottom())
    }

    /// Every element is the join of the atoms below it (the bottom being the
    /// empty join).
    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        self.elements().all(|x| {
            self.join_of(atoms.iter().copied().filter(|&a| self.leq(a, x))) == x
        })
    }

    /// All meet-closed subsets containing `base`, enumerated breadth-first
    /// from the meet-closure of `base`, at most `cap` of them. The second
    /// component reports whether the cap cut the enumeration short.
    pub fn meet_closed_supersets(
        &self,
        base: &BTreeSet<ElementId>,
        cap: usize,
    ) -> (Vec<BTreeSet<ElementId>>, bool) {
        if cap == 0 {
            return (Vec::new(), true);
        }
        let start = self.meet_closure(base);
        let mut seen: BTreeSet<BTreeSet<ElementId>> = BTreeSet::new();
        let mut queue: Vec<BTreeSet<ElementId>> = Vec::new();
        seen.insert(start.clone());
        queue.push(start);
        let mut head = 0;
        while head < queue.len() {
            let current = queue[head].clone();
            head += 1;
            for e in self.elements() {
                if current.contains(&e) {
                    continue;
                }
                let mut grown = current.clone();
                grown.insert(e);
                let closed = self.meet_closure(&grown);
                if seen.contains(&closed) {
                    continue;
                }
                if queue.len() >= cap {
                    return (queue, true);
                }
                seen.insert(closed.clone());
                queue.push(closed);
            }
        }
        (queue, false)
    }
}

/// Elements that are not the join of two strictly smaller elements. Minimal
/// elements (including a bottom) qualify vacuously, so in a finite
/// join-semilattice this set generates everything under nonempty joins.
pub fn join_irreducibles(p: &FinitePoset) -> Vec<ElementId> {
    p.elements()
        .filter(|&x| {
            !p.elements().any(|a| {
                p.lt(a, x)
                    && p.elements().any(|b| p.lt(b, x) && p.least_upper_bound(a, b) == Some(x))
            })
        })
        .collect()
}

/// Is every element of the join-semilattice `p` the join of some nonempty
/// subset of `gens`? (Equivalently: the join of the generators below it.)
pub fn generates_by_joins(p: &FinitePoset, gens: &BTreeSet<ElementId>) -> bool {
    if !p.is_join_semilattice() {
        return false;
    }
    p.elements().all(|x| {
        let below: Vec<ElementId> = gens.iter().copied().filter(|&g| p.leq(g, x)).collect();
        match below.split_first() {
            // The empty join: only a least element is generated by nothing.
            None => p.least() == Some(x),
            Some((&first, rest)) => {
                let join = rest
                    .iter()
                    .fold(first, |acc, &g| p.least_upper_bound(acc, g).expect("join exists"));
                join == x
            }
        }
    })
}

/// Breadth computed from a generating set alone: the least `n >= 1` such
/// that every `n + 1` generators include one below the join of the others.
/// `None` unless `p` is a join-semilattice generated by `gens`.
pub fn generator_breadth(p: &FinitePoset, gens: &BTreeSet<ElementId>) -> Option<usize> {
    if !generates_by_joins(p, gens) {
        return None;
    }
    let gens: Vec<ElementId> = gens.iter().copied().collect();
    let mut n = 1;
    loop {
        if !generator_reduction_fails(p, &gens, n) {
            return Some(n);
        }
        n += 1;
    }
}

fn generator_reduction_fails(p: &FinitePoset, gens: &[ElementId], n: usize) -> bool {
    let mut chosen = Vec::with_capacity(n + 1);
    gen_fail_search(p, gens, 0, n + 1, &mut chosen)
}

fn gen_fail_search(
    p: &FinitePoset,
    gens: &[ElementId],
    start: usize,
    need: usize,
    chosen: &mut Vec<ElementId>,
) -> bool {
    if need == 0 {
        return (0..chosen.len()).all(|i| {
            let mut rest = chosen
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x);
            let first = rest.next().expect("n >= 1");
            let join =
                rest.fold(first, |acc, x| p.least_upper_bound(acc, x).expect("join exists"));
            !p.leq(chosen[i], join)
        });
    }
    for c in start..gens.len() {
        chosen.push(gens[c]);
        if gen_fail_search(p, gens, c + 1, need - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
