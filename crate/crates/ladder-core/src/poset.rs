//! Dense-matrix finite posets.
//!
//! Elements are indices into a label table; the order relation is a reflexive
//! transitive antisymmetric boolean matrix, built by closure from any
//! generating set of pairs. Covers come from transitive reduction. The two
//! breadth computations (the self-dual tuple form and the join form) both live
//! here because everything downstream uses them as oracles.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::{Error, Result};

/// Index of an element within one poset.
///
/// Ids are assigned in creation order and are stable across all operations on
/// the poset that issued them. They carry no meaning across different posets.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(usize);

impl ElementId {
    /// Wraps a raw index. Only meaningful for indices issued by a poset.
    pub const fn new(index: usize) -> Self {
        ElementId(index)
    }

    /// The raw index.
    pub const fn index(self) -> usize {
        self.0
    }
}

impl core::fmt::Display for ElementId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A violation of `breadth <= n`: tuples with `xs[i] <= ys[j]` exactly for
/// `i != j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreadthViolation {
    pub xs: Vec<ElementId>,
    pub ys: Vec<ElementId>,
}

/// A finite poset over labelled elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Builds a poset as the reflexive-transitive closure of `pairs` (given as
    /// raw indices into `labels`). Rejects duplicate labels, out-of-range
    /// endpoints, and any antisymmetry violation introduced by the closure.
    pub fn from_relations(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.clone()) {
                return Err(Error::DuplicateLabel { label: label.clone() });
            }
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::UnknownElement { what: format!("pair ({a}, {b})") });
            }
            leq[a * n + b] = true;
        }
        transitive_close(&mut leq, n);
        for a in 0..n {
            for b in (a + 1)..n {
                if leq[a * n + b] && leq[b * n + a] {
                    return Err(Error::Antisymmetry {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                    });
                }
            }
        }
        Ok(FinitePoset { labels, leq })
    }

    /// Wraps an order matrix that must already be reflexive, transitive, and
    /// antisymmetric.
    pub fn from_leq_matrix(labels: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n * n {
            return Err(Error::NotAPartialOrder {
                reason: format!("matrix has {} entries for {n} elements", leq.len()),
            });
        }
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(Error::NotAPartialOrder {
                    reason: format!("not reflexive at {}", labels[i]),
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !leq[a * n + b] {
                    continue;
                }
                if a != b && leq[b * n + a] {
                    return Err(Error::Antisymmetry {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                    });
                }
                for c in 0..n {
                    if leq[b * n + c] && !leq[a * n + c] {
                        return Err(Error::NotAPartialOrder {
                            reason: format!(
                                "not transitive: {} <= {} <= {} but not {} <= {}",
                                labels[a], labels[b], labels[c], labels[a], labels[c]
                            ),
                        });
                    }
                }
            }
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.clone()) {
                return Err(Error::DuplicateLabel { label: label.clone() });
            }
        }
        Ok(FinitePoset { labels, leq })
    }

    /// The `n`-element chain `c0 < c1 < ... < c{n-1}`.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("c{i}")).collect::<Vec<_>>();
        let pairs = (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>();
        FinitePoset::from_relations(labels, &pairs).expect("a chain is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// All elements in creation order.
    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.len()).map(ElementId)
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by its label.
    pub fn by_label(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label).map(ElementId)
    }

    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a.0 * self.len() + b.0]
    }

    pub fn lt(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: ElementId, b: ElementId) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Elements `y < x` with nothing strictly between (transitive reduction).
    pub fn lower_covers(&self, x: ElementId) -> Vec<ElementId> {
        let mut covers = Vec::new();
        'outer: for y in self.elements() {
            if !self.lt(y, x) {
                continue;
            }
            for z in self.elements() {
                if self.lt(y, z) && self.lt(z, x) {
                    continue 'outer;
                }
            }
            covers.push(y);
        }
        covers
    }

    pub fn upper_covers(&self, x: ElementId) -> Vec<ElementId> {
        let mut covers = Vec::new();
        'outer: for y in self.elements() {
            if !self.lt(x, y) {
                continue;
            }
            for z in self.elements() {
                if self.lt(x, z) && self.lt(z, y) {
                    continue 'outer;
                }
            }
            covers.push(y);
        }
        covers
    }

    /// All cover pairs `(lower, upper)` in id order.
    pub fn cover_pairs(&self) -> Vec<(ElementId, ElementId)> {
        let mut pairs = Vec::new();
        for x in self.elements() {
            for y in self.upper_covers(x) {
                pairs.push((x, y));
            }
        }
        pairs.sort();
        pairs
    }

    pub fn down_set(&self, x: ElementId) -> BTreeSet<ElementId> {
        self.elements().filter(|&y| self.leq(y, x)).collect()
    }

    pub fn up_set(&self, x: ElementId) -> BTreeSet<ElementId> {
        self.elements().filter(|&y| self.leq(x, y)).collect()
    }

    pub fn minimal_elements(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| self.elements().all(|y| !self.lt(y, x)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| self.elements().all(|y| !self.lt(x, y)))
            .collect()
    }

    /// The least element, if one exists.
    pub fn least(&self) -> Option<ElementId> {
        self.elements().find(|&x| self.elements().all(|y| self.leq(x, y)))
    }

    /// The greatest element, if one exists.
    pub fn greatest(&self) -> Option<ElementId> {
        self.elements().find(|&x| self.elements().all(|y| self.leq(y, x)))
    }

    /// Is the subset pairwise comparable?
    pub fn is_chain_subset<'a, I: IntoIterator<Item = &'a ElementId>>(&self, subset: I) -> bool {
        let members: Vec<ElementId> = subset.into_iter().copied().collect();
        members
            .iter()
            .all(|&a| members.iter().all(|&b| self.comparable(a, b)))
    }

    /// Is the subset pairwise incomparable?
    pub fn is_antichain(&self, subset: &[ElementId]) -> bool {
        subset.iter().enumerate().all(|(i, &a)| {
            subset[i + 1..].iter().all(|&b| !self.comparable(a, b))
        })
    }

    /// Does every element of the poset lie below some member of `subset`?
    pub fn is_cofinal(&self, subset: &BTreeSet<ElementId>) -> bool {
        self.cofinality_gap(subset).is_none()
    }

    /// An element not dominated by `subset`, if any.
    pub fn cofinality_gap(&self, subset: &BTreeSet<ElementId>) -> Option<ElementId> {
        self.elements().find(|&x| !subset.iter().any(|&s| self.leq(x, s)))
    }

    /// Is `subset` closed downward?
    pub fn is_lower_subset(&self, subset: &BTreeSet<ElementId>) -> bool {
        subset
            .iter()
            .all(|&x| self.elements().filter(|&y| self.leq(y, x)).all(|y| subset.contains(&y)))
    }

    /// Does every pair from `subset` have an upper bound inside `subset`?
    pub fn is_upward_directed(&self, subset: &BTreeSet<ElementId>) -> bool {
        subset.iter().all(|&a| {
            subset.iter().all(|&b| {
                subset.iter().any(|&c| self.leq(a, c) && self.leq(b, c))
            })
        })
    }

    /// Ideal: nonempty, downward closed, upward directed.
    pub fn is_ideal(&self, subset: &BTreeSet<ElementId>) -> bool {
        !subset.is_empty() && self.is_lower_subset(subset) && self.is_upward_directed(subset)
    }

    /// The induced subposet on `subset` (sorted by id). Returns the poset and
    /// the id translation table (new index -> old id).
    pub fn induced(&self, subset: &BTreeSet<ElementId>) -> (FinitePoset, Vec<ElementId>) {
        let ids: Vec<ElementId> = subset.iter().copied().collect();
        let n = ids.len();
        let labels = ids.iter().map(|&x| self.labels[x.0].clone()).collect();
        let mut leq = vec![false; n * n];
        for (i, &a) in ids.iter().enumerate() {
            for (j, &b) in ids.iter().enumerate() {
                leq[i * n + j] = self.leq(a, b);
            }
        }
        (FinitePoset { labels, leq }, ids)
    }

    /// The order dual.
    pub fn dual(&self) -> FinitePoset {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = self.leq[b * n + a];
            }
        }
        FinitePoset { labels: self.labels.clone(), leq }
    }

    /// The product order on pairs, with id layout `i * other.len() + j` and
    /// labels `(a,b)`.
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let n = self.len() * other.len();
        let mut labels = Vec::with_capacity(n);
        for a in self.elements() {
            for b in other.elements() {
                labels.push(format!("({},{})", self.label(a), other.label(b)));
            }
        }
        let mut leq = vec![false; n * n];
        let m = other.len();
        for a0 in self.elements() {
            for b0 in other.elements() {
                for a1 in self.elements() {
                    for b1 in other.elements() {
                        if self.leq(a0, a1) && other.leq(b0, b1) {
                            leq[(a0.0 * m + b0.0) * n + (a1.0 * m + b1.0)] = true;
                        }
                    }
                }
            }
        }
        FinitePoset { labels, leq }
    }

    /// Id of `(a, b)` in `self.product(other)`.
    pub fn product_id(&self, other: &FinitePoset, a: ElementId, b: ElementId) -> ElementId {
        ElementId(a.0 * other.len() + b.0)
    }

    /// The least member of `subset` lying above `x`; `None` when no member
    /// dominates `x` or the dominating members have no least one.
    pub fn least_above(&self, subset: &BTreeSet<ElementId>, x: ElementId) -> Option<ElementId> {
        let above: Vec<ElementId> =
            subset.iter().copied().filter(|&s| self.leq(x, s)).collect();
        above.iter().copied().find(|&m| above.iter().all(|&o| self.leq(m, o)))
    }

    pub fn least_upper_bound(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        let ubs: Vec<ElementId> = self
            .elements()
            .filter(|&u| self.leq(a, u) && self.leq(b, u))
            .collect();
        ubs.iter().copied().find(|&m| ubs.iter().all(|&o| self.leq(m, o)))
    }

    pub fn greatest_lower_bound(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        let lbs: Vec<ElementId> = self
            .elements()
            .filter(|&u| self.leq(u, a) && self.leq(u, b))
            .collect();
        lbs.iter().copied().find(|&m| lbs.iter().all(|&o| self.leq(o, m)))
    }

    pub fn is_join_semilattice(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| self.least_upper_bound(a, b).is_some())
        })
    }

    pub fn is_meet_semilattice(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| self.greatest_lower_bound(a, b).is_some())
        })
    }

    pub fn is_lattice(&self) -> bool {
        !self.is_empty() && self.is_join_semilattice() && self.is_meet_semilattice()
    }

    /// Breadth in the self-dual tuple form: the least `n >= 1` such that no
    /// tuples `x_0..x_n`, `y_0..y_n` satisfy `x_i <= y_j` exactly for all
    /// `i != j`. The empty poset gets breadth 0.
    ///
    /// In any violating pair of tuples the `x_i` are pairwise incomparable
    /// (if `x_i <= x_j`, `i != j`, then `x_i <= x_j <= y_i`), and the choice
    /// of each `y_i` is independent of the others, so the search enumerates
    /// antichains of size `n + 1` and checks the `n + 1` witness sets.
    pub fn breadth(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        let mut n = 1;
        loop {
            if self.breadth_violation(n).is_none() {
                return n;
            }
            n += 1;
        }
    }

    /// A witness that breadth exceeds `n`, if one exists.
    pub fn breadth_violation(&self, n: usize) -> Option<BreadthViolation> {
        let mut chosen = Vec::with_capacity(n + 1);
        self.violation_search(0, n + 1, &mut chosen)
    }

    fn violation_search(
        &self,
        start: usize,
        need: usize,
        chosen: &mut Vec<ElementId>,
    ) -> Option<BreadthViolation> {
        if need == 0 {
            return self.complete_violation(chosen);
        }
        for c in start..self.len() {
            let c = ElementId(c);
            if chosen.iter().all(|&a| !self.comparable(a, c)) {
                chosen.push(c);
                if let Some(v) = self.violation_search(c.0 + 1, need - 1, chosen) {
                    return Some(v);
                }
                chosen.pop();
            }
        }
        None
    }

    fn complete_violation(&self, xs: &[ElementId]) -> Option<BreadthViolation> {
        let mut ys = Vec::with_capacity(xs.len());
        for (i, &xi) in xs.iter().enumerate() {
            let y = self.elements().find(|&y| {
                !self.leq(xi, y)
                    && xs
                        .iter()
                        .enumerate()
                        .all(|(j, &xj)| j == i || self.leq(xj, y))
            })?;
            ys.push(y);
        }
        Some(BreadthViolation { xs: xs.to_vec(), ys })
    }

    /// Breadth in the join form, defined on join-semilattices only: the least
    /// `n >= 1` such that every subset of size `n + 1` contains an element
    /// below the join of the others. `None` when some pair has no join.
    pub fn join_breadth(&self) -> Option<usize> {
        if !self.is_join_semilattice() {
            return None;
        }
        if self.is_empty() {
            return Some(0);
        }
        let mut n = 1;
        loop {
            if !self.join_reduction_fails(n) {
                return Some(n);
            }
            n += 1;
        }
    }

    /// Is there a subset of size `n + 1` in which no element is below the
    /// join of the others?
    fn join_reduction_fails(&self, n: usize) -> bool {
        let mut chosen = Vec::with_capacity(n + 1);
        self.join_fail_search(0, n + 1, &mut chosen)
    }

    fn join_fail_search(&self, start: usize, need: usize, chosen: &mut Vec<ElementId>) -> bool {
        if need == 0 {
            return (0..chosen.len()).all(|i| {
                let rest = chosen
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &x)| x);
                let join = self.join_of_unchecked(rest);
                !self.leq(chosen[i], join)
            });
        }
        for c in start..self.len() {
            chosen.push(ElementId(c));
            if self.join_fail_search(c + 1, need - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn join_of_unchecked<I: IntoIterator<Item = ElementId>>(&self, items: I) -> ElementId {
        let mut it = items.into_iter();
        let first = it.next().expect("nonempty");
        it.fold(first, |acc, x| {
            self.least_upper_bound(acc, x).expect("join exists")
        })
    }
}

fn transitive_close(leq: &mut [bool], n: usize) {
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
}

/// Is `map` (a total function given as `map[x] = image of x`) an order
/// embedding of `src` into `dst`?
pub fn is_order_embedding(src: &FinitePoset, dst: &FinitePoset, map: &[ElementId]) -> bool {
    if map.len() != src.len() || map.iter().any(|m| m.0 >= dst.len()) {
        return false;
    }
    src.elements().all(|a| {
        src.elements().all(|b| src.leq(a, b) == dst.leq(map[a.0], map[b.0]))
    })
}

/// Order embedding whose image is a lower subset of `dst`.
pub fn is_lower_embedding(src: &FinitePoset, dst: &FinitePoset, map: &[ElementId]) -> bool {
    if !is_order_embedding(src, dst, map) {
        return false;
    }
    let image: BTreeSet<ElementId> = map.iter().copied().collect();
    dst.is_lower_subset(&image)
}

/// Strong amalgam check: `p` is covered by `a` and `b`, `i` is their
/// intersection, and every comparability between an `a`-side and a `b`-side
/// element is witnessed through `i`.
pub fn is_strong_amalgam(
    p: &FinitePoset,
    a: &BTreeSet<ElementId>,
    b: &BTreeSet<ElementId>,
    i: &BTreeSet<ElementId>,
) -> bool {
    let inter: BTreeSet<ElementId> = a.intersection(b).copied().collect();
    if &inter != i {
        return false;
    }
    if a.union(b).count() != p.len() {
        return false;
    }
    for &x in a {
        for &y in b {
            if p.leq(x, y) && !i.iter().any(|&w| p.leq(x, w) && p.leq(w, y)) {
                return false;
            }
            if p.leq(y, x) && !i.iter().any(|&w| p.leq(y, w) && p.leq(w, x)) {
                return false;
            }
        }
    }
    true
}
