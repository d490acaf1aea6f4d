//! Algebraic closure operators seeded by a below-max map, and the
//! bounded-breadth join-semilattices of their closed sets.
//!
//! The seed assigns to every `(n+1)`-subset of a linearly ordered ground
//! set the set of points below its maximum; the induced operator closes a
//! set under all seeds of its `(n+1)`-subsets. Closed sets ordered by
//! containment form an atomistic join-semilattice with zero whose breadth
//! is at most `n + 1`, and breadth bounds can be certified on generators
//! alone.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::lattice::{generates_by_joins, FiniteLattice};
use crate::poset::{ElementId, FinitePoset};
use crate::{Error, Result};

/// Largest ground set the exhaustive invariant checks will sweep.
pub const MAX_GROUND: usize = 12;

/// A seed table: one value set per `(n+1)`-subset of the ground set.
pub type SeedMap = BTreeMap<BTreeSet<usize>, BTreeSet<usize>>;

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

/// All `k`-element subsets of `items`, in lexicographic order.
fn k_subsets<T: Copy + Ord>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn recurse<T: Copy + Ord>(items: &[T], k: usize, start: usize, head: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if head.len() == k {
            out.push(head.clone());
            return;
        }
        let need = k - head.len();
        for i in start..=items.len().saturating_sub(need) {
            head.push(items[i]);
            recurse(items, k, i + 1, head, out);
            head.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        recurse(items, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

fn mask_of(set: &BTreeSet<usize>) -> usize {
    set.iter().fold(0, |acc, &x| acc | (1 << x))
}

fn set_of(mask: usize, m: usize) -> BTreeSet<usize> {
    (0..m).filter(|&x| mask & (1 << x) != 0).collect()
}

/// The below-max seed on `(n+1)`-subsets of `0..m`: each subset maps to
/// everything below its maximum. Verified to satisfy the no-free-set
/// condition: every `(n+2)`-subset has a point seeded by the rest (its
/// minimum always works).
pub fn f0_linear(m: usize, n: usize) -> Result<SeedMap> {
    if n == 0 || m <= n + 1 {
        return Err(Error::BadParameter {
            what: format!("ground size {m} must exceed n + 1 = {} with n positive", n + 1),
        });
    }
    let ground: Vec<usize> = (0..m).collect();
    let mut seed = SeedMap::new();
    for subset in k_subsets(&ground, n + 1) {
        let max = *subset.last().expect("subsets are nonempty");
        seed.insert(subset.into_iter().collect(), (0..max).collect());
    }
    for u in k_subsets(&ground, n + 2) {
        let witnessed = u.iter().any(|&xi| {
            let rest: BTreeSet<usize> = u.iter().copied().filter(|&v| v != xi).collect();
            seed[&rest].contains(&xi)
        });
        check(witnessed, "no-free-set", format!("no point of {u:?} is seeded by the rest"))?;
    }
    Ok(seed)
}

/// A verified algebraic closure operator on subsets of `0..ground`.
#[derive(Clone, Debug)]
pub struct ClosureOperator {
    ground: usize,
    n: usize,
    seed: SeedMap,
}

impl ClosureOperator {
    /// Size of the ground set.
    pub fn ground(&self) -> usize {
        self.ground
    }

    /// The subset-size parameter: closure adds seeds of `(n+1)`-subsets.
    pub fn n(&self) -> usize {
        self.n
    }

    /// One closure step: the set plus the seeds of all its
    /// `(n+1)`-subsets.
    pub fn step(&self, x: &BTreeSet<usize>) -> BTreeSet<usize> {
        let items: Vec<usize> = x.iter().copied().collect();
        let mut out = x.clone();
        for subset in k_subsets(&items, self.n + 1) {
            out.extend(self.seed[&subset.into_iter().collect()].iter().copied());
        }
        out
    }

    /// The closure: steps iterated to their fixpoint.
    pub fn close(&self, x: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut current = x.clone();
        loop {
            let next = self.step(&current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    fn close_all(&self) -> Vec<BTreeSet<usize>> {
        (0..1usize << self.ground)
            .map(|mask| self.close(&set_of(mask, self.ground)))
            .collect()
    }
}

/// Builds the closure operator induced by a seed table and verifies every
/// operator invariant exhaustively: extensive, monotone, idempotent,
/// identity on small sets, and no-free-set.
pub fn closure_from_f0(seed: &SeedMap, m: usize, n: usize) -> Result<ClosureOperator> {
    if n == 0 {
        return Err(Error::BadParameter {
            what: String::from("the subset-size parameter must be positive"),
        });
    }
    if m > MAX_GROUND {
        return Err(Error::BadParameter {
            what: format!("ground size {m} exceeds the exhaustive-check bound {MAX_GROUND}"),
        });
    }
    let ground: Vec<usize> = (0..m).collect();
    for subset in k_subsets(&ground, n + 1) {
        let key: BTreeSet<usize> = subset.into_iter().collect();
        let value = seed.get(&key).ok_or(Error::BadParameter {
            what: format!("seed table is missing {key:?}"),
        })?;
        if value.iter().any(|&v| v >= m) {
            return Err(Error::BadParameter {
                what: format!("seed of {key:?} leaves the ground set"),
            });
        }
    }
    let operator = ClosureOperator {
        ground: m,
        n,
        seed: seed.clone(),
    };
    let closures = operator.close_all();
    for mask in 0..1usize << m {
        let x = set_of(mask, m);
        let closed = &closures[mask];
        check(
            x.is_subset(closed),
            "closure-extensive",
            format!("closure of {x:?} drops a point"),
        )?;
        check(
            x.len() > n || *closed == x,
            "closure-small",
            format!("{x:?} has at most {n} points but is not closed"),
        )?;
        check(
            closures[mask_of(closed)] == *closed,
            "closure-idempotent",
            format!("closure of {x:?} is not closed"),
        )?;
        for y in 0..m {
            if mask & (1 << y) == 0 {
                check(
                    closed.is_subset(&closures[mask | (1 << y)]),
                    "closure-monotone",
                    format!("adding {y} to {x:?} loses closure points"),
                )?;
            }
        }
    }
    for u in k_subsets(&ground, n + 2) {
        let witnessed = u.iter().any(|&xi| {
            let rest: BTreeSet<usize> = u.iter().copied().filter(|&v| v != xi).collect();
            closures[mask_of(&rest)].contains(&xi)
        });
        check(
            witnessed,
            "closure-no-free",
            format!("no point of {u:?} is in the closure of the rest"),
        )?;
    }
    Ok(operator)
}

/// The semilattice of closed sets: the lattice, the closed set behind each
/// element, and the singleton generators.
#[derive(Clone, Debug)]
pub struct ClosureSemilattice {
    pub lattice: FiniteLattice,
    /// Closed set behind each element id.
    pub sets: Vec<BTreeSet<usize>>,
    /// Elements naming the singleton closed sets.
    pub generators: BTreeSet<ElementId>,
}

fn set_label(set: &BTreeSet<usize>) -> String {
    let mut body = String::new();
    for (i, x) in set.iter().enumerate() {
        if i > 0 {
            body.push(',');
        }
        body.push_str(&format!("{x}"));
    }
    format!("{{{body}}}")
}

/// Collects every closed set, orders them by containment, and verifies the
/// structure: zero is the empty set, joins are closures of unions, the
/// atoms are exactly the singletons (so the result is atomistic and the
/// singletons generate), and the generator criterion certifies breadth at
/// most `n + 1`.
pub fn build_semilattice(cl: &ClosureOperator) -> Result<ClosureSemilattice> {
    let closed: BTreeSet<BTreeSet<usize>> = cl.close_all().into_iter().collect();
    let sets: Vec<BTreeSet<usize>> = closed.into_iter().collect();
    let labels: Vec<String> = sets.iter().map(set_label).collect();
    let mut pairs = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i != j && a.is_subset(b) {
                pairs.push((i, j));
            }
        }
    }
    let poset = FinitePoset::from_relations(labels, &pairs)?;
    let lattice = FiniteLattice::new(poset)?;

    check(
        sets[lattice.bottom().index()].is_empty(),
        "closure-zero",
        String::from("the least closed set is not empty"),
    )?;
    for a in lattice.elements() {
        for b in lattice.elements() {
            let union: BTreeSet<usize> = sets[a.index()].union(&sets[b.index()]).copied().collect();
            check(
                sets[lattice.join(a, b).index()] == cl.close(&union),
                "closure-join",
                format!(
                    "join of {} and {} is not the closure of their union",
                    lattice.label(a),
                    lattice.label(b)
                ),
            )?;
        }
    }
    let generators: BTreeSet<ElementId> = lattice
        .elements()
        .filter(|&x| sets[x.index()].len() == 1)
        .collect();
    check(
        generators.len() == cl.ground(),
        "closure-atomistic",
        String::from("some singleton is not closed"),
    )?;
    let atoms: BTreeSet<ElementId> = lattice.atoms().into_iter().collect();
    check(
        lattice.is_atomistic() && atoms == generators,
        "closure-atomistic",
        String::from("the atoms are not exactly the singletons"),
    )?;
    check(
        generates_by_joins(lattice.poset(), &generators),
        "closure-generates",
        String::from("the singletons do not generate"),
    )?;
    check(
        breadth_at_most_via_generators(lattice.poset(), &generators, cl.n() + 1)?,
        "closure-breadth",
        format!("generator criterion fails at {}", cl.n() + 1),
    )?;
    Ok(ClosureSemilattice {
        lattice,
        sets,
        generators,
    })
}

/// The generator-level breadth criterion: among any `n + 1` generators,
/// some generator lies below the join of the others. For a generating set
/// of a join-semilattice this is equivalent to breadth at most `n`.
pub fn breadth_at_most_via_generators(
    p: &FinitePoset,
    gens: &BTreeSet<ElementId>,
    n: usize,
) -> Result<bool> {
    if n == 0 {
        return Err(Error::BadParameter {
            what: String::from("the breadth bound must be positive"),
        });
    }
    if !generates_by_joins(p, gens) {
        return Err(Error::BadParameter {
            what: String::from("the given set does not generate the join-semilattice"),
        });
    }
    let gens: Vec<ElementId> = gens.iter().copied().collect();
    for subset in k_subsets(&gens, n + 1) {
        let reducible = (0..subset.len()).any(|i| {
            let mut rest = subset
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x);
            let first = rest.next().expect("n >= 1");
            let join = rest.fold(first, |acc, g| {
                p.least_upper_bound(acc, g).expect("joins exist")
            });
            p.leq(subset[i], join)
        });
        if !reducible {
            return Ok(false);
        }
    }
    Ok(true)
}
