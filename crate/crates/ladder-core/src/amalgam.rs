//! Amalgamation of a normed 3-ladder with a renormed copy of itself.
//!
//! Given a finite transitive normed 3-ladder `K`, a cut `0 < delta < theta`
//! and a cofinal chain `C` whose least element `o` has norm `delta`, this
//! module builds a lattice containing `K` as an ideal together with a copy
//! `f[K]` glued along the ideal `I = {x : norm(x) < delta}`, capped by the
//! pairs `(c, u)` with `c` in `C` and `u` a projection of `c` of norm at
//! least `delta`. The construction stretches the norm range from `theta` to
//! `theta + (theta - delta)` while keeping every element at three lower
//! covers or fewer. Every advertised property — the strong-amalgam shape,
//! the closed join formulas, the norm block ranges, the cover budget — is
//! verified on every run rather than assumed.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::ladders::is_k_ladder;
use crate::lattice::FiniteLattice;
use crate::normed::NormedLattice;
use crate::poset::{is_lower_embedding, is_strong_amalgam, ElementId, FinitePoset};
use crate::{Error, Result};

/// The norm reindexing: identity below the cut, shifted past `theta` above
/// it, so `xi` maps to `theta + (xi - delta)` when `delta <= xi`.
pub fn tau(delta: usize, theta: usize, xi: usize) -> usize {
    assert!(delta <= theta, "cut beyond range bound");
    if xi < delta {
        xi
    } else {
        theta + (xi - delta)
    }
}

/// A cap pair `(c, u)`: a chain element together with one of its
/// projections of norm at least the cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FPair {
    pub c: ElementId,
    pub u: ElementId,
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

/// Validated input to `amalgamate`: the base lattice, the cut, and a
/// cofinal chain sorted ascending whose least element has norm `delta`.
#[derive(Clone, Debug)]
pub struct AmalgamInput {
    k: NormedLattice,
    delta: usize,
    chain: Vec<ElementId>,
}

impl AmalgamInput {
    /// Validates the preconditions: `k` transitive and a 3-ladder,
    /// `0 < delta < theta`, `chain` a repeat-free cofinal chain whose least
    /// element has norm exactly `delta`.
    pub fn new(k: NormedLattice, delta: usize, chain: &[ElementId]) -> Result<Self> {
        if !k.is_transitive() {
            return Err(Error::BadParameter {
                what: String::from("base norm range must be an initial segment"),
            });
        }
        if !is_k_ladder(k.lattice(), 3) {
            return Err(Error::BadParameter {
                what: String::from("base must be a 3-ladder"),
            });
        }
        let theta = k.range_bound();
        if delta == 0 || delta >= theta {
            return Err(Error::BadParameter {
                what: format!("cut {delta} must lie strictly between 0 and {theta}"),
            });
        }
        let set: BTreeSet<ElementId> = chain.iter().copied().collect();
        if chain.is_empty() || set.len() != chain.len() {
            return Err(Error::BadParameter {
                what: String::from("chain must be nonempty and repeat-free"),
            });
        }
        for &a in &set {
            for &b in &set {
                if !k.poset().comparable(a, b) {
                    return Err(Error::NotAChain {
                        a: k.label(a).into(),
                        b: k.label(b).into(),
                    });
                }
            }
        }
        if let Some(missed) = k.poset().cofinality_gap(&set) {
            return Err(Error::NotCofinal {
                missed: k.label(missed).into(),
            });
        }
        let mut sorted: Vec<ElementId> = chain.to_vec();
        sorted.sort_unstable_by(|&a, &b| {
            if a == b {
                core::cmp::Ordering::Equal
            } else if k.lattice().leq(a, b) {
                core::cmp::Ordering::Less
            } else {
                core::cmp::Ordering::Greater
            }
        });
        let o = sorted[0];
        if k.norm(o) != delta {
            return Err(Error::BadParameter {
                what: format!(
                    "least chain element has norm {}, expected the cut {delta}",
                    k.norm(o)
                ),
            });
        }
        Ok(AmalgamInput {
            k,
            delta,
            chain: sorted,
        })
    }

    pub fn base(&self) -> &NormedLattice {
        &self.k
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// The chain, sorted ascending.
    pub fn chain(&self) -> &[ElementId] {
        &self.chain
    }

    /// The least chain element `o`.
    pub fn least(&self) -> ElementId {
        self.chain[0]
    }

    pub fn theta(&self) -> usize {
        self.k.range_bound()
    }

    /// The glue ideal `I`: everything of norm below the cut.
    pub fn ideal_below_cut(&self) -> BTreeSet<ElementId> {
        self.k
            .elements()
            .filter(|&x| self.k.norm(x) < self.delta)
            .collect()
    }

    /// Least chain element above `x`.
    pub fn chain_above(&self, x: ElementId) -> ElementId {
        self.chain
            .iter()
            .copied()
            .find(|&c| self.k.lattice().leq(x, c))
            .expect("chain is cofinal")
    }

    /// All cap pairs, sorted by id. Verifies that each pair agrees with its
    /// chain element at the cut and that `(o, o)` is the least pair.
    pub fn pairs(&self) -> Result<Vec<FPair>> {
        let k = &self.k;
        let mut out: Vec<FPair> = Vec::new();
        for &c in &self.chain {
            for u in k.elements() {
                if k.norm(u) >= self.delta && k.tri_below(u, c) {
                    check(
                        k.projection(c, self.delta)? == k.projection(u, self.delta)?,
                        "amalgam-pair",
                        format!(
                            "pair ({}, {}) disagrees with its chain element at the cut",
                            k.label(c),
                            k.label(u)
                        ),
                    )?;
                    out.push(FPair { c, u });
                }
            }
        }
        out.sort_unstable();
        let o = self.least();
        check(
            out.contains(&FPair { c: o, u: o }),
            "amalgam-pair",
            String::from("the least pair (o, o) is missing"),
        )?;
        for p in &out {
            check(
                k.lattice().leq(o, p.c) && k.lattice().leq(o, p.u),
                "amalgam-pair",
                format!(
                    "(o, o) is not below ({}, {})",
                    k.label(p.c),
                    k.label(p.u)
                ),
            )?;
        }
        Ok(out)
    }

    /// The least cap pair above `(x, y)` in the product order, computed by
    /// the closed form `(c, c_(delta v norm(y)))` with
    /// `c = chain_above(x) v chain_above(y)`, and cross-checked against the
    /// brute-force minimum over all pairs.
    pub fn f_least(&self, x: ElementId, y: ElementId) -> Result<FPair> {
        let k = &self.k;
        let (cx, cy) = (self.chain_above(x), self.chain_above(y));
        let c = if k.lattice().leq(cx, cy) { cy } else { cx };
        let u = k.projection(c, self.delta.max(k.norm(y)))?;
        let candidate = FPair { c, u };
        let above: Vec<FPair> = self
            .pairs()?
            .into_iter()
            .filter(|p| k.lattice().leq(x, p.c) && k.lattice().leq(y, p.u))
            .collect();
        check(
            above.contains(&candidate),
            "f-least",
            format!(
                "closed form ({}, {}) is not a pair above the arguments",
                k.label(c),
                k.label(u)
            ),
        )?;
        for p in &above {
            check(
                k.lattice().leq(c, p.c) && k.lattice().leq(u, p.u),
                "f-least",
                format!(
                    "closed form ({}, {}) is not below ({}, {})",
                    k.label(c),
                    k.label(u),
                    k.label(p.c),
                    k.label(p.u)
                ),
            )?;
        }
        Ok(candidate)
    }
}

/// Where an id of the amalgam lives: the base, the copy, or the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Base(ElementId),
    Copy(ElementId),
    Pair(usize),
}

/// The finished amalgam with its embedding and block data.
#[derive(Clone, Debug)]
pub struct AmalgamResult {
    /// The base lattice, as passed in.
    pub base: NormedLattice,
    /// The amalgamated normed lattice; base ids embed identically.
    pub kbar: NormedLattice,
    /// The copy embedding, indexed by base id. Identity on the glue ideal.
    pub f: Vec<ElementId>,
    /// Cap pairs in base-id coordinates, sorted.
    pub pairs: Vec<FPair>,
    /// Amalgam ids of the cap pairs, parallel to `pairs`.
    pub pair_ids: Vec<ElementId>,
    /// The input chain (base ids, ascending).
    pub chain: Vec<ElementId>,
    pub delta: usize,
    pub theta: usize,
    pub theta_prime: usize,
}

impl AmalgamResult {
    /// Ids of the base block.
    pub fn base_block(&self) -> BTreeSet<ElementId> {
        (0..self.base.len()).map(ElementId::new).collect()
    }

    /// Ids of the copied block `f[K] \ I` (fresh ids only).
    pub fn copy_block(&self) -> BTreeSet<ElementId> {
        self.f
            .iter()
            .copied()
            .filter(|id| id.index() >= self.base.len())
            .collect()
    }

    /// Ids of the whole copy `f[K]`, glue ideal included.
    pub fn copy_image(&self) -> BTreeSet<ElementId> {
        self.f.iter().copied().collect()
    }

    /// Ids of the cap block.
    pub fn pair_block(&self) -> BTreeSet<ElementId> {
        self.pair_ids.iter().copied().collect()
    }

    /// Amalgam id of a cap pair.
    pub fn pair_id(&self, p: FPair) -> Option<ElementId> {
        self.pairs
            .iter()
            .position(|q| *q == p)
            .map(|i| self.pair_ids[i])
    }
}

/// Builds the amalgam and verifies all of its advertised structure: the
/// order agrees with the closed relation rules, the norm is a compatible
/// extension with the advertised block ranges, the base sits as an ideal
/// under a lower embedding, the result is a strong amalgam of base and copy
/// over the glue ideal and a 3-ladder, every cap pair is the join of its
/// two legs, the four closed join formulas agree with brute force, and the
/// cap block is a cofinal meet-closed 2-ladder in the product.
pub fn amalgamate(input: &AmalgamInput) -> Result<AmalgamResult> {
    let k = input.base();
    let n = k.len();
    let delta = input.delta();
    let theta = input.theta();
    let theta_prime = theta + (theta - delta);
    let ideal = input.ideal_below_cut();
    let pairs = input.pairs()?;

    // Layout: base ids first, then fresh copies of the non-glue part, then
    // the cap pairs.
    let mut labels: Vec<String> = k.poset().labels().to_vec();
    // Iterated amalgams inherit copy and pair labels from earlier rounds;
    // number a preferred name when it is already taken.
    let fresh = |labels: &mut Vec<String>, name: String| {
        let mut candidate = name.clone();
        let mut tick = 1usize;
        while labels.contains(&candidate) {
            tick += 1;
            candidate = format!("{name}#{tick}");
        }
        labels.push(candidate);
    };
    let mut f: Vec<ElementId> = Vec::with_capacity(n);
    for x in k.elements() {
        if ideal.contains(&x) {
            f.push(x);
        } else {
            f.push(ElementId::new(labels.len()));
            fresh(&mut labels, format!("f({})", k.label(x)));
        }
    }
    let mut pair_ids: Vec<ElementId> = Vec::with_capacity(pairs.len());
    for p in &pairs {
        pair_ids.push(ElementId::new(labels.len()));
        fresh(&mut labels, format!("({},{})", k.label(p.c), k.label(p.u)));
    }
    let total = labels.len();

    let mut slots: Vec<Slot> = Vec::with_capacity(total);
    for x in k.elements() {
        slots.push(Slot::Base(x));
    }
    for x in k.elements() {
        if !ideal.contains(&x) {
            slots.push(Slot::Copy(x));
        }
    }
    for (i, _) in pairs.iter().enumerate() {
        slots.push(Slot::Pair(i));
    }

    // Cross-relation ambiguity guard: for glue elements the base-side and
    // copy-side rules into a cap pair must agree.
    for &x in &ideal {
        for p in &pairs {
            check(
                k.lattice().leq(x, p.c) == k.lattice().leq(x, p.u),
                "amalgam-ambiguity",
                format!(
                    "glue element {} relates differently to ({}, {}) through its two roles",
                    k.label(x),
                    k.label(p.c),
                    k.label(p.u)
                ),
            )?;
        }
    }

    // The closed relation rules, materialized as a full expected matrix.
    let cut_proj: Vec<ElementId> = k
        .elements()
        .map(|x| k.projection(x, delta - 1))
        .collect::<Result<_>>()?;
    let expected = |i: usize, j: usize| -> bool {
        match (slots[i], slots[j]) {
            (Slot::Base(x), Slot::Base(y)) => k.lattice().leq(x, y),
            (Slot::Base(x), Slot::Copy(y)) => k.lattice().leq(x, cut_proj[y.index()]),
            (Slot::Copy(_), Slot::Base(_)) => false,
            (Slot::Copy(x), Slot::Copy(y)) => k.lattice().leq(x, y),
            (Slot::Base(x), Slot::Pair(p)) => k.lattice().leq(x, pairs[p].c),
            (Slot::Copy(x), Slot::Pair(p)) => k.lattice().leq(x, pairs[p].u),
            (Slot::Pair(_), Slot::Base(_)) | (Slot::Pair(_), Slot::Copy(_)) => false,
            (Slot::Pair(p), Slot::Pair(q)) => {
                k.lattice().leq(pairs[p].c, pairs[q].c) && k.lattice().leq(pairs[p].u, pairs[q].u)
            }
        }
    };
    let mut relation: Vec<(usize, usize)> = Vec::new();
    for i in 0..total {
        for j in 0..total {
            if i != j && expected(i, j) {
                relation.push((i, j));
            }
        }
    }
    let poset = FinitePoset::from_relations(labels, &relation)?;
    for i in 0..total {
        for j in 0..total {
            let closed = poset.leq(ElementId::new(i), ElementId::new(j));
            let stated = i == j || expected(i, j);
            check(
                closed == stated,
                "amalgam-order",
                format!(
                    "transitive closure disagrees with the closed rules at ({}, {})",
                    poset.label(ElementId::new(i)),
                    poset.label(ElementId::new(j))
                ),
            )?;
        }
    }
    let lattice = FiniteLattice::new(poset)?;

    let mut norms: Vec<usize> = Vec::with_capacity(total);
    for slot in &slots {
        norms.push(match *slot {
            Slot::Base(x) => k.norm(x),
            Slot::Copy(x) => tau(delta, theta, k.norm(x)),
            Slot::Pair(p) => tau(delta, theta, k.norm(pairs[p].u)),
        });
    }
    let kbar = NormedLattice::new(lattice, norms)?;

    let result = AmalgamResult {
        base: k.clone(),
        kbar,
        f,
        pairs,
        pair_ids,
        chain: input.chain().to_vec(),
        delta,
        theta,
        theta_prime,
    };
    verify_amalgam(input, &result)?;
    Ok(result)
}

/// All post-construction checks, split out so the verification burden is
/// visible in one place.
fn verify_amalgam(input: &AmalgamInput, result: &AmalgamResult) -> Result<()> {
    let k = input.base();
    let kbar = &result.kbar;
    let (delta, theta, theta_prime) = (result.delta, result.theta, result.theta_prime);

    // Norm range: transitive with bound theta', and the advertised norm
    // sets per block.
    check(
        kbar.is_transitive() && kbar.range_bound() == theta_prime,
        "amalgam-range",
        format!(
            "expected a transitive range of {theta_prime}, found bound {}",
            kbar.range_bound()
        ),
    )?;
    let norm_set = |ids: &BTreeSet<ElementId>| -> BTreeSet<usize> {
        ids.iter().map(|&x| kbar.norm(x)).collect()
    };
    let copy_expected: BTreeSet<usize> = (0..delta).chain(theta..theta_prime).collect();
    let cap_expected: BTreeSet<usize> = (theta..theta_prime).collect();
    check(
        norm_set(&result.base_block()) == (0..theta).collect::<BTreeSet<usize>>(),
        "amalgam-range",
        String::from("base block norms must cover the original range"),
    )?;
    check(
        norm_set(&result.copy_image()) == copy_expected,
        "amalgam-range",
        String::from("copy block norms must cover the cut and the stretched tail"),
    )?;
    check(
        norm_set(&result.pair_block()) == cap_expected,
        "amalgam-range",
        String::from("cap block norms must cover exactly the stretched tail"),
    )?;

    // The base is an ideal; the copy map is a lower embedding, identity on
    // the glue ideal, with the reindexed norm.
    check(
        kbar.poset().is_ideal(&result.base_block()),
        "amalgam-ideal",
        String::from("base block must be an ideal of the amalgam"),
    )?;
    check(
        is_lower_embedding(k.poset(), kbar.poset(), &result.f),
        "amalgam-embedding",
        String::from("copy map must be a lower embedding"),
    )?;
    for x in k.elements() {
        if k.norm(x) < delta {
            check(
                result.f[x.index()] == x,
                "amalgam-embedding",
                format!("copy map must fix glue element {}", k.label(x)),
            )?;
        }
        check(
            kbar.norm(result.f[x.index()]) == tau(delta, theta, k.norm(x)),
            "amalgam-norm",
            format!("copy of {} must carry the reindexed norm", k.label(x)),
        )?;
    }

    // Strong amalgam of base and copy over the glue ideal, checked on the
    // induced subposet (base and copy ids form a prefix, so ids carry over).
    let base_and_copy: BTreeSet<ElementId> = result
        .base_block()
        .union(&result.copy_image())
        .copied()
        .collect();
    let (sub, back) = kbar.poset().induced(&base_and_copy);
    debug_assert!(back.iter().enumerate().all(|(i, id)| id.index() == i));
    let glue: BTreeSet<ElementId> = input.ideal_below_cut();
    check(
        is_strong_amalgam(&sub, &result.base_block(), &result.copy_image(), &glue),
        "amalgam-strong",
        String::from("base and copy must amalgamate strongly over the glue ideal"),
    )?;

    // Every cap pair is the join of its two legs, so every element of the
    // amalgam is a join of two elements of base-plus-copy.
    for (i, p) in result.pairs.iter().enumerate() {
        check(
            kbar.lattice().join(p.c, result.f[p.u.index()]) == result.pair_ids[i],
            "amalgam-legs",
            format!(
                "cap pair ({}, {}) must be the join of its legs",
                k.label(p.c),
                k.label(p.u)
            ),
        )?;
    }

    // 3-ladder.
    check(
        is_k_ladder(kbar.lattice(), 3),
        "amalgam-3ladder",
        String::from("amalgam must be a 3-ladder"),
    )?;

    // The four closed join formulas against brute force.
    let expect_pair = |c: ElementId, xi: usize| -> Result<ElementId> {
        let u = k.projection(c, xi)?;
        result.pair_id(FPair { c, u }).ok_or(Error::Verification {
            check: "amalgam-joins",
            detail: format!(
                "formula produced ({}, {}), which is not a cap pair",
                k.label(c),
                k.label(u)
            ),
        })
    };
    let chain_join = |a: ElementId, b: ElementId| -> ElementId {
        if k.lattice().leq(a, b) {
            b
        } else {
            a
        }
    };
    for x0 in k.elements() {
        for x1 in k.elements() {
            if k.norm(x0) < delta || k.norm(x1) < delta {
                continue;
            }
            let c = chain_join(input.chain_above(x0), input.chain_above(x1));
            let formula = expect_pair(c, k.norm(x1))?;
            check(
                kbar.lattice().join(x0, result.f[x1.index()]) == formula,
                "amalgam-joins",
                format!(
                    "{} v f({}) disagrees with the closed formula",
                    k.label(x0),
                    k.label(x1)
                ),
            )?;
        }
    }
    for x in k.elements() {
        for (i, p) in result.pairs.iter().enumerate() {
            let c = chain_join(input.chain_above(x), p.c);
            let base_formula = expect_pair(c, k.norm(p.u))?;
            check(
                kbar.lattice().join(x, result.pair_ids[i]) == base_formula,
                "amalgam-joins",
                format!(
                    "{} v ({}, {}) disagrees with the closed formula",
                    k.label(x),
                    k.label(p.c),
                    k.label(p.u)
                ),
            )?;
            let copy_formula = expect_pair(c, k.norm(x).max(k.norm(p.u)))?;
            check(
                kbar.lattice().join(result.f[x.index()], result.pair_ids[i]) == copy_formula,
                "amalgam-joins",
                format!(
                    "f({}) v ({}, {}) disagrees with the closed formula",
                    k.label(x),
                    k.label(p.c),
                    k.label(p.u)
                ),
            )?;
        }
    }
    for (i, p) in result.pairs.iter().enumerate() {
        for (j, q) in result.pairs.iter().enumerate() {
            let c = chain_join(p.c, q.c);
            let formula = expect_pair(c, k.norm(p.u).max(k.norm(q.u)))?;
            check(
                kbar.lattice().join(result.pair_ids[i], result.pair_ids[j]) == formula,
                "amalgam-joins",
                format!(
                    "({}, {}) v ({}, {}) disagrees with the closed formula",
                    k.label(p.c),
                    k.label(p.u),
                    k.label(q.c),
                    k.label(q.u)
                ),
            )?;
        }
    }

    // The cap block is a cofinal meet-closed 2-ladder in the product of the
    // base with itself.
    let product = k.poset().product(k.poset());
    let image: BTreeSet<ElementId> = result
        .pairs
        .iter()
        .map(|p| k.poset().product_id(k.poset(), p.c, p.u))
        .collect();
    let product_lattice = FiniteLattice::new(product)?;
    check(
        product_lattice.is_meet_closed(&image),
        "amalgam-cap",
        String::from("cap pairs must be meet-closed in the product"),
    )?;
    check(
        product_lattice.poset().is_cofinal(&image),
        "amalgam-cap",
        String::from("cap pairs must be cofinal in the product"),
    )?;
    let (cap_poset, _) = product_lattice.poset().induced(&image);
    let cap_lattice = FiniteLattice::new(cap_poset)?;
    check(
        is_k_ladder(&cap_lattice, 2),
        "amalgam-cap",
        String::from("cap pairs must form a 2-ladder"),
    )?;

    Ok(())
}

/// One cap pair whose lower covers differ from the classified expectation.
#[derive(Clone, Debug)]
pub struct CoverMismatch {
    pub pair: ElementId,
    pub expected: BTreeSet<ElementId>,
    pub actual: BTreeSet<ElementId>,
}

/// Outcome of classifying the lower covers of every cap pair.
#[derive(Clone, Debug)]
pub struct CoverReport {
    /// Cap pairs examined.
    pub checked_pairs: usize,
    /// Pairs whose cover set failed to match; empty means the
    /// classification held everywhere.
    pub mismatches: Vec<CoverMismatch>,
    /// Largest lower-cover count over the whole amalgam.
    pub max_lower_covers: usize,
}

impl CoverReport {
    pub fn clean(&self) -> bool {
        self.mismatches.is_empty() && self.max_lower_covers <= 3
    }
}

/// Checks, for every cap pair, that its lower covers are exactly the
/// maximal elements of the three-case classification: `{o, f(o)}` for the
/// least pair; `{c, (c_pred, c_pred_(delta)), f(u)}` when `c` exceeds `o`
/// but `u` sits on the cut; `{(c, u_drop), (c_pred, c_pred_(norm u)), f(u)}`
/// when `u` sits above the cut, where `u_drop` is the next projection of
/// `u` down and `c_pred` the chain predecessor of `c`.
pub fn verify_lower_covers(result: &AmalgamResult) -> Result<CoverReport> {
    let k = &result.base;
    let kbar = &result.kbar;
    let o = result.chain[0];
    let mut report = CoverReport {
        checked_pairs: 0,
        mismatches: Vec::new(),
        max_lower_covers: 0,
    };
    for x in kbar.elements() {
        let count = kbar.poset().lower_covers(x).len();
        report.max_lower_covers = report.max_lower_covers.max(count);
    }
    let pair_of = |c: ElementId, xi: usize| -> Result<ElementId> {
        let u = k.projection(c, xi)?;
        result.pair_id(FPair { c, u }).ok_or(Error::Verification {
            check: "amalgam-covers",
            detail: format!(
                "classified cover ({}, norm {xi}) is not a cap pair",
                k.label(c)
            ),
        })
    };
    for (i, p) in result.pairs.iter().enumerate() {
        report.checked_pairs += 1;
        let id = result.pair_ids[i];
        let mut listed: BTreeSet<ElementId> = BTreeSet::new();
        if p.c == o {
            listed.insert(o);
            listed.insert(result.f[o.index()]);
        } else {
            let pos = result
                .chain
                .iter()
                .position(|&c| c == p.c)
                .expect("pair chain element comes from the chain");
            let pred = result.chain[pos - 1];
            if k.norm(p.u) == result.delta {
                listed.insert(p.c);
                listed.insert(pair_of(pred, result.delta)?);
            } else {
                let drop = k.projection(p.u, k.norm(p.u) - 1)?;
                listed.insert(result.pair_id(FPair { c: p.c, u: drop }).ok_or(
                    Error::Verification {
                        check: "amalgam-covers",
                        detail: format!(
                            "dropped pair ({}, {}) is not a cap pair",
                            k.label(p.c),
                            k.label(drop)
                        ),
                    },
                )?);
                listed.insert(pair_of(pred, k.norm(p.u))?);
            }
            listed.insert(result.f[p.u.index()]);
        }
        let expected: BTreeSet<ElementId> = listed
            .iter()
            .copied()
            .filter(|&a| !listed.iter().any(|&b| a != b && kbar.lattice().leq(a, b)))
            .collect();
        let actual: BTreeSet<ElementId> =
            kbar.poset().lower_covers(id).into_iter().collect();
        if expected != actual {
            report.mismatches.push(CoverMismatch {
                pair: id,
                expected,
                actual,
            });
        }
    }
    Ok(report)
}
