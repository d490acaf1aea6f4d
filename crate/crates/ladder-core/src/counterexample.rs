//! A family of finite lattices in which a canonical breadth-two ladder
//! admits no cofinal meet-closed extension past a marked chain.
//!
//! The lattice of depth `N` stacks `N` copies of an eight-element gadget
//! between a bottom and a two-point cap. Gadget `j` carries a triple
//! `x_j, y_j, z_j` whose pairwise meets `m_j, p_j, q_j` and triple meet
//! `r_j` are four further distinct elements, and a marked chain
//! `t_0 < … < t_{N-1}` rides alongside with `t_j ∧ x_{j+1} = z_j`. The
//! canonical ladder keeps only `m_j, x_j, y_j` from each gadget and has
//! breadth two, but any meet-closed family containing it together with
//! some `t_j` swallows `z_j` and with it a configuration of breadth three.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::ladders::is_k_ladder;
use crate::lattice::FiniteLattice;
use crate::poset::ElementId;
use crate::poset::FinitePoset;
use crate::{Error, Result};

/// A depth-`N` stacked-gadget lattice with its canonical ladder.
///
/// `xs` has `depth + 1` entries (the extra one is the cap of the ideal);
/// all other element vectors have `depth` entries, indexed by gadget.
#[derive(Clone, Debug)]
pub struct CounterexampleFixture {
    /// The ambient lattice, `8 * depth + 3` elements.
    pub lattice: FiniteLattice,
    /// Number of stacked gadgets.
    pub depth: usize,
    /// The principal ideal below `xs[depth]`: everything except the marked
    /// chain and the top.
    pub ideal: BTreeSet<ElementId>,
    /// The canonical breadth-two ladder `{m_j, x_j, y_j} ∪ {xs[depth]}`.
    pub ladder: BTreeSet<ElementId>,
    /// Triple members `x_j`, plus the ideal cap as last entry.
    pub xs: Vec<ElementId>,
    /// Triple members `y_j`.
    pub ys: Vec<ElementId>,
    /// Triple members `z_j = t_j ∧ xs[j + 1]`.
    pub zs: Vec<ElementId>,
    /// The marked chain `t_0 < … < t_{depth-1}`.
    pub ts: Vec<ElementId>,
    /// Pairwise meets `m_j = x_j ∧ y_j`.
    pub ms: Vec<ElementId>,
    /// Pairwise meets `p_j = x_j ∧ z_j`.
    pub ps: Vec<ElementId>,
    /// Pairwise meets `q_j = y_j ∧ z_j`.
    pub qs: Vec<ElementId>,
    /// Triple meets `r_j = x_j ∧ y_j ∧ z_j`.
    pub rs: Vec<ElementId>,
    /// Greatest element, covering both the ideal cap and the marked chain.
    pub top: ElementId,
}

impl CounterexampleFixture {
    /// The breadth-violation tuples of gadget `j`: lower tuple
    /// `(q_j, p_j, m_j)`, upper tuple `(x_j, y_j, z_j)`, related by
    /// `lower[i] <= upper[k]` exactly for `i != k`.
    pub fn block_tuple(&self, j: usize) -> ([ElementId; 3], [ElementId; 3]) {
        (
            [self.qs[j], self.ps[j], self.ms[j]],
            [self.xs[j], self.ys[j], self.zs[j]],
        )
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

/// Builds the depth-`depth` fixture and verifies its advertised structure:
/// the gadget meet identities, the ideal below the cap, and that the
/// canonical ladder is a meet-closed breadth-two 2-ladder.
pub fn build_counterexample(depth: usize) -> Result<CounterexampleFixture> {
    if depth == 0 {
        return Err(Error::BadParameter {
            what: String::from("counterexample depth must be at least 1"),
        });
    }

    let mut labels: Vec<String> = Vec::new();
    let mut grab = |label: String, sink: &mut Vec<usize>| {
        sink.push(labels.len());
        labels.push(label);
    };
    let mut bot_v = Vec::new();
    let (mut rs, mut ps, mut qs, mut ms) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let (mut xs, mut ys, mut zs, mut ts) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let mut top_v = Vec::new();
    grab(String::from("bot"), &mut bot_v);
    for j in 0..depth {
        grab(format!("r{j}"), &mut rs);
        grab(format!("p{j}"), &mut ps);
        grab(format!("q{j}"), &mut qs);
        grab(format!("m{j}"), &mut ms);
        grab(format!("x{j}"), &mut xs);
        grab(format!("y{j}"), &mut ys);
        grab(format!("z{j}"), &mut zs);
        grab(format!("t{j}"), &mut ts);
    }
    grab(format!("x{depth}"), &mut xs);
    grab(String::from("top"), &mut top_v);
    let (bot, top) = (bot_v[0], top_v[0]);

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    pairs.push((bot, rs[0]));
    for j in 0..depth {
        pairs.push((rs[j], ps[j]));
        pairs.push((rs[j], qs[j]));
        pairs.push((rs[j], ms[j]));
        pairs.push((ps[j], xs[j]));
        pairs.push((ms[j], xs[j]));
        pairs.push((qs[j], ys[j]));
        pairs.push((ms[j], ys[j]));
        pairs.push((ps[j], zs[j]));
        pairs.push((qs[j], zs[j]));
        pairs.push((zs[j], ts[j]));
        if j > 0 {
            pairs.push((ts[j - 1], ts[j]));
        }
        let above = if j + 1 < depth { rs[j + 1] } else { xs[depth] };
        pairs.push((xs[j], above));
        pairs.push((ys[j], above));
        pairs.push((zs[j], above));
    }
    pairs.push((xs[depth], top));
    pairs.push((ts[depth - 1], top));

    let poset = FinitePoset::from_relations(labels, &pairs)?;
    let lattice = FiniteLattice::new(poset)?;
    let id = ElementId::new;
    let fix = CounterexampleFixture {
        depth,
        ideal: lattice
            .elements()
            .filter(|e| !ts.contains(&e.index()) && e.index() != top)
            .collect(),
        ladder: ms
            .iter()
            .chain(xs.iter())
            .chain(ys.iter())
            .map(|&i| id(i))
            .collect(),
        xs: xs.iter().map(|&i| id(i)).collect(),
        ys: ys.iter().map(|&i| id(i)).collect(),
        zs: zs.iter().map(|&i| id(i)).collect(),
        ts: ts.iter().map(|&i| id(i)).collect(),
        ms: ms.iter().map(|&i| id(i)).collect(),
        ps: ps.iter().map(|&i| id(i)).collect(),
        qs: qs.iter().map(|&i| id(i)).collect(),
        rs: rs.iter().map(|&i| id(i)).collect(),
        top: id(top),
        lattice,
    };

    for j in 0..depth {
        let (x, y, z) = (fix.xs[j], fix.ys[j], fix.zs[j]);
        let l = &fix.lattice;
        check(
            l.meet(x, y) == fix.ms[j],
            "counterexample-meets",
            format!("x{j} and y{j} should meet in m{j}"),
        )?;
        check(
            l.meet(x, z) == fix.ps[j],
            "counterexample-meets",
            format!("x{j} and z{j} should meet in p{j}"),
        )?;
        check(
            l.meet(y, z) == fix.qs[j],
            "counterexample-meets",
            format!("y{j} and z{j} should meet in q{j}"),
        )?;
        check(
            l.meet(fix.ms[j], z) == fix.rs[j],
            "counterexample-meets",
            format!("the triple meet of gadget {j} should be r{j}"),
        )?;
        check(
            l.meet(fix.ts[j], fix.xs[j + 1]) == fix.zs[j],
            "counterexample-meets",
            format!("t{j} and the next x should meet in z{j}"),
        )?;
    }

    check(
        fix.lattice.poset().is_ideal(&fix.ideal),
        "counterexample-ideal",
        String::from("the unmarked part should be an ideal"),
    )?;
    check(
        fix.ideal.iter().all(|&v| fix.lattice.leq(v, fix.xs[depth])),
        "counterexample-ideal",
        String::from("the ideal should be principal below the cap"),
    )?;

    check(
        fix.lattice.is_meet_closed(&fix.ladder),
        "counterexample-ladder",
        String::from("the canonical ladder should be meet-closed"),
    )?;
    let (ladder_poset, _) = fix.lattice.poset().induced(&fix.ladder);
    let breadth = ladder_poset.breadth();
    let ladder_lattice = FiniteLattice::new(ladder_poset)?;
    check(
        is_k_ladder(&ladder_lattice, 2),
        "counterexample-ladder",
        String::from("the canonical ladder should be a 2-ladder"),
    )?;
    check(
        breadth == 2,
        "counterexample-ladder",
        format!("the canonical ladder should have breadth 2, found {breadth}"),
    )?;

    Ok(fix)
}

/// A meet-closed cofinal extension of the canonical ladder that contains a
/// marked element, together with the breadth-violation tuples it swallowed.
#[derive(Clone, Debug)]
pub struct ExtensionWitness {
    /// Index of the lowest marked element in the extension.
    pub block: usize,
    /// The extension itself.
    pub extension: BTreeSet<ElementId>,
    /// Lower violation tuple `(q, p, m)` of that gadget.
    pub xs: [ElementId; 3],
    /// Upper violation tuple `(x, y, z)` of that gadget.
    pub ys: [ElementId; 3],
}

/// Result of sweeping all meet-closed cofinal extensions of the canonical
/// ladder.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Number of meet-closed cofinal supersets enumerated.
    pub candidates: usize,
    /// How many of them contain a marked element.
    pub marked: usize,
    /// Whether the enumeration was cut short by the cap.
    pub cap_hit: bool,
    /// Whether every marked candidate exhibited its breadth-three tuples.
    pub all_exceed_breadth_two: bool,
    /// The first marked candidate, with its verified tuples.
    pub witness: Option<ExtensionWitness>,
    /// The first marked candidate whose tuples failed verification, if any.
    pub counterexample: Option<BTreeSet<ElementId>>,
}

/// Enumerates every meet-closed superset of the canonical ladder that
/// contains the top (hence is cofinal), at most `cap` of them, and checks
/// that each one containing a marked element also contains breadth-three
/// violation tuples.
pub fn search_breadth2_extension(fix: &CounterexampleFixture, cap: usize) -> SearchOutcome {
    let mut base = fix.ladder.clone();
    base.insert(fix.top);
    let (candidates, cap_hit) = fix.lattice.meet_closed_supersets(&base, cap);
    let mut out = SearchOutcome {
        candidates: candidates.len(),
        marked: 0,
        cap_hit,
        all_exceed_breadth_two: true,
        witness: None,
        counterexample: None,
    };
    for cand in &candidates {
        let Some(block) = (0..fix.depth).find(|&j| cand.contains(&fix.ts[j])) else {
            continue;
        };
        out.marked += 1;
        let (lower, upper) = fix.block_tuple(block);
        let inside = lower.iter().chain(upper.iter()).all(|e| cand.contains(e));
        let pattern = (0..3).all(|i| {
            (0..3).all(|k| fix.lattice.leq(lower[i], upper[k]) == (i != k))
        });
        if inside && pattern {
            if out.witness.is_none() {
                out.witness = Some(ExtensionWitness {
                    block,
                    extension: cand.clone(),
                    xs: lower,
                    ys: upper,
                });
            }
        } else {
            out.all_exceed_breadth_two = false;
            if out.counterexample.is_none() {
                out.counterexample = Some(cand.clone());
            }
        }
    }
    if out.marked == 0 {
        out.all_exceed_breadth_two = false;
    }
    out
}
