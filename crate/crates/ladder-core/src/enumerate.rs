//! Exhaustive poset enumeration at desk scale and a catalogue of small
//! named lattices, both used as oracle inputs.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;
use crate::{Error, Result};

/// Largest element count `naturally_labeled_posets` will enumerate.
pub const MAX_ENUMERATION: usize = 6;

/// All naturally labeled posets on `n` elements: the partial orders whose
/// strict comparabilities all point upward in the labeling. Every finite
/// poset is isomorphic to one of these (relabel along a linear extension),
/// so isomorphism-invariant sweeps may range over them alone.
pub fn naturally_labeled_posets(n: usize) -> Result<Vec<FinitePoset>> {
    if n > MAX_ENUMERATION {
        return Err(Error::BadParameter {
            what: format!("enumeration of {n}-element posets exceeds desk scale"),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    'mask: for mask in 0..1u32 << pairs.len() {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                leq[i * n + j] = true;
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i * n + j] {
                    for k in j + 1..n {
                        if leq[j * n + k] && !leq[i * n + k] {
                            continue 'mask;
                        }
                    }
                }
            }
        }
        let labels = (0..n).map(|i| format!("e{i}")).collect::<Vec<String>>();
        out.push(FinitePoset::from_leq_matrix(labels, leq)?);
    }
    Ok(out)
}

/// The five-element modular nondistributive lattice: three incomparable
/// atoms under a common top.
pub fn m3() -> Result<FiniteLattice> {
    let labels = ["0", "a", "b", "c", "1"]
        .iter()
        .map(|s| String::from(*s))
        .collect();
    let poset =
        FinitePoset::from_relations(labels, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])?;
    FiniteLattice::new(poset)
}

/// The five-element nonmodular lattice: a three-step chain next to a
/// single incomparable point.
pub fn n5() -> Result<FiniteLattice> {
    let labels = ["0", "a", "b", "c", "1"]
        .iter()
        .map(|s| String::from(*s))
        .collect();
    let poset =
        FinitePoset::from_relations(labels, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])?;
    FiniteLattice::new(poset)
}

/// The lattice of subsets of a `k`-point set, ordered by containment.
pub fn boolean(k: usize) -> Result<FiniteLattice> {
    if k > 5 {
        return Err(Error::BadParameter {
            what: format!("a {k}-fold subset lattice exceeds desk scale"),
        });
    }
    let n = 1usize << k;
    let mut labels = Vec::with_capacity(n);
    for mask in 0..n {
        let mut body = String::new();
        for x in 0..k {
            if mask & (1 << x) != 0 {
                if !body.is_empty() {
                    body.push(',');
                }
                body.push_str(&format!("{x}"));
            }
        }
        labels.push(format!("{{{body}}}"));
    }
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = a & b == a;
        }
    }
    let poset = FinitePoset::from_leq_matrix(labels, leq)?;
    FiniteLattice::new(poset)
}

/// The product of an `a`-chain and a `b`-chain.
pub fn grid(a: usize, b: usize) -> Result<FiniteLattice> {
    FiniteLattice::new(FinitePoset::chain(a).product(&FinitePoset::chain(b)))
}

/// An `n`-element chain as a lattice.
pub fn chain_lattice(n: usize) -> Result<FiniteLattice> {
    FiniteLattice::new(FinitePoset::chain(n))
}
