#![allow(dead_code)]

use ladder_core::lattice::FiniteLattice;
use ladder_core::morass::{base_lattice, BaseKind};
use ladder_core::normed::NormedLattice;
use ladder_core::poset::{ElementId, FinitePoset};

pub fn id(i: usize) -> ElementId {
    ElementId::new(i)
}

/// The four-element diamond lattice with subset labels.
pub fn diamond() -> FiniteLattice {
    FiniteLattice::new(base_lattice(BaseKind::Paper).unwrap().poset().clone()).unwrap()
}

/// The diamond normed 0, 1, 2, 2.
pub fn paper_diamond() -> NormedLattice {
    base_lattice(BaseKind::Paper).unwrap()
}

/// The diamond normed 0, 1, 1, 1.
pub fn renormed_diamond() -> NormedLattice {
    base_lattice(BaseKind::Renormed).unwrap()
}

/// The two-element chain normed 0, 1.
pub fn normed_two_chain() -> NormedLattice {
    NormedLattice::new(
        FiniteLattice::new(FinitePoset::chain(2)).unwrap(),
        vec![0, 1],
    )
    .unwrap()
}

/// Element lookup by label, panicking on a miss.
pub fn by(p: &FinitePoset, label: &str) -> ElementId {
    p.by_label(label)
        .unwrap_or_else(|| panic!("no element labeled {label}"))
}
