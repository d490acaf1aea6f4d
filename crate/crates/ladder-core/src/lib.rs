//! Finite-scale lattice combinatorics built around *ladders*: lower finite
//! lattices in which every element has at most `k` lower covers.
//!
//! The crate provides, at fully verifiable desk scale:
//!
//! * [`poset`] — dense-matrix finite posets, covers, ideals, cofinal subsets,
//!   products, strong amalgams, and the two brute-force breadth computations;
//! * [`lattice`] — validated finite lattices with meet/join tables, atoms,
//!   atomisticity;
//! * [`normed`] — lattices normed by a max-compatible map into the naturals,
//!   levels, projections, and norms built from enumerations or ideal chains;
//! * [`ladders`] — `k`-ladder checks, preskeletons and skeletons, skeletons
//!   generated by cofinal chains, and cofinal copies inside products;
//! * [`forcing`] — the poset of finite preskeletons under reverse containment,
//!   dense-set extension, centredness, and deterministic generic filters;
//! * [`amalgam`] — the three-ladder amalgamation step: gluing a lattice to a
//!   copy of itself over an ideal and topping the result with a two-ladder of
//!   chain/projection pairs, with every structural conclusion re-verified;
//! * [`growth`] — towers of two- and three-ladders grown by repeated atom
//!   insertion or skeleton doubling;
//! * [`morass`] — finite truncations of the simplified gap-1 morass apparatus
//!   and the coherent ladder systems they drive, plus finite direct limits;
//! * [`closure`] — breadth-bounded join-semilattices generated by closure
//!   operators with no free sets;
//! * [`counterexample`] — the finite replay of the two-ladder subsemilattice
//!   that admits no breadth-2 cofinal meet-closed extension;
//! * [`enumerate`] — exhaustive small-poset corpora for oracle tests.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI live in
//! the companion crate `ladderlab`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod amalgam;
pub mod closure;
pub mod counterexample;
pub mod enumerate;
mod error;
pub mod forcing;
pub mod growth;
pub mod ladders;
pub mod lattice;
pub mod morass;
pub mod normed;
pub mod poset;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
