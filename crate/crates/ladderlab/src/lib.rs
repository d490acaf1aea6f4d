//! Workbench companion to `ladder-core`: file formats, named fixtures,
//! seeded random corpora, the acceptance battery, and the building blocks
//! of the command-line tool.
//!
//! `ladder-core` holds the mathematics and never touches the filesystem;
//! this crate adds JSON and DOT serialization for finite normed lattices,
//! a corpus of worked examples, and end-to-end checks with time budgets.

pub mod accept;
pub mod dot;
pub mod failure;
pub mod fixtures;
pub mod json;
