//! Graphviz output: the cover diagram of a poset, bottom-up.

use ladder_core::poset::FinitePoset;
use std::fmt::Write;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the cover relation as a `digraph`, one node per element (with the
/// norm in the node label when given) and one edge per cover, both in id
/// order so the output is stable.
pub fn poset_to_dot(p: &FinitePoset, norm: Option<&[usize]>) -> String {
    let mut out = String::from("digraph cover_diagram {\n  rankdir=BT;\n  node [shape=box];\n");
    for x in p.elements() {
        let label = match norm {
            Some(norm) => format!("{} : {}", p.label(x), norm[x.index()]),
            None => p.label(x).to_string(),
        };
        writeln!(out, "  n{} [label=\"{}\"];", x.index(), escape(&label)).unwrap();
    }
    for y in p.elements() {
        for x in p.lower_covers(y) {
            writeln!(out, "  n{} -> n{};", x.index(), y.index()).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
