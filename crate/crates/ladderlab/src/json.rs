//! JSON interchange for posets, lattices, and normed lattices.
//!
//! The document schema is:
//!
//! ```json
//! {
//!   "elements": ["{}", "{0}", "{1}", "{0,1}"],
//!   "le": [["{}", "{0}"], ["{}", "{1}"], ["{}", "{0,1}"],
//!          ["{0}", "{0,1}"], ["{1}", "{0,1}"]],
//!   "norm": {"{}": 0, "{0}": 1, "{1}": 2, "{0,1}": 2}
//! }
//! ```
//!
//! `elements` lists the labels in id order; `le` lists generating pairs of
//! the strict order by label (the loader closes them reflexively and
//! transitively and rejects antisymmetry violations); `norm` is optional.
//! Emission always writes the full strict relation sorted by id pairs, so a
//! load/emit round trip is byte-identical.

use crate::failure::{Failure, LabResult};
use ladder_core::lattice::FiniteLattice;
use ladder_core::normed::NormedLattice;
use ladder_core::poset::FinitePoset;
use serde_json::{json, Map, Value};

/// A parsed document: the poset plus the optional norm table (by id).
#[derive(Clone, Debug)]
pub struct Document {
    pub poset: FinitePoset,
    pub norm: Option<Vec<usize>>,
}

impl Document {
    /// The poset as a lattice, if it is one.
    pub fn lattice(&self) -> LabResult<FiniteLattice> {
        Ok(FiniteLattice::new(self.poset.clone())?)
    }

    /// The document as a normed lattice; requires the `norm` entry.
    pub fn normed(&self) -> LabResult<NormedLattice> {
        let norm = self
            .norm
            .clone()
            .ok_or_else(|| Failure::Input(String::from("document carries no \"norm\" entry")))?;
        Ok(NormedLattice::new(self.lattice()?, norm)?)
    }
}

/// Serializes a poset (and optional norm) to the document value.
pub fn document_to_value(p: &FinitePoset, norm: Option<&[usize]>) -> Value {
    let elements: Vec<Value> = p.elements().map(|x| json!(p.label(x))).collect();
    let mut le: Vec<Value> = Vec::new();
    for a in p.elements() {
        for b in p.elements() {
            if a != b && p.leq(a, b) {
                le.push(json!([p.label(a), p.label(b)]));
            }
        }
    }
    let mut doc = Map::new();
    doc.insert(String::from("elements"), Value::Array(elements));
    doc.insert(String::from("le"), Value::Array(le));
    if let Some(norm) = norm {
        let mut table = Map::new();
        for x in p.elements() {
            table.insert(p.label(x).to_string(), json!(norm[x.index()]));
        }
        doc.insert(String::from("norm"), Value::Object(table));
    }
    Value::Object(doc)
}

pub fn poset_to_value(p: &FinitePoset) -> Value {
    document_to_value(p, None)
}

pub fn normed_to_value(k: &NormedLattice) -> Value {
    document_to_value(k.poset(), Some(k.norms()))
}

/// Renders a document value to its canonical byte form.
pub fn to_canonical_string(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("document values serialize");
    out.push('\n');
    out
}

fn string_array<'v>(v: &'v Value, key: &str) -> LabResult<&'v Vec<Value>> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::Input(format!("document needs an array field {key:?}")))
}

/// Parses a document value into a poset and optional norm table.
pub fn document_from_value(v: &Value) -> LabResult<Document> {
    let raw_elements = string_array(v, "elements")?;
    let mut labels: Vec<String> = Vec::with_capacity(raw_elements.len());
    for e in raw_elements {
        let label = e
            .as_str()
            .ok_or_else(|| Failure::Input(String::from("element labels must be strings")))?;
        labels.push(label.to_string());
    }
    let index_of = |label: &str| -> LabResult<usize> {
        labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Failure::Input(format!("\"le\" names unknown element {label:?}")))
    };

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for entry in string_array(v, "le")? {
        let pair = entry
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Failure::Input(String::from("\"le\" entries must be label pairs")))?;
        let a = pair[0]
            .as_str()
            .ok_or_else(|| Failure::Input(String::from("\"le\" entries must be label pairs")))?;
        let b = pair[1]
            .as_str()
            .ok_or_else(|| Failure::Input(String::from("\"le\" entries must be label pairs")))?;
        pairs.push((index_of(a)?, index_of(b)?));
    }
    let poset = FinitePoset::from_relations(labels.clone(), &pairs)?;

    let norm = match v.get("norm") {
        None => None,
        Some(Value::Object(table)) => {
            let mut norm = vec![0usize; labels.len()];
            if table.len() != labels.len() {
                return Err(Failure::Input(format!(
                    "\"norm\" has {} entries for {} elements",
                    table.len(),
                    labels.len()
                )));
            }
            for (label, value) in table {
                let value = value.as_u64().ok_or_else(|| {
                    Failure::Input(format!("norm of {label:?} must be a nonnegative integer"))
                })?;
                norm[index_of(label)?] = value as usize;
            }
            Some(norm)
        }
        Some(_) => {
            return Err(Failure::Input(String::from(
                "\"norm\" must be an object mapping labels to values",
            )))
        }
    };
    Ok(Document { poset, norm })
}

/// Parses a document from JSON text.
pub fn document_from_str(text: &str) -> LabResult<Document> {
    let value: Value = serde_json::from_str(text)?;
    document_from_value(&value)
}
