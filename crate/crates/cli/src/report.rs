//! Shared report vocabulary: the output schema tag, JSON shapes for
//! algebra elements, and the helpers behind the aligned text format.
//!
//! Reports are plain `Serialize` structs, so the JSON field order is the
//! declaration order and two runs over the same input and seed emit
//! byte-identical documents.

use std::fmt::{Display, Write as _};

use ba_kernel::{Algebra, Element};
use serde::Serialize;

pub const REPORT_SCHEMA: &str = "bvm-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct ElementJson {
    pub atoms: Vec<usize>,
    pub show: String,
}

pub fn element_json(algebra: &Algebra, e: Element) -> ElementJson {
    ElementJson {
        atoms: e.atom_indices(),
        show: algebra.show(e),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraJson {
    pub atoms: usize,
    pub labels: Vec<String>,
}

pub fn algebra_json(a: &Algebra) -> AlgebraJson {
    AlgebraJson {
        atoms: a.atom_count(),
        labels: (0..a.atom_count()).map(|i| a.label(i).to_string()).collect(),
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CheckSummary {
    pub total: usize,
    pub failed: usize,
}

pub fn mark(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

/// One aligned `label: value` line, indented under the current section.
pub fn kv(out: &mut String, label: &str, value: impl Display) {
    let _ = writeln!(out, "  {label:<26} {value}");
}

pub fn section(out: &mut String, title: &str) {
    let _ = writeln!(out, "{title}");
}
