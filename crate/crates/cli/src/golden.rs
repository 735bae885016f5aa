//! Frozen census of the five-vertex graphs, keyed by canonical graph6.
//!
//! The data file was produced by brute-force oracles (exhaustive
//! relabeling, subset-enumeration Euler characteristics, and the
//! graph-algebra / semiprojectivity clauses applied by hand) and is
//! re-derived by a test on every run.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::commands::ClassRow;
use crate::formats::{parse_profile_spec, write_profile_spec};

pub const FIVE_VERTEX_DATA: &str = include_str!("../data/five_vertex_classes.json");

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct GoldenClass {
    pub profile: String,
    pub graph_algebra: bool,
    pub semiprojectivity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct GoldenTable {
    pub n: usize,
    pub class_count: usize,
    pub distinct_algebras: usize,
    pub graph_algebra_count: usize,
    pub semiprojectivity: BTreeMap<String, usize>,
    pub classes: BTreeMap<String, GoldenClass>,
}

pub fn five_vertex_table() -> GoldenTable {
    serde_json::from_str(FIVE_VERTEX_DATA).expect("embedded golden data is valid")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenCheck {
    pub mismatches: Vec<String>,
}

impl GoldenCheck {
    pub fn matched(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({ "matched": self.matched(), "mismatches": self.mismatches })
    }
}

/// Compares an enumeration against the frozen table; only `n = 5` has one.
pub fn check(n: usize, rows: &[ClassRow], distinct_algebras: usize) -> Result<GoldenCheck, String> {
    let table = five_vertex_table();
    if n != table.n {
        return Err(format!("golden data exists only for n = {}", table.n));
    }
    let mut mismatches = Vec::new();
    let mut push = |what: &str, expected: String, found: String| {
        if expected != found {
            mismatches.push(format!("{what}: expected {expected}, found {found}"));
        }
    };
    push("class count", table.class_count.to_string(), rows.len().to_string());
    push("distinct algebras", table.distinct_algebras.to_string(), distinct_algebras.to_string());
    push(
        "graph algebras",
        table.graph_algebra_count.to_string(),
        rows.iter().filter(|r| r.graph_algebra).count().to_string(),
    );
    let mut tally: BTreeMap<String, usize> = table.semiprojectivity.keys().map(|k| (k.clone(), 0)).collect();
    for r in rows {
        *tally.entry(r.semiprojectivity.as_str().to_string()).or_default() += 1;
    }
    push("semiprojectivity", format!("{:?}", table.semiprojectivity), format!("{tally:?}"));
    for r in rows {
        match table.classes.get(&r.graph6) {
            None => mismatches.push(format!("{}: class not in golden data", r.graph6)),
            Some(g) => {
                let expected = parse_profile_spec(&g.profile).map_err(|e| format!("golden profile '{}': {e}", g.profile))?;
                if expected != r.profile {
                    mismatches.push(format!("{}: profile expected {}, found {}", r.graph6, g.profile, write_profile_spec(&r.profile)));
                }
                if g.graph_algebra != r.graph_algebra {
                    mismatches.push(format!("{}: graph_algebra expected {}", r.graph6, g.graph_algebra));
                }
                if g.semiprojectivity != r.semiprojectivity.as_str() {
                    mismatches.push(format!("{}: semiprojectivity expected {}", r.graph6, g.semiprojectivity));
                }
            }
        }
    }
    Ok(GoldenCheck { mismatches })
}
