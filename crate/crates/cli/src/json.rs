//! JSON renderings of core values. Objects are `serde_json::Map`, which is
//! ordered by key, so output is byte-stable.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use raag_core::artin::{OMin, Parity, PrimKind, SemiprojectivityVerdict};
use raag_core::graphs::{canonical_form, to_graph6, MAX_CANONICAL_N};
use raag_core::kgraph::{Check, KTheoryReport, RealizationTarget, VerificationReport};
use raag_core::{
    AlgebraNormalForm, ComponentClass, DirectedGraph, ExtNat, FgAbelianGroup, GraphAlgebraVerdict, InvariantProfile,
    KTheorySixTerm, PrimSpaceSummary, UndirectedGraph,
};

/// Counts render as integers, `ω` as `"inf"`; finite values past `u64`
/// render as decimal strings.
pub fn extnat(e: ExtNat) -> Value {
    match e {
        ExtNat::Finite(k) => u64::try_from(k).map_or_else(|_| Value::String(k.to_string()), Value::from),
        ExtNat::Omega => Value::from("inf"),
    }
}

pub fn bigint(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

pub fn u128_value(x: u128) -> Value {
    extnat(ExtNat::Finite(x))
}

pub fn group(g: &FgAbelianGroup) -> Value {
    let torsion: Vec<Value> = g.torsion.iter().map(|d| bigint(&BigInt::from(d.clone()))).collect();
    json!({ "free_rank": g.free_rank, "torsion": torsion, "display": g.to_string() })
}

pub fn profile(p: &InvariantProfile) -> Value {
    let n: Map<String, Value> = p.n_entries().map(|(k, v)| (k.to_string(), extnat(v))).collect();
    json!({ "t": extnat(p.t()), "o": extnat(p.o()), "N": n })
}

pub fn normal_form(nf: &AlgebraNormalForm) -> Value {
    let m: Map<String, Value> = nf.m.iter().map(|(k, v)| (k.to_string(), extnat(*v))).collect();
    let omin = match nf.omin {
        OMin::Zero => "0",
        OMin::One => "1",
        OMin::Irrelevant => "irrelevant",
    };
    let parity = match nf.parity {
        Parity::Even => "even",
        Parity::Odd => "odd",
        Parity::Undefined => "undefined",
    };
    json!({ "t": extnat(nf.t), "z": extnat(nf.z), "m": m, "omin": omin, "parity": parity })
}

pub fn prim_space(s: &PrimSpaceSummary) -> Value {
    let factors: Vec<Value> = s
        .factors
        .iter()
        .map(|(kind, count)| json!({ "kind": prim_kind(*kind), "count": extnat(*count) }))
        .collect();
    json!({
        "factors": factors,
        "factor_count": extnat(s.factor_count),
        "minimal_ideals": s.minimal_ideals.map_or(Value::Null, u128_value),
    })
}

fn prim_kind(k: PrimKind) -> &'static str {
    k.as_str()
}

pub fn class_name(c: ComponentClass) -> String {
    match c {
        ComponentClass::Toeplitz => "T".into(),
        ComponentClass::InfiniteComp => "O_inf".into(),
        ComponentClass::FiniteExt(0) => "E_1^0".into(),
        ComponentClass::FiniteExt(chi) => format!("E_{}^{}1", 1 + chi.unsigned_abs(), if chi < 0 { '-' } else { '+' }),
    }
}

pub fn six_term(class: ComponentClass, count: ExtNat, k: &KTheorySixTerm) -> Value {
    let opt = |g: &Option<FgAbelianGroup>| g.as_ref().map_or(Value::Null, group);
    json!({
        "class": class_name(class),
        "count": extnat(count),
        "label": k.label,
        "k0": group(&k.k0_full),
        "k1": group(&k.k1_full),
        "unit_generates": k.unit_generates,
        "k0_ideal": opt(&k.k0_ideal),
        "k0_quotient": opt(&k.k0_quotient),
        "k1_quotient": opt(&k.k1_quotient),
        "index": k.index_value.map_or(Value::Null, Value::from),
    })
}

pub fn graph_algebra(v: GraphAlgebraVerdict) -> Value {
    json!({ "holds": v.holds(), "clause": v.clause() })
}

pub fn semiprojectivity(v: SemiprojectivityVerdict) -> Value {
    json!({ "verdict": v.verdict.as_str(), "clause": v.clause })
}

/// Canonical graph6 string, when the graph is small enough.
pub fn canonical_graph6(g: &UndirectedGraph) -> Option<String> {
    (g.n() <= MAX_CANONICAL_N).then(|| {
        String::from_utf8(canonical_form(g).expect("size checked")).expect("graph6 is ASCII")
    })
}

pub fn graph(g: &UndirectedGraph) -> Value {
    let edges: Vec<Value> = g.edges().into_iter().map(|(u, v)| json!([u, v])).collect();
    json!({
        "n": g.n(),
        "edges": edges,
        "labels": g.labels().map_or(Value::Null, |l| json!(l)),
        "graph6": to_graph6(g).map_or(Value::Null, Value::from),
        "canonical_graph6": canonical_graph6(g).map_or(Value::Null, Value::from),
    })
}

pub fn digraph(g: &DirectedGraph) -> Value {
    let edges: Vec<Value> = g.edges().map(|((s, t), m)| json!([s, t, m])).collect();
    let infinite: Vec<usize> = (0..g.n()).filter(|&v| g.is_infinite_emitter(v)).collect();
    json!({ "n": g.n(), "edges": edges, "infinite_emitters": infinite })
}

fn coords(c: &[BigInt]) -> Value {
    Value::Array(c.iter().map(bigint).collect())
}

pub fn ktheory(k: &KTheoryReport) -> Value {
    json!({
        "k0": group(&k.k0),
        "k1": group(&k.k1()),
        "unit_class": coords(&k.unit_class),
        "vertex_classes": k.vertex_classes.iter().map(|c| coords(c)).collect::<Vec<_>>(),
        "regular_vertices": k.regular_count,
        "relation_rank": k.relation_rank,
    })
}

pub fn target(t: RealizationTarget) -> String {
    match t {
        RealizationTarget::Scalars => "C".into(),
        RealizationTarget::Component(c) => class_name(c),
    }
}

fn check(c: &Check) -> Value {
    json!({ "name": c.name, "passed": c.passed, "detail": c.detail, "informational": c.informational })
}

pub fn verification(r: &VerificationReport) -> Value {
    json!({
        "target": target(r.target),
        "passed": r.passed(),
        "kappa": r.kappa.as_ref().map_or(Value::Null, bigint),
        "checks": r.checks.iter().map(check).collect::<Vec<_>>(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
