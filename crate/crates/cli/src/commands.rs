//! Subcommand implementations. Each returns a [`Report`] holding both the
//! JSON document and the human rendering.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde_json::{json, Value};

use raag_core::artin::{profile_classes, profile_summary, ArtinError};
use raag_core::graphs::{enumerate_graphs_capped, LimitError, MAX_ENUMERATE_N};
use raag_core::kgraph::condition_k;
use raag_core::{
    algebra_name, clique_counts, component_ktheory, compare, decompose, decompose_oracle, euler_oracle,
    graph_ktheory, invariant_profile, is_graph_algebra, normal_form, prim_space, realize, semiprojectivity,
    sink_ideal_analysis, stable_normal_form, verify_realization, ComponentClass, DirectedGraph, EulerError,
    InvariantProfile, Realization, Semiprojectivity, UndirectedGraph,
};

use crate::formats::{parse_input, write_dgraph, write_profile_spec, Input, InputFormat, ParseError};
use crate::golden::{self, GoldenCheck};
use crate::json;

/// Outcome classes that map to distinct exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    NotRealizable,
    NotImplemented,
    GoldenMismatch,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::NotRealizable => 4,
            Status::NotImplemented => 5,
            Status::GoldenMismatch => 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub human: String,
    pub status: Status,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Input(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl From<LimitError> for CliError {
    fn from(e: LimitError) -> Self {
        CliError::Limit(e.to_string())
    }
}

impl From<ArtinError> for CliError {
    fn from(e: ArtinError) -> Self {
        CliError::Limit(e.to_string())
    }
}

impl From<EulerError> for CliError {
    fn from(e: EulerError) -> Self {
        CliError::Limit(e.to_string())
    }
}

/// Graph or profile input, as consumed by `classify`, `compare`, `realize`.
struct Subject {
    graph: Option<UndirectedGraph>,
    profile: InvariantProfile,
    warnings: Vec<String>,
}

fn subject(text: &str, format: Option<InputFormat>) -> Result<Subject, CliError> {
    let parsed = parse_input(text, format)?;
    match parsed.value {
        Input::Graph(g) => Ok(Subject { profile: invariant_profile(&g)?, graph: Some(g), warnings: parsed.warnings }),
        Input::Profile(p) => Ok(Subject { graph: None, profile: p, warnings: parsed.warnings }),
        Input::Directed(_) => Err(CliError::Input("expected an undirected graph or a profile, got a directed graph".into())),
    }
}

fn undirected(text: &str, format: Option<InputFormat>) -> Result<(UndirectedGraph, Vec<String>), CliError> {
    let parsed = parse_input(text, format)?;
    match parsed.value {
        Input::Graph(g) => Ok((g, parsed.warnings)),
        _ => Err(CliError::Input("expected an undirected graph".into())),
    }
}

fn input_echo(s: &Subject) -> Value {
    match &s.graph {
        Some(g) => json!({ "kind": "graph", "graph": json::graph(g) }),
        None => json!({ "kind": "profile", "profile_spec": write_profile_spec(&s.profile) }),
    }
}

fn components_value(g: &UndirectedGraph) -> Result<Vec<Value>, CliError> {
    decompose(g)
        .iter()
        .map(|c| {
            let class = raag_core::artin::classify_component(&c.graph)?;
            let labels: Vec<String> = c.vertices.iter().map(|&v| g.vertex_name(v)).collect();
            let chi = match class {
                ComponentClass::FiniteExt(chi) => Value::from(chi),
                _ => Value::Null,
            };
            Ok(json!({
                "vertices": c.vertices,
                "labels": labels,
                "class": json::class_name(class),
                "chi": chi,
            }))
        })
        .collect()
}

/// Per-class six-term rows with multiplicities.
fn ktheory_rows(p: &InvariantProfile) -> Vec<Value> {
    profile_classes(p)
        .into_iter()
        .map(|class| {
            let count = match class {
                ComponentClass::Toeplitz => p.t(),
                ComponentClass::FiniteExt(k) => p.n(k),
                ComponentClass::InfiniteComp => p.o(),
            };
            json::six_term(class, count, &component_ktheory(class))
        })
        .collect()
}

pub fn classify(text: &str, format: Option<InputFormat>) -> Result<Report, CliError> {
    let s = subject(text, format)?;
    let p = &s.profile;
    let nf = normal_form(p);
    let name = algebra_name(p);
    let ga = is_graph_algebra(p);
    let sp = semiprojectivity(p);
    let components = match &s.graph {
        Some(g) => Value::Array(components_value(g)?),
        None => Value::Null,
    };
    let doc = json!({
        "command": "classify",
        "input": input_echo(&s),
        "components": components,
        "profile": json::profile(p),
        "profile_summary": profile_summary(p),
        "normal_form": json::normal_form(&nf),
        "stable_normal_form": json::normal_form(&stable_normal_form(p)),
        "algebra_name": name,
        "prim_space": json::prim_space(&prim_space(p)),
        "ktheory": ktheory_rows(p),
        "graph_algebra": json::graph_algebra(ga),
        "semiprojectivity": json::semiprojectivity(sp),
        "warnings": s.warnings,
    });
    let mut h = String::new();
    if let Some(g) = &s.graph {
        let _ = writeln!(h, "graph         {} vertices, {} edges", g.n(), g.edge_count());
    }
    let _ = writeln!(h, "profile       {}", profile_summary(p));
    let _ = writeln!(h, "algebra       {name}");
    let _ = writeln!(h, "graph algebra {}", yes_no_clause(ga.holds(), ga.clause()));
    let _ = writeln!(h, "semiproj.     {} (clause {})", sp.verdict.as_str(), sp.clause);
    let ps = prim_space(p);
    let factors: Vec<String> = ps.factors.iter().map(|(k, c)| format!("{}^{c}", k.as_str())).collect();
    let _ = writeln!(h, "prim space    {}", if factors.is_empty() { "point".into() } else { factors.join(" x ") });
    for row in doc["ktheory"].as_array().into_iter().flatten() {
        let _ = writeln!(
            h,
            "K-theory      {} x{}: K0 = {}, K1 = {}, quotient K0 = {}",
            row["class"].as_str().unwrap_or(""),
            row["count"],
            row["k0"]["display"].as_str().unwrap_or(""),
            row["k1"]["display"].as_str().unwrap_or(""),
            row["k0_quotient"]["display"].as_str().unwrap_or("-"),
        );
    }
    push_warnings(&mut h, &s.warnings);
    Ok(Report { json: doc, human: h, status: Status::Ok })
}

fn yes_no_clause(holds: bool, clause: Option<u8>) -> String {
    match (holds, clause) {
        (true, Some(c)) => format!("yes (clause {c})"),
        _ => "no".into(),
    }
}

fn push_warnings(h: &mut String, warnings: &[String]) {
    for w in warnings {
        let _ = writeln!(h, "warning: {w}");
    }
}

pub fn compare_cmd(a: &str, b: &str, format: Option<InputFormat>) -> Result<Report, CliError> {
    let (sa, sb) = (subject(a, format)?, subject(b, format)?);
    let v = compare(&sa.profile, &sb.profile);
    let failed: Vec<String> = v.failed.iter().map(ToString::to_string).collect();
    let side = |s: &Subject| {
        json!({
            "input": input_echo(s),
            "profile": json::profile(&s.profile),
            "algebra_name": algebra_name(&s.profile),
            "normal_form": json::normal_form(&normal_form(&s.profile)),
            "stable_normal_form": json::normal_form(&stable_normal_form(&s.profile)),
        })
    };
    let warnings: Vec<String> = sa.warnings.iter().chain(&sb.warnings).cloned().collect();
    let doc = json!({
        "command": "compare",
        "a": side(&sa),
        "b": side(&sb),
        "isomorphic": v.isomorphic,
        "stably_isomorphic": v.stably_isomorphic,
        "failed_conditions": failed,
        "warnings": warnings,
    });
    let mut h = String::new();
    let _ = writeln!(h, "a             {} ({})", profile_summary(&sa.profile), algebra_name(&sa.profile));
    let _ = writeln!(h, "b             {} ({})", profile_summary(&sb.profile), algebra_name(&sb.profile));
    let _ = writeln!(h, "isomorphic    {}", v.isomorphic);
    let _ = writeln!(h, "stably iso.   {}", v.stably_isomorphic);
    let _ = writeln!(h, "failed        {}", if failed.is_empty() { "none".into() } else { failed.join(", ") });
    push_warnings(&mut h, &warnings);
    Ok(Report { json: doc, human: h, status: Status::Ok })
}

/// One enumerated class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRow {
    pub graph6: String,
    pub profile: InvariantProfile,
    pub graph_algebra: bool,
    pub semiprojectivity: Semiprojectivity,
}

/// Classes on `n` vertices in canonical order, refusing `n > limit`.
pub fn enumerate_classes(n: usize, limit: usize) -> Result<Vec<ClassRow>, CliError> {
    if n > limit {
        return Err(CliError::Limit(format!("enumerate {n} exceeds the limit {limit}")));
    }
    enumerate_graphs_capped(n, limit)?
        .iter()
        .map(|g| {
            let profile = invariant_profile(g)?;
            Ok(ClassRow {
                graph6: json::canonical_graph6(g).expect("enumeration sizes are canonicalizable"),
                graph_algebra: is_graph_algebra(&profile).holds(),
                semiprojectivity: semiprojectivity(&profile).verdict,
                profile,
            })
        })
        .collect()
}

pub fn default_limit() -> usize {
    MAX_ENUMERATE_N
}

pub fn enumerate(n: usize, limit: Option<usize>, check_golden: bool) -> Result<Report, CliError> {
    let rows = enumerate_classes(n, limit.unwrap_or(MAX_ENUMERATE_N))?;
    let algebras: BTreeSet<_> = rows.iter().map(|r| normal_form(&r.profile)).collect();
    let stable: BTreeSet<_> = rows.iter().map(|r| stable_normal_form(&r.profile)).collect();
    let graph_algebras = rows.iter().filter(|r| r.graph_algebra).count();
    let mut tally: BTreeMap<&str, usize> =
        [Semiprojectivity::Semiprojective, Semiprojectivity::NotSemiprojective, Semiprojectivity::Unknown]
            .iter()
            .map(|s| (s.as_str(), 0))
            .collect();
    for r in &rows {
        *tally.get_mut(r.semiprojectivity.as_str()).expect("all verdicts present") += 1;
    }
    let classes: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "graph6": r.graph6,
                "profile": write_profile_spec(&r.profile),
                "profile_summary": profile_summary(&r.profile),
                "algebra_name": algebra_name(&r.profile),
                "graph_algebra": r.graph_algebra,
                "semiprojectivity": r.semiprojectivity.as_str(),
            })
        })
        .collect();
    let golden = if check_golden {
        Some(golden::check(n, &rows, algebras.len()).map_err(CliError::Input)?)
    } else {
        None
    };
    let status = match &golden {
        Some(g) if !g.matched() => Status::GoldenMismatch,
        _ => Status::Ok,
    };
    let doc = json!({
        "command": "enumerate",
        "n": n,
        "class_count": rows.len(),
        "distinct_algebras": algebras.len(),
        "distinct_stable_algebras": stable.len(),
        "graph_algebra_count": graph_algebras,
        "semiprojectivity": tally,
        "classes": classes,
        "golden": golden.as_ref().map_or(Value::Null, GoldenCheck::to_json),
    });
    let mut h = String::new();
    for (i, r) in rows.iter().enumerate() {
        let _ = writeln!(
            h,
            "{:>4}  {:<10} {:<28} {:<34} {}{}",
            i + 1,
            r.graph6,
            profile_summary(&r.profile),
            algebra_name(&r.profile),
            r.semiprojectivity.as_str(),
            if r.graph_algebra { ", graph algebra" } else { "" },
        );
    }
    let _ = writeln!(h, "classes {}, distinct algebras {}, distinct up to stable isomorphism {}", rows.len(), algebras.len(), stable.len());
    let _ = writeln!(h, "graph algebras {graph_algebras}; semiprojectivity {tally:?}");
    if let Some(g) = &golden {
        let _ = writeln!(h, "golden data   {}", if g.matched() { "match" } else { "MISMATCH" });
        for m in &g.mismatches {
            let _ = writeln!(h, "  {m}");
        }
    }
    Ok(Report { json: doc, human: h, status })
}

pub fn realize_cmd(text: &str, format: Option<InputFormat>) -> Result<Report, CliError> {
    let s = subject(text, format)?;
    let p = &s.profile;
    let base = |status: &str| {
        json!({
            "command": "realize",
            "input": input_echo(&s),
            "profile": json::profile(p),
            "algebra_name": algebra_name(p),
            "status": status,
            "reason": Value::Null,
            "target": Value::Null,
            "dgraph": Value::Null,
            "graph": Value::Null,
            "verification": Value::Null,
            "warnings": s.warnings,
        })
    };
    let mut h = String::new();
    let _ = writeln!(h, "profile       {} ({})", profile_summary(p), algebra_name(p));
    let (doc, status) = match realize(p) {
        Realization::Realized { graph, target } => {
            let report = verify_realization(&graph, p).map_err(|e| CliError::Input(e.to_string()))?;
            let mut doc = base("Realized");
            doc["target"] = json::target(target).into();
            doc["dgraph"] = write_dgraph(&graph).into();
            doc["graph"] = json::digraph(&graph);
            doc["verification"] = json::verification(&report);
            let _ = writeln!(h, "target        {}", json::target(target));
            let _ = write!(h, "{}", write_dgraph(&graph));
            for c in &report.checks {
                let mark = if c.passed { "pass" } else if c.informational { "info" } else { "FAIL" };
                let _ = writeln!(h, "  {mark}  {:<34} {}", c.name, c.detail);
            }
            if let Some(k) = &report.kappa {
                let _ = writeln!(h, "kappa         {k}");
            }
            (doc, Status::Ok)
        }
        Realization::NotRealizable { reason } => {
            let mut doc = base("NotRealizable");
            doc["reason"] = reason.into();
            let _ = writeln!(h, "not a graph algebra: {reason}");
            (doc, Status::NotRealizable)
        }
        Realization::NotImplemented => {
            let _ = writeln!(h, "graph algebra with several tensor factors; no construction available");
            (base("NotImplemented"), Status::NotImplemented)
        }
    };
    push_warnings(&mut h, &s.warnings);
    Ok(Report { json: doc, human: h, status })
}

fn directed(text: &str, format: Option<InputFormat>) -> Result<(DirectedGraph, Vec<String>), CliError> {
    let parsed = parse_input(text, Some(format.unwrap_or(InputFormat::Dgraph)))?;
    match parsed.value {
        Input::Directed(g) => Ok((g, parsed.warnings)),
        _ => Err(CliError::Input("expected a directed graph".into())),
    }
}

pub fn ktheory_cmd(text: &str, format: Option<InputFormat>) -> Result<Report, CliError> {
    let (g, warnings) = directed(text, format)?;
    let k = graph_ktheory(&g);
    let sink = match sink_ideal_analysis(&g) {
        Ok(s) => json!({
            "sink": s.sink,
            "kappa": s.kappa.as_ref().map_or(Value::Null, json::bigint),
            "quotient": json::ktheory(&s.quotient),
            "error": Value::Null,
        }),
        Err(e) => json!({ "sink": Value::Null, "kappa": Value::Null, "quotient": Value::Null, "error": e.to_string() }),
    };
    let doc = json!({
        "command": "ktheory",
        "graph": json::digraph(&g),
        "ktheory": json::ktheory(&k),
        "condition_k": condition_k(&g),
        "sink_analysis": sink,
        "warnings": warnings,
    });
    let mut h = String::new();
    let _ = writeln!(h, "K0            {}", k.k0);
    let _ = writeln!(h, "K1            {}", k.k1());
    let unit: Vec<String> = k.unit_class.iter().map(ToString::to_string).collect();
    let _ = writeln!(h, "unit class    ({})", unit.join(", "));
    let _ = writeln!(h, "condition (K) {}", condition_k(&g));
    match sink_ideal_analysis(&g) {
        Ok(s) => {
            let _ = writeln!(h, "sink {}        quotient K0 = {}, K1 = {}", s.sink, s.quotient.k0, s.quotient.k1());
            if let Some(kappa) = s.kappa {
                let _ = writeln!(h, "kappa         {kappa}");
            }
        }
        Err(e) => {
            let _ = writeln!(h, "sink analysis {e}");
        }
    }
    push_warnings(&mut h, &warnings);
    Ok(Report { json: doc, human: h, status: Status::Ok })
}

pub fn euler_cmd(text: &str, format: Option<InputFormat>) -> Result<Report, CliError> {
    let (g, warnings) = undirected(text, format)?;
    let counts = clique_counts(&g)?;
    let chi = counts.euler_characteristic()?;
    let oracle = match euler_oracle(&g) {
        Ok(x) => Some(x),
        Err(EulerError::Limit(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let cn = counts.clique_number();
    let c: Vec<Value> = counts.counts()[..cn].iter().map(|&x| json::u128_value(x)).collect();
    let as_value = |x: i128| i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from);
    let doc = json!({
        "command": "euler",
        "graph": json::graph(&g),
        "clique_counts": c,
        "euler_characteristic": as_value(chi),
        "oracle": oracle.map_or(Value::Null, as_value),
        "warnings": warnings,
    });
    let mut h = String::new();
    let _ = writeln!(h, "clique counts {:?}", &counts.counts()[..cn]);
    let _ = writeln!(h, "chi           {chi}");
    if let Some(o) = oracle {
        let _ = writeln!(h, "oracle        {o}");
    }
    push_warnings(&mut h, &warnings);
    Ok(Report { json: doc, human: h, status: Status::Ok })
}

pub fn decompose_cmd(text: &str, format: Option<InputFormat>) -> Result<Report, CliError> {
    let (g, warnings) = undirected(text, format)?;
    let components = components_value(&g)?;
    let p = invariant_profile(&g)?;
    let oracle = decompose_oracle(&g).ok();
    let doc = json!({
        "command": "decompose",
        "graph": json::graph(&g),
        "components": components,
        "profile": json::profile(&p),
        "co_reducible_oracle": oracle,
        "warnings": warnings,
    });
    let mut h = String::new();
    for c in &components {
        let labels: Vec<&str> = c["labels"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
        let _ = writeln!(h, "{:<8} {{{}}}{}", c["class"].as_str().unwrap_or(""), labels.join(", "), match c["chi"].as_i64() {
            Some(chi) => format!("  chi = {chi}"),
            None => String::new(),
        });
    }
    let _ = writeln!(h, "profile  {}", profile_summary(&p));
    push_warnings(&mut h, &warnings);
    Ok(Report { json: doc, human: h, status: Status::Ok })
}
