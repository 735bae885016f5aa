//! Text formats: edge lists, profile specs, directed graphs, and input
//! auto-detection.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;

use raag_core::graphs::parse_graph6;
use raag_core::{DirectedGraph, ExtNat, InvariantProfile, UndirectedGraph};

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed value plus non-fatal diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Edges,
    Graph6,
    Profile,
    Dgraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Graph(UndirectedGraph),
    Profile(InvariantProfile),
    Directed(DirectedGraph),
}

/// Significant lines: 1-based number and text, skipping blanks and `#`
/// comments.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, l))
    })
}

fn column_of(line: &str, token: &str) -> usize {
    let offset = token.as_ptr() as usize - line.as_ptr() as usize;
    line[..offset].chars().count() + 1
}

fn header_value<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.trim().strip_prefix(key)?;
    rest.trim_start().strip_prefix(':').map(str::trim)
}

/// Edge list: optional `vertices: <k>` header, then `<label> <label>` per
/// line. Vertices are numbered by first appearance.
pub fn parse_edge_list(text: &str) -> Result<Parsed<UndirectedGraph>, ParseError> {
    let mut lines = content_lines(text).peekable();
    let mut declared = None;
    if let Some(&(no, line)) = lines.peek() {
        if let Some(v) = header_value(line, "vertices") {
            let k = v
                .parse::<usize>()
                .map_err(|_| ParseError::new(no, column_of(line, v), format!("invalid vertex count '{v}'")))?;
            declared = Some(k);
            lines.next();
        }
    }
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut warnings = Vec::new();
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            let col = tokens.first().map_or(1, |t| column_of(line, t));
            return Err(ParseError::new(no, col, format!("expected two labels, found {}", tokens.len())));
        }
        if tokens[0] == tokens[1] {
            return Err(ParseError::new(no, column_of(line, tokens[1]), format!("self-loop at '{}'", tokens[0])));
        }
        let mut ends = [0; 2];
        for (end, tok) in ends.iter_mut().zip(&tokens) {
            *end = *index.entry((*tok).to_string()).or_insert_with(|| {
                labels.push((*tok).to_string());
                labels.len() - 1
            });
        }
        edges.push((no, ends[0], ends[1]));
    }
    let n = match declared {
        Some(k) if labels.len() > k => {
            return Err(ParseError::new(1, 1, format!("header declares {k} vertices but {} labels appear", labels.len())))
        }
        Some(k) => k,
        None => labels.len(),
    };
    for i in labels.len()..n {
        labels.push(format!("_{i}"));
    }
    let mut g = UndirectedGraph::new(n);
    for (no, u, v) in edges {
        if !g.add_edge(u, v).expect("labels are distinct and in range") {
            warnings.push(format!("line {no}: duplicate edge {} {} ignored", labels[u], labels[v]));
        }
    }
    let g = g.with_labels(labels).expect("one label per vertex");
    Ok(Parsed { value: g, warnings })
}

/// Writes an edge list that [`parse_edge_list`] reads back to the same
/// graph.
pub fn write_edge_list(g: &UndirectedGraph) -> String {
    let mut out = format!("vertices: {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.vertex_name(u), g.vertex_name(v));
    }
    out
}

fn parse_extnat(s: &str) -> Option<ExtNat> {
    if s == "inf" {
        Some(ExtNat::Omega)
    } else if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
        s.parse::<u128>().ok().map(ExtNat::Finite)
    } else {
        None
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum ProfileKey {
    T,
    O,
    N(i64),
}

/// Profile spec: `t=<v>;o=<v>;N[<int>]=<v>;...` where each value is a
/// decimal or `inf`. Entries may also be separated by newlines; absent
/// keys are zero.
pub fn parse_profile_spec(text: &str) -> Result<InvariantProfile, ParseError> {
    let mut p = InvariantProfile::new();
    let mut seen = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let no = i + 1;
        for token in line.split(';') {
            let tok = token.trim();
            if tok.is_empty() {
                continue;
            }
            let col = column_of(line, tok);
            let malformed = || ParseError::new(no, col, format!("malformed entry '{tok}'"));
            let (key, value) = tok.split_once('=').ok_or_else(malformed)?;
            let (key, value) = (key.trim(), value.trim());
            let key = match key {
                "t" => ProfileKey::T,
                "o" => ProfileKey::O,
                _ => {
                    let inner = key.strip_prefix("N[").and_then(|k| k.strip_suffix(']')).ok_or_else(malformed)?;
                    ProfileKey::N(inner.trim().parse::<i64>().map_err(|_| malformed())?)
                }
            };
            if seen.insert(key, ()).is_some() {
                return Err(ParseError::new(no, col, format!("duplicate key in '{tok}'")));
            }
            let count = match parse_extnat(value) {
                Some(c) => c,
                None if value.strip_prefix('-').is_some_and(|v| parse_extnat(v).is_some()) => {
                    return Err(ParseError::new(no, col, format!("negative count in '{tok}'")))
                }
                None => return Err(malformed()),
            };
            match key {
                ProfileKey::T => p.set_t(count),
                ProfileKey::O => p.set_o(count),
                ProfileKey::N(k) => p.set_n(k, count),
            }
        }
    }
    Ok(p)
}

/// Renders a profile in the spec grammar; the zero profile is `t=0`.
pub fn write_profile_spec(p: &InvariantProfile) -> String {
    let mut parts = Vec::new();
    if !p.t().is_zero() {
        parts.push(format!("t={}", p.t()));
    }
    if !p.o().is_zero() {
        parts.push(format!("o={}", p.o()));
    }
    parts.extend(p.n_entries().map(|(k, v)| format!("N[{k}]={v}")));
    if parts.is_empty() {
        parts.push("t=0".into());
    }
    parts.join(";")
}

/// Directed graph: `dvertices: <k>` header, then `<src> <dst> <mult>` or
/// `<v> *` (infinite emitter) per line. Repeated pairs add up.
pub fn parse_dgraph(text: &str) -> Result<Parsed<DirectedGraph>, ParseError> {
    let mut lines = content_lines(text);
    let (no, line) = lines.next().ok_or_else(|| ParseError::new(1, 1, "missing 'dvertices:' header"))?;
    let k = header_value(line, "dvertices").ok_or_else(|| ParseError::new(no, 1, "missing 'dvertices:' header"))?;
    let n = k.parse::<usize>().map_err(|_| ParseError::new(no, column_of(line, k), format!("invalid vertex count '{k}'")))?;
    let mut g = DirectedGraph::new(n);
    let mut warnings = Vec::new();
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let vertex = |tok: &str| -> Result<usize, ParseError> {
            match tok.parse::<usize>() {
                Ok(v) if v < n => Ok(v),
                Ok(v) => Err(ParseError::new(no, column_of(line, tok), format!("vertex {v} out of range (n = {n})"))),
                Err(_) => Err(ParseError::new(no, column_of(line, tok), format!("invalid vertex '{tok}'"))),
            }
        };
        match tokens.as_slice() {
            [v, "*"] => {
                g.set_infinite_emitter(vertex(v)?);
            }
            [s, t, m] => {
                let (s, t) = (vertex(s)?, vertex(t)?);
                let mult = m
                    .parse::<u64>()
                    .map_err(|_| ParseError::new(no, column_of(line, m), format!("invalid multiplicity '{m}'")))?;
                if g.multiplicity(s, t) > 0 && mult > 0 {
                    warnings.push(format!("line {no}: repeated pair {s} {t}, multiplicities added"));
                }
                g.add_edges(s, t, mult);
            }
            _ => {
                let col = tokens.first().map_or(1, |t| column_of(line, t));
                return Err(ParseError::new(no, col, "expected '<src> <dst> <multiplicity>' or '<v> *'"));
            }
        }
    }
    Ok(Parsed { value: g, warnings })
}

pub fn write_dgraph(g: &DirectedGraph) -> String {
    let mut out = format!("dvertices: {}\n", g.n());
    for ((s, t), m) in g.edges() {
        let _ = writeln!(out, "{s} {t} {m}");
    }
    for v in (0..g.n()).filter(|&v| g.is_infinite_emitter(v)) {
        let _ = writeln!(out, "{v} *");
    }
    out
}

fn looks_like_profile(text: &str) -> bool {
    text.split([';', '\n']).map(str::trim).filter(|t| !t.is_empty()).all(|t| {
        t.split_once('=').is_some_and(|(k, _)| {
            let k = k.trim();
            k == "t" || k == "o" || k.starts_with("N[")
        })
    }) && text.contains('=')
}

fn looks_like_graph6(text: &str) -> bool {
    let t = text.trim();
    !t.is_empty() && !t.contains(char::is_whitespace) && t.bytes().all(|b| (63..=126).contains(&b))
}

/// Auto-detection: directed header, then profile spec, then graph6, then
/// edge list.
pub fn detect_format(text: &str) -> InputFormat {
    let first = content_lines(text).next().map(|(_, l)| l);
    if first.is_some_and(|l| header_value(l, "dvertices").is_some()) {
        InputFormat::Dgraph
    } else if looks_like_profile(text) {
        InputFormat::Profile
    } else if looks_like_graph6(text) {
        InputFormat::Graph6
    } else {
        InputFormat::Edges
    }
}

pub fn parse_input(text: &str, format: Option<InputFormat>) -> Result<Parsed<Input>, ParseError> {
    let plain = |input| Parsed { value: input, warnings: Vec::new() };
    match format.unwrap_or_else(|| detect_format(text)) {
        InputFormat::Edges => parse_edge_list(text).map(|p| Parsed { value: Input::Graph(p.value), warnings: p.warnings }),
        InputFormat::Graph6 => {
            let records: Vec<(usize, &str)> = content_lines(text).collect();
            match records.as_slice() {
                [(_, line)] => parse_graph6(line.trim())
                    .map(|g| plain(Input::Graph(g)))
                    .map_err(|e| ParseError::new(records[0].0, 1, e.to_string())),
                [] => Err(ParseError::new(1, 1, "empty graph6 input")),
                [_, (no, _), ..] => Err(ParseError::new(*no, 1, "expected a single graph6 record")),
            }
        }
        InputFormat::Profile => parse_profile_spec(text).map(|p| plain(Input::Profile(p))),
        InputFormat::Dgraph => parse_dgraph(text).map(|p| Parsed { value: Input::Directed(p.value), warnings: p.warnings }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("a b\nb c").unwrap().value;
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), [(0, 1), (1, 2)]);
        assert_eq!(g.labels().unwrap(), ["a", "b", "c"]);

        let e = parse_edge_list("v1 v1").unwrap_err();
        assert!(e.message.contains("self-loop"));
        assert_eq!((e.line, e.column), (1, 4));

        let g = parse_edge_list("vertices: 5\n").unwrap().value;
        assert_eq!((g.n(), g.edge_count()), (5, 0));
    }

    #[test]
    fn edge_list_details() {
        let p = parse_edge_list("# comment\nvertices: 4\na b\n\nb a\n").unwrap();
        assert_eq!(p.value.n(), 4);
        assert_eq!(p.value.edge_count(), 1);
        assert_eq!(p.warnings.len(), 1);
        assert_eq!(p.value.vertex_name(3), "_3");
        assert!(parse_edge_list("vertices: 1\na b").is_err());
        let e = parse_edge_list("a b\na b c").unwrap_err();
        assert_eq!(e.line, 2);
        let g = p.value;
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap().value, g);
    }

    #[test]
    fn profile_examples() {
        assert_eq!(parse_profile_spec("t=1").unwrap(), InvariantProfile::new().with_t(1u128));
        assert_eq!(parse_profile_spec("o=2;N[1]=1").unwrap(), InvariantProfile::new().with_o(2u128).with_n(1, 1u128));
        assert_eq!(parse_profile_spec("N[-1]=inf").unwrap(), InvariantProfile::new().with_n(-1, ExtNat::Omega));
        assert_eq!(parse_profile_spec(" t = 2 ;\nN[ -3 ]=1;").unwrap(), InvariantProfile::new().with_t(2u128).with_n(-3, 1u128));
    }

    #[test]
    fn profile_errors() {
        let e = parse_profile_spec("t=1;t=2").unwrap_err();
        assert!(e.message.contains("duplicate"));
        assert_eq!(e.column, 5);
        assert!(parse_profile_spec("N[2]=-1").unwrap_err().message.contains("negative"));
        assert!(parse_profile_spec("N[x]=1").unwrap_err().message.contains("malformed"));
        assert!(parse_profile_spec("q=1").unwrap_err().message.contains("malformed"));
        assert!(parse_profile_spec("t").unwrap_err().message.contains("malformed"));
        assert!(parse_profile_spec("t=1.5").is_err());
    }

    #[test]
    fn profile_round_trip() {
        let p = parse_profile_spec("t=3;o=inf;N[-2]=1;N[0]=4").unwrap();
        assert_eq!(parse_profile_spec(&write_profile_spec(&p)).unwrap(), p);
        assert_eq!(write_profile_spec(&InvariantProfile::new()), "t=0");
    }

    #[test]
    fn dgraph_round_trip() {
        let p = parse_dgraph("dvertices: 3\n0 0 2\n0 1 1\n0 1 2\n2 *\n").unwrap();
        assert_eq!(p.warnings.len(), 1);
        let g = p.value;
        assert_eq!(g.multiplicity(0, 1), 3);
        assert!(g.is_infinite_emitter(2));
        assert_eq!(parse_dgraph(&write_dgraph(&g)).unwrap().value, g);
        assert!(parse_dgraph("0 1 1").is_err());
        assert_eq!(parse_dgraph("dvertices: 2\n0 2 1").unwrap_err().column, 3);
    }

    #[test]
    fn detection() {
        assert_eq!(detect_format("t=5"), InputFormat::Profile);
        assert_eq!(detect_format("N[-1]=2;N[1]=1"), InputFormat::Profile);
        assert_eq!(detect_format("D??"), InputFormat::Graph6);
        assert_eq!(detect_format("D??\n"), InputFormat::Graph6);
        assert_eq!(detect_format("a b\nb c"), InputFormat::Edges);
        assert_eq!(detect_format("vertices: 5"), InputFormat::Edges);
        assert_eq!(detect_format("dvertices: 1\n0 0 3"), InputFormat::Dgraph);
    }
}
