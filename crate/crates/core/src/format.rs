//! Line-oriented text formats and DOT export.
//!
//! ```text
//! digraph 3          graph 3          semiorder 2 delta=1     intervals 2
//! 0 -> 2             0 -- 1           0: f=0                  0: [2,3]
//! 1 -> 2                              1: f=2.5                1: [0,1]
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::derived::isolated_vertices;
use crate::digraph::Digraph;
use crate::graph::SimpleGraph;
use crate::orders::{Interval, IntervalRep, SemiorderRep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Any of the file formats, as recognized by its header.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Digraph(Digraph),
    Graph(SimpleGraph),
    Semiorder(SemiorderRep),
    Intervals(IntervalRep),
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn error(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column, message: message.into() }
    }

    /// 1-based column of `part`, which must be a subslice of the line.
    fn column_of(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize + 1
    }

    fn tokens(&self) -> impl Iterator<Item = &'a str> {
        self.text.split_whitespace()
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, text)| Line { number: i + 1, text })
        .filter(|l| {
            let t = l.text.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn parse_usize(line: &Line<'_>, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| line.error(line.column_of(token), format!("expected {what}, found {token:?}")))
}

fn parse_f64(line: &Line<'_>, token: &str, what: &str) -> Result<f64, ParseError> {
    match token.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(line.error(line.column_of(token), format!("expected {what}, found {token:?}"))),
    }
}

fn vertex(line: &Line<'_>, token: &str, n: usize) -> Result<usize, ParseError> {
    let v = parse_usize(line, token, "a vertex index")?;
    if v >= n {
        return Err(line.error(line.column_of(token), format!("vertex {v} out of range for {n} vertices")));
    }
    Ok(v)
}

fn header<'a>(lines: &mut impl Iterator<Item = Line<'a>>) -> Result<(Line<'a>, &'a str, usize), ParseError> {
    let line = lines
        .next()
        .ok_or_else(|| ParseError { line: 1, column: 1, message: "empty input".into() })?;
    let mut tokens = line.tokens();
    let keyword = tokens.next().expect("content line has a token");
    let count = tokens
        .next()
        .ok_or_else(|| line.error(line.text.len() + 1, "missing vertex count"))?;
    let n = parse_usize(&line, count, "a vertex count")?;
    Ok((line, keyword, n))
}

fn pair<'a>(line: &Line<'a>, arrow: &str, n: usize) -> Result<(usize, usize), ParseError> {
    let tokens: Vec<&str> = line.tokens().collect();
    if tokens.len() != 3 || tokens[1] != arrow {
        let col = tokens.first().map_or(1, |t| line.column_of(t));
        return Err(line.error(col, format!("expected `u {arrow} v`")));
    }
    Ok((vertex(line, tokens[0], n)?, vertex(line, tokens[2], n)?))
}

fn expect_keyword(line: &Line<'_>, keyword: &str, expected: &str) -> Result<(), ParseError> {
    if keyword == expected {
        Ok(())
    } else {
        Err(line.error(line.column_of(keyword), format!("expected header `{expected}`, found {keyword:?}")))
    }
}

fn parse_digraph_body<'a>(n: usize, lines: impl Iterator<Item = Line<'a>>) -> Result<Digraph, ParseError> {
    let mut arcs = Vec::new();
    for line in lines {
        arcs.push(pair(&line, "->", n)?);
    }
    Ok(Digraph::from_arcs(n, arcs).expect("validated vertices"))
}

fn parse_graph_body<'a>(n: usize, lines: impl Iterator<Item = Line<'a>>) -> Result<SimpleGraph, ParseError> {
    let mut edges = Vec::new();
    for line in lines {
        let (u, v) = pair(&line, "--", n)?;
        if u == v {
            return Err(line.error(1, format!("loop at vertex {u} in a simple graph")));
        }
        edges.push((u, v));
    }
    Ok(SimpleGraph::from_edges(n, edges).expect("validated vertices"))
}

/// Collects `v: <rest>` lines, requiring each vertex in `0..n` exactly once.
fn vertex_lines<'a, T>(
    n: usize,
    header: &Line<'a>,
    lines: impl Iterator<Item = Line<'a>>,
    mut value: impl FnMut(&Line<'a>, &'a str) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let mut slots: Vec<Option<T>> = (0..n).map(|_| None).collect();
    for line in lines {
        let (head, rest) = line
            .text
            .split_once(':')
            .ok_or_else(|| line.error(1, "expected `v: ...`"))?;
        let v = vertex(&line, head.trim(), n)?;
        if slots[v].is_some() {
            return Err(line.error(1, format!("vertex {v} given twice")));
        }
        slots[v] = Some(value(&line, rest.trim())?);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| header.error(1, format!("no entry for vertex {v}"))))
        .collect()
}

fn parse_semiorder_body<'a>(
    n: usize,
    header: &Line<'a>,
    lines: impl Iterator<Item = Line<'a>>,
) -> Result<SemiorderRep, ParseError> {
    let delta_token = header
        .tokens()
        .nth(2)
        .ok_or_else(|| header.error(header.text.len() + 1, "missing `delta=<value>`"))?;
    let delta_text = delta_token
        .strip_prefix("delta=")
        .ok_or_else(|| header.error(header.column_of(delta_token), "expected `delta=<value>`"))?;
    let delta = parse_f64(header, delta_text, "a threshold")?;
    if delta <= 0.0 {
        return Err(header.error(header.column_of(delta_text), "threshold must be positive"));
    }
    let f = vertex_lines(n, header, lines, |line, rest| {
        let value = rest
            .strip_prefix("f=")
            .ok_or_else(|| line.error(line.column_of(rest), "expected `f=<value>`"))?;
        parse_f64(line, value, "a value")
    })?;
    Ok(SemiorderRep { f, delta })
}

fn parse_intervals_body<'a>(
    n: usize,
    header: &Line<'a>,
    lines: impl Iterator<Item = Line<'a>>,
) -> Result<IntervalRep, ParseError> {
    let intervals = vertex_lines(n, header, lines, |line, rest| {
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| line.error(line.column_of(rest), "expected `[lo,hi]`"))?;
        let (lo, hi) = inner
            .split_once(',')
            .ok_or_else(|| line.error(line.column_of(inner), "expected `[lo,hi]`"))?;
        let (lo_t, hi_t) = (lo.trim(), hi.trim());
        let lo = parse_f64(line, lo_t, "a lower endpoint")?;
        let hi = parse_f64(line, hi_t, "an upper endpoint")?;
        if lo > hi {
            return Err(line.error(line.column_of(lo_t), format!("malformed interval [{lo},{hi}]")));
        }
        Ok(Interval::new(lo, hi))
    })?;
    Ok(IntervalRep { intervals })
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut lines = content_lines(text);
    let (head, keyword, n) = header(&mut lines)?;
    match keyword {
        "digraph" => parse_digraph_body(n, lines).map(Document::Digraph),
        "graph" => parse_graph_body(n, lines).map(Document::Graph),
        "semiorder" => parse_semiorder_body(n, &head, lines).map(Document::Semiorder),
        "intervals" => parse_intervals_body(n, &head, lines).map(Document::Intervals),
        other => Err(head.error(head.column_of(other), format!("unknown header {other:?}"))),
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = content_lines(text);
    let (head, keyword, n) = header(&mut lines)?;
    expect_keyword(&head, keyword, "digraph")?;
    parse_digraph_body(n, lines)
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut lines = content_lines(text);
    let (head, keyword, n) = header(&mut lines)?;
    expect_keyword(&head, keyword, "graph")?;
    parse_graph_body(n, lines)
}

pub fn parse_semiorder(text: &str) -> Result<SemiorderRep, ParseError> {
    let mut lines = content_lines(text);
    let (head, keyword, n) = header(&mut lines)?;
    expect_keyword(&head, keyword, "semiorder")?;
    parse_semiorder_body(n, &head, lines)
}

pub fn parse_intervals(text: &str) -> Result<IntervalRep, ParseError> {
    let mut lines = content_lines(text);
    let (head, keyword, n) = header(&mut lines)?;
    expect_keyword(&head, keyword, "intervals")?;
    parse_intervals_body(n, &head, lines)
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut s = format!("digraph {}\n", d.n());
    for (u, v) in d.arcs() {
        writeln!(s, "{u} -> {v}").unwrap();
    }
    s
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(s, "{u} -- {v}").unwrap();
    }
    s
}

pub fn write_semiorder(rep: &SemiorderRep) -> String {
    let mut s = format!("semiorder {} delta={}\n", rep.f.len(), rep.delta);
    for (v, f) in rep.f.iter().enumerate() {
        writeln!(s, "{v}: f={f}").unwrap();
    }
    s
}

pub fn write_intervals(rep: &IntervalRep) -> String {
    let mut s = format!("intervals {}\n", rep.intervals.len());
    for (v, j) in rep.intervals.iter().enumerate() {
        writeln!(s, "{v}: [{},{}]", j.lo, j.hi).unwrap();
    }
    s
}

/// DOT with the digraph and a derived graph side by side. Isolated
/// vertices of the derived graph are drawn as dashed boxes.
pub fn to_dot(d: &Digraph, derived: &SimpleGraph, derived_label: &str) -> String {
    let mut s = String::from("digraph ccelab {\n  compound=true;\n");
    s.push_str("  subgraph cluster_digraph {\n    label=\"D\";\n");
    for v in 0..d.n() {
        writeln!(s, "    d{v} [label=\"{v}\"];").unwrap();
    }
    for (u, v) in d.arcs() {
        writeln!(s, "    d{u} -> d{v};").unwrap();
    }
    s.push_str("  }\n");
    writeln!(s, "  subgraph cluster_derived {{\n    label=\"{derived_label}\";").unwrap();
    let isolated = isolated_vertices(derived);
    for v in 0..derived.n() {
        if isolated.contains(v) {
            writeln!(s, "    g{v} [label=\"{v}\", shape=box, style=dashed];").unwrap();
        } else {
            writeln!(s, "    g{v} [label=\"{v}\", shape=circle];").unwrap();
        }
    }
    for (u, v) in derived.edges() {
        writeln!(s, "    g{u} -> g{v} [dir=none];").unwrap();
    }
    s.push_str("  }\n}\n");
    s
}
