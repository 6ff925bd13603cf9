//! Text formats: `.emb` for embeddings, `.dec` for decompositions, and edge-assignment
//! listings. Parsers report 1-based line numbers.
//!
//! ```text
//! vertices 3
//! edge 0 0 1 +
//! rot 0: 0 2
//! ```
//!
//! ```text
//! kind tree
//! host 2
//! hostedge 0 1
//! bag 0: 0 1
//! bag 1: 1 2
//! removed 5
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::assignment::EdgeAssignment;
use crate::decomposition::{Decomposition, DecompositionKind};
use crate::embedding::{Edge, EmbeddedGraph, Sign};
use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number(line: usize, token: Option<&str>, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what} must be a non-negative integer, got `{token}`"),
        )
    })
}

fn numbers(line: usize, tokens: &str, what: &str) -> Result<Vec<usize>> {
    tokens
        .split_whitespace()
        .map(|t| number(line, Some(t), what))
        .collect()
}

fn no_trailing<'a>(line: usize, mut rest: impl Iterator<Item = &'a str>) -> Result<()> {
    match rest.next() {
        Some(t) => Err(parse_err(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}

/// Parses `.emb` text.
pub fn parse_emb(text: &str) -> Result<EmbeddedGraph> {
    let mut vertex_count: Option<usize> = None;
    let mut edges: BTreeMap<usize, (Edge, usize)> = BTreeMap::new();
    let mut pairs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut rotations: BTreeMap<usize, (Vec<usize>, usize)> = BTreeMap::new();
    let mut last_line = 0;
    for (line, l) in content_lines(text) {
        last_line = line;
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        match head {
            "vertices" => {
                if vertex_count.is_some() {
                    return Err(parse_err(line, "second `vertices` declaration"));
                }
                let mut t = rest.split_whitespace();
                let n = number(line, t.next(), "vertex count")?;
                no_trailing(line, t)?;
                if n == 0 {
                    return Err(parse_err(line, "vertex count must be positive"));
                }
                vertex_count = Some(n);
            }
            "edge" => {
                let n = vertex_count.ok_or_else(|| parse_err(line, "`edge` before `vertices`"))?;
                let mut t = rest.split_whitespace();
                let id = number(line, t.next(), "edge id")?;
                let u = number(line, t.next(), "endpoint")?;
                let v = number(line, t.next(), "endpoint")?;
                let sign = match t.next() {
                    Some("+") => Sign::Positive,
                    Some("-") => Sign::Negative,
                    Some(s) => {
                        return Err(parse_err(line, format!("sign must be + or -, got `{s}`")))
                    }
                    None => return Err(parse_err(line, "missing edge sign")),
                };
                no_trailing(line, t)?;
                if u >= n || v >= n {
                    return Err(parse_err(
                        line,
                        format!("edge {id} has an endpoint outside 0..{n}"),
                    ));
                }
                if u == v {
                    return Err(parse_err(
                        line,
                        format!("edge {id} is a loop at vertex {u}"),
                    ));
                }
                if let Some(&(_, first)) = edges.get(&id) {
                    return Err(parse_err(
                        line,
                        format!("edge id {id} already declared on line {first}"),
                    ));
                }
                if let Some(&first) = pairs.get(&(u.min(v), u.max(v))) {
                    return Err(parse_err(
                        line,
                        format!("edge {u}-{v} duplicates the edge on line {first}"),
                    ));
                }
                pairs.insert((u.min(v), u.max(v)), line);
                edges.insert(id, (Edge { u, v, sign }, line));
            }
            "rot" => {
                let n = vertex_count.ok_or_else(|| parse_err(line, "`rot` before `vertices`"))?;
                let (vertex, list) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(line, "expected `rot <v>: <edge ids>`"))?;
                let v = number(line, Some(vertex.trim()), "vertex")?;
                if v >= n {
                    return Err(parse_err(line, format!("vertex {v} outside 0..{n}")));
                }
                if let Some(&(_, first)) = rotations.get(&v) {
                    return Err(parse_err(
                        line,
                        format!("rotation of {v} already given on line {first}"),
                    ));
                }
                rotations.insert(v, (numbers(line, list, "edge id")?, line));
            }
            other => return Err(parse_err(line, format!("unknown declaration `{other}`"))),
        }
    }
    let n = vertex_count
        .ok_or_else(|| parse_err(last_line.max(1), "missing `vertices` declaration"))?;
    let m = edges.len();
    if let Some((&id, &(_, line))) = edges.iter().find(|(&id, _)| id >= m) {
        return Err(parse_err(
            line,
            format!("edge ids must be 0..{m}; got {id}"),
        ));
    }
    let edge_list: Vec<Edge> = edges.values().map(|&(e, _)| e).collect();
    let mut rotation_list = Vec::with_capacity(n);
    for v in 0..n {
        let incident: BTreeSet<usize> = (0..m)
            .filter(|&id| edge_list[id].u == v || edge_list[id].v == v)
            .collect();
        let Some((rot, line)) = rotations.remove(&v) else {
            if incident.is_empty() {
                rotation_list.push(Vec::new());
                continue;
            }
            return Err(parse_err(
                last_line,
                format!("vertex {v} has no `rot` line"),
            ));
        };
        let listed: BTreeSet<usize> = rot.iter().copied().collect();
        if listed.len() != rot.len() {
            return Err(parse_err(line, format!("rotation of {v} repeats an edge")));
        }
        if let Some(id) = listed.difference(&incident).next() {
            return Err(parse_err(
                line,
                format!("edge {id} is not incident with vertex {v}"),
            ));
        }
        if let Some(id) = incident.difference(&listed).next() {
            return Err(parse_err(
                line,
                format!("incomplete rotation: edge {id} at vertex {v} is missing"),
            ));
        }
        rotation_list.push(rot);
    }
    EmbeddedGraph::new(n, edge_list, rotation_list)
}

pub fn write_emb(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    for (id, e) in g.edges().iter().enumerate() {
        writeln!(out, "edge {id} {} {} {}", e.u, e.v, e.sign).unwrap();
    }
    for v in 0..g.vertex_count() {
        let rot = g
            .rotation_edges(v)
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>();
        writeln!(out, "rot {v}: {}", rot.join(" ")).unwrap();
    }
    out
}

/// Parses `.dec` text. For `kind path` the `host` line may be omitted; the host is then the
/// path on as many vertices as there are bags.
pub fn parse_dec(text: &str) -> Result<Decomposition> {
    let mut kind: Option<DecompositionKind> = None;
    let mut host_size: Option<(usize, usize)> = None;
    let mut host_edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut bags: BTreeMap<usize, (BTreeSet<usize>, usize)> = BTreeMap::new();
    let mut removed = BTreeSet::new();
    let mut last_line = 0;
    for (line, l) in content_lines(text) {
        last_line = line;
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        match head {
            "kind" => {
                if kind.is_some() {
                    return Err(parse_err(line, "second `kind` declaration"));
                }
                let name = rest.trim();
                kind = Some(DecompositionKind::from_name(name).ok_or_else(|| {
                    parse_err(
                        line,
                        format!("kind must be general, tree or path; got `{name}`"),
                    )
                })?);
            }
            "host" => {
                if host_size.is_some() {
                    return Err(parse_err(line, "second `host` declaration"));
                }
                let mut t = rest.split_whitespace();
                let n = number(line, t.next(), "host size")?;
                no_trailing(line, t)?;
                host_size = Some((n, line));
            }
            "hostedge" => {
                let mut t = rest.split_whitespace();
                let a = number(line, t.next(), "host vertex")?;
                let b = number(line, t.next(), "host vertex")?;
                no_trailing(line, t)?;
                host_edges.push((a, b, line));
            }
            "bag" => {
                let (h, list) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(line, "expected `bag <h>: <vertices>`"))?;
                let h = number(line, Some(h.trim()), "host vertex")?;
                if let Some(&(_, first)) = bags.get(&h) {
                    return Err(parse_err(
                        line,
                        format!("bag {h} already given on line {first}"),
                    ));
                }
                let vs = numbers(line, list, "vertex")?;
                let set: BTreeSet<usize> = vs.iter().copied().collect();
                if set.len() != vs.len() {
                    return Err(parse_err(line, format!("bag {h} repeats a vertex")));
                }
                bags.insert(h, (set, line));
            }
            "removed" => removed.extend(numbers(line, rest, "vertex")?),
            other => return Err(parse_err(line, format!("unknown declaration `{other}`"))),
        }
    }
    let kind = kind.ok_or_else(|| parse_err(last_line.max(1), "missing `kind` declaration"))?;
    let (n, host) = match host_size {
        Some((n, _)) => {
            let mut host = Graph::new(n);
            for &(a, b, line) in &host_edges {
                if a >= n || b >= n || a == b {
                    return Err(parse_err(
                        line,
                        format!("host edge {a}-{b} is not valid on {n} vertices"),
                    ));
                }
                host.add_edge(a, b)?;
            }
            (n, host)
        }
        None if kind == DecompositionKind::Path => {
            if let Some(&(_, _, line)) = host_edges.first() {
                return Err(parse_err(line, "`hostedge` without `host`"));
            }
            let n = bags.keys().next_back().map_or(0, |h| h + 1);
            (n, Graph::path(n))
        }
        None => return Err(parse_err(last_line.max(1), "missing `host` declaration")),
    };
    if let Some((&h, &(_, line))) = bags.iter().find(|(&h, _)| h >= n) {
        return Err(parse_err(line, format!("bag {h} outside host 0..{n}")));
    }
    let mut bag_list = vec![BTreeSet::new(); n];
    for (h, (set, _)) in bags {
        bag_list[h] = set;
    }
    let mut d = Decomposition::new(kind, host, bag_list)?;
    d.removed = removed;
    Ok(d)
}

pub fn write_dec(d: &Decomposition) -> String {
    let mut out = String::new();
    writeln!(out, "kind {}", d.kind.name()).unwrap();
    let implicit_host = d.kind == DecompositionKind::Path && d.host.is_canonical_path();
    if !implicit_host {
        writeln!(out, "host {}", d.host.vertex_count()).unwrap();
        for (a, b) in d.host.edges() {
            writeln!(out, "hostedge {a} {b}").unwrap();
        }
    }
    for (h, bag) in d.bags.iter().enumerate() {
        let vs: Vec<String> = bag.iter().map(usize::to_string).collect();
        if vs.is_empty() {
            writeln!(out, "bag {h}:").unwrap();
        } else {
            writeln!(out, "bag {h}: {}", vs.join(" ")).unwrap();
        }
    }
    if !d.removed.is_empty() {
        let vs: Vec<String> = d.removed.iter().map(usize::to_string).collect();
        writeln!(out, "removed {}", vs.join(" ")).unwrap();
    }
    out
}

/// One `tau <face> <edge>` line per face.
pub fn write_assignment(tau: &EdgeAssignment) -> String {
    tau.iter().fold(String::new(), |mut out, (f, e)| {
        writeln!(out, "tau {f} {e}").unwrap();
        out
    })
}

pub fn parse_assignment(text: &str) -> Result<EdgeAssignment> {
    let mut map = BTreeMap::new();
    for (line, l) in content_lines(text) {
        let mut t = l.split_whitespace();
        if t.next() != Some("tau") {
            return Err(parse_err(line, "expected `tau <face> <edge>`"));
        }
        let f = number(line, t.next(), "face")?;
        let e = number(line, t.next(), "edge")?;
        no_trailing(line, t)?;
        if map.insert(f, e).is_some() {
            return Err(parse_err(line, format!("face {f} assigned twice")));
        }
    }
    let faces = map.len();
    if map.keys().next_back().is_some_and(|&f| f + 1 != faces) {
        return Err(Error::Argument(format!(
            "assigned faces are not 0..{faces}"
        )));
    }
    Ok(EdgeAssignment::new(map.into_values().collect()))
}
