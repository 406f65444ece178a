//! Graph files and certificate files.
//!
//! Two graph formats are read: DIMACS (`p edge n m`, `e u v`, 1-based,
//! `c` comments) and a bare edge list (`n` then `u v` pairs, 0-based).
//! The first meaningful token decides which one.

use std::fmt::Write as _;
use std::path::Path;

use crate::certificate::{Bipartition, Side};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

pub fn parse_graph_file(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'));
    let mut lines = lines.peekable();
    match lines.peek() {
        None => Ok(Graph::empty(0)),
        Some((_, l)) if l.starts_with('p') => parse_dimacs(lines),
        Some(_) => parse_edge_list(lines),
    }
}

fn parse_dimacs<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Graph> {
    let (hl, header) = lines.next().expect("peeked");
    let mut toks = header.split_whitespace();
    toks.next();
    match toks.next() {
        Some("edge") | Some("col") => {}
        other => return Err(parse_err(hl, format!("unsupported problem line `{}`", other.unwrap_or("")))),
    }
    let n = number(toks.next(), hl, "vertex count")?;
    let m = number(toks.next(), hl, "edge count")?;
    if toks.next().is_some() {
        return Err(parse_err(hl, "trailing tokens in header"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, l) in lines {
        last = ln;
        let mut toks = l.split_whitespace();
        if toks.next() != Some("e") {
            return Err(parse_err(ln, "expected `e <u> <v>`"));
        }
        let u = number(toks.next(), ln, "endpoint")?;
        let v = number(toks.next(), ln, "endpoint")?;
        if toks.next().is_some() {
            return Err(parse_err(ln, "trailing tokens"));
        }
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(parse_err(ln, format!("vertex {x} outside 1..={n}")));
            }
        }
        if u == v {
            return Err(parse_err(ln, format!("self-loop on vertex {u}")));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(parse_err(last, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

fn parse_edge_list<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Graph> {
    let (hl, header) = lines.next().expect("peeked");
    let mut toks = header.split_whitespace();
    let n = number(toks.next(), hl, "vertex count")?;
    if toks.next().is_some() {
        return Err(parse_err(hl, "first line must hold only the vertex count"));
    }
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let mut toks = l.split_whitespace();
        let u = number(toks.next(), ln, "endpoint")?;
        let v = number(toks.next(), ln, "endpoint")?;
        if toks.next().is_some() {
            return Err(parse_err(ln, "trailing tokens"));
        }
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("vertex {} outside 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(parse_err(ln, format!("self-loop on vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::new(n, &edges)
}

/// DIMACS text for `g`, edges in increasing order.
pub fn format_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

pub fn write_graph_file(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    Ok(std::fs::write(path, format_dimacs(g))?)
}

pub fn format_certificate(p: &Bipartition) -> String {
    let mut label = vec![(Side::B, 0); p.n()];
    for (side, clusters) in [(Side::A, p.a_clusters()), (Side::B, p.b_clusters())] {
        for (i, c) in clusters.iter().enumerate() {
            for &v in c {
                label[v] = (side, i);
            }
        }
    }
    let mut out = String::new();
    for (v, (side, i)) in label.into_iter().enumerate() {
        let s = if side == Side::A { 'A' } else { 'B' };
        writeln!(out, "side {s} {i} {v}").expect("writing to a String");
    }
    out
}

pub fn write_certificate(p: &Bipartition, path: impl AsRef<Path>) -> Result<()> {
    Ok(std::fs::write(path, format_certificate(p))?)
}

pub fn parse_certificate_file(path: impl AsRef<Path>) -> Result<Bipartition> {
    parse_certificate(&std::fs::read_to_string(path)?)
}

pub fn parse_certificate(text: &str) -> Result<Bipartition> {
    let mut rows: Vec<(usize, Side, usize)> = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let ln = i + 1;
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let mut toks = l.split_whitespace();
        if toks.next() != Some("side") {
            return Err(parse_err(ln, "expected `side <A|B> <cluster> <vertex>`"));
        }
        let side = match toks.next() {
            Some("A") => Side::A,
            Some("B") => Side::B,
            other => return Err(parse_err(ln, format!("bad side `{}`", other.unwrap_or("")))),
        };
        let cluster = number(toks.next(), ln, "cluster index")?;
        let v = number(toks.next(), ln, "vertex")?;
        if toks.next().is_some() {
            return Err(parse_err(ln, "trailing tokens"));
        }
        rows.push((v, side, cluster));
    }
    let n = rows.iter().map(|r| r.0 + 1).max().unwrap_or(0);
    let mut seen = vec![false; n];
    for &(v, _, _) in &rows {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Coverage(format!("vertex {v} assigned twice")));
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::Coverage(format!("vertex {v} missing")));
    }
    let mut a: Vec<Vec<usize>> = Vec::new();
    let mut b: Vec<Vec<usize>> = Vec::new();
    for (v, side, c) in rows {
        let list = if side == Side::A { &mut a } else { &mut b };
        if list.len() <= c {
            list.resize(c + 1, Vec::new());
        }
        list[c].push(v);
    }
    Ok(Bipartition::from_clusters(n, a, b))
}
