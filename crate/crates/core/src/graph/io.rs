//! Text formats: 0-indexed edge lists, DIMACS `.col`, graph6, and the
//! `u v c` edge-coloring file.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use super::{Edge, EdgeColoring, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    /// `u v` per line, 0-indexed, `#` comments. An optional first line
    /// holding a single integer fixes the vertex count; otherwise it is one
    /// more than the largest index seen.
    EdgeList,
    /// `p edge n m` header then `e u v` lines, 1-indexed, `c` comments.
    Dimacs,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" | "edge-list" | "edgelist" => Ok(Format::EdgeList),
            "dimacs" | "dimacs-col" | "col" => Ok(Format::Dimacs),
            "g6" | "graph6" => Ok(Format::Graph6),
            other => Err(Error::input(format!("unknown graph format `{other}`"))),
        }
    }
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(as_utf8(text)?),
        Format::Dimacs => parse_dimacs(as_utf8(text)?),
        Format::Graph6 => {
            let s = as_utf8(text)?;
            let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
            let (no, line) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty graph6 input".into() })?;
            if let Some((extra, _)) = lines.next() {
                return Err(Error::Parse { line: extra + 1, msg: "more than one graph6 string".into() });
            }
            decode_graph6(line).map_err(|msg| Error::Parse { line: no + 1, msg })
        }
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => {
            let mut out = format!("{}\n", g.n());
            for e in g.edges() {
                let _ = writeln!(out, "{} {}", e.u, e.v);
            }
            out
        }
        Format::Dimacs => {
            let mut out = format!("p edge {} {}\n", g.n(), g.m());
            for e in g.edges() {
                let _ = writeln!(out, "e {} {}", e.u + 1, e.v + 1);
            }
            out
        }
        Format::Graph6 => {
            let mut s = encode_graph6(g);
            s.push('\n');
            s
        }
    }
}

fn as_utf8(text: &[u8]) -> Result<&str> {
    std::str::from_utf8(text).map_err(|e| Error::Parse { line: 1, msg: format!("not UTF-8: {e}") })
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("expected a non-negative integer, got `{tok}`") })
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut first = true;
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            [n] if first => declared = Some(parse_usize(n, line)?),
            [a, b] => {
                let (u, v) = (parse_usize(a, line)?, parse_usize(b, line)?);
                if let Some(n) = declared {
                    for x in [u, v] {
                        if x >= n {
                            return Err(Error::VertexRange { line, vertex: x, n });
                        }
                    }
                }
                if u == v {
                    return Err(Error::Parse { line, msg: format!("self-loop at vertex {u}") });
                }
                edges.push((u, v));
            }
            _ => return Err(Error::Parse { line, msg: format!("expected `u v`, got `{body}`") }),
        }
        first = false;
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.as_slice() {
            [] | ["c", ..] => {}
            ["p", _kind, n, _m] => {
                if g.is_some() {
                    return Err(Error::Parse { line, msg: "duplicate problem line".into() });
                }
                g = Some(Graph::empty(parse_usize(n, line)?));
            }
            ["e", a, b] => {
                let g = g.as_mut().ok_or(Error::Parse { line, msg: "edge before `p` line".into() })?;
                let n = g.n();
                let mut ends = [0; 2];
                for (slot, tok) in ends.iter_mut().zip([a, b]) {
                    let x = parse_usize(tok, line)?;
                    if x == 0 || x > n {
                        return Err(Error::VertexRange { line, vertex: x, n });
                    }
                    *slot = x - 1;
                }
                if ends[0] == ends[1] {
                    return Err(Error::Parse { line, msg: format!("self-loop at vertex {}", ends[0] + 1) });
                }
                g.add_edge(ends[0], ends[1]);
            }
            _ => return Err(Error::Parse { line, msg: format!("unrecognized DIMACS line `{}`", raw.trim()) }),
        }
    }
    g.ok_or(Error::Parse { line: 1, msg: "missing `p edge n m` line".into() })
}

/// graph6 encoding (no `>>graph6<<` header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn decode_graph6(s: &str) -> std::result::Result<Graph, String> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(format!("invalid graph6 byte {b:#04x}"));
    }
    let val = |b: u8| (b - 63) as usize;
    let (n, rest) = match bytes {
        [] => return Err("empty graph6 string".into()),
        [126, 126, r @ ..] if r.len() >= 6 => (r[..6].iter().fold(0, |acc, &b| acc << 6 | val(b)), &r[6..]),
        [126, r @ ..] if r.len() >= 3 && r[0] != 126 => (r[..3].iter().fold(0, |acc, &b| acc << 6 | val(b)), &r[3..]),
        [126, ..] => return Err("truncated graph6 size field".into()),
        [b, r @ ..] => (val(*b), r),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(format!("graph6 body has {} bytes, expected {} for n = {n}", rest.len(), bits.div_ceil(6)));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if val(rest[k / 6]) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// One graph per non-empty line, as produced by `geng` and friends.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(no, l)| decode_graph6(l).map_err(|msg| Error::Parse { line: no + 1, msg }))
        .collect()
}

/// Reads `u v c` lines for the edges of `g`. The color count is `t` when
/// given, otherwise the largest color present.
pub fn parse_edge_coloring(text: &str, g: &Graph, t: Option<usize>) -> Result<EdgeColoring> {
    let mut colors: BTreeMap<Edge, usize> = BTreeMap::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [a, b, c] = toks.as_slice() else {
            return Err(Error::Parse { line, msg: format!("expected `u v c`, got `{body}`") });
        };
        let (u, v, c) = (parse_usize(a, line)?, parse_usize(b, line)?, parse_usize(c, line)?);
        for x in [u, v] {
            if x >= g.n() {
                return Err(Error::VertexRange { line, vertex: x, n: g.n() });
            }
        }
        if u == v || !g.has_edge(u, v) {
            return Err(Error::Parse { line, msg: format!("{u} {v} is not an edge of the graph") });
        }
        if c == 0 {
            return Err(Error::Parse { line, msg: "color 0 is reserved and cannot appear in files".into() });
        }
        if let Some(prev) = colors.insert(Edge::new(u, v), c) {
            if prev != c {
                return Err(Error::Parse { line, msg: format!("edge {u} {v} recolored from {prev} to {c}") });
            }
        }
    }
    let t = t.unwrap_or_else(|| colors.values().copied().max().unwrap_or(1));
    EdgeColoring::new(g, t, colors, false)
}

pub fn serialize_edge_coloring(ec: &EdgeColoring) -> Result<String> {
    let mut out = String::new();
    for (e, c) in ec.iter() {
        if c == 0 {
            return Err(Error::input(format!("edge {e} has reserved color 0")));
        }
        let _ = writeln!(out, "{} {} {}", e.u, e.v, c);
    }
    Ok(out)
}
