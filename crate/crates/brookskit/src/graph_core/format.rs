//! graph6, DIMACS `.col` and whitespace edge-list readers and writers.

use super::graph::Graph;
use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Graph6,
    DimacsCol,
    EdgeList,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "dimacs" | "dimacs_col" | "col" => Ok(Format::DimacsCol),
            "edge_list" | "edges" | "edgelist" => Ok(Format::EdgeList),
            _ => Err(Error::Parse {
                offset: 0,
                message: format!("unknown format '{s}'"),
            }),
        }
    }
}

fn perr(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn parse(bytes: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(bytes),
        Format::DimacsCol => parse_dimacs(bytes),
        Format::EdgeList => parse_edge_list(bytes),
    }
}

/// Guesses the format from content: DIMACS has `p`/`c` lines, an edge list
/// starts with a digit, anything else is tried as graph6.
pub fn sniff(bytes: &[u8]) -> Format {
    let text = String::from_utf8_lossy(bytes);
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" || l.starts_with("e ") => Format::DimacsCol,
        Some(l) if l.as_bytes()[0].is_ascii_digit() => Format::EdgeList,
        _ => Format::Graph6,
    }
}

pub fn parse_auto(bytes: &[u8]) -> Result<Graph> {
    parse(bytes, sniff(bytes))
}

const G6_HEADER: &[u8] = b">>graph6<<";

pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if bytes.starts_with(G6_HEADER) {
        start = G6_HEADER.len();
    }
    let mut end = bytes.len();
    while end > start && (bytes[end - 1] == b'\n' || bytes[end - 1] == b'\r') {
        end -= 1;
    }
    let data = &bytes[start..end];
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(perr(start + i, format!("byte 0x{b:02x} outside the graph6 range 63..=126")));
        }
    }
    if data.is_empty() {
        return Err(perr(start, "missing graph6 size field"));
    }
    let (n, mut pos) = if data[0] != 126 {
        ((data[0] - 63) as usize, 1)
    } else if data.len() >= 2 && data[1] != 126 {
        if data.len() < 4 {
            return Err(perr(start + data.len(), "truncated 18-bit size field"));
        }
        (sextets(&data[1..4]), 4)
    } else {
        if data.len() < 8 {
            return Err(perr(start + data.len(), "truncated 36-bit size field"));
        }
        (sextets(&data[2..8]), 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if data.len() - pos != need {
        return Err(perr(
            start + pos,
            format!("expected {need} adjacency bytes for n={n}, found {}", data.len() - pos),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        pos += need - 1;
        let pad = 6 - bits % 6;
        if (data[pos] - 63) & ((1 << pad) - 1) != 0 {
            return Err(perr(start + pos, "nonzero padding bits in final graph6 byte"));
        }
    }
    Ok(g)
}

fn sextets(b: &[u8]) -> usize {
    b.iter().fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Iterates lines with the byte offset at which each starts.
fn lines_with_offsets(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    text.split_inclusive('\n').map(move |l| {
        let at = offset;
        offset += l.len();
        (at, l.trim_end_matches(['\n', '\r']))
    })
}

fn utf8(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| perr(e.valid_up_to(), "input is not UTF-8"))
}

fn validation_at(offset: usize, e: Error) -> Error {
    match e {
        Error::Validation(m) => Error::Validation(format!("{m} (byte {offset})")),
        other => other,
    }
}

pub fn parse_dimacs(bytes: &[u8]) -> Result<Graph> {
    let text = utf8(bytes)?;
    let mut g: Option<Graph> = None;
    let mut declared_m = 0;
    for (at, line) in lines_with_offsets(text) {
        let mut tok = line.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if g.is_some() {
                    return Err(perr(at, "second problem line"));
                }
                match tok.next() {
                    Some("edge") | Some("col") | Some("edges") => {}
                    _ => return Err(perr(at, "problem line must read 'p edge <n> <m>'")),
                }
                let n = num(tok.next(), at, "vertex count")?;
                declared_m = num(tok.next(), at, "edge count")?;
                g = Some(Graph::new(n));
            }
            Some("e") => {
                let graph = g.as_mut().ok_or_else(|| perr(at, "edge line before problem line"))?;
                let u = num(tok.next(), at, "edge endpoint")?;
                let v = num(tok.next(), at, "edge endpoint")?;
                if u == 0 || v == 0 {
                    return Err(perr(at, "DIMACS vertices are 1-indexed"));
                }
                graph.try_add_edge(u - 1, v - 1).map_err(|e| validation_at(at, e))?;
            }
            Some(other) => return Err(perr(at, format!("unknown line type '{other}'"))),
        }
        if tok.next().is_some() && !line.starts_with('c') {
            return Err(perr(at, "trailing tokens"));
        }
    }
    let g = g.ok_or_else(|| perr(bytes.len(), "missing problem line"))?;
    if g.m() != declared_m {
        return Err(perr(
            bytes.len(),
            format!("problem line declares {declared_m} edges, found {}", g.m()),
        ));
    }
    Ok(g)
}

fn num(tok: Option<&str>, at: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| perr(at, format!("missing {what}")))?
        .parse()
        .map_err(|_| perr(at, format!("malformed {what}")))
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}

/// `u v` pairs, 0-indexed, one per line; `#` starts a comment. The vertex
/// count is one more than the largest index mentioned.
pub fn parse_edge_list(bytes: &[u8]) -> Result<Graph> {
    let text = utf8(bytes)?;
    let mut edges = Vec::new();
    let mut n = 0;
    for (at, line) in lines_with_offsets(text) {
        let body = line.split('#').next().unwrap_or("");
        let mut tok = body.split_whitespace();
        let Some(first) = tok.next() else { continue };
        let u = num(Some(first), at, "vertex")?;
        let v = num(tok.next(), at, "vertex")?;
        if tok.next().is_some() {
            return Err(perr(at, "edge line has more than two tokens"));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((at, u, v));
    }
    let mut g = Graph::new(n);
    for (at, u, v) in edges {
        g.try_add_edge(u, v).map_err(|e| validation_at(at, e))?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}
