//! graph6 encoding (McKay) and DOT export.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: u64 = 68_719_476_735;

fn push_order(out: &mut Vec<u8>, n: u64) {
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
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n as u64 <= MAX_ORDER, "graph too large for graph6");
    let mut out = Vec::new();
    push_order(&mut out, n as u64);
    let mut word = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(word + 63);
                word = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((word << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

/// Parses one graph6 line; an optional `>>graph6<<` header and trailing
/// newline are accepted. Nonzero padding bits are rejected.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let base = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = text[base..].trim_end_matches(['\n', '\r']).as_bytes();
    let digit = |i: usize| -> Result<u64> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
            Some(_) => Err(Error::parse(base + i, "byte outside graph6 range 63..=126")),
            None => Err(Error::parse(base + i, "unexpected end of graph6 string")),
        }
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(Error::parse(base, "empty graph6 string")),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | digit(i)?;
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | digit(i)?;
            }
            (n, 4)
        }
        Some(_) => (digit(0)?, 1),
    };
    let n = usize::try_from(n).map_err(|_| Error::parse(base, "order does not fit in memory"))?;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pos + pairs.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::parse(
            base + bytes.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut word = 0u64;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                word = digit(pos)?;
                pos += 1;
            }
            if (word >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 && word & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(Error::parse(base + pos - 1, "nonzero padding bits"));
    }
    Graph::new(n, edges).map_err(|e| Error::parse(base, e.to_string()))
}

/// DOT text for the graph; `edge_colors`, when given, labels edge `i` with
/// `edge_colors[i]` through the `color` attribute.
pub fn to_dot(g: &Graph, edge_colors: Option<&[&str]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v} [label=\"{v}\"];");
    }
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        match edge_colors.and_then(|c| c.get(i)) {
            Some(c) => {
                let _ = writeln!(out, "  {a} -- {b} [color=\"{c}\"];");
            }
            None => {
                let _ = writeln!(out, "  {a} -- {b};");
            }
        }
    }
    out.push_str("}\n");
    out
}
