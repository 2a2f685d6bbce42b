//! Text formats: graph6 (simple graphs only) and a line-oriented edge list.
//!
//! Edge-list files hold the vertex count on the first line, then one `u v`
//! pair per edge with 0-based endpoints. A repeated pair is a parallel edge.
//! `#` starts a comment that runs to the end of the line.
//!
//! ```text
//! # a parallel pair plus a pendant edge
//! 3
//! 0 1
//! 0 1
//! 1 2
//! ```

use super::Multigraph;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("not a vertex index: {s:?}")))
        };
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(parse_err(
                        line_no,
                        "expected the vertex count on its own line",
                    ));
                }
                n = Some(num(fields[0])?);
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(parse_err(line_no, "expected an edge \"u v\""));
                }
                let (u, v) = (num(fields[0])?, num(fields[1])?);
                if u == v {
                    return Err(parse_err(line_no, format!("loop at vertex {u}")));
                }
                if u >= count || v >= count {
                    return Err(parse_err(
                        line_no,
                        format!("endpoint out of range for {count} vertices"),
                    ));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(1, "missing vertex count"))?;
    Multigraph::new_uncapped(n, &edges)
}

/// Emits the edge-list format with edges in id order.
pub fn to_edge_list(g: &Multigraph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn encode_n(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

pub fn to_graph6(g: &Multigraph) -> Result<String> {
    for &(u, v) in g.edges() {
        if g.multiplicity(u, v) > 1 {
            return Err(Error::NotSimple(u.min(v), u.max(v)));
        }
    }
    let n = g.n();
    let mut out = String::new();
    encode_n(n, &mut out);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.is_adjacent(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push((byte + 63) as char);
    }
    Ok(out)
}

pub fn parse_graph6(text: &str) -> Result<Multigraph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(1, "empty graph6 string"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_err(1, format!("byte {pos} out of graph6 range")));
    }
    let value = |range: &[u8]| {
        range
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(parse_err(1, "truncated graph6 header"));
        }
        (value(&bytes[2..8]), &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(parse_err(1, "truncated graph6 header"));
        }
        (value(&bytes[1..4]), &bytes[4..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(parse_err(
            1,
            format!(
                "expected {} data bytes for n={n}, found {}",
                nbits.div_ceil(6),
                body.len()
            ),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Multigraph::new(n, &edges)
}

/// Reads either format: text whose first meaningful line is a lone integer is
/// an edge list, anything else is graph6.
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.chars().all(|c| c.is_ascii_digit()) => parse_edge_list(text),
        Some(_) => parse_graph6(text),
        None => Err(parse_err(1, "empty input")),
    }
}
