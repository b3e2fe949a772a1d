//! The graph6 format: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte
//! (value + 63), most significant bit first.

use crate::error::{Error, Result};
use crate::generators::pair_order;
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

const MAX_N: usize = (1 << 36) - 1;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(err(offset, format!("byte {b:#04x} outside 63..=126"))),
        None => Err(err(offset, "unexpected end of input")),
    }
}

/// Returns `(n, header length)`.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = sextet(bytes, 0)?;
    if first != 63 {
        return Ok((first as usize, 1));
    }
    let (start, groups) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    let mut n = 0u64;
    for i in start..start + groups {
        n = n << 6 | sextet(bytes, i)?;
    }
    let small = if groups == 3 { 63 } else { 258_048 };
    if (n as usize) < small {
        return Err(err(0, format!("size {n} uses a longer header than necessary")));
    }
    Ok((n as usize, start + groups))
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and a trailing
/// newline are accepted.
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let mut bytes = line.strip_prefix(HEADER.as_bytes()).unwrap_or(line);
    let skip = line.len() - bytes.len();
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    let shift = |e: Error| match e {
        Error::Graph6 { offset, message } => err(offset + skip, message),
        other => other,
    };
    if bytes.is_empty() {
        return Err(err(skip, "empty graph6 string"));
    }
    let (n, header) = parse_size(bytes).map_err(shift)?;
    let pairs = pair_order(n);
    let body = pairs.len().div_ceil(6);
    if bytes.len() != header + body {
        return Err(shift(err(
            header + body.min(bytes.len().saturating_sub(header)),
            format!(
                "expected {body} data bytes for n = {n}, found {}",
                bytes.len() - header
            ),
        )));
    }
    let mut edges = Vec::new();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let offset = header + k / 6;
        let chunk = sextet(bytes, offset).map_err(shift)?;
        if chunk >> (5 - k % 6) & 1 == 1 {
            edges.push((i, j));
        }
    }
    if !pairs.len().is_multiple_of(6) {
        let offset = header + body - 1;
        let last = sextet(bytes, offset).map_err(shift)?;
        let pad = 6 - pairs.len() % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(shift(err(offset, "nonzero padding bits")));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encodes a graph, without header or newline.
pub fn emit(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for (i, j) in pair_order(n) {
        acc = acc << 1 | g.has_edge(i, j) as u8;
        bits += 1;
        if bits == 6 {
            out.push(acc + 63);
            acc = 0;
            bits = 0;
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("printable ascii")
}
