//! graph6 text encoding (header-free, one graph per line).
//!
//! The vertex count is `N(n)`: one byte `n + 63` for `n <= 62`, otherwise
//! `126` followed by three bytes carrying 18 bits. The upper triangle of the
//! adjacency matrix follows column by column (`(0,1), (0,2), (1,2), (0,3), …`),
//! six bits per byte, big-endian within the byte, padded with zeros.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, format!("byte {:#04x} outside 63..=126", bytes[pos])));
    }
    let (n, header) = match bytes.first() {
        None => return Err(err(0, "empty input")),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                return Err(err(1, "8-byte length header not supported"));
            }
            if bytes.len() < 4 {
                return Err(err(bytes.len(), "truncated length header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n < 63 {
                return Err(err(1, format!("long header used for n = {n}")));
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(err(0, format!("n = {n} exceeds {MAX_VERTICES}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() != nbytes {
        return Err(err(
            header + body.len().min(nbytes),
            format!("expected {nbytes} data bytes for n = {n}, found {}", body.len()),
        ));
    }

    let mut rows = vec![VertexSet::new(); n];
    let mut k = 0;
    for j in 1..n {
        for row in rows.iter_mut().take(j) {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                row.insert(j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(header + nbytes - 1, "padding bits set"));
        }
    }
    Ok(Graph::from_rows(n, rows))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses every non-empty line; errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| match e {
                Error::Graph6 { offset, reason } => Error::Graph6 {
                    offset,
                    reason: format!("line {}: {reason}", i + 1),
                },
                other => other,
            })
        })
        .collect()
}
