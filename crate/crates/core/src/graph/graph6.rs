//! graph6, short form only (`n <= 62`).
//!
//! Header byte `n + 63`, then the upper triangle read column by column
//! (`b(0,1), b(0,2), b(1,2), b(0,3), ...`), six bits per byte, most
//! significant first, zero padded, each byte offset by 63.

use super::Graph;
use crate::{Error, Result};

pub const GRAPH6_MAX_N: usize = 62;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if !(63..=126).contains(&header) {
        return Err(err(0, format!("header byte {header} outside 63..=126")));
    }
    if header == 126 {
        return Err(err(0, "long-form header (n > 62) is not supported"));
    }
    let n = (header - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            format!("expected {expected} bytes for n = {n}, found {}", bytes.len()),
        ));
    }
    let mut adj = vec![0u64; n];
    let mut bit = 0usize;
    for (offset, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(offset, format!("byte {b} outside 63..=126")));
        }
        let six = b - 63;
        for shift in (0..6).rev() {
            let set = six >> shift & 1 == 1;
            if bit >= nbits {
                if set {
                    return Err(err(offset, "nonzero padding bit"));
                }
            } else if set {
                let (i, j) = bit_position(bit);
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    Graph::from_adjacency(n, adj)
}

// Inverse of the column-wise enumeration: bit index -> (row, column).
fn bit_position(index: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= index {
        start += j;
        j += 1;
    }
    (index - start, j)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Unsupported {
            what: "graph6 vertex count",
            actual: n,
            limit: GRAPH6_MAX_N,
        });
    }
    let mut out = String::with_capacity(1 + (n * n / 12) + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
