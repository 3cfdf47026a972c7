//! The graph6 text format for small simple graphs.
//!
//! One graph per printable ASCII string: the first byte holds the order as
//! `n + 63` (for `n <= 62`), the rest pack the upper-triangle adjacency bits
//! column by column -- `x(0,1), x(0,2), x(1,2), x(0,3), ..` -- six bits per
//! byte, most significant first, each byte offset by 63. Emission pads the
//! final group with zero bits; parsing ignores padding. The optional
//! `>>graph6<<` header is accepted and skipped on input, never written.

use crate::graph::{SmallGraph, MAX_VERTICES};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    OrderTooLarge(usize),
    #[error("truncated graph6 string: need {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing graph6 data at offset {0}")]
    TrailingData(usize),
}

pub fn parse_graph6(s: &str) -> Result<SmallGraph, Graph6Error> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let b0 = bytes[0];
    if !(63..=126).contains(&b0) {
        return Err(Graph6Error::InvalidByte { offset: 0, byte: b0 });
    }
    if b0 == 126 {
        // multi-byte order encoding, necessarily beyond our capacity
        return Err(Graph6Error::OrderTooLarge(63));
    }
    let n = (b0 - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData(1 + expected));
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: 1 + i,
                byte: b,
            });
        }
    }
    let mut edges = Vec::new();
    let mut p = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[p / 6] - 63;
            if byte & (1 << (5 - p % 6)) != 0 {
                edges.push((i, j));
            }
            p += 1;
        }
    }
    Ok(SmallGraph::from_edge_list(n, &edges).expect("validated order and endpoints"))
}

pub fn emit_graph6(g: &SmallGraph) -> String {
    let n = g.order();
    debug_assert!(n <= 62);
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
