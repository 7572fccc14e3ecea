//! graph6 codec, short form only (order <= 62).
//!
//! Layout: one byte `63 + n`, then `ceil(C(n,2) / 6)` bytes, each `63 +` a
//! 6-bit group of the upper-triangle bit vector in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, most significant bit first,
//! zero-padded at the end.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {0:#x} outside the graph6 range [63, 126]")]
    ByteOutOfRange(u8),
    #[error("expected {expected} bytes for order {n}, got {got}")]
    BadLength { n: usize, expected: usize, got: usize },
    #[error("nonzero padding bits")]
    BadPadding,
    #[error("order {0} too large for the short graph6 form (max 62)")]
    OrderTooLarge(usize),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange(b));
        }
    }
    let n = (bytes[0] - 63) as usize;
    if bytes[0] == 126 {
        // long-form order prefix
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let expected = 1 + body_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            got: bytes.len(),
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit_index / 6] - 63;
            let bit = byte >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index == nbits {
                break 'outer;
            }
        }
    }
    // trailing padding must be zero
    let total_bits = body_len(n) * 6;
    for k in nbits..total_bits {
        let byte = bytes[1 + k / 6] - 63;
        if byte >> (5 - k % 6) & 1 == 1 {
            return Err(Graph6Error::BadPadding);
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded indices are in range"))
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut bytes = vec![63 + n as u8];
    bytes.extend(std::iter::repeat(63u8).take(body_len(n)));
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                bytes[1 + bit_index / 6] += 1 << (5 - bit_index % 6);
            }
            bit_index += 1;
        }
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ASCII"))
}
