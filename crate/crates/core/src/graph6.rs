//! graph6 encoding and decoding.
//!
//! The format packs the upper triangle of the adjacency matrix column by
//! column (x₀₁, x₀₂, x₁₂, x₀₃, …) into 6-bit groups offset by 63, preceded
//! by the vertex count (one byte for n ≤ 62, `~` plus three bytes up to
//! n = 258047). Decoding is strict: exact length, printable range and zero
//! padding bits are all required, so round-trips are bit-exact.

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#04x} outside the graph6 range 63..=126")]
    InvalidByte(u8),
    #[error("truncated graph6 string: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after {expected} data bytes")]
    TrailingData { expected: usize },
    #[error("padding bits are not zero")]
    NonzeroPadding,
    #[error("graph order {0} exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    UnsupportedOrder(usize),
    #[error("graph orders above 258047 are not part of the short graph6 form")]
    OrderOutOfRange,
}

/// Encodes a graph as a graph6 string.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // n ≤ 64 here, but emit the standard 18-bit form
        out.push(b'~');
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes a graph6 string. An optional `>>graph6<<` header is accepted.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte(b));
        }
    }
    let (n, header_len) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Graph6Error::OrderOutOfRange);
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { expected });
    }
    let mut g = Graph::empty(n).map_err(|_| Graph6Error::UnsupportedOrder(n))?;
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit_index / 6] - 63;
            if (byte >> (5 - bit_index % 6)) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            bit_index += 1;
        }
    }
    // nauty pads the final group with zero bits; anything else is corrupt
    if nbits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}
