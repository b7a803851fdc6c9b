//! Bit-exact graph6 codec, short form only (graphs of order at most 62).
//!
//! Layout: byte 0 is `n + 63`; the body is the upper triangle of the
//! adjacency matrix read column by column (entry (i, j) with i < j, in
//! order j = 1..n-1, i = 0..j-1), packed big-endian into 6-bit groups,
//! zero-padded to a multiple of six, each group offset by 63 into one
//! printable byte. Files hold one graph per line.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph6Error {
    /// Byte offset of the first offending byte within the input line.
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    EmptyInput,
    /// Header does not encode an order in 0..=62 (the long forms starting
    /// at '~' are unsupported).
    UnsupportedHeader { byte: u8 },
    InvalidBodyByte { byte: u8 },
    /// Line shorter than the body the header promises.
    Truncated { expected_len: usize, actual_len: usize },
    /// Line longer than the body the header promises.
    TrailingData { expected_len: usize },
    /// Padding bits after the triangle are required to be zero.
    NonzeroPadding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Graph6ErrorKind::EmptyInput => write!(f, "byte {}: empty graph6 line", self.offset),
            Graph6ErrorKind::UnsupportedHeader { byte } => write!(
                f,
                "byte {}: header byte {byte} does not encode an order of at most {MAX_VERTICES}",
                self.offset
            ),
            Graph6ErrorKind::InvalidBodyByte { byte } => {
                write!(f, "byte {}: body byte {byte} outside 63..=126", self.offset)
            }
            Graph6ErrorKind::Truncated { expected_len, actual_len } => write!(
                f,
                "byte {}: line truncated ({actual_len} bytes, header promises {expected_len})",
                self.offset
            ),
            Graph6ErrorKind::TrailingData { expected_len } => write!(
                f,
                "byte {}: trailing data (header promises {expected_len} bytes)",
                self.offset
            ),
            Graph6ErrorKind::NonzeroPadding => {
                write!(f, "byte {}: nonzero padding bits", self.offset)
            }
        }
    }
}

impl core::error::Error for Graph6Error {}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes a graph as one graph6 line (without a trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(group + 63);
                group = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((group << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. Errors carry the byte offset of the first
/// offending byte.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(Graph6Error { offset: 0, kind: Graph6ErrorKind::EmptyInput });
    };
    if !(63..=63 + MAX_VERTICES as u8).contains(&header) {
        return Err(Graph6Error {
            offset: 0,
            kind: Graph6ErrorKind::UnsupportedHeader { byte: header },
        });
    }
    let n = (header - 63) as usize;
    let expected_len = 1 + body_len(n);
    if bytes.len() < expected_len {
        return Err(Graph6Error {
            offset: bytes.len(),
            kind: Graph6ErrorKind::Truncated { expected_len, actual_len: bytes.len() },
        });
    }
    if bytes.len() > expected_len {
        return Err(Graph6Error {
            offset: expected_len,
            kind: Graph6ErrorKind::TrailingData { expected_len },
        });
    }

    let mut adj = vec![0u64; n];
    let mut byte_idx = 0usize;
    let mut group = 0u8;
    let mut bits_left = 0u32;
    for j in 1..n {
        for i in 0..j {
            if bits_left == 0 {
                byte_idx += 1;
                let b = bytes[byte_idx];
                if !(63..=126).contains(&b) {
                    return Err(Graph6Error {
                        offset: byte_idx,
                        kind: Graph6ErrorKind::InvalidBodyByte { byte: b },
                    });
                }
                group = b - 63;
                bits_left = 6;
            }
            if group >> (bits_left - 1) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bits_left -= 1;
        }
    }
    // The remaining low bits of the final group are padding.
    if bits_left > 0 && group & ((1 << bits_left) - 1) != 0 {
        return Err(Graph6Error { offset: byte_idx, kind: Graph6ErrorKind::NonzeroPadding });
    }
    Ok(Graph::from_adjacency(n, adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    #[test]
    fn known_vectors() {
        // Order 5, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);

        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(decode("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");

        // K_4: six edges, body 111111 -> '~'.
        assert_eq!(encode(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(decode("").unwrap_err().kind, Graph6ErrorKind::EmptyInput);
        // '~' opens the unsupported long form.
        assert_eq!(
            decode("~??").unwrap_err(),
            Graph6Error { offset: 0, kind: Graph6ErrorKind::UnsupportedHeader { byte: b'~' } }
        );
        assert!(matches!(
            decode("D").unwrap_err().kind,
            Graph6ErrorKind::Truncated { expected_len: 3, .. }
        ));
        assert_eq!(decode("DQcX").unwrap_err().offset, 3);
        assert_eq!(
            decode("C ").unwrap_err(),
            Graph6Error { offset: 1, kind: Graph6ErrorKind::InvalidBodyByte { byte: b' ' } }
        );
        // Header 'A' (n=2) promises one body byte holding a single bit;
        // a body byte with low padding bits set must be rejected.
        assert_eq!(decode("A?").unwrap().edge_count(), 0);
        assert_eq!(decode("A_").unwrap().edge_count(), 1);
        assert_eq!(decode("A~").unwrap_err().kind, Graph6ErrorKind::NonzeroPadding);
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=62, seed in any::<u64>()) {
            // Deterministic pseudo-random edge set over the chosen order.
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 33 & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let line = encode(&g);
            prop_assert!(line.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(decode(&line).unwrap(), g);
        }
    }
}
