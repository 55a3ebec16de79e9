//! graph6 text encoding (orders up to 62, so the one-byte size prefix).

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

/// Encodes `g`: size byte `n + 63`, then the upper triangle column by column
/// (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per byte, plus 63.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

fn bad(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line break are accepted; padding bits must be zero.
pub fn decode(text: &str) -> Result<Graph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match body.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(bad(skip, "empty input"));
    };
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(bad(skip + i, format!("byte 0x{:02x} outside graph6 range", bytes[i])));
    }
    if first == 126 {
        return Err(bad(skip, "multi-byte order prefix: order exceeds 62"));
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(bad(
            skip + bytes.len().min(expected),
            format!("expected {expected} bytes for order {n}, found {}", bytes.len()),
        ));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(bad(skip + expected - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}
