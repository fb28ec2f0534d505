//! graph6 text encoding.
//!
//! Layout: one size byte `n + 63` (or `126` followed by three 6-bit groups for
//! `63 <= n <= 258047`), then the upper triangle of the adjacency matrix in
//! column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per
//! byte, most significant bit first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

/// Largest order written in the one-byte size form.
pub const SHORT_FORM_MAX: usize = 62;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    let malformed = |offset: usize, reason: String| Error::Malformed {
        offset: base + offset,
        reason,
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(
                i,
                format!("byte 0x{b:02x} is outside the graph6 range"),
            ));
        }
    }
    let (n, mut pos) = match body {
        [] => return Err(malformed(0, "empty input".into())),
        [126, 126, ..] => return Err(malformed(0, "8-byte size form is not supported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed(body.len(), "truncated size field".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n == 0 {
        return Err(malformed(0, "graphs must have at least one vertex".into()));
    }
    if n > MAX_ORDER {
        return Err(malformed(
            0,
            format!("order {n} exceeds the supported maximum {MAX_ORDER}"),
        ));
    }
    let bits = n * (n - 1) / 2;
    let needed = bits.div_ceil(6);
    let data = &body[pos..];
    if data.len() != needed {
        let offset = pos + data.len().min(needed);
        return Err(malformed(
            offset,
            format!(
                "expected {needed} data bytes for order {n}, found {}",
                data.len()
            ),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(malformed(body.len() - 1, "nonzero padding bits".into()));
        }
    }
    pos += needed;
    debug_assert_eq!(pos, body.len());
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > SHORT_FORM_MAX {
        return Err(Error::InvalidParameter(format!(
            "graph6 output is limited to order <= {SHORT_FORM_MAX}, got {n}"
        )));
    }
    Ok(encode_short(n, |i, j| g.has_edge(i, j)))
}

/// Encodes an order-`n` graph given its upper-triangle predicate.
pub(crate) fn encode_short(n: usize, edge: impl Fn(usize, usize) -> bool) -> String {
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
