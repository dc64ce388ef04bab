//! graph6 encoding and decoding.
//!
//! Size header: one byte `n + 63` for `n <= 62`, otherwise `~` followed by
//! three bytes carrying `n` in 18 bits (big-endian 6-bit groups). The body
//! is the upper triangle read column by column (`(0,1),(0,2),(1,2),(0,3),...`),
//! packed six bits per byte, each byte offset by 63, last byte zero-padded.
//! The 36-bit header form (`~~`) is rejected since it cannot fit in a
//! 512-vertex graph.

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
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

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(parse_err(offset, format!("byte {b} outside 63..=126"))),
        None => Err(parse_err(offset, "unexpected end of input")),
    }
}

/// Decodes one graph6 record. A single trailing newline is tolerated.
pub fn decode(s: &[u8]) -> Result<Graph> {
    let s = s.strip_suffix(b"\n").unwrap_or(s);
    let s = s.strip_suffix(b"\r").unwrap_or(s);
    if s.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    let (n, mut pos) = if s[0] == 126 {
        if s.get(1) == Some(&126) {
            return Err(parse_err(1, "36-bit size header not supported"));
        }
        let a = sixbits(s, 1)? as usize;
        let b = sixbits(s, 2)? as usize;
        let c = sixbits(s, 3)? as usize;
        let n = (a << 12) | (b << 6) | c;
        if n <= 62 {
            return Err(parse_err(0, format!("long size header used for n={n}")));
        }
        (n, 4)
    } else {
        (sixbits(s, 0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(parse_err(0, format!("n={n} exceeds capacity {MAX_VERTICES}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    if s.len() != pos + body_len {
        return Err(parse_err(
            s.len().min(pos + body_len),
            format!("expected {} bytes for n={n}, found {}", pos + body_len, s.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                cur = sixbits(s, pos)?;
                pos += 1;
            }
            if cur & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad = 6 - k % 6;
        if cur & ((1u8 << pad) - 1) != 0 {
            return Err(parse_err(pos - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn decode_str(s: &str) -> Result<Graph> {
    decode(s.as_bytes())
}

/// Decodes every non-empty line; errors carry the offset within the whole input.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut base = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            let g = decode(trimmed.as_bytes()).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: base + offset,
                    message,
                },
                other => other,
            })?;
            out.push(g);
        }
        base += line.len();
    }
    Ok(out)
}
