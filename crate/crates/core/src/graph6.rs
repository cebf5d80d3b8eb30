//! The graph6 text encoding: a size header followed by the upper triangle of
//! the adjacency matrix in column order, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::set::VertexSet;

const BIAS: u8 = 63;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63].map(|b| b + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.nbrs(j);
        for i in 0..j {
            acc = acc << 1 | row.contains(i) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=BIAS + 63).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(err(offset, format!("byte {b:#04x} outside graph6 range"))),
        None => Err(err(offset, "unexpected end of input")),
    }
}

/// Parses one graph6 line. A trailing `\n` or `\r\n` is tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(err(1, "orders above 258047 are unsupported"));
        }
        let n = (0..3).try_fold(0usize, |n, k| Ok::<_, Error>(n << 6 | sextet(bytes, 1 + k)? as usize))?;
        (n, 4)
    } else {
        (sextet(bytes, 0)? as usize, 1)
    };
    if n == 0 || n > MAX_ORDER {
        return Err(err(0, format!("order {n} outside 1..=64")));
    }
    for offset in pos..bytes.len() {
        sextet(bytes, offset)?;
    }
    let bits = n * (n - 1) / 2;
    let body = bits.div_ceil(6);
    if bytes.len() != pos + body {
        return Err(err(
            bytes.len().min(pos + body),
            format!("expected {body} body bytes for order {n}, found {}", bytes.len() - pos),
        ));
    }
    let mut rows = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                cur = sextet(bytes, pos)?;
                pos += 1;
            }
            if cur >> (5 - k % 6) & 1 == 1 {
                rows[i] = rows[i].with(j);
                rows[j] = rows[j].with(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad = 6 - k % 6;
        if cur & ((1 << pad) - 1) != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    Graph::from_rows(rows)
}
