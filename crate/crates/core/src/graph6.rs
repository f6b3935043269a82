//! graph6 text encoding for simple graphs.
//!
//! Header byte `n + 63`, then the upper triangle read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed big-endian into 6-bit groups
//! each offset by 63. Only the single-byte size header is produced, which
//! covers every graph this crate handles.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if let Some(&(u, v)) = g.edge_pairs().iter().find(|&&(u, v)| g.multiplicity(u, v) > 1) {
        return Err(Error::NotSimple(u, v));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
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

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let s = text.strip_suffix('\n').unwrap_or(text);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("malformed header byte {head:#04x}")));
    }
    if head == 126 {
        return Err(Error::Graph6(format!("graphs above {MAX_VERTICES} vertices are not supported")));
    }
    let n = (head - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < need {
        return Err(Error::Graph6(format!("truncated: expected {need} data bytes, found {}", body.len())));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!("trailing garbage after {need} data bytes")));
    }
    let mut bitvec = Vec::with_capacity(need * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("malformed data byte {b:#04x}")));
        }
        let x = b - 63;
        for k in (0..6).rev() {
            bitvec.push(x >> k & 1 == 1);
        }
    }
    if bitvec[nbits..].iter().any(|&b| b) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bitvec[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}
