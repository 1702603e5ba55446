//! graph6 encoding (McKay's format, single-byte order only).
//!
//! For `n <= 62` the first byte is `n + 63`. The upper-triangle adjacency
//! bits follow in column-major pair order (0,1), (0,2), (1,2), (0,3), ...,
//! packed big-endian into 6-bit groups, zero-padded to a multiple of six,
//! each group offset by 63 into printable ASCII. Decoding rejects anything
//! that would not re-encode to the identical bytes.

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const MAX_G6_VERTICES: usize = 62;

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_G6_VERTICES {
        return Err(Error::Graph6(format!(
            "single-byte graph6 covers n <= {MAX_G6_VERTICES}, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + (n * n) / 12 + 1);
    out.push(OFFSET + n as u8);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | (g.rows()[i] >> j & 1) as u8;
            bits += 1;
            if bits == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(OFFSET + (acc << (6 - bits)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if bytes[0] == b'~' {
        return Err(Error::Graph6(
            "multi-byte vertex counts (n > 62) not supported".into(),
        ));
    }
    if bytes[0] < OFFSET || bytes[0] > OFFSET + MAX_G6_VERTICES as u8 {
        return Err(Error::Graph6(format!("bad leading byte {}", bytes[0])));
    }
    let n = (bytes[0] - OFFSET) as usize;
    let pair_count = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let expected = 1 + pair_count.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} bytes for n = {n}, got {}",
            bytes.len()
        )));
    }
    for &b in &bytes[1..] {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside graph6 range")));
        }
    }
    let mut rows = vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + idx / 6] - OFFSET;
            let bit = byte >> (5 - idx % 6) & 1;
            if bit == 1 {
                rows[i] |= 1u64 << j;
                rows[j] |= 1u64 << i;
            }
            idx += 1;
        }
    }
    // Padding bits must be zero or the round trip would not be the
    // identity on bytes.
    while idx % 6 != 0 {
        let byte = bytes[1 + idx / 6] - OFFSET;
        if byte >> (5 - idx % 6) & 1 != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
        idx += 1;
    }
    Graph::from_rows(n, rows)
}
