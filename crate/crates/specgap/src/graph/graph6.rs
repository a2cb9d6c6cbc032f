//! The graph6 text encoding: a size prefix followed by the upper triangle of
//! the adjacency matrix, taken column by column, packed into 6-bit groups
//! offset by 63.

use super::{make_graph, Graph, GraphError};

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextet(byte: u8) -> Result<usize, GraphError> {
    if (63..=126).contains(&byte) {
        Ok((byte - 63) as usize)
    } else {
        Err(GraphError::Graph6(format!("byte {byte} outside 63..=126")))
    }
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".into()));
    }
    let (n, body) = if bytes[0] != 126 {
        (sextet(bytes[0])?, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(GraphError::Graph6("truncated size prefix".into()));
        }
        let mut n = 0;
        for &b in &bytes[1..4] {
            n = (n << 6) | sextet(b)?;
        }
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(GraphError::Graph6("truncated size prefix".into()));
        }
        let mut n = 0;
        for &b in &bytes[2..8] {
            n = (n << 6) | sextet(b)?;
        }
        (n, &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let value = sextet(body[k / 6])?;
            if (value >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(body[expected - 1])?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(GraphError::Graph6("nonzero padding bits".into()));
        }
    }
    make_graph(n, &edges)
}
