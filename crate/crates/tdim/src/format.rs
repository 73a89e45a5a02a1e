//! Bit-exact file formats: the plain edge-list format and graph6.

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v` with `0 <= u,v < n` and `u != v`. Duplicate edges are an error.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(1, "expected vertex count"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(1, "expected edge count"))?;
    if it.next().is_some() {
        return Err(parse_err(1, "trailing tokens after \"n m\""));
    }

    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "expected \"u v\""))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "expected \"u v\""))?;
        if it.next().is_some() {
            return Err(parse_err(line_no, "trailing tokens after \"u v\""));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            0,
            &format!("header declares {} edges, found {}", m, edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::EdgeListParse {
        line,
        msg: msg.to_string(),
    }
}

/// Renders a graph in the edge-list format with canonically ordered edges.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

/// Parses the standard graph6 encoding.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6Parse("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6Parse(format!("invalid byte 0x{:02x}", b)));
        }
    }
    let (n, pos) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Error::Graph6Parse("truncated order field".into()));
        }
        if bytes[1] == b'~' {
            return Err(Error::Graph6Parse("orders above 258047 unsupported".into()));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };

    let pairs = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let needed = pairs.div_ceil(6);
    if bytes.len() - pos < needed {
        return Err(Error::Graph6Parse("truncated bit stream".into()));
    }
    if bytes.len() - pos > needed {
        return Err(Error::Graph6Parse("trailing data".into()));
    }

    let mut edges = Vec::new();
    let mut bit_idx = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + bit_idx / 6] - 63;
            if byte & (1 << (5 - bit_idx % 6)) != 0 {
                edges.push((u, v));
            }
            bit_idx += 1;
        }
    }
    // padding bits must be zero
    while bit_idx < needed * 6 {
        let byte = bytes[pos + bit_idx / 6] - 63;
        if byte & (1 << (5 - bit_idx % 6)) != 0 {
            return Err(Error::Graph6Parse("nonzero padding bits".into()));
        }
        bit_idx += 1;
    }
    Graph::new(n, &edges)
}

/// Writes the standard graph6 encoding.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        bytes.push(b'~');
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    }
    let mut acc: u8 = 0;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            used += 1;
            if used == 6 {
                bytes.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        acc <<= 6 - used;
        bytes.push(63 + acc);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ascii")
}
