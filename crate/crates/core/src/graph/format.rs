use super::SimpleGraph;
use crate::error::{Error, Result};

/// Parses the plain edge-list format.
///
/// One edge `u v` per line. An optional `n <vertex_count>` line fixes the
/// vertex count; without it the count is one more than the largest endpoint.
/// Blank lines and anything after `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] => {
                if declared.is_some() {
                    return Err(Error::format(line_no, "duplicate `n` header"));
                }
                declared = Some((parse_nat(count, line_no)?, line_no));
            }
            [u, v] => {
                let u = parse_nat(u, line_no)?;
                let v = parse_nat(v, line_no)?;
                if u == v {
                    return Err(Error::format(line_no, format!("loop edge {u} {v}")));
                }
                pairs.push((u, v, line_no));
            }
            _ => {
                return Err(Error::format(
                    line_no,
                    format!("expected `u v` or `n <count>`, got {line:?}"),
                ))
            }
        }
    }

    let inferred = pairs
        .iter()
        .map(|&(u, v, _)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let n = match declared {
        Some((n, header_line)) => {
            if let Some(&(u, v, line)) = pairs.iter().find(|&&(u, v, _)| u.max(v) >= n) {
                return Err(Error::format(
                    line,
                    format!("edge {u} {v} exceeds declared vertex count {n} (line {header_line})"),
                ));
            }
            n
        }
        None => inferred,
    };

    let mut g = SimpleGraph::new(n);
    for (u, v, _) in pairs {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

fn parse_nat(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::format(line, format!("not a nonnegative integer: {tok:?}")))
}

/// Writes the edge-list format with an explicit `n` header.
pub fn to_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes a single graph6 line.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let s = text.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::format(
            1,
            format!(
                "invalid graph6 character {:?} at offset {pos}",
                bytes[pos] as char
            ),
        ));
    }
    let (n, body) = decode_size(bytes)?;

    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if body.len() < byte_count {
        return Err(Error::format(
            1,
            format!(
                "truncated graph6 payload: need {byte_count} bytes, have {}",
                body.len()
            ),
        ));
    }
    if body.len() > byte_count {
        return Err(Error::format(1, "trailing bytes after graph6 payload"));
    }

    let mut g = SimpleGraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let value = |chunk: &[u8]| {
        chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    match bytes {
        [] => Err(Error::format(1, "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::format(1, "truncated graph6 size field"));
            }
            Ok((value(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::format(1, "truncated graph6 size field"));
            }
            Ok((value(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

/// Encodes a graph as graph6 (no header, no trailing newline).
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(super::Edge::new(i, j)) {
                acc |= 1;
            }
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
