//! graph6 and plain edge-list encodings.
//!
//! graph6: the order `n` is one byte `n + 63` for `n <= 62`, otherwise `~`
//! followed by three bytes carrying 18 bits. The upper triangle follows
//! column by column (`(0,1), (0,2), (1,2), (0,3), ..`), six bits per byte,
//! most significant first, zero padded, each byte offset by 63.
//!
//! Edge list: the order on the first line, then one `u v` pair per line.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(2 + n * n / 12);
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    out
}

/// Parses one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted; anything else is rejected.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err("empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(format!("byte {:#04x} at offset {pos} outside 63..=126", bytes[pos])));
    }
    let (n, body) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(g6_err("truncated order header"));
        }
        if bytes[1] == 126 {
            return Err(g6_err("eight-byte order header (order > 258047) is unsupported"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= 62 {
            return Err(g6_err(format!("non-canonical long header for order {n}")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!("expected {expected} data bytes for order {n}, found {}", body.len())));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses a file of graph6 strings, one per non-blank line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty()).map(parse_graph6).collect()
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let el = |m: String| Error::EdgeList(m);
    let mut tokens = text.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| el("missing vertex count".into()))?
        .parse()
        .map_err(|_| el("vertex count is not a nonnegative integer".into()))?;
    let mut g = Graph::new(n)?;
    let rest: Vec<&str> = tokens.collect();
    if !rest.len().is_multiple_of(2) {
        return Err(el(format!("dangling endpoint {:?}", rest[rest.len() - 1])));
    }
    for pair in rest.chunks(2) {
        let parse = |t: &str| t.parse::<usize>().map_err(|_| el(format!("bad vertex {t:?}")));
        g.try_add_edge(parse(pair[0])?, parse(pair[1])?)?;
    }
    Ok(g)
}

/// Reads either encoding: text starting with a digit is an edge list,
/// anything else graph6.
pub fn parse_any(text: &str) -> Result<Graph> {
    match text.trim_start().chars().next() {
        Some(c) if c.is_ascii_digit() => parse_edgelist(text),
        _ => parse_graph6(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty, star};

    #[test]
    fn small_graph6_literals() {
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        assert_eq!(parse_graph6("A?").unwrap(), empty(2));
        assert_eq!(emit_graph6(&empty(5)), "D??");
        assert_eq!(emit_graph6(&complete(2)), "A_");
        assert_eq!(emit_graph6(&empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap(), empty(0));
    }

    #[test]
    fn known_encodings() {
        // 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(emit_graph6(&cycle(5)), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), cycle(5));
    }

    #[test]
    fn long_header() {
        let g = star(64);
        let s = emit_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g = complete(63);
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A_?").is_err()); // trailing garbage
        assert!(parse_graph6("D?").is_err()); // truncated
        assert!(parse_graph6("A`").is_err()); // padding bit set
        assert!(parse_graph6("A\x7f").is_err());
        assert!(parse_graph6("~??~").is_err()); // long header for a small order
        assert!(matches!(parse_graph6("~?@@"), Err(Error::OrderTooLarge(65))));
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), complete(2));
    }

    #[test]
    fn edgelist_roundtrip_and_errors() {
        let text = "5\n0 1\n0 4\n1 2\n2 3\n3 4\n";
        let g = parse_edgelist(text).unwrap();
        assert_eq!(g, cycle(5));
        assert_eq!(emit_edgelist(&g), text);
        assert!(parse_edgelist("").is_err());
        assert!(parse_edgelist("3\n0 1\n2").is_err());
        assert!(parse_edgelist("3\n0 3").is_err());
        assert!(parse_edgelist("3\n1 1").is_err());
        assert!(parse_edgelist("3\n0 1\n1 0").is_err());
        assert!(parse_edgelist("x").is_err());
    }

    #[test]
    fn parse_any_dispatch() {
        assert_eq!(parse_any("A_").unwrap(), complete(2));
        assert_eq!(parse_any("2\n0 1\n").unwrap(), complete(2));
    }
}
