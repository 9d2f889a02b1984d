//! Text encodings: graph6 lines and the plain `n m` edge-list format.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut String) {
    let n = n as u64;
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&c) if (63..=126).contains(&c) => Ok((c - BIAS) as u64),
        Some(&c) => Err(Error::parse(at, format!("byte {c:#04x} outside the graph6 range 63..=126"))),
        None => Err(Error::parse(at, "truncated input")),
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = sextet(bytes, 0)?;
    if first != 63 {
        return Ok((first as usize, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    let mut n = 0u64;
    for i in 0..width {
        n = n << 6 | sextet(bytes, start + i)?;
    }
    Ok((n as usize, start + width))
}

/// Encodes `g` as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminators are accepted; anything else out of place is an error carrying
/// the byte offset.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(skip, "empty graph6 string"));
    }
    let shift = |e: Error| match e {
        Error::Parse { offset, message } => Error::Parse { offset: offset + skip, message },
        other => other,
    };
    if let Some(at) = bytes.iter().position(|c| !(63..=126).contains(c)) {
        return Err(shift(sextet(bytes, at).unwrap_err()));
    }
    let (n, header_len) = decode_size(bytes).map_err(shift)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header_len + bits.div_ceil(6);
    if bytes.len() > expected {
        return Err(shift(Error::parse(expected, format!("trailing data after {expected} bytes"))));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let at = header_len + k / 6;
            let word = sextet(bytes, at).map_err(shift)?;
            if word >> (5 - k % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let at = header_len + bits / 6;
        let pad = 6 - bits % 6;
        if sextet(bytes, at).map_err(shift)? & ((1 << pad) - 1) != 0 {
            return Err(shift(Error::parse(at, "nonzero padding bits")));
        }
    }
    Ok(g)
}

/// Reads a stream of graph6 lines, skipping blank lines. Errors carry the
/// 1-based line number in the message.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut base = 0;
    for (no, line) in text.split_inclusive('\n').enumerate() {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            out.push(parse_graph6(trimmed).map_err(|e| match e {
                Error::Parse { offset, message } => {
                    Error::Parse { offset: base + offset, message: format!("line {}: {message}", no + 1) }
                }
                other => other,
            })?);
        }
        base += line.len();
    }
    Ok(out)
}

/// `n m` header followed by one `u v` line per edge, `u < v`.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_ascii_whitespace().map(move |tok| (tok.as_ptr() as usize - text.as_ptr() as usize, tok))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut toks = tokens(text);
    let mut number = |what: &str| -> Result<(usize, usize)> {
        match toks.next() {
            Some((at, tok)) => tok
                .parse::<usize>()
                .map(|v| (at, v))
                .map_err(|_| Error::parse(at, format!("expected {what}, found {tok:?}"))),
            None => Err(Error::parse(text.len(), format!("expected {what}, found end of input"))),
        }
    };
    let (_, n) = number("vertex count")?;
    let (_, m) = number("edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut offsets = Vec::with_capacity(m);
    for _ in 0..m {
        let (at, u) = number("edge endpoint")?;
        let (_, v) = number("edge endpoint")?;
        edges.push((u, v));
        offsets.push(at);
    }
    if let Some((at, tok)) = toks.next() {
        return Err(Error::parse(at, format!("unexpected trailing token {tok:?}")));
    }
    // Re-run validation edge by edge so errors point at the offending line.
    let mut g = Graph::empty(n);
    for (&(u, v), &at) in edges.iter().zip(&offsets) {
        let bad = |e: Error| Error::parse(at, e.to_string());
        if u >= n || v >= n {
            return Err(bad(Error::VertexOutOfRange { vertex: u.max(v), n }));
        }
        if u == v {
            return Err(bad(Error::SelfLoop(u)));
        }
        if g.adjacent(u, v) {
            return Err(bad(Error::DuplicateEdge(u.min(v), u.max(v))));
        }
        g.add_edge_unchecked(u, v);
    }
    Ok(g)
}

/// Parses a graph file in either format: an edge list if the first
/// non-blank line holds two integers, otherwise a single graph6 line.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let fields: Vec<&str> = first.split_whitespace().collect();
    if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
        parse_edge_list(text)
    } else {
        let offset = first.as_ptr() as usize - text.as_ptr() as usize;
        parse_graph6(first.trim()).map_err(|e| match e {
            Error::Parse { offset: o, message } => Error::Parse { offset: offset + o, message },
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_decoded_star() {
        // 'D' -> n = 5; '?' = 000000, '{' = 111100: bits for (0,4),(1,4),(2,4),(3,4).
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::petersen()).len(), 1 + 45usize.div_ceil(6));
    }

    #[test]
    fn large_size_header() {
        let g = Graph::path(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6(""), Err(Error::Parse { offset: 0, message: "empty graph6 string".into() }));
        match parse_graph6("D?") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("D? {") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("D?{?") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        // Last sextet of a 5-vertex graph has two padding bits.
        assert!(parse_graph6("D?~").is_err());
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(parse_graph6(">>graph6<<D?{\n").unwrap(), parse_graph6("D?{").unwrap());
    }

    #[test]
    fn corpus_skips_blank_lines() {
        let gs = parse_graph6_corpus("@\n\nD?{\r\nC~\n").unwrap();
        assert_eq!(gs.len(), 3);
        assert!(parse_graph6_corpus("@\nD!\n").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_rejects_multigraphs() {
        let err = parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 8, .. }), "{err:?}");
        assert!(parse_edge_list("3 1\n2 2\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
    }

    #[test]
    fn auto_detects_format() {
        assert_eq!(parse_graph_auto("3 2\n0 1\n1 2\n").unwrap(), Graph::path(3));
        assert_eq!(parse_graph_auto("D?{\n").unwrap().edge_count(), 4);
    }
}
