//! graph6 encoding and decoding. Header-less single-byte size form only
//! (n <= 62 in the format; n <= 32 accepted here). Bits run over the upper
//! triangle of the adjacency matrix column by column: (0,1), (0,2), (1,2),
//! (0,3), (1,3), (2,3), ...

use super::{SimpleGraph, MAX_VERTICES};
use crate::{Error, Result};

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes a graph6 string. An optional `>>graph6<<` header and a single
/// trailing newline are tolerated; anything else unexpected is an error
/// naming the byte offset.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let mut bytes = text.as_bytes();
    let mut base = 0usize;
    if let Some(stripped) = bytes.strip_suffix(b"\n") {
        bytes = stripped;
    }
    const HEADER: &[u8] = b">>graph6<<";
    if bytes.first() == Some(&b'>') {
        if bytes.len() >= HEADER.len() && &bytes[..HEADER.len()] == HEADER {
            bytes = &bytes[HEADER.len()..];
            base = HEADER.len();
        } else {
            return Err(err(0, "malformed >>graph6<< header"));
        }
    }
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }
    let first = bytes[0];
    if first == 126 {
        return Err(err(
            base,
            "multi-byte vertex counts (n > 62) are not supported",
        ));
    }
    if !(63..=125).contains(&first) {
        return Err(err(base, format!("size byte {first} out of range 63..=125")));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(err(base, format!("{n} vertices exceeds the supported maximum {MAX_VERTICES}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nbytes {
        return Err(err(
            base + 1 + body.len(),
            format!("truncated: need {nbytes} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > nbytes {
        return Err(err(base + 1 + nbytes, "trailing garbage"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for v in 1..n as u8 {
        for u in 0..v {
            let byte = body[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(err(
                    base + 1 + bit / 6,
                    format!("data byte {byte} out of range 63..=126"),
                ));
            }
            let val = byte - 63;
            if (val >> (5 - bit % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // validate padding bits and byte ranges of any remaining bytes
    for (i, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(err(base + 1 + i, format!("data byte {byte} out of range 63..=126")));
        }
    }
    if nbytes > 0 {
        let pad = nbytes * 6 - nbits;
        let lastval = body[nbytes - 1] - 63;
        if pad > 0 && lastval & ((1 << pad) - 1) != 0 {
            return Err(err(base + nbytes, "nonzero padding bits"));
        }
    }
    SimpleGraph::new(n, edges)
}

/// Encodes a graph in graph6 format.
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let mut out = vec![0u8; 1 + nbytes];
    out[0] = 63 + n as u8;
    let adj = g.adjacency();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if adj[v] >> u & 1 == 1 {
                out[1 + bit / 6] |= 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    for b in &mut out[1..] {
        *b += 63;
    }
    String::from_utf8(out).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_roundtrip() {
        // "A_" is the 2-vertex graph with one edge
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(to_graph6(&g), "A_");
        // and "A?" has no edge
        assert_eq!(parse_graph6("A?").unwrap().edge_count(), 0);
    }

    #[test]
    fn triangle_bit_layout() {
        // oracle: re-encode and compare the bit layout for K3
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(to_graph6(&g), "Bw");
    }

    #[test]
    fn known_strings() {
        // 5-vertex, 4-edge graph from the petgraph test suite
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn parse_errors_name_offsets() {
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("B"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("Bww"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(parse_graph6("B\x1f").is_err());
        assert!(parse_graph6(">>graph5<<Bw").is_err());
        assert!(parse_graph6(">>graph6<<Bw").is_ok());
        assert!(parse_graph6("Bw\n").is_ok());
        // 63-vertex graphs use a multi-byte size we reject
        assert!(parse_graph6("~??").is_err());
    }

    #[test]
    fn roundtrip_random_graphs() {
        use rand::Rng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        use rand::SeedableRng;
        for _ in 0..200 {
            let n = rng.random_range(0..=9usize);
            let mut edges = Vec::new();
            for u in 0..n as u8 {
                for v in u + 1..n as u8 {
                    if rng.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = SimpleGraph::new(n, edges).unwrap();
            let s = to_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
