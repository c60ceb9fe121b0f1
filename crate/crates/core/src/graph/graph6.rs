//! graph6 codec restricted to single-byte order headers (n ≤ 62).
//!
//! Layout: one header byte `63 + n`, then the upper triangle of the adjacency
//! matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian
//! six bits per byte, each byte offset by 63, the last one zero-padded.

use std::io::BufRead;

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

fn malformed(reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 { line: None, reason: reason.into() }
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Strict decoder: accepts at most one trailing `\n`, nothing else.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let bytes = body.as_bytes();
    let (&head, rest) = bytes.split_first().ok_or_else(|| malformed("empty string"))?;
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b:#04x} outside 63..=126")));
    }
    if head == 126 {
        return Err(Error::Unsupported(format!(
            "extended graph6 header; orders above {MAX_ORDER} are not supported"
        )));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Error::Unsupported("graph6 order 0".into()));
    }
    let expected = payload_len(n);
    if rest.len() != expected {
        return Err(malformed(format!(
            "order {n} needs {expected} payload bytes, found {}",
            rest.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = (rest[k / 6] - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    let bits_total = expected * 6;
    if k < bits_total {
        let last = rest[expected - 1] - 63;
        let pad = bits_total - k;
        if last & ((1 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Reads one graph per nonblank line, tagging errors with 1-based line numbers.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let g = decode_graph6(&line).map_err(|e| match e {
            Error::MalformedGraph6 { reason, .. } => {
                Error::MalformedGraph6 { line: Some(idx + 1), reason }
            }
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn decodes_dqc_by_hand_layout() {
        // 'Q' = 18 = 010010, 'c' = 36 = 100100; pairs in column order:
        // (0,1)0 (0,2)1 (1,2)0 (0,3)0 (1,3)1 (2,3)0 (0,4)1 (1,4)0 (2,4)0 (3,4)1
        let g = decode_graph6("DQc").unwrap();
        let expected = Graph::from_edge_list(5, &[(0, 2), (1, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn k1_is_at_sign() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(encode_graph6(&k1), "@");
        assert_eq!(decode_graph6("@").unwrap(), k1);
    }

    #[test]
    fn known_strings() {
        assert_eq!(encode_graph6(&families::complete(4).unwrap()), "C~");
        assert_eq!(encode_graph6(&families::petersen()), "IheA@GUAo");
    }

    #[test]
    fn accepts_single_trailing_newline_only() {
        assert!(decode_graph6("DQc\n").is_ok());
        assert!(decode_graph6("DQc\n\n").is_err());
        assert!(decode_graph6("DQc ").is_err());
        assert!(decode_graph6(" DQc").is_err());
        assert!(decode_graph6("DQc\r\n").is_err());
    }

    #[test]
    fn rejects_truncation_garbage_and_padding() {
        assert!(matches!(decode_graph6("DQ"), Err(Error::MalformedGraph6 { .. })));
        assert!(matches!(decode_graph6("DQcc"), Err(Error::MalformedGraph6 { .. })));
        assert!(matches!(decode_graph6(""), Err(Error::MalformedGraph6 { .. })));
        // order 3 uses 3 bits; 'A' = 2 = 000010 sets a padding bit
        assert!(matches!(decode_graph6("BA"), Err(Error::MalformedGraph6 { .. })));
        assert!(matches!(decode_graph6("~?@~"), Err(Error::Unsupported(_))));
        assert!(matches!(decode_graph6("?"), Err(Error::Unsupported(_))));
    }

    #[test]
    fn line_reader_reports_line_numbers() {
        let text = "DQc\n@\nD!c\n";
        match read_graph6_lines(text.as_bytes()) {
            Err(Error::MalformedGraph6 { line, .. }) => assert_eq!(line, Some(3)),
            other => panic!("unexpected {other:?}"),
        }
        let ok = read_graph6_lines("DQc\n\n@\n".as_bytes()).unwrap();
        assert_eq!(ok.len(), 2);
    }
}
