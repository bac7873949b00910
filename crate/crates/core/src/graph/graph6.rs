//! nauty-compatible graph6 encoding.
//!
//! A record is a size prefix followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed
//! six bits per byte, most significant bit first, each group offset by 63.

use thiserror::Error;

use super::Graph;

const BIAS: u8 = 63;
const LONG: u8 = 126;
const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed size prefix: {0}")]
    MalformedHeader(&'static str),
    #[error("body has {found} bytes, expected {expected}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("byte {byte} at offset {offset} is outside 63..=126")]
    OutOfRangeByte { offset: usize, byte: u8 },
    #[error("{extra} bytes after the end of the body")]
    TrailingBytes { extra: usize },
    #[error("padding bits in the final body byte are not zero")]
    NonZeroPadding,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. A trailing `\n` / `\r\n` and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let mut line = line.strip_prefix(HEADER).unwrap_or(line);
    while let Some((&last, rest)) = line.split_last() {
        if last == b'\n' || last == b'\r' {
            line = rest;
        } else {
            break;
        }
    }
    if line.is_empty() {
        return Err(Graph6Error::MalformedHeader("empty record"));
    }
    if let Some(offset) = line.iter().position(|b| !(BIAS..=LONG).contains(b)) {
        return Err(Graph6Error::OutOfRangeByte {
            offset,
            byte: line[offset],
        });
    }
    let (n, header_len) = decode_size(line)?;
    let body = &line[header_len..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBody {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            extra: body.len() - expected,
        });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let group = body[bit / 6] - BIAS;
            if group & (1 << (5 - bit % 6)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - bit % 6)) - 1;
        if (body[bit / 6] - BIAS) & pad_mask != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(Graph::from_edges(n, edges).expect("upper-triangle bits describe a simple graph"))
}

fn decode_size(line: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let value = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS))
    };
    if line[0] != LONG {
        return Ok((usize::from(line[0] - BIAS), 1));
    }
    if line.len() >= 2 && line[1] == LONG {
        if line.len() < 8 {
            return Err(Graph6Error::MalformedHeader("8-byte size prefix cut short"));
        }
        let n = value(&line[2..8]);
        if n <= 258_047 {
            return Err(Graph6Error::MalformedHeader(
                "non-minimal 8-byte size prefix",
            ));
        }
        return Ok((n, 8));
    }
    if line.len() < 4 {
        return Err(Graph6Error::MalformedHeader("4-byte size prefix cut short"));
    }
    let n = value(&line[1..4]);
    if n <= 62 {
        return Err(Graph6Error::MalformedHeader(
            "non-minimal 4-byte size prefix",
        ));
    }
    Ok((n, 4))
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    let push_groups = |out: &mut Vec<u8>, groups: usize| {
        for i in (0..groups).rev() {
            out.push(((n >> (6 * i)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        push_groups(out, 3);
    } else {
        out.push(LONG);
        out.push(LONG);
        push_groups(out, 6);
    }
}

/// Encodes `g` with the minimal size prefix. No trailing newline.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + body_len(n));
    encode_size(n, &mut out);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    out
}

/// `write_graph6` as a `String`; graph6 is pure ASCII.
pub fn to_graph6_string(g: &Graph) -> String {
    String::from_utf8(write_graph6(g)).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn hand_encoded_records() {
        // Bits x01 x02 x12 x03 x13 x23 | x04 x14 x24 x34 x05 x15 | x25 x35 x45 + pad:
        // 110100 = 52, 010001 = 17, 000000 = 0 → 's' 'P' '?'.
        let fig1 = parse_graph6(b"EsP?").unwrap();
        assert_eq!(fig1, double_star());
        assert_eq!(fig1.degrees(), vec![3, 3, 1, 1, 1, 1]);
        // C4 as 0-1-2-3-0: x01 x02 x12 x03 x13 x23 = 101101 = 45 → 'l'.
        let c4 = parse_graph6(b"Cl\n").unwrap();
        assert_eq!(c4, cycle(4));
        assert!(c4.degrees().iter().all(|&d| d == 2));
        assert_eq!(write_graph6(&complete(4)), b"C~");
    }

    #[test]
    fn single_vertex_and_null_graph() {
        assert_eq!(write_graph6(&Graph::empty(1)), b"@");
        let g = parse_graph6(b"@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(parse_graph6(b"?").unwrap().n(), 0);
    }

    #[test]
    fn long_size_prefix() {
        let g = cycle(70);
        let bytes = write_graph6(&g);
        assert_eq!(&bytes[..4], &[126, 63, 64, 63 + 6]);
        assert_eq!(parse_graph6(&bytes).unwrap(), g);
    }

    #[test]
    fn header_is_optional() {
        assert_eq!(parse_graph6(b">>graph6<<C~").unwrap(), complete(4));
    }

    #[test]
    fn error_paths() {
        assert_eq!(
            parse_graph6(b""),
            Err(Graph6Error::MalformedHeader("empty record"))
        );
        assert_eq!(
            parse_graph6(b"~??"),
            Err(Graph6Error::MalformedHeader("4-byte size prefix cut short"))
        );
        assert_eq!(
            parse_graph6(b"~??@"),
            Err(Graph6Error::MalformedHeader(
                "non-minimal 4-byte size prefix"
            ))
        );
        assert_eq!(
            parse_graph6(b"E~"),
            Err(Graph6Error::TruncatedBody {
                expected: 3,
                found: 1
            })
        );
        assert_eq!(
            parse_graph6(b"C ~"),
            Err(Graph6Error::OutOfRangeByte {
                offset: 1,
                byte: b' '
            })
        );
        assert_eq!(
            parse_graph6(b"C\x7f"),
            Err(Graph6Error::OutOfRangeByte {
                offset: 1,
                byte: 127
            })
        );
        assert_eq!(
            parse_graph6(b"C~~"),
            Err(Graph6Error::TrailingBytes { extra: 1 })
        );
        // n=3 has three bits; the low three bits of the group are padding.
        assert_eq!(parse_graph6(b"B@"), Err(Graph6Error::NonZeroPadding));
    }
}
