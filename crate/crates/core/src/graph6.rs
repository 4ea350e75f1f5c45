//! graph6 codec.
//!
//! A record is a size header followed by the upper triangle of the adjacency
//! matrix, column by column (`(0,1), (0,2), (1,2), (0,3), ..`), packed six
//! bits per byte, most significant bit first, each byte offset by 63. Orders
//! up to 62 use a single header byte; 63 and 64 use the `~` long form.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, MAX_ORDER};

pub const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// Byte outside the printable range 63..=126.
    InvalidByte(u8),
    /// Header announces an order this crate cannot hold.
    OrderTooLarge(usize),
    ZeroOrder,
    /// Fewer bytes than the header requires.
    Truncated {
        expected: usize,
        found: usize,
    },
    /// Bytes left over after the adjacency block.
    TrailingBytes,
    /// Padding bits in the final byte are not zero.
    NonZeroPadding,
}

impl fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6ErrorKind::Empty => f.write_str("empty record"),
            Graph6ErrorKind::InvalidByte(b) => write!(f, "byte 0x{b:02x} outside 63..=126"),
            Graph6ErrorKind::OrderTooLarge(n) => write!(f, "order {n} exceeds {MAX_ORDER}"),
            Graph6ErrorKind::ZeroOrder => f.write_str("order 0"),
            Graph6ErrorKind::Truncated { expected, found } => {
                write!(
                    f,
                    "truncated record: expected {expected} bytes, found {found}"
                )
            }
            Graph6ErrorKind::TrailingBytes => f.write_str("trailing bytes after adjacency block"),
            Graph6ErrorKind::NonZeroPadding => f.write_str("non-zero padding bits"),
        }
    }
}

/// A parse failure at byte `offset` of the record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("graph6 error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

fn fail(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn sextet(line: &[u8], i: usize) -> Result<u8, Graph6Error> {
    match line[i] {
        b @ 63..=126 => Ok(b - 63),
        b => Err(fail(i, Graph6ErrorKind::InvalidByte(b))),
    }
}

/// Decodes one graph6 record. A trailing `\n` or `\r\n` is ignored.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    if line.is_empty() {
        return Err(fail(0, Graph6ErrorKind::Empty));
    }

    let (n, body_start) = if line[0] == 126 {
        if line.get(1) == Some(&126) {
            // 8-byte header form covers orders far beyond 64.
            return Err(fail(1, Graph6ErrorKind::OrderTooLarge(usize::MAX)));
        }
        if line.len() < 4 {
            return Err(fail(
                line.len(),
                Graph6ErrorKind::Truncated {
                    expected: 4,
                    found: line.len(),
                },
            ));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | sextet(line, i)? as usize;
        }
        (n, 4)
    } else {
        (sextet(line, 0)? as usize, 1)
    };
    if n == 0 {
        return Err(fail(0, Graph6ErrorKind::ZeroOrder));
    }
    if n > MAX_ORDER {
        return Err(fail(0, Graph6ErrorKind::OrderTooLarge(n)));
    }

    let bits = n * (n - 1) / 2;
    let body_len = bits.div_ceil(6);
    let expected = body_start + body_len;
    if line.len() < expected {
        return Err(fail(
            line.len(),
            Graph6ErrorKind::Truncated {
                expected,
                found: line.len(),
            },
        ));
    }
    if line.len() > expected {
        return Err(fail(expected, Graph6ErrorKind::TrailingBytes));
    }

    let mut b = GraphBuilder::new(n).expect("order checked above");
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(line, body_start + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body_start + body_len - 1;
        let pad = 6 - bits % 6;
        if sextet(line, last)? & ((1u8 << pad) - 1) != 0 {
            return Err(fail(last, Graph6ErrorKind::NonZeroPadding));
        }
    }
    // Catch invalid bytes in a body whose bits were all consumed earlier.
    for i in body_start..expected {
        sextet(line, i)?;
    }
    Ok(b.build())
}

/// Encodes `g` as a graph6 record without a line terminator. Orders 63 and
/// 64 use the long header form.
pub fn to_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    out
}

pub fn to_graph6_string(g: &Graph) -> String {
    String::from_utf8(to_graph6(g)).expect("graph6 is ASCII")
}

/// True for the optional `>>graph6<<` file header.
pub fn is_header(line: &[u8]) -> bool {
    line.trim_ascii_end() == HEADER
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, empty, petersen};

    /// Straight transcription of the packing rule, used as an oracle for the
    /// encoder.
    fn reference_encode(g: &Graph) -> String {
        let n = g.order();
        let mut bits = String::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(if g.has_edge(i, j) { '1' } else { '0' });
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push('0');
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn small_records() {
        assert_eq!(parse_graph6(b"A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6(b"A?").unwrap(), empty(2).unwrap());
        assert_eq!(to_graph6_string(&complete(2).unwrap()), "A_");
        assert_eq!(to_graph6_string(&empty(2).unwrap()), "A?");
        assert_eq!(parse_graph6(b"@").unwrap(), empty(1).unwrap());
    }

    #[test]
    fn known_encodings() {
        // Values published alongside the graph6 format description.
        assert_eq!(to_graph6_string(&petersen()), "IheA@GUAo");
        assert_eq!(to_graph6_string(&complete(4).unwrap()), "C~");
        for g in [
            petersen(),
            cycle(6).unwrap(),
            complete_bipartite(3, 4).unwrap(),
        ] {
            assert_eq!(to_graph6_string(&g), reference_encode(&g));
        }
    }

    #[test]
    fn tolerates_line_endings() {
        assert_eq!(parse_graph6(b"A_\n").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6(b"A_\r\n").unwrap(), complete(2).unwrap());
    }

    #[test]
    fn long_form() {
        let g = complete_bipartite(31, 33).unwrap();
        let enc = to_graph6(&g);
        assert_eq!(&enc[..4], &[126, 63, 64, 63]);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn positioned_errors() {
        assert_eq!(
            parse_graph6(b"").unwrap_err(),
            fail(0, Graph6ErrorKind::Empty)
        );
        assert_eq!(
            parse_graph6(b" _").unwrap_err(),
            fail(0, Graph6ErrorKind::InvalidByte(b' '))
        );
        assert_eq!(
            parse_graph6(b"A\x7f").unwrap_err(),
            fail(1, Graph6ErrorKind::InvalidByte(0x7f))
        );
        assert_eq!(
            parse_graph6(b"D").unwrap_err(),
            fail(
                1,
                Graph6ErrorKind::Truncated {
                    expected: 3,
                    found: 1
                }
            )
        );
        assert_eq!(
            parse_graph6(b"A__").unwrap_err(),
            fail(2, Graph6ErrorKind::TrailingBytes)
        );
        assert_eq!(
            parse_graph6(b"A`").unwrap_err(),
            fail(1, Graph6ErrorKind::NonZeroPadding)
        );
        assert_eq!(
            parse_graph6(b"?").unwrap_err(),
            fail(0, Graph6ErrorKind::ZeroOrder)
        );
        assert_eq!(
            parse_graph6(b"~?A?").unwrap_err(),
            fail(0, Graph6ErrorKind::OrderTooLarge(128))
        );
        assert_eq!(
            parse_graph6(b"~?").unwrap_err(),
            fail(
                2,
                Graph6ErrorKind::Truncated {
                    expected: 4,
                    found: 2
                }
            )
        );
    }

    #[test]
    fn header_detection() {
        assert!(is_header(b">>graph6<<"));
        assert!(is_header(b">>graph6<<\n"));
        assert!(!is_header(b"A_"));
    }
}
