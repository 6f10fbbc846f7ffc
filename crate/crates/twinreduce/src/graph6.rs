//! graph6: upper triangle packed column by column, (0,1), (0,2), (1,2),
//! (0,3), ..., six bits per byte offset by 63, most significant bit first.

use twinreduce_core::Graph;

use crate::FormatError;

pub const HEADER: &str = ">>graph6<<";

/// Largest vertex count accepted when decoding.
pub const MAX_VERTICES: usize = 65_536;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let mut out = Vec::new();
    encode_size(g.n(), &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..g.n() {
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
    String::from_utf8(out).expect("printable ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let body = text.strip_prefix(HEADER).unwrap_or(text);
    let body = body.trim_end_matches(['\n', '\r']).as_bytes();
    for (offset, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::Graph6Char { byte, offset });
        }
    }
    let sixes: Vec<usize> = body.iter().map(|&b| (b - 63) as usize).collect();
    let (n, header_len) = match sixes.as_slice() {
        [] => return Err(FormatError::Graph6("empty input")),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(FormatError::Graph6("truncated 8-byte size prefix"));
            }
            (rest[..6].iter().fold(0, |acc, &x| acc << 6 | x), 8)
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(FormatError::Graph6("truncated 4-byte size prefix"));
            }
            (rest[..3].iter().fold(0, |acc, &x| acc << 6 | x), 4)
        }
        [small, ..] => (*small, 1),
    };
    if n > MAX_VERTICES {
        return Err(FormatError::Graph6("graph too large"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let data = &sixes[header_len..];
    let expected = bits.div_ceil(6);
    if data.len() < expected {
        return Err(FormatError::Graph6("truncated adjacency data"));
    }
    if data.len() > expected {
        return Err(FormatError::Graph6("trailing garbage after adjacency data"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if data[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
