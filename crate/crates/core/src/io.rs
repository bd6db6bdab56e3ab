//! graph6 and plain edge-list encodings.
//!
//! graph6 follows the public format description: an order header (one byte
//! `n + 63` for `n <= 62`, or `126` followed by three 6-bit groups for
//! `n <= 258047`) and then the upper triangle of the adjacency matrix in
//! column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per
//! byte, big-endian, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_GRAPH6_ORDER: usize = 258_047;
const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// line break are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(HEADER) {
        bytes = rest.as_bytes();
        base = HEADER.len();
    }
    while let Some((&last, head)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = head;
        } else {
            break;
        }
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                base + i,
                format!("byte {b:#04x} outside graph6 range 63..=126"),
            ));
        }
    }
    let (order, header_len) = match bytes {
        [] => return Err(parse_err(base, "empty input")),
        [126, 126, ..] => return Err(parse_err(base, "orders above 258047 are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err(
                    base + bytes.len(),
                    "truncated long-form order header",
                ));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= 62 {
                return Err(parse_err(
                    base,
                    "long-form header used for an order below 63",
                ));
            }
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if order == 0 {
        return Err(parse_err(base, "graph6 order 0 has no vertices"));
    }
    let bits = order * (order - 1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < need {
        return Err(parse_err(
            base + bytes.len(),
            format!(
                "truncated adjacency data: expected {need} bytes, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > need {
        return Err(parse_err(
            base + header_len + need,
            format!("{} unexpected trailing bytes", body.len() - need),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in bits..need * 6 {
        if bit(k) {
            return Err(parse_err(base + header_len + k / 6, "nonzero padding bits"));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(order, edges)
}

/// Encodes a graph as a single graph6 line (no header, no newline).
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::InvalidArgument(format!(
            "order {n} exceeds the supported graph6 maximum {MAX_GRAPH6_ORDER}"
        )));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses the edge-list format: a line with the order `n`, then one `u v`
/// pair per line. Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing vertex count line"))?;
    let order: usize = header.parse().map_err(|_| {
        parse_err(
            0,
            format!("line {first_line}: expected vertex count, found {header:?}"),
        )
    })?;
    if order == 0 {
        return Err(Error::InvalidArgument(
            "graph order must be at least 1".into(),
        ));
    }
    let mut edges = Vec::new();
    for (line, content) in lines {
        let mut fields = content.split_whitespace();
        let mut next = || -> Result<usize> {
            let f = fields
                .next()
                .ok_or_else(|| parse_err(0, format!("line {line}: expected two vertex ids")))?;
            f.parse()
                .map_err(|_| parse_err(0, format!("line {line}: bad vertex id {f:?}")))
        };
        let (u, v) = (next()?, next()?);
        if fields.next().is_some() {
            return Err(parse_err(0, format!("line {line}: trailing fields")));
        }
        for w in [u, v] {
            if w >= order {
                return Err(Error::Range {
                    line,
                    vertex: w,
                    order,
                });
            }
        }
        if u == v {
            return Err(Error::LoopRejected { line, vertex: u });
        }
        edges.push((u, v));
    }
    Graph::from_edges(order, edges)
}

/// Writes the edge-list format with LF line endings and edges in lexicographic order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Chooses a decoder by content: a first line that is a bare integer means
/// edge-list, anything else graph6.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.parse::<usize>().is_ok() {
        parse_edge_list(text)
    } else {
        parse_graph6(text.trim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, path_graph, random_gnp};

    #[test]
    fn single_edge_graph6() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(emit_graph6(&g).unwrap(), "A_");
        assert_eq!(emit_graph6(&parse_graph6("A?").unwrap()).unwrap(), "A?");
    }

    // Reference strings produced by nauty's geng/showg conventions.
    #[test]
    fn known_encodings() {
        assert_eq!(emit_graph6(&complete_graph(4).unwrap()).unwrap(), "C~");
        assert_eq!(emit_graph6(&path_graph(4).unwrap()).unwrap(), "Ch");
        assert_eq!(emit_graph6(&complete_graph(5).unwrap()).unwrap(), "D~{");
        assert_eq!(emit_graph6(&path_graph(1).unwrap()).unwrap(), "@");
    }

    #[test]
    fn long_form_header() {
        let g = random_gnp(70, 0.1, 3).unwrap();
        let s = emit_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_graph6() {
        assert!(matches!(
            parse_graph6("C"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(parse_graph6(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph6("A`"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("A_?"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("A\x01"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(parse_graph6("~??"), Err(Error::Parse { .. })));
        assert!(parse_graph6(">>graph6<<A_\n").is_ok());
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("2\n0 1").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(
            parse_edge_list("3\n0 0"),
            Err(Error::LoopRejected { line: 2, vertex: 0 })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 3"),
            Err(Error::Range { vertex: 3, .. })
        ));
        let dup = parse_edge_list("3\n0 1\n1 0\n").unwrap();
        assert_eq!(dup.edge_count(), 1);
        assert_eq!(emit_edge_list(&dup), "3\n0 1\n");
    }

    #[test]
    fn auto_detection() {
        assert_eq!(parse_graph_auto("2\n0 1\n").unwrap().edge_count(), 1);
        assert_eq!(parse_graph_auto("A_\n").unwrap().edge_count(), 1);
    }
}
