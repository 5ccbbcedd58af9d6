//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! p <n> <m>
//! <u> <v>        (exactly m lines, 1 <= u, v <= n, u != v)
//! ```

use std::collections::HashMap;
use std::fmt::Write;

use sierpinski_core::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("missing header line \"p <n> <m>\"")]
    MissingHeader,
    #[error("line {line}: malformed line {text:?}: {reason}")]
    Malformed {
        line: usize,
        text: String,
        reason: &'static str,
    },
    #[error("line {line}: vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange { line: usize, vertex: u64, order: u32 },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {{{u}, {v}}} (first given on line {first})")]
    DuplicateEdge {
        line: usize,
        u: Vertex,
        v: Vertex,
        first: usize,
    },
    #[error("line {line}: edge count mismatch: header declares {declared} edges, found {found}")]
    EdgeCountMismatch {
        line: usize,
        declared: usize,
        found: usize,
    },
}

fn malformed(line: usize, text: &str, reason: &'static str) -> ParseError {
    ParseError::Malformed {
        line,
        text: text.to_string(),
        reason,
    }
}

fn numbers<const K: usize>(line: usize, text: &str, fields: &[&str]) -> Result<[u64; K], ParseError> {
    if fields.len() != K {
        return Err(malformed(line, text, "wrong number of fields"));
    }
    let mut out = [0u64; K];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field.parse().map_err(|_| malformed(line, text, "expected a non-negative integer"))?;
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(u32, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    let mut last_line = 0;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let Some((order, declared)) = header else {
            if fields[0] != "p" {
                return Err(ParseError::MissingHeader);
            }
            let [n, m] = numbers::<2>(line, trimmed, &fields[1..])?;
            let n = u32::try_from(n).map_err(|_| malformed(line, trimmed, "vertex count too large"))?;
            let m = usize::try_from(m).map_err(|_| malformed(line, trimmed, "edge count too large"))?;
            header = Some((n, m));
            continue;
        };
        let [u, v] = numbers::<2>(line, trimmed, &fields)?;
        for vertex in [u, v] {
            if vertex < 1 || vertex > u64::from(order) {
                return Err(ParseError::VertexOutOfRange { line, vertex, order });
            }
        }
        let (u, v) = (u as Vertex, v as Vertex);
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if edges.len() == declared {
            return Err(ParseError::EdgeCountMismatch {
                line,
                declared,
                found: declared + 1,
            });
        }
        let key = (u.min(v), u.max(v));
        if let Some(&first) = seen.get(&key) {
            return Err(ParseError::DuplicateEdge { line, u, v, first });
        }
        seen.insert(key, line);
        edges.push(key);
    }
    let (order, declared) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != declared {
        return Err(ParseError::EdgeCountMismatch {
            line: last_line,
            declared,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(order, edges).expect("edges validated above"))
}

pub fn render_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.size() + 1));
    writeln!(out, "p {} {}", g.order(), g.size()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
