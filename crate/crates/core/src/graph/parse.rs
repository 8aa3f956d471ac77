//! Plain-text edge lists: one `u v` pair per line, `#` starts a comment.

use std::io::{self, Write};

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex id accepted by the parser.
pub const MAX_VERTEX_ID: u64 = 100_000_000;

/// Result of [`parse_edge_list`].
#[derive(Debug, Clone)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    /// Number of repeated edges that were collapsed.
    pub duplicates: usize,
}

/// Parses an edge list into a graph on vertices `0..=max_id`; ids that never
/// appear become isolated vertices. Repeated edges (in either orientation)
/// are collapsed and counted.
///
/// A leading comment of the form `# n=<count>` (as written by
/// [`write_edge_list`]) declares the vertex count, so trailing isolated
/// vertices survive a round trip.
pub fn parse_edge_list(text: &str) -> Result<ParsedEdgeList> {
    let mut declared: Option<(usize, usize)> = None;
    let mut seen_edge = false;
    let mut edges = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let (content, comment) = match line.find('#') {
            Some(pos) => (&line[..pos], Some(&line[pos + 1..])),
            None => (line, None),
        };
        if !seen_edge && declared.is_none() && content.trim().is_empty() {
            if let Some(n) = comment.and_then(header_count) {
                declared = Some((n, lineno));
            }
        }
        let mut tokens = content.split_whitespace();
        let Some(first) = tokens.next() else {
            continue;
        };
        seen_edge = true;
        let a = parse_id(first, lineno)?;
        let b = match tokens.next() {
            Some(tok) => parse_id(tok, lineno)?,
            None => {
                return Err(Error::Parse {
                    line: lineno,
                    message: "expected two vertex ids".into(),
                })
            }
        };
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse {
                line: lineno,
                message: format!("unexpected token '{extra}'"),
            });
        }
        if a == b {
            return Err(Error::SelfLoop {
                line: lineno,
                vertex: a,
            });
        }
        edges.push((a.min(b) as usize, a.max(b) as usize));
    }

    let used = edges.iter().map(|&(_, b)| b + 1).max().unwrap_or(0);
    let n = match declared {
        Some((n, _)) if n >= used => n,
        Some((n, line)) => {
            return Err(Error::Parse {
                line,
                message: format!("header declares n={n} but vertex {} appears", used - 1),
            })
        }
        None => used,
    };
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    let duplicates = before - edges.len();

    Ok(ParsedEdgeList {
        graph: Graph::from_canonical(n, edges),
        duplicates,
    })
}

/// Reads `n=<count>` from a header comment.
fn header_count(comment: &str) -> Option<usize> {
    let token = comment
        .split_whitespace()
        .find_map(|t| t.strip_prefix("n="))?;
    token
        .parse()
        .ok()
        .filter(|&n| n as u64 <= MAX_VERTEX_ID + 1)
}

fn parse_id(token: &str, line: usize) -> Result<u64> {
    let id = token.parse::<u64>().map_err(|_| Error::Parse {
        line,
        message: format!("'{token}' is not a non-negative integer"),
    })?;
    if id > MAX_VERTEX_ID {
        return Err(Error::Parse {
            line,
            message: format!("vertex id {id} exceeds the limit {MAX_VERTEX_ID}"),
        });
    }
    Ok(id)
}

/// Writes the canonical edge list with a short header comment.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "# n={} m={}", g.n(), g.m())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}
