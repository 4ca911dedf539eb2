//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines, 0-based ids)
//! L v name   (optional label lines after the edges)
//! ```
//!
//! Everything after `#` on a line is ignored, as are blank lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: expected {expected}, found `{found}`")]
    Malformed {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_usize(token: Option<&str>, line: usize, expected: &'static str, raw: &str) -> Result<usize, EdgeListError> {
    token
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| EdgeListError::Malformed {
            line,
            expected,
            found: raw.to_owned(),
        })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let mut tokens = header.split_whitespace();
    let n = parse_usize(tokens.next(), header_line, "vertex count", header)?;
    let m = parse_usize(tokens.next(), header_line, "edge count", header)?;
    if tokens.next().is_some() {
        return Err(EdgeListError::Malformed {
            line: header_line,
            expected: "header `n m`",
            found: header.to_owned(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    let mut labels = Vec::new();
    for (line_no, line) in lines {
        let mut tokens = line.split_whitespace();
        let first = tokens.next().unwrap_or_default();
        if first == "L" {
            let v = parse_usize(tokens.next(), line_no, "label line `L v name`", line)?;
            let name = tokens.next().ok_or_else(|| EdgeListError::Malformed {
                line: line_no,
                expected: "label line `L v name`",
                found: line.to_owned(),
            })?;
            if v >= n {
                return Err(EdgeListError::Graph {
                    line: line_no,
                    source: GraphError::VertexOutOfRange { v, n },
                });
            }
            labels.push((v, name.to_owned()));
            continue;
        }
        if !labels.is_empty() {
            return Err(EdgeListError::Malformed {
                line: line_no,
                expected: "label line after the first label",
                found: line.to_owned(),
            });
        }
        let u = parse_usize(Some(first), line_no, "edge `u v`", line)?;
        let v = parse_usize(tokens.next(), line_no, "edge `u v`", line)?;
        if tokens.next().is_some() {
            return Err(EdgeListError::Malformed {
                line: line_no,
                expected: "edge `u v`",
                found: line.to_owned(),
            });
        }
        if u >= n || v >= n || u == v {
            let source = Graph::from_edge_list(n, &[(u, v)]).expect_err("invalid edge");
            return Err(EdgeListError::Graph { line: line_no, source });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    let graph = Graph::from_edge_list(n, &edges).map_err(|source| EdgeListError::Graph { line: 0, source })?;
    Ok(graph.with_labels(labels))
}

/// Serializes `graph`; labels are written as `L v name` lines when present.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", graph.n(), graph.edge_count()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    for (v, name) in graph.labels() {
        writeln!(out, "L {v} {name}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_labels() {
        let text = "# a path\n4 3\n0 1\n1 2 # middle\n\n2 3\nL 0 a\nL 3 d\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.label(3), Some("d"));
        assert_eq!(g.label(1), None);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn reports_offending_line() {
        let err = parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, EdgeListError::Malformed { line: 3, .. }), "{err}");
        let err = parse_edge_list("3 1\n1 1\n").unwrap_err();
        assert!(matches!(
            err,
            EdgeListError::Graph {
                line: 2,
                source: GraphError::SelfLoop { v: 1 }
            }
        ));
        let err = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert_eq!(err, EdgeListError::EdgeCountMismatch { expected: 2, found: 1 });
        assert_eq!(parse_edge_list("# nothing\n"), Err(EdgeListError::MissingHeader));
    }
}
