//! Edge-list text format and DOT export.
//!
//! ```text
//! # optional comments
//! n 4
//! 0 1
//! 1 2   # trailing comments are fine
//! ```
//!
//! The `n <count>` header is optional; without it the vertex count is the
//! largest index plus one.

use std::fmt::Write as _;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn parse_index(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError {
        line,
        message: format!("expected a non-negative integer, found {token:?}"),
    })
}

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match tokens.as_slice() {
                ["n", count] => {
                    if declared.is_some() || !edges.is_empty() {
                        return Err(ParseError {
                            line,
                            message: "the `n <count>` header must precede all edges".into(),
                        });
                    }
                    declared = Some(parse_index(count, line)?);
                }
                [u, v] => {
                    let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
                    if u == v {
                        return Err(ParseError {
                            line,
                            message: format!("self-loop at vertex {u}"),
                        });
                    }
                    if let Some(n) = declared {
                        if u.max(v) >= n {
                            return Err(ParseError {
                                line,
                                message: format!("vertex {} out of range for n = {n}", u.max(v)),
                            });
                        }
                    }
                    edges.push((u, v, line));
                }
                _ => {
                    return Err(ParseError {
                        line,
                        message: format!("expected `u v` or `n <count>`, found {content:?}"),
                    })
                }
            }
        }
        let n = declared.unwrap_or_else(|| {
            edges
                .iter()
                .map(|&(u, v, _)| u.max(v) + 1)
                .max()
                .unwrap_or(0)
        });
        Ok(Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
            .expect("edges were validated while parsing"))
    }

    /// Canonical edge-list text: header, then edges in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}
