//! Edge-list text format: first line `n <count>`, then one `u v` pair per
//! line, 0-based.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| EdgeListError::Malformed(1, "empty input".into()))?;
    let mut head = first.split_whitespace();
    let n = match (head.next(), head.next(), head.next()) {
        (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| {
            EdgeListError::Malformed(first_no + 1, format!("bad vertex count {count:?}"))
        })?,
        _ => {
            return Err(EdgeListError::Malformed(
                first_no + 1,
                format!("expected header \"n <count>\", got {first:?}"),
            ))
        }
    };
    let mut edges = Vec::new();
    for (no, line) in lines {
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => {
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| {
                        EdgeListError::Malformed(no + 1, format!("bad vertex index {s:?}"))
                    })
                };
                edges.push((parse(u)?, parse(v)?));
            }
            _ => {
                return Err(EdgeListError::Malformed(
                    no + 1,
                    format!("expected \"u v\", got {line:?}"),
                ))
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete;

    #[test]
    fn parse_examples() {
        let k3 = parse_edge_list("n 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(k3, complete(3).unwrap());
        assert_eq!(parse_edge_list("n 2").unwrap(), Graph::edgeless(2));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_edge_list("n 2\n0 0"),
            Err(EdgeListError::Graph(GraphError::SelfLoop(0)))
        ));
        assert!(matches!(
            parse_edge_list("n 2\n0 5"),
            Err(EdgeListError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
        assert!(matches!(parse_edge_list(""), Err(EdgeListError::Malformed(..))));
        assert!(matches!(parse_edge_list("3"), Err(EdgeListError::Malformed(..))));
        assert!(matches!(
            parse_edge_list("n 3\n0 1 2"),
            Err(EdgeListError::Malformed(..))
        ));
    }

    #[test]
    fn round_trip() {
        let g = complete(4).unwrap();
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
        let empty = Graph::edgeless(0);
        assert_eq!(parse_edge_list(&format_edge_list(&empty)).unwrap(), empty);
    }
}
