//! Small-order graph catalogs: graph6 file ingestion and self-built
//! fixtures derived from first principles (all labeled adjacency masks,
//! deduplicated with the isomorphism search).

use crate::equiv::{self, CatalogRecord};
use crate::g6::{self, Graph6Error};
use crate::graph::Graph;
use std::collections::HashMap;
use std::io::BufRead;
use std::path::Path;
use thiserror::Error;

/// Largest order the labeled-enumeration fixture builder accepts; beyond
/// this the tool expects an external catalog file.
pub const GENERATE_MAX_N: usize = 6;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog generation capped at order {GENERATE_MAX_N}, got {0}")]
    OrderTooLarge(usize),
    #[error("{path}:{line}: {source}")]
    BadLine {
        path: String,
        line: usize,
        source: Graph6Error,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// All graphs of order exactly `n` up to isomorphism, by enumerating every
/// labeled upper-triangle mask and deduplicating. Deterministic order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, CatalogError> {
    if n > GENERATE_MAX_N {
        return Err(CatalogError::OrderTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut by_profile: HashMap<Vec<usize>, Vec<Graph>> = HashMap::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("generated edges are valid");
        let mut profile: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        profile.sort_unstable();
        let reps = by_profile.entry(profile).or_default();
        if reps
            .iter()
            .all(|r| !equiv::are_isomorphic(&g, r).expect("order within iso cap"))
        {
            reps.push(g.clone());
            out.push(g);
        }
    }
    Ok(out)
}

/// All graphs of order `1..=n` up to isomorphism, as catalog records with
/// `gen<order>#<index>` source ids.
pub fn all_graphs_up_to(n: usize) -> Result<Vec<CatalogRecord>, CatalogError> {
    let mut out = Vec::new();
    for order in 1..=n {
        for (i, graph) in all_graphs(order)?.into_iter().enumerate() {
            out.push(CatalogRecord {
                source_id: format!("gen{order}#{i}"),
                graph,
            });
        }
    }
    Ok(out)
}

/// Connected graphs of order exactly `n`, up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, CatalogError> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(equiv::is_connected)
        .collect())
}

/// Reads a graph6 catalog file, one graph per line. Blank lines and the
/// optional `>>graph6<<` header are skipped; source ids are `path:lineno`.
pub fn read_graph6_catalog(path: &Path) -> Result<Vec<CatalogRecord>, CatalogError> {
    let display = path.display().to_string();
    let file = std::fs::File::open(path).map_err(|source| CatalogError::Io {
        path: display.clone(),
        source,
    })?;
    let mut records = Vec::new();
    for (idx, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|source| CatalogError::Io {
            path: display.clone(),
            source,
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with(">>") {
            continue;
        }
        let graph = g6::decode_graph6(trimmed).map_err(|source| CatalogError::BadLine {
            path: display.clone(),
            line: idx + 1,
            source,
        })?;
        records.push(CatalogRecord {
            source_id: format!("{display}:{}", idx + 1),
            graph,
        });
    }
    Ok(records)
}

/// Writes records as a graph6 file (one line per graph).
pub fn write_graph6_catalog(records: &[Graph]) -> Result<String, Graph6Error> {
    let mut out = String::new();
    for g in records {
        out.push_str(&g6::encode_graph6(g)?);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_literature() {
        // numbers of graphs on n unlabeled vertices
        assert_eq!(all_graphs(1).unwrap().len(), 1);
        assert_eq!(all_graphs(2).unwrap().len(), 2);
        assert_eq!(all_graphs(3).unwrap().len(), 4);
        assert_eq!(all_graphs(4).unwrap().len(), 11);
        assert_eq!(all_graphs(5).unwrap().len(), 34);
    }

    #[test]
    fn order_six_counts() {
        assert_eq!(all_graphs(6).unwrap().len(), 156);
        assert_eq!(connected_graphs(6).unwrap().len(), 112);
    }

    #[test]
    fn generation_is_capped() {
        assert!(matches!(all_graphs(7), Err(CatalogError::OrderTooLarge(7))));
    }

    #[test]
    fn catalog_file_round_trip() {
        let graphs = all_graphs(4).unwrap();
        let text = write_graph6_catalog(&graphs).unwrap();
        let dir = std::env::temp_dir().join("domeq-catalog-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("order4.g6");
        std::fs::write(&path, format!(">>graph6<<\n{text}")).unwrap();
        let records = read_graph6_catalog(&path).unwrap();
        assert_eq!(records.len(), graphs.len());
        for (rec, g) in records.iter().zip(&graphs) {
            assert_eq!(&rec.graph, g);
        }
    }

    #[test]
    fn bad_lines_are_reported_with_position() {
        let dir = std::env::temp_dir().join("domeq-catalog-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.g6");
        std::fs::write(&path, "A_\nB\n").unwrap();
        let err = read_graph6_catalog(&path).unwrap_err();
        assert!(err.to_string().contains(":2:"));
    }
}
