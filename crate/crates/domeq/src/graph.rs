//! Simple undirected graphs over contiguous vertex indices.

use crate::bitset::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range [0, {n})")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) not present")]
    EdgeAbsent(usize, usize),
    #[error("adjacency not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
}

/// A simple graph: vertex count plus one adjacency set per vertex.
///
/// Values are immutable after construction; every structural operation
/// returns a new graph. The empty graph (`n = 0`) is a legal value and is
/// the base case of the contraction recurrence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices (`n = 0` gives the empty graph).
    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        let mut s = self.adj[v].clone();
        s.insert(v);
        Ok(s)
    }

    /// Edges in lexicographic `(u, v)` order with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Induced subgraph on `keep`, reindexed by order-preserving compaction.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let m = old.len();
        let mut g = Graph::edgeless(m);
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].iter() {
                if keep.contains(w) {
                    g.adj[i].insert(new_index[w]);
                }
            }
        }
        g
    }

    /// `G - v`: remaining vertices keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut keep = VertexSet::full(self.n);
        keep.remove(v);
        Ok(self.induced(&keep))
    }

    /// `G - N[v]`: may be the empty graph.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph, GraphError> {
        let closed = self.closed_neighborhood(v)?;
        Ok(self.induced(&closed.complement()))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u, v));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        Ok(g)
    }

    /// `G/u`: all vertices of `N(u)` are joined pairwise, then `u` is deleted.
    /// For isolated `u` this is just `G - u`.
    pub fn contract_vertex(&self, u: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        let nbrs: Vec<usize> = self.adj[u].iter().collect();
        let mut g = self.clone();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
        g.delete_vertex(u)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::edgeless(self.n);
        for v in 0..self.n {
            let mut s = self.adj[v].complement();
            s.remove(v);
            g.adj[v] = s;
        }
        g
    }

    /// `G ∪ H` with `H`'s indices shifted by `n_G`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::edgeless(n);
        for v in 0..self.n {
            g.adj[v] = VertexSet::from_indices(n, self.adj[v].iter());
        }
        for v in 0..other.n {
            g.adj[self.n + v] = VertexSet::from_indices(n, other.adj[v].iter().map(|w| w + self.n));
        }
        g
    }

    /// Relabels so vertex `v` becomes `perm[v]`; `perm` must be a permutation
    /// of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::edgeless(self.n);
        for v in 0..self.n {
            for w in self.adj[v].iter() {
                g.adj[perm[v]].insert(perm[w]);
            }
        }
        g
    }

    /// Checks symmetry and loop-freeness over all pairs.
    pub fn validate(&self) -> Result<(), GraphError> {
        for v in 0..self.n {
            if self.adj[v].contains(v) {
                return Err(GraphError::SelfLoop(v));
            }
            for w in self.adj[v].iter() {
                if w >= self.n {
                    return Err(GraphError::VertexOutOfRange { v: w, n: self.n });
                }
                if !self.adj[w].contains(v) {
                    return Err(GraphError::Asymmetric(v, w));
                }
            }
        }
        Ok(())
    }

    /// Per-vertex closed neighborhoods as single mask words, for the
    /// enumeration hot loop. `None` when `n > 64`.
    pub fn closed_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            (0..self.n)
                .map(|v| self.adj[v].as_word().unwrap() | (1u64 << v))
                .collect(),
        )
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }
}
