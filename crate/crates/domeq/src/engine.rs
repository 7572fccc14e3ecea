//! Exact dominating-set counting, the vertex-contraction recurrence, and the
//! domination-covered / irrelevant-edge decision procedures.

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};
use crate::poly::DomPolynomial;
use num_bigint::BigInt;
use thiserror::Error;

/// Default enumeration guard: refuse to enumerate 2^n subsets beyond this
/// order unless the caller overrides explicitly.
pub const DEFAULT_MAX_N: usize = 30;

/// Hard cap for the mask-based enumeration core.
pub const ENUMERATION_CAP: usize = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph order {n} exceeds enumeration guard {max} (pass an explicit override)")]
    GuardExceeded { n: usize, max: usize },
    #[error("graph order {n} exceeds the {ENUMERATION_CAP}-vertex enumeration cap")]
    TooLarge { n: usize },
    #[error("vertex set capacity {got} does not match graph order {n}")]
    SetMismatch { got: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Per-cardinality dominating-set counts `d(G, i)` for `i in [0, n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DomCount {
    counts: Vec<BigInt>,
}

impl DomCount {
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Graph order the counts were computed for.
    pub fn order(&self) -> usize {
        self.counts.len() - 1
    }

    /// Smallest `i` with `d(G, i) > 0`. For the empty graph this is 0
    /// (`d(emptygraph, 0) = 1` by convention).
    pub fn domination_number(&self) -> usize {
        use num_traits::Zero;
        self.counts
            .iter()
            .position(|c| !c.is_zero())
            .expect("the full vertex set always dominates")
    }

    pub fn polynomial(&self) -> DomPolynomial {
        DomPolynomial::from_coeffs(self.counts.clone())
    }
}

/// True iff `N[S] = V(G)`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool, EngineError> {
    if s.capacity() != g.n() {
        return Err(EngineError::SetMismatch {
            got: s.capacity(),
            n: g.n(),
        });
    }
    let mut covered = VertexSet::empty(g.n());
    for v in s.iter() {
        covered.union_with(&g.closed_neighborhood(v)?);
    }
    Ok(covered == VertexSet::full(g.n()))
}

pub fn dominating_set_counts(g: &Graph) -> Result<DomCount, EngineError> {
    dominating_set_counts_guarded(g, DEFAULT_MAX_N)
}

/// Exact `d(G, i)` for all `i`, by include/exclude traversal of subsets with
/// an incrementally maintained coverage mask.
pub fn dominating_set_counts_guarded(g: &Graph, max_n: usize) -> Result<DomCount, EngineError> {
    let ctx = EnumCtx::new(g, max_n)?;
    let raw = ctx.count_restricted(ctx.full);
    Ok(DomCount {
        counts: raw.into_iter().map(BigInt::from).collect(),
    })
}

pub fn domination_polynomial(g: &Graph) -> Result<DomPolynomial, EngineError> {
    Ok(dominating_set_counts(g)?.polynomial())
}

pub fn domination_polynomial_guarded(g: &Graph, max_n: usize) -> Result<DomPolynomial, EngineError> {
    Ok(dominating_set_counts_guarded(g, max_n)?.polynomial())
}

/// γ(G); returns 0 for the empty graph by convention.
pub fn domination_number(g: &Graph) -> Result<usize, EngineError> {
    Ok(dominating_set_counts(g)?.domination_number())
}

/// `p_u(G, x)`: generating polynomial over sets `S ⊆ V(G) \ N[u]` that
/// dominate `G - u`.
pub fn p_u(g: &Graph, u: usize) -> Result<DomPolynomial, EngineError> {
    p_u_guarded(g, u, DEFAULT_MAX_N)
}

pub fn p_u_guarded(g: &Graph, u: usize, max_n: usize) -> Result<DomPolynomial, EngineError> {
    let h = g.delete_vertex(u)?;
    let ctx = EnumCtx::new(&h, max_n)?;
    // map N(u) into the compacted index space of G - u
    let mut allowed: u64 = 0;
    for w in 0..g.n() {
        if w == u {
            continue;
        }
        let mapped = if w < u { w } else { w - 1 };
        if !g.neighbors(u).contains(w) {
            allowed |= 1u64 << mapped;
        }
    }
    let raw = ctx.count_restricted(allowed);
    Ok(DomPolynomial::from_coeffs(
        raw.into_iter().map(BigInt::from).collect(),
    ))
}

/// Right-hand side of the contraction recurrence
/// `x·D(G/u) + D(G-u) + x·D(G-N[u]) - (1+x)·p_u(G)`.
pub fn recurrence_rhs(g: &Graph, u: usize) -> Result<DomPolynomial, EngineError> {
    recurrence_rhs_guarded(g, u, DEFAULT_MAX_N)
}

pub fn recurrence_rhs_guarded(g: &Graph, u: usize, max_n: usize) -> Result<DomPolynomial, EngineError> {
    let contracted = domination_polynomial_guarded(&g.contract_vertex(u)?, max_n)?;
    let deleted = domination_polynomial_guarded(&g.delete_vertex(u)?, max_n)?;
    let stripped = domination_polynomial_guarded(&g.delete_closed_neighborhood(u)?, max_n)?;
    let p = p_u_guarded(g, u, max_n)?;
    let one_plus_x = DomPolynomial::from_i64_coeffs(&[1, 1]);
    Ok(contracted
        .scale_by_x()
        .add(&deleted)
        .add(&stripped.scale_by_x())
        .subtract(&one_plus_x.multiply(&p)))
}

/// Structural test: some proper neighbor `u ∈ N(v)` has `N[u] ⊆ N[v]`.
///
/// The characterization is quantified over proper neighbors, not `N[v]`
/// (taking `u = v` would make it vacuously true everywhere); this is the
/// reading consistent with the definition-level oracle.
pub fn is_domination_covered(g: &Graph, v: usize) -> Result<bool, EngineError> {
    let closed_v = g.closed_neighborhood(v)?;
    for u in g.neighbors(v).iter() {
        if g.closed_neighborhood(u)?.is_subset_of(&closed_v) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Definition-level check: every dominating set of `G - v` contains a vertex
/// adjacent to `v` in `G`. Enumerates all dominating sets of `G - v`.
pub fn oracle_domination_covered(g: &Graph, v: usize) -> Result<bool, EngineError> {
    oracle_domination_covered_guarded(g, v, DEFAULT_MAX_N)
}

pub fn oracle_domination_covered_guarded(
    g: &Graph,
    v: usize,
    max_n: usize,
) -> Result<bool, EngineError> {
    let h = g.delete_vertex(v)?;
    let ctx = EnumCtx::new(&h, max_n)?;
    let mut nbr_mask: u64 = 0;
    for w in g.neighbors(v).iter() {
        let mapped = if w < v { w } else { w - 1 };
        nbr_mask |= 1u64 << mapped;
    }
    // per-subset recomputation on purpose: this is the oracle side
    for s in 0..(1u64 << h.n()) {
        if s & nbr_mask != 0 {
            continue;
        }
        let mut covered = 0u64;
        let mut bits = s;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            covered |= ctx.closed[w];
        }
        if covered == ctx.full {
            // a dominating set of G - v avoiding all neighbors of v
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff both endpoints of `e` are domination-covered in `G - e`.
pub fn is_irrelevant_edge(g: &Graph, u: usize, v: usize) -> Result<bool, EngineError> {
    let reduced = g.delete_edge(u, v)?;
    Ok(is_domination_covered(&reduced, u)? && is_domination_covered(&reduced, v)?)
}

/// All irrelevant edges in lexicographic order.
pub fn irrelevant_edges(g: &Graph) -> Result<Vec<(usize, usize)>, EngineError> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if is_irrelevant_edge(g, u, v)? {
            out.push((u, v));
        }
    }
    Ok(out)
}

/// Enumeration context: closed-neighborhood mask words plus a Pascal table
/// for completing subtrees whose coverage is already full.
struct EnumCtx {
    n: usize,
    full: u64,
    closed: Vec<u64>,
    binom: Vec<Vec<u64>>,
}

impl EnumCtx {
    fn new(g: &Graph, max_n: usize) -> Result<Self, EngineError> {
        let n = g.n();
        if n > max_n {
            return Err(EngineError::GuardExceeded { n, max: max_n });
        }
        let closed = g.closed_masks().ok_or(EngineError::TooLarge { n })?;
        if n > ENUMERATION_CAP {
            return Err(EngineError::TooLarge { n });
        }
        let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
        let mut binom = vec![vec![0u64; n + 1]; n + 1];
        for (i, row) in binom.iter_mut().enumerate() {
            row[0] = 1;
            for j in 1..=i {
                row[j] = if j == i { 1 } else { 0 };
            }
        }
        for i in 2..=n {
            for j in 1..i {
                binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
            }
        }
        Ok(EnumCtx { n, full, closed, binom })
    }

    /// Counts, by cardinality, the sets `S ⊆ allowed` with `N[S] = V(G)`.
    fn count_restricted(&self, allowed: u64) -> Vec<u64> {
        let verts: Vec<usize> = (0..self.n).filter(|&v| allowed >> v & 1 == 1).collect();
        // suffix[i] = union of closed neighborhoods of verts[i..]
        let mut suffix = vec![0u64; verts.len() + 1];
        for i in (0..verts.len()).rev() {
            suffix[i] = suffix[i + 1] | self.closed[verts[i]];
        }
        let mut counts = vec![0u64; self.n + 1];
        self.walk(&verts, &suffix, 0, 0, 0, &mut counts);
        counts
    }

    fn walk(
        &self,
        verts: &[usize],
        suffix: &[u64],
        idx: usize,
        chosen: usize,
        covered: u64,
        counts: &mut [u64],
    ) {
        if covered == self.full {
            // every superset of the current choice dominates
            let rem = verts.len() - idx;
            for (j, row) in self.binom[rem].iter().enumerate().take(rem + 1) {
                counts[chosen + j] += row;
            }
            return;
        }
        if covered | suffix[idx] != self.full {
            return; // the remaining vertices can no longer cover everything
        }
        // suffix check above guarantees idx < verts.len() here
        self.walk(
            verts,
            suffix,
            idx + 1,
            chosen + 1,
            covered | self.closed[verts[idx]],
            counts,
        );
        self.walk(verts, suffix, idx + 1, chosen, covered, counts);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{barbell, book_complement, clique_chain, complete, cycle, path, star};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Independent oracle: per-subset recomputation, no pruning, no
    /// incremental masks.
    fn brute_counts(g: &Graph) -> Vec<BigInt> {
        let n = g.n();
        let mut counts = vec![0i64; n + 1];
        for s in 0u64..(1 << n) {
            let set = VertexSet::from_word(n, s);
            if is_dominating(g, &set).unwrap() {
                counts[set.len()] += 1;
            }
        }
        big(&counts)
    }

    #[test]
    fn is_dominating_examples() {
        let k3 = complete(3).unwrap();
        assert!(is_dominating(&k3, &VertexSet::from_indices(3, [0])).unwrap());
        let p4 = path(4).unwrap();
        assert!(is_dominating(&p4, &VertexSet::from_indices(4, [1, 2])).unwrap());
        assert!(!is_dominating(&p4, &VertexSet::from_indices(4, [0, 1])).unwrap());
        let empty = Graph::edgeless(0);
        assert!(is_dominating(&empty, &VertexSet::empty(0)).unwrap());
        assert!(matches!(
            is_dominating(&k3, &VertexSet::empty(4)),
            Err(EngineError::SetMismatch { .. })
        ));
    }

    #[test]
    fn counts_match_frozen_oracle_values() {
        let p4 = path(4).unwrap();
        assert_eq!(brute_counts(&p4), big(&[0, 0, 4, 4, 1]));
        assert_eq!(dominating_set_counts(&p4).unwrap().counts(), big(&[0, 0, 4, 4, 1]));

        let c4 = cycle(4).unwrap();
        assert_eq!(dominating_set_counts(&c4).unwrap().counts(), big(&[0, 0, 6, 4, 1]));

        let k3 = complete(3).unwrap();
        assert_eq!(dominating_set_counts(&k3).unwrap().counts(), big(&[0, 3, 3, 1]));
    }

    #[test]
    fn counts_match_brute_force_on_assorted_graphs() {
        for g in [
            path(6).unwrap(),
            cycle(5).unwrap(),
            star(4).unwrap(),
            barbell(3).unwrap(),
            book_complement(2).unwrap(),
            Graph::edgeless(3),
            complete(3).unwrap().disjoint_union(&path(3).unwrap()),
        ] {
            assert_eq!(dominating_set_counts(&g).unwrap().counts(), brute_counts(&g));
        }
    }

    #[test]
    fn polynomial_examples() {
        let bar3 = barbell(3).unwrap();
        assert_eq!(
            domination_polynomial(&bar3).unwrap(),
            DomPolynomial::from_i64_coeffs(&[0, 0, 9, 18, 15, 6, 1])
        );
        let two_k3 = complete(3).unwrap().disjoint_union(&complete(3).unwrap());
        assert_eq!(
            domination_polynomial(&two_k3).unwrap(),
            domination_polynomial(&bar3).unwrap()
        );
        assert_eq!(
            domination_polynomial(&Graph::edgeless(0)).unwrap(),
            DomPolynomial::one()
        );
    }

    #[test]
    fn domination_number_examples() {
        assert_eq!(domination_number(&complete(5).unwrap()).unwrap(), 1);
        assert_eq!(domination_number(&barbell(3).unwrap()).unwrap(), 2);
        assert_eq!(domination_number(&cycle(4).unwrap()).unwrap(), 2);
        assert_eq!(domination_number(&Graph::edgeless(0)).unwrap(), 0);
    }

    #[test]
    fn isolated_vertex_forces_membership() {
        // K3 plus an isolated vertex: every dominating set contains vertex 3
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let counts = dominating_set_counts(&g).unwrap();
        assert_eq!(counts.counts(), big(&[0, 0, 3, 3, 1]));
        assert!(!is_dominating(&g, &VertexSet::from_indices(4, [0, 1, 2])).unwrap());
    }

    #[test]
    fn p_u_examples() {
        let p3 = path(3).unwrap();
        assert_eq!(p_u(&p3, 1).unwrap(), DomPolynomial::zero());
        assert_eq!(p_u(&p3, 0).unwrap(), DomPolynomial::x());
        for u in 0..4 {
            assert_eq!(p_u(&complete(4).unwrap(), u).unwrap(), DomPolynomial::zero());
        }
    }

    #[test]
    fn recurrence_examples() {
        let p3 = path(3).unwrap();
        let d = domination_polynomial(&p3).unwrap();
        assert_eq!(d, DomPolynomial::from_i64_coeffs(&[0, 1, 3, 1]));
        assert_eq!(recurrence_rhs(&p3, 0).unwrap(), d);

        let k1 = Graph::edgeless(1);
        assert_eq!(recurrence_rhs(&k1, 0).unwrap(), DomPolynomial::x());

        // hub vertex of the book complement, small n
        for n in 1..=3usize {
            let g = book_complement(n).unwrap();
            let hub = 2 * n + 1; // vertex v
            let expected = DomPolynomial::binomial_power(n as u32 + 1)
                .subtract(&DomPolynomial::one())
                .pow(2);
            assert_eq!(recurrence_rhs(&g, hub).unwrap(), expected);
            assert_eq!(domination_polynomial(&g).unwrap(), expected);
        }
    }

    #[test]
    fn recurrence_holds_at_every_vertex_of_assorted_graphs() {
        for g in [
            path(5).unwrap(),
            cycle(5).unwrap(),
            star(3).unwrap(),
            barbell(3).unwrap(),
            Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
        ] {
            let d = domination_polynomial(&g).unwrap();
            for u in 0..g.n() {
                assert_eq!(recurrence_rhs(&g, u).unwrap(), d, "vertex {u}");
            }
        }
    }

    #[test]
    fn domination_covered_examples() {
        let k3 = complete(3).unwrap();
        for v in 0..3 {
            assert!(is_domination_covered(&k3, v).unwrap());
            assert!(oracle_domination_covered(&k3, v).unwrap());
        }
        let s = star(3).unwrap(); // leaves 0..3, center 3
        assert!(!is_domination_covered(&s, 0).unwrap());
        assert!(!oracle_domination_covered(&s, 0).unwrap());
        assert!(is_domination_covered(&s, 3).unwrap());
        assert!(oracle_domination_covered(&s, 3).unwrap());
    }

    #[test]
    fn irrelevant_edge_examples() {
        for n in 2..=4usize {
            let g = barbell(n).unwrap();
            assert!(is_irrelevant_edge(&g, n - 1, 2 * n - 1).unwrap());
        }
        let c4 = cycle(4).unwrap();
        for (u, v) in c4.edges() {
            assert!(!is_irrelevant_edge(&c4, u, v).unwrap());
        }
        let k3 = complete(3).unwrap();
        assert!(!is_irrelevant_edge(&k3, 0, 1).unwrap());
        assert!(matches!(
            is_irrelevant_edge(&Graph::edgeless(2), 0, 1),
            Err(EngineError::Graph(GraphError::EdgeAbsent(0, 1)))
        ));
    }

    #[test]
    fn irrelevant_edges_batch() {
        let bar3 = barbell(3).unwrap();
        assert_eq!(irrelevant_edges(&bar3).unwrap(), vec![(2, 5)]);
        assert_eq!(irrelevant_edges(&complete(4).unwrap()).unwrap(), vec![]);
        // S(K3, K3, K3): both bridges (vertex 1 of a block to vertex 0 of the next)
        let chain = clique_chain(&[3, 3, 3]).unwrap();
        assert_eq!(irrelevant_edges(&chain).unwrap(), vec![(1, 3), (4, 6)]);
    }

    #[test]
    fn irrelevant_edge_agrees_with_polynomial_equality() {
        for g in [barbell(3).unwrap(), cycle(5).unwrap(), star(3).unwrap()] {
            let d = domination_polynomial(&g).unwrap();
            for (u, v) in g.edges() {
                let d_reduced = domination_polynomial(&g.delete_edge(u, v).unwrap()).unwrap();
                assert_eq!(is_irrelevant_edge(&g, u, v).unwrap(), d == d_reduced);
            }
        }
    }

    #[test]
    fn guard_is_enforced() {
        let g = Graph::edgeless(31);
        assert!(matches!(
            dominating_set_counts(&g),
            Err(EngineError::GuardExceeded { n: 31, max: 30 })
        ));
        assert!(dominating_set_counts_guarded(&g, 31).is_ok());
        let huge = Graph::edgeless(70);
        assert!(matches!(
            dominating_set_counts_guarded(&huge, 100),
            Err(EngineError::TooLarge { n: 70 })
        ));
    }

    #[test]
    fn count_invariants() {
        for g in [path(6).unwrap(), barbell(3).unwrap(), cycle(5).unwrap()] {
            let n = g.n();
            let counts = dominating_set_counts(&g).unwrap();
            assert_eq!(counts.counts()[n], BigInt::from(1));
            // upward closure: (i+1) d(G, i+1) >= (n-i) d(G, i)
            for i in 0..n {
                let lhs = BigInt::from(i as u64 + 1) * &counts.counts()[i + 1];
                let rhs = BigInt::from((n - i) as u64) * &counts.counts()[i];
                assert!(lhs >= rhs, "upward closure at i={i}");
            }
        }
    }
}
