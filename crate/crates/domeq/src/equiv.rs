//! D-equivalence machinery: exact polynomial comparison, catalog-wide
//! equivalence classes, and small-order isomorphism for deduplicating class
//! members.

use crate::engine::{self, EngineError};
use crate::graph::Graph;
use crate::par;
use crate::poly::DomPolynomial;
use std::collections::BTreeMap;
use thiserror::Error;

/// Order cap for the brute-force isomorphism search.
pub const ISO_MAX_N: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EquivError {
    #[error("isomorphism search capped at order {ISO_MAX_N}, got {0}")]
    TooLargeForIso(usize),
}

/// `G ~ H`: exact coefficient equality of the domination polynomials.
pub fn same_polynomial(g: &Graph, h: &Graph) -> Result<bool, EngineError> {
    same_polynomial_guarded(g, h, engine::DEFAULT_MAX_N)
}

pub fn same_polynomial_guarded(g: &Graph, h: &Graph, max_n: usize) -> Result<bool, EngineError> {
    Ok(engine::domination_polynomial_guarded(g, max_n)?
        == engine::domination_polynomial_guarded(h, max_n)?)
}

/// Brute-force permutation search with degree-sequence and
/// neighborhood-degree pruning. Unequal orders compare as `false`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, EquivError> {
    if g.n() != h.n() {
        return Ok(false);
    }
    let n = g.n();
    if n > ISO_MAX_N {
        return Err(EquivError::TooLargeForIso(n));
    }
    if g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    if invariant_profile(g) != invariant_profile(h) {
        return Ok(false);
    }
    let gd: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let hd: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_mapping(g, h, &gd, &hd, 0, &mut mapping, &mut used)
}

/// Degree sequence plus per-vertex sorted neighbor-degree multisets, sorted.
fn invariant_profile(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut prof: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    prof.sort();
    prof
}

fn extend_mapping(
    g: &Graph,
    h: &Graph,
    gd: &[usize],
    hd: &[usize],
    v: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> Result<bool, EquivError> {
    if v == g.n() {
        return Ok(true);
    }
    for w in 0..h.n() {
        if used[w] || gd[v] != hd[w] {
            continue;
        }
        // adjacency with the already-mapped prefix must agree
        let consistent = (0..v).all(|p| g.has_edge(v, p) == h.has_edge(w, mapping[p]));
        if !consistent {
            continue;
        }
        mapping[v] = w;
        used[w] = true;
        if extend_mapping(g, h, gd, hd, v + 1, mapping, used)? {
            return Ok(true);
        }
        used[w] = false;
        mapping[v] = usize::MAX;
    }
    Ok(false)
}

/// Connectivity via mask traversal; the empty graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v).iter() {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

/// A graph read from a catalog or built from a family spec.
#[derive(Clone, Debug)]
pub struct CatalogRecord {
    pub source_id: String,
    pub graph: Graph,
}

/// A record whose polynomial has been computed.
#[derive(Clone, Debug)]
pub struct ClassMember {
    pub source_id: String,
    pub graph: Graph,
    pub polynomial: DomPolynomial,
}

/// One D-equivalence class within a catalog.
#[derive(Clone, Debug)]
pub struct ClassReport {
    /// Canonical coefficient serialization shared by every member.
    pub key: String,
    pub members: Vec<ClassMember>,
    /// Partition of member indices up to isomorphism; `None` when some
    /// member exceeds the isomorphism cap.
    pub iso_classes: Option<Vec<Vec<usize>>>,
    /// Number of connected iso-classes; `None` iff `iso_classes` is.
    pub connected_count: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct RecordFailure {
    pub source_id: String,
    pub error: String,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub max_n: usize,
    pub connected_only: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            max_n: engine::DEFAULT_MAX_N,
            connected_only: false,
        }
    }
}

/// Groups records by exact polynomial; within each group members are
/// isomorphism-deduplicated. Output ordering is deterministic (by key, then
/// source id); per-record failures are reported, not fatal.
pub fn classify_catalog(
    records: Vec<CatalogRecord>,
    opts: &ClassifyOptions,
) -> (Vec<ClassReport>, Vec<RecordFailure>) {
    let max_n = opts.max_n;
    let connected_only = opts.connected_only;
    let computed = par::map_ordered(records, move |rec| {
        if connected_only && !is_connected(&rec.graph) {
            return (rec, Ok(None));
        }
        match engine::domination_polynomial_guarded(&rec.graph, max_n) {
            Ok(p) => (rec, Ok(Some(p))),
            Err(e) => (rec, Err(e)),
        }
    });

    let mut failures = Vec::new();
    let mut groups: BTreeMap<String, Vec<ClassMember>> = BTreeMap::new();
    for (rec, result) in computed {
        match result {
            Ok(Some(polynomial)) => {
                groups.entry(polynomial.to_coeff_csv()).or_default().push(ClassMember {
                    source_id: rec.source_id,
                    graph: rec.graph,
                    polynomial,
                });
            }
            Ok(None) => {} // filtered out by connectivity
            Err(e) => failures.push(RecordFailure {
                source_id: rec.source_id,
                error: e.to_string(),
            }),
        }
    }

    let reports = groups
        .into_iter()
        .map(|(key, mut members)| {
            members.sort_by(|a, b| a.source_id.cmp(&b.source_id));
            let (iso_classes, connected_count) = dedup_iso(&members);
            ClassReport {
                key,
                members,
                iso_classes,
                connected_count,
            }
        })
        .collect();
    (reports, failures)
}

fn dedup_iso(members: &[ClassMember]) -> (Option<Vec<Vec<usize>>>, Option<usize>) {
    if members.iter().any(|m| m.graph.n() > ISO_MAX_N) {
        return (None, None);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (idx, m) in members.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            let rep = &members[class[0]].graph;
            if are_isomorphic(&m.graph, rep).expect("order checked above") {
                class.push(idx);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![idx]);
        }
    }
    let connected = classes
        .iter()
        .filter(|c| is_connected(&members[c[0]].graph))
        .count();
    (Some(classes), Some(connected))
}

/// The single class whose key equals `target` (possibly empty), optionally
/// restricted to connected graphs.
pub fn find_class_members(
    target: &DomPolynomial,
    records: Vec<CatalogRecord>,
    opts: &ClassifyOptions,
) -> (ClassReport, Vec<RecordFailure>) {
    let key = target.to_coeff_csv();
    let (reports, failures) = classify_catalog(records, opts);
    let report = reports
        .into_iter()
        .find(|r| r.key == key)
        .unwrap_or(ClassReport {
            key,
            members: vec![],
            iso_classes: Some(vec![]),
            connected_count: Some(0),
        });
    (report, failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{barbell, book_complement, complete, cycle, generalized_barbell, path};

    fn two_k3() -> Graph {
        complete(3).unwrap().disjoint_union(&complete(3).unwrap())
    }

    #[test]
    fn same_polynomial_examples() {
        assert!(same_polynomial(&barbell(3).unwrap(), &book_complement(2).unwrap()).unwrap());
        assert!(same_polynomial(&barbell(3).unwrap(), &two_k3()).unwrap());
        assert!(!same_polynomial(&cycle(4).unwrap(), &path(4).unwrap()).unwrap());
    }

    #[test]
    fn iso_examples() {
        let a = generalized_barbell(3, &[(0, 0), (1, 1)]).unwrap();
        let b = generalized_barbell(3, &[(0, 0), (0, 1)]).unwrap();
        assert!(!are_isomorphic(&a, &b).unwrap());

        let two_k2 = complete(2).unwrap().disjoint_union(&complete(2).unwrap());
        assert!(are_isomorphic(&book_complement(1).unwrap(), &two_k2).unwrap());

        let c3 = cycle(3).unwrap();
        assert!(are_isomorphic(&complete(3).unwrap(), &c3).unwrap());

        assert!(!are_isomorphic(&complete(3).unwrap(), &complete(4).unwrap()).unwrap());
        assert!(are_isomorphic(&Graph::edgeless(0), &Graph::edgeless(0)).unwrap());
        assert!(matches!(
            are_isomorphic(&Graph::edgeless(11), &Graph::edgeless(11)),
            Err(EquivError::TooLargeForIso(11))
        ));
    }

    #[test]
    fn iso_invariant_under_relabeling() {
        let g = barbell(4).unwrap();
        let perm = [3, 7, 1, 0, 6, 2, 5, 4];
        assert!(are_isomorphic(&g, &g.permute(&perm)).unwrap());
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&barbell(8).unwrap()));
        assert!(!is_connected(&two_k3()));
        assert!(is_connected(&Graph::edgeless(1)));
        assert!(is_connected(&Graph::edgeless(0)));
        assert!(!is_connected(&Graph::edgeless(2)));
    }

    #[test]
    fn classify_small_catalog() {
        let records = vec![
            CatalogRecord {
                source_id: "bar3".into(),
                graph: barbell(3).unwrap(),
            },
            CatalogRecord {
                source_id: "b2c".into(),
                graph: book_complement(2).unwrap(),
            },
            CatalogRecord {
                source_id: "2k3".into(),
                graph: two_k3(),
            },
            CatalogRecord {
                source_id: "c6".into(),
                graph: cycle(6).unwrap(),
            },
        ];
        let (reports, failures) = classify_catalog(records, &ClassifyOptions::default());
        assert!(failures.is_empty());
        assert_eq!(reports.len(), 2);
        let sizes: Vec<usize> = reports.iter().map(|r| r.members.len()).collect();
        assert!(sizes.contains(&3) && sizes.contains(&1));
        let big = reports.iter().find(|r| r.members.len() == 3).unwrap();
        // three pairwise non-isomorphic members
        assert_eq!(big.iso_classes.as_ref().unwrap().len(), 3);
        assert_eq!(big.connected_count, Some(2)); // 2K3 is disconnected
    }

    #[test]
    fn classify_empty_stream() {
        let (reports, failures) = classify_catalog(vec![], &ClassifyOptions::default());
        assert!(reports.is_empty() && failures.is_empty());
    }

    #[test]
    fn classify_reports_failures_per_record() {
        let records = vec![
            CatalogRecord {
                source_id: "ok".into(),
                graph: complete(3).unwrap(),
            },
            CatalogRecord {
                source_id: "too-big".into(),
                graph: Graph::edgeless(40),
            },
        ];
        let (reports, failures) = classify_catalog(records, &ClassifyOptions::default());
        assert_eq!(reports.len(), 1);
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].source_id, "too-big");
    }

    #[test]
    fn classify_is_input_order_invariant() {
        let mk = || {
            vec![
                CatalogRecord {
                    source_id: "a".into(),
                    graph: barbell(3).unwrap(),
                },
                CatalogRecord {
                    source_id: "b".into(),
                    graph: cycle(6).unwrap(),
                },
                CatalogRecord {
                    source_id: "c".into(),
                    graph: two_k3(),
                },
            ]
        };
        let (r1, _) = classify_catalog(mk(), &ClassifyOptions::default());
        let mut reversed = mk();
        reversed.reverse();
        let (r2, _) = classify_catalog(reversed, &ClassifyOptions::default());
        let flat = |rs: &[ClassReport]| {
            rs.iter()
                .map(|r| {
                    (
                        r.key.clone(),
                        r.members.iter().map(|m| m.source_id.clone()).collect::<Vec<_>>(),
                    )
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(flat(&r1), flat(&r2));
    }

    #[test]
    fn find_class_members_examples() {
        let target = crate::families::FamilySpec::Barbell(3).closed_form().unwrap();
        let records = vec![
            CatalogRecord {
                source_id: "bar3".into(),
                graph: barbell(3).unwrap(),
            },
            CatalogRecord {
                source_id: "2k3".into(),
                graph: two_k3(),
            },
            CatalogRecord {
                source_id: "c6".into(),
                graph: cycle(6).unwrap(),
            },
        ];
        let (report, failures) =
            find_class_members(&target, records.clone(), &ClassifyOptions::default());
        assert!(failures.is_empty());
        assert_eq!(report.members.len(), 2);

        let connected = ClassifyOptions {
            connected_only: true,
            ..Default::default()
        };
        let (report, _) = find_class_members(&target, records, &connected);
        assert_eq!(report.members.len(), 1);
        assert_eq!(report.members[0].source_id, "bar3");

        // no graph with n >= 1 has constant term 1
        let odd = DomPolynomial::from_i64_coeffs(&[1, 0, 3]);
        let records = vec![CatalogRecord {
            source_id: "k1".into(),
            graph: Graph::edgeless(1),
        }];
        let (report, _) = find_class_members(&odd, records, &ClassifyOptions::default());
        assert!(report.members.is_empty());
    }

    #[test]
    fn isomorphic_graphs_share_polynomial() {
        let g = barbell(3).unwrap();
        let sigma = [5, 0, 3, 1, 4, 2];
        assert!(same_polynomial(&g, &g.permute(&sigma)).unwrap());
    }
}
