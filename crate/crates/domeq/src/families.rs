//! Constructors for the named graph families and their parametric specs.
//!
//! Vertex labelings are fixed so regression baselines are byte-identical:
//! blocks come first in block-major order, pages in order, hub vertices last.
//! Isomorphism-insensitive comparisons belong in [`crate::equiv`].

use crate::graph::{Graph, GraphError};
use crate::poly::DomPolynomial;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    InvalidParam(String),
    #[error("cross pair ({0}, {1}) uses a reserved or out-of-range index")]
    BadCrossPair(usize, usize),
    #[error("duplicate cross pair ({0}, {1})")]
    DuplicateCrossPair(usize, usize),
    #[error("cross-edge count {t} outside [1, {max}]")]
    CrossCountOutOfRange { t: usize, max: usize },
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("cannot parse family spec {0:?}: {1}")]
    Parse(String, String),
    #[error("no closed form in scope for family {0:?}")]
    UnsupportedClosedForm(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named parametric family instance with a canonical text form
/// (e.g. `barbell:8`, `genbarbell:3:0-0,1-1`, `book_c:4`, `chain:K3,K4,K3:t=2`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Path(usize),
    Cycle(usize),
    /// `K_{1,n}`: `n` leaves, center labeled last.
    Star(usize),
    CocktailParty(usize),
    Book(usize),
    BookComplement(usize),
    Barbell(usize),
    GeneralizedBarbell {
        n: usize,
        cross: Vec<(usize, usize)>,
    },
    CliqueChain(Vec<usize>),
    GeneralizedCliqueChain {
        sizes: Vec<usize>,
        cross: Vec<Vec<(usize, usize)>>,
    },
    Union(Vec<FamilySpec>),
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParam("complete: n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Graph, FamilyError> {
    if part_sizes.is_empty() {
        return Err(FamilyError::InvalidParam("multipartite: empty part list".into()));
    }
    if part_sizes.iter().any(|&p| p == 0) {
        return Err(FamilyError::InvalidParam("multipartite: zero part size".into()));
    }
    let n: usize = part_sizes.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in part_sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(p));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParam("path: n >= 1".into()));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParam("cycle: n >= 3".into()));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Ok(Graph::from_edges(n, &edges)?)
}

/// `K_{1,n}`: leaves `0..n`, center `n`.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParam("star: n >= 1".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, n)).collect();
    Ok(Graph::from_edges(n + 1, &edges)?)
}

/// `CP(t)`: `K_{2t}` minus the perfect matching `{0,1}, {2,3}, ...`.
pub fn cocktail_party(t: usize) -> Result<Graph, FamilyError> {
    if t < 1 {
        return Err(FamilyError::InvalidParam("cocktail_party: t >= 1".into()));
    }
    let n = 2 * t;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !(u / 2 == v / 2) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Book graph `B_n`: page vertices `a_i = 2i`, `b_i = 2i + 1` for
/// `i in 0..n`, hubs `u = 2n`, `v = 2n + 1`. Each page is the 4-cycle
/// `u - a_i - b_i - v - u` sharing the hub edge `{u, v}`.
pub fn book(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParam("book: n >= 1".into()));
    }
    let u = 2 * n;
    let v = 2 * n + 1;
    let mut edges = vec![(u, v)];
    for i in 0..n {
        let (a, b) = (2 * i, 2 * i + 1);
        edges.push((u, a));
        edges.push((a, b));
        edges.push((b, v));
    }
    Ok(Graph::from_edges(2 * n + 2, &edges)?)
}

/// Complement of the book graph, built explicitly: cliques
/// `{a_0..a_{n-1}, v}` and `{b_0..b_{n-1}, u}` plus cross edges `a_i - b_j`
/// for `i != j`. Labels match [`book`], so adjacency is identical to
/// `book(n).complement()`.
pub fn book_complement(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParam("book_complement: n >= 1".into()));
    }
    let u = 2 * n;
    let v = 2 * n + 1;
    let mut edges = Vec::new();
    for i in 0..n {
        let (ai, bi) = (2 * i, 2 * i + 1);
        edges.push((ai, v));
        edges.push((bi, u));
        for j in i + 1..n {
            let (aj, bj) = (2 * j, 2 * j + 1);
            edges.push((ai, aj));
            edges.push((bi, bj));
            edges.push((ai, bj));
            edges.push((aj, bi));
        }
    }
    Ok(Graph::from_edges(2 * n + 2, &edges)?)
}

/// `Bar_n`: blocks `0..n` and `n..2n`, bridge between vertex `n - 1` of each
/// block (global indices `n - 1` and `2n - 1`).
pub fn barbell(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::InvalidParam("barbell: n >= 2".into()));
    }
    let g = complete(n)?.disjoint_union(&complete(n)?);
    Ok(g.add_edge(n - 1, 2 * n - 1)?)
}

/// `Bar_{n,t}`: two `K_n` blocks plus exactly the given cross edges
/// `(i, j) -> {u_i, v_j}` with both coordinates in `[0, n - 1)`; the last
/// vertex of each block is reserved and carries no cross edge.
pub fn generalized_barbell(n: usize, cross_pairs: &[(usize, usize)]) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParam("generalized_barbell: n >= 3".into()));
    }
    let max = (n - 1) * (n - 1);
    if cross_pairs.is_empty() || cross_pairs.len() > max {
        return Err(FamilyError::CrossCountOutOfRange {
            t: cross_pairs.len(),
            max,
        });
    }
    let mut seen = std::collections::HashSet::new();
    let mut g = complete(n)?.disjoint_union(&complete(n)?);
    for &(i, j) in cross_pairs {
        if i >= n - 1 || j >= n - 1 {
            return Err(FamilyError::BadCrossPair(i, j));
        }
        if !seen.insert((i, j)) {
            return Err(FamilyError::DuplicateCrossPair(i, j));
        }
        g = g.add_edge(i, n + j)?;
    }
    Ok(g)
}

/// The lexicographically first `t` cross pairs over an `(a, b)` index grid;
/// the CLI convenience default for `genbarbell:n:t=K` and `chain:...:t=K`.
pub fn first_cross_pairs(rows: usize, cols: usize, t: usize) -> Vec<(usize, usize)> {
    (0..rows)
        .flat_map(|i| (0..cols).map(move |j| (i, j)))
        .take(t)
        .collect()
}

/// One block of a chain: the graph plus its inward attachment vertices.
/// End blocks carry exactly one attachment, internal blocks two distinct
/// ones; every attachment vertex must have full degree inside its block.
pub struct ChainBlock {
    pub graph: Graph,
    pub left_attach: Option<usize>,
    pub right_attach: Option<usize>,
}

/// `S(G_1, ..., G_k)`: disjoint union of the blocks plus a bridge between
/// the right attachment of block `i` and the left attachment of block `i+1`.
pub fn chain_of_graphs(blocks: &[ChainBlock]) -> Result<Graph, FamilyError> {
    if blocks.len() < 2 {
        return Err(FamilyError::InvalidChain("need at least 2 blocks".into()));
    }
    let k = blocks.len();
    for (idx, b) in blocks.iter().enumerate() {
        let ni = b.graph.n();
        if ni < 3 {
            return Err(FamilyError::InvalidChain(format!(
                "block {idx} has order {ni} < 3"
            )));
        }
        let first = idx == 0;
        let last = idx == k - 1;
        if first && (b.left_attach.is_some() || b.right_attach.is_none()) {
            return Err(FamilyError::InvalidChain(
                "first block must have only a right attachment".into(),
            ));
        }
        if last && (b.right_attach.is_some() || b.left_attach.is_none()) {
            return Err(FamilyError::InvalidChain(
                "last block must have only a left attachment".into(),
            ));
        }
        if !first && !last {
            match (b.left_attach, b.right_attach) {
                (Some(l), Some(r)) if l != r => {}
                (Some(l), Some(r)) if l == r => {
                    return Err(FamilyError::InvalidChain(format!(
                        "internal block {idx} reuses vertex {l} for both attachments"
                    )));
                }
                _ => {
                    return Err(FamilyError::InvalidChain(format!(
                        "internal block {idx} needs two attachments"
                    )));
                }
            }
        }
        for a in [b.left_attach, b.right_attach].into_iter().flatten() {
            if a >= ni {
                return Err(FamilyError::InvalidChain(format!(
                    "attachment {a} out of range in block {idx}"
                )));
            }
            if b.graph.degree(a) != ni - 1 {
                return Err(FamilyError::InvalidChain(format!(
                    "attachment {a} of block {idx} lacks full degree"
                )));
            }
        }
    }
    let mut g = Graph::edgeless(0);
    let mut offsets = Vec::with_capacity(k);
    for b in blocks {
        offsets.push(g.n());
        g = g.disjoint_union(&b.graph);
    }
    for i in 0..k - 1 {
        let r = offsets[i] + blocks[i].right_attach.unwrap();
        let l = offsets[i + 1] + blocks[i + 1].left_attach.unwrap();
        g = g.add_edge(r, l)?;
    }
    Ok(g)
}

/// `S(K_{n_1}, ..., K_{n_k})` with the canonical attachments: bridge from
/// vertex 1 of each block to vertex 0 of the next.
pub fn clique_chain(sizes: &[usize]) -> Result<Graph, FamilyError> {
    let cross: Vec<Vec<(usize, usize)>> = vec![vec![(1, 0)]; sizes.len().saturating_sub(1)];
    generalized_clique_chain(sizes, &cross)
}

/// `GS_t` member: cliques `K_{n_1}, ..., K_{n_k}` (block-major labels) plus
/// exactly the given inter-clique edges per consecutive pair. The last
/// vertex of each clique is reserved and touches no inter-clique edge.
pub fn generalized_clique_chain(
    sizes: &[usize],
    cross_edge_sets: &[Vec<(usize, usize)>],
) -> Result<Graph, FamilyError> {
    if sizes.len() < 2 {
        return Err(FamilyError::InvalidChain("need at least 2 cliques".into()));
    }
    if cross_edge_sets.len() != sizes.len() - 1 {
        return Err(FamilyError::InvalidChain(format!(
            "expected {} cross sets, got {}",
            sizes.len() - 1,
            cross_edge_sets.len()
        )));
    }
    if let Some(&bad) = sizes.iter().find(|&&s| s < 3) {
        return Err(FamilyError::InvalidParam(format!(
            "clique size {bad} < 3"
        )));
    }
    let mut g = Graph::edgeless(0);
    let mut offsets = Vec::with_capacity(sizes.len());
    for &s in sizes {
        offsets.push(g.n());
        g = g.disjoint_union(&complete(s)?);
    }
    for (i, set) in cross_edge_sets.iter().enumerate() {
        let (ni, nj) = (sizes[i], sizes[i + 1]);
        let max = (ni - 1) * (nj - 1);
        if set.is_empty() || set.len() > max {
            return Err(FamilyError::CrossCountOutOfRange { t: set.len(), max });
        }
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in set {
            if a >= ni - 1 || b >= nj - 1 {
                return Err(FamilyError::BadCrossPair(a, b));
            }
            if !seen.insert((a, b)) {
                return Err(FamilyError::DuplicateCrossPair(a, b));
            }
            g = g.add_edge(offsets[i] + a, offsets[i + 1] + b)?;
        }
    }
    Ok(g)
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::CompleteMultipartite(parts) => complete_multipartite(parts),
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::CocktailParty(t) => cocktail_party(*t),
            FamilySpec::Book(n) => book(*n),
            FamilySpec::BookComplement(n) => book_complement(*n),
            FamilySpec::Barbell(n) => barbell(*n),
            FamilySpec::GeneralizedBarbell { n, cross } => generalized_barbell(*n, cross),
            FamilySpec::CliqueChain(sizes) => clique_chain(sizes),
            FamilySpec::GeneralizedCliqueChain { sizes, cross } => {
                generalized_clique_chain(sizes, cross)
            }
            FamilySpec::Union(parts) => {
                let mut g = Graph::edgeless(0);
                for p in parts {
                    g = g.disjoint_union(&p.build()?);
                }
                Ok(g)
            }
        }
    }

    /// The closed-form domination polynomial, where one is in scope.
    pub fn closed_form(&self) -> Result<DomPolynomial, FamilyError> {
        let one = DomPolynomial::one;
        let binom = |n: usize| DomPolynomial::binomial_power(n as u32);
        match self {
            // D(K_n) = (1+x)^n - 1
            FamilySpec::Complete(n) => {
                check_min(*n, 1, "complete")?;
                Ok(binom(*n).subtract(&one()))
            }
            // D(CP(t)) = (1+x)^{2t} - 2tx - 1
            FamilySpec::CocktailParty(t) => {
                check_min(*t, 1, "cocktail_party")?;
                let lin = DomPolynomial::from_i64_coeffs(&[1, 2 * *t as i64]);
                Ok(binom(2 * t).subtract(&lin))
            }
            // D(B_n) = (x^2 + 2x)^n (2x + 1) + x^2 (x+1)^{2n} - 2x^n
            FamilySpec::Book(n) => {
                check_min(*n, 1, "book")?;
                let page = DomPolynomial::from_i64_coeffs(&[0, 2, 1]).pow(*n as u32);
                let hub = DomPolynomial::from_i64_coeffs(&[1, 2]);
                let middle = binom(2 * n).shift(2);
                let tail = DomPolynomial::monomial(2, *n);
                Ok(page.multiply(&hub).add(&middle).subtract(&tail))
            }
            // D(B_n^c) = ((1+x)^{n+1} - 1)^2
            FamilySpec::BookComplement(n) => {
                check_min(*n, 1, "book_complement")?;
                let f = binom(n + 1).subtract(&one());
                Ok(f.multiply(&f))
            }
            // D(Bar_n) = D(Bar_{n,t}) = ((1+x)^n - 1)^2
            FamilySpec::Barbell(n) => {
                check_min(*n, 2, "barbell")?;
                let f = binom(*n).subtract(&one());
                Ok(f.multiply(&f))
            }
            FamilySpec::GeneralizedBarbell { n, .. } => {
                check_min(*n, 3, "generalized_barbell")?;
                let f = binom(*n).subtract(&one());
                Ok(f.multiply(&f))
            }
            // D(S(K_{n_1}, ..., K_{n_k})) = prod ((1+x)^{n_i} - 1), likewise GS_t
            FamilySpec::CliqueChain(sizes)
            | FamilySpec::GeneralizedCliqueChain { sizes, .. } => {
                let mut acc = one();
                for &s in sizes {
                    acc = acc.multiply(&binom(s).subtract(&one()));
                }
                Ok(acc)
            }
            FamilySpec::Union(parts) => {
                let mut acc = one();
                for p in parts {
                    acc = acc.multiply(&p.closed_form()?);
                }
                Ok(acc)
            }
            other => Err(FamilyError::UnsupportedClosedForm(other.to_string())),
        }
    }
}

fn check_min(v: usize, min: usize, what: &str) -> Result<(), FamilyError> {
    if v < min {
        Err(FamilyError::InvalidParam(format!("{what}: n >= {min}")))
    } else {
        Ok(())
    }
}

fn fmt_pairs(pairs: &[(usize, usize)]) -> String {
    pairs
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "multipartite:{}", s.join(","))
            }
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::CocktailParty(t) => write!(f, "cocktail:{t}"),
            FamilySpec::Book(n) => write!(f, "book:{n}"),
            FamilySpec::BookComplement(n) => write!(f, "book_c:{n}"),
            FamilySpec::Barbell(n) => write!(f, "barbell:{n}"),
            FamilySpec::GeneralizedBarbell { n, cross } => {
                write!(f, "genbarbell:{n}:{}", fmt_pairs(cross))
            }
            FamilySpec::CliqueChain(sizes) => {
                let s: Vec<String> = sizes.iter().map(|p| format!("K{p}")).collect();
                write!(f, "chain:{}", s.join(","))
            }
            FamilySpec::GeneralizedCliqueChain { sizes, cross } => {
                let s: Vec<String> = sizes.iter().map(|p| p.to_string()).collect();
                let c: Vec<String> = cross.iter().map(|set| fmt_pairs(set)).collect();
                write!(f, "genchain:{}:{}", s.join(","), c.join(";"))
            }
            FamilySpec::Union(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join("+"))
            }
        }
    }
}

fn parse_usize(s: &str, whole: &str) -> Result<usize, FamilyError> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| FamilyError::Parse(whole.to_string(), format!("bad integer {s:?}")))
}

fn parse_pairs(s: &str, whole: &str) -> Result<Vec<(usize, usize)>, FamilyError> {
    s.split(',')
        .map(|p| {
            let (a, b) = p
                .split_once('-')
                .ok_or_else(|| FamilyError::Parse(whole.to_string(), format!("bad pair {p:?}")))?;
            Ok((parse_usize(a, whole)?, parse_usize(b, whole)?))
        })
        .collect()
}

fn parse_single(text: &str) -> Result<FamilySpec, FamilyError> {
    let whole = text;
    let err = |msg: &str| FamilyError::Parse(whole.to_string(), msg.to_string());
    // bare `K7` shorthand for a complete graph
    if let Some(rest) = text.strip_prefix('K') {
        if let Ok(n) = rest.parse::<usize>() {
            return Ok(FamilySpec::Complete(n));
        }
    }
    let mut parts = text.splitn(2, ':');
    let head = parts.next().unwrap_or("");
    let args = parts.next();
    let need_args = || args.ok_or_else(|| err("missing parameters"));
    match head {
        "complete" => Ok(FamilySpec::Complete(parse_usize(need_args()?, whole)?)),
        "multipartite" => {
            let sizes: Result<Vec<usize>, _> = need_args()?
                .split(',')
                .map(|s| parse_usize(s, whole))
                .collect();
            Ok(FamilySpec::CompleteMultipartite(sizes?))
        }
        "path" => Ok(FamilySpec::Path(parse_usize(need_args()?, whole)?)),
        "cycle" => Ok(FamilySpec::Cycle(parse_usize(need_args()?, whole)?)),
        "star" => Ok(FamilySpec::Star(parse_usize(need_args()?, whole)?)),
        "cocktail" => Ok(FamilySpec::CocktailParty(parse_usize(need_args()?, whole)?)),
        "book" => Ok(FamilySpec::Book(parse_usize(need_args()?, whole)?)),
        "book_c" => Ok(FamilySpec::BookComplement(parse_usize(need_args()?, whole)?)),
        "barbell" => Ok(FamilySpec::Barbell(parse_usize(need_args()?, whole)?)),
        "genbarbell" => {
            let (n_str, rest) = need_args()?
                .split_once(':')
                .ok_or_else(|| err("genbarbell needs n and cross pairs"))?;
            let n = parse_usize(n_str, whole)?;
            let cross = if let Some(t_str) = rest.strip_prefix("t=") {
                let t = parse_usize(t_str, whole)?;
                first_cross_pairs(n.saturating_sub(1), n.saturating_sub(1), t)
            } else {
                parse_pairs(rest, whole)?
            };
            Ok(FamilySpec::GeneralizedBarbell { n, cross })
        }
        "chain" => {
            let args = need_args()?;
            let (list, t) = match args.split_once(':') {
                Some((list, trest)) => {
                    let t_str = trest
                        .strip_prefix("t=")
                        .ok_or_else(|| err("chain suffix must be t=<count>"))?;
                    (list, Some(parse_usize(t_str, whole)?))
                }
                None => (args, None),
            };
            let sizes: Result<Vec<usize>, _> = list
                .split(',')
                .map(|s| {
                    s.trim()
                        .strip_prefix('K')
                        .ok_or_else(|| err("chain blocks are written K<n>"))
                        .and_then(|r| parse_usize(r, whole))
                })
                .collect();
            let sizes = sizes?;
            match t {
                None | Some(1) => Ok(FamilySpec::CliqueChain(sizes)),
                Some(t) => {
                    let cross = sizes
                        .windows(2)
                        .map(|w| {
                            first_cross_pairs(w[0].saturating_sub(1), w[1].saturating_sub(1), t)
                        })
                        .collect();
                    Ok(FamilySpec::GeneralizedCliqueChain { sizes, cross })
                }
            }
        }
        "genchain" => {
            let (list, sets_str) = need_args()?
                .split_once(':')
                .ok_or_else(|| err("genchain needs sizes and cross sets"))?;
            let sizes: Result<Vec<usize>, _> =
                list.split(',').map(|s| parse_usize(s, whole)).collect();
            let cross: Result<Vec<Vec<(usize, usize)>>, _> =
                sets_str.split(';').map(|s| parse_pairs(s, whole)).collect();
            Ok(FamilySpec::GeneralizedCliqueChain {
                sizes: sizes?,
                cross: cross?,
            })
        }
        _ => Err(err("unknown family kind")),
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, FamilyError> {
        let parts: Result<Vec<FamilySpec>, _> =
            text.trim().split('+').map(|p| parse_single(p.trim())).collect();
        let mut parts = parts?;
        if parts.is_empty() {
            return Err(FamilyError::Parse(text.to_string(), "empty spec".into()));
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Ok(FamilySpec::Union(parts))
        }
    }
}
