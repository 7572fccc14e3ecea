//! Exact domination polynomials of finite simple graphs.
//!
//! The crate computes `D(G,x) = sum_i d(G,i) x^i`, where `d(G,i)` counts the
//! dominating sets of `G` of cardinality `i`, by exact subset enumeration over
//! adjacency bit masks. On top of the enumeration core it provides:
//!
//! * constructors for the named families (books, cocktail parties, barbells,
//!   generalized barbells, clique chains) together with their closed-form
//!   polynomials ([`families`], [`poly`]);
//! * the vertex-contraction recurrence and the domination-covered /
//!   irrelevant-edge decision procedures ([`engine`]);
//! * D-equivalence machinery: catalog classification by exact polynomial,
//!   small-order isomorphism deduplication ([`equiv`], [`catalog`]);
//! * graph6 and edge-list parsing plus JSON/CSV reports ([`g6`], [`io`],
//!   [`report`]) and the full verification suite ([`verify`]).
//!
//! With the default `parallel` feature catalog sweeps fan out over a rayon
//! pool; without it the same code runs sequentially.

pub mod bitset;
pub mod catalog;
pub mod engine;
pub mod equiv;
pub mod families;
pub mod g6;
pub mod graph;
pub mod io;
pub mod par;
pub mod poly;
pub mod report;
pub mod verify;

pub use bitset::VertexSet;
pub use graph::Graph;
pub use poly::DomPolynomial;
