//! Property-based invariants over random graphs and polynomials.

use domeq::engine::{domination_polynomial, dominating_set_counts};
use domeq::g6::{decode_graph6, encode_graph6};
use domeq::graph::Graph;
use domeq::poly::DomPolynomial;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// A random graph of order 1..=8 from an edge-presence bit vector.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&bits)
                .filter(|(_, &b)| b)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn arb_poly() -> impl Strategy<Value = DomPolynomial> {
    proptest::collection::vec(-20i64..=20, 0..8).prop_map(|c| DomPolynomial::from_i64_coeffs(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn disjoint_union_is_multiplicative(g in arb_graph(), h in arb_graph()) {
        let u = g.disjoint_union(&h);
        prop_assert_eq!(
            domination_polynomial(&u).unwrap(),
            domination_polynomial(&g).unwrap().multiply(&domination_polynomial(&h).unwrap())
        );
    }

    #[test]
    fn relabeling_preserves_the_polynomial(
        (g, perm) in arb_graph().prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_perm(n))
        })
    ) {
        let relabeled = g.permute(&perm);
        prop_assert_eq!(
            domination_polynomial(&g).unwrap(),
            domination_polynomial(&relabeled).unwrap()
        );
    }

    #[test]
    fn counts_are_upward_closed_and_end_at_one(g in arb_graph()) {
        let counts = dominating_set_counts(&g).unwrap().counts().to_vec();
        let n = g.n();
        prop_assert_eq!(counts.len(), n + 1);
        prop_assert_eq!(&counts[n], &BigInt::one());
        // once a dominating set of size i exists, larger sizes exist too
        let mut seen = false;
        for (i, c) in counts.iter().enumerate() {
            if seen && i <= n {
                prop_assert!(!c.is_zero());
            }
            if !c.is_zero() {
                seen = true;
            }
        }
    }

    #[test]
    fn graph6_round_trips(g in arb_graph()) {
        let line = encode_graph6(&g).unwrap();
        prop_assert_eq!(decode_graph6(&line).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph()) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn polynomial_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.multiply(&b), b.multiply(&a));
        prop_assert_eq!(a.multiply(&b.add(&c)), a.multiply(&b).add(&a.multiply(&c)));
        prop_assert_eq!(a.subtract(&a), DomPolynomial::zero());
        prop_assert_eq!(a.multiply(&DomPolynomial::one()), a.clone());
    }

    #[test]
    fn display_and_csv_round_trip(a in arb_poly()) {
        prop_assert_eq!(DomPolynomial::from_display(&a.to_display()).unwrap(), a.clone());
        prop_assert_eq!(DomPolynomial::from_coeff_csv(&a.to_coeff_csv()).unwrap(), a.clone());
    }
}
