use indpoly_core::analysis::{detect_f_symmetry, is_symmetric, unimodality};
use indpoly_core::engine::{
    corona_from_polynomials, indpoly, indpoly_bruteforce, indpoly_zykov, independence_number,
};
use indpoly_core::graph::{are_isomorphic, dsl, edgelist};
use indpoly_core::{Graph, IntPolynomial, Polynomial};
use num_rational::Ratio;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn union_multiplies(g in graph(7), h in graph(7)) {
        prop_assert_eq!(indpoly(&Graph::disjoint_union(&g, &h)), &indpoly(&g) * &indpoly(&h));
    }

    #[test]
    fn join_adds(g in graph(7), h in graph(7)) {
        let joined = indpoly(&Graph::zykov_sum(&g, &h));
        prop_assert_eq!(&joined, &indpoly_zykov(&indpoly(&g), &indpoly(&h)).unwrap());
        prop_assert_eq!(joined, indpoly_bruteforce(&Graph::zykov_sum(&g, &h)).unwrap());
    }

    #[test]
    fn vertex_rule(g in graph(9), v in 0usize..9) {
        let v = v % g.order();
        let rest = indpoly(&g.delete_vertex(v).unwrap());
        let closed = indpoly(&g.delete_closed_neighborhood(v).unwrap());
        prop_assert_eq!(indpoly(&g), &rest + &closed.shift(1));
    }

    #[test]
    fn corona_formula_matches_the_explicit_graph(g in graph(4), h in graph(4)) {
        let explicit = indpoly(&Graph::corona(&g, &h));
        prop_assert_eq!(&explicit, &corona_from_polynomials(&indpoly(&g), &indpoly(&h), g.order()));
        prop_assert_eq!(explicit.degree(), g.order() * independence_number(&h).max(1));
    }

    #[test]
    fn complement_of_complement(g in graph(8)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn descriptor_and_edge_list_round_trip(g in graph(9)) {
        prop_assert_eq!(&dsl::parse(&g.descriptor()).unwrap(), &g);
        prop_assert_eq!(&edgelist::parse(&edgelist::render(&g)).unwrap(), &g);
    }

    #[test]
    fn alpha_two_coronas_are_f_symmetric(g in graph(4), h in graph(5)) {
        prop_assume!(independence_number(&h) == 2);
        let m = h.order() * (h.order() - 1) / 2 - h.size();
        let report = detect_f_symmetry(&indpoly(&Graph::corona(&g, &h)));
        prop_assert!(report.f_symmetric);
        prop_assert_eq!(report.constant_c.unwrap(), Ratio::from_integer(m.into()));
    }
}

#[test]
fn expression_language_builds_the_named_families() {
    let cases = [
        ("Kme(4)", Graph::complete_minus_edge(4).unwrap()),
        ("compl(E(3))", Graph::complete(3)),
        ("union(P(2), K(1))", Graph::from_edges(3, &[(0, 1)]).unwrap()),
        ("join(E(2), E(2))", Graph::cycle(4).unwrap()),
        ("corona(K(1), E(2))", Graph::path(3)),
    ];
    for (expr, want) in cases {
        let g = dsl::parse(expr).unwrap();
        assert!(are_isomorphic(&g, &want).unwrap(), "{expr}");
    }
}

#[test]
fn corona_with_complete_minus_edge_is_palindromic() {
    for r in 2..=6 {
        let h = Graph::complete_minus_edge(r).unwrap();
        for g in [Graph::path(4), Graph::cycle(5).unwrap(), Graph::complete(3)] {
            let p = indpoly(&Graph::corona(&g, &h));
            assert!(is_symmetric(&p));
            assert_eq!(unimodality(&p).modes, vec![g.order()]);
        }
    }
}

#[test]
fn analysis_is_generic_over_the_coefficient_type() {
    let small: Polynomial<i64> = Polynomial::from_slice(&[1, 12, 52, 105, 104, 48, 8]);
    let report = detect_f_symmetry(&small);
    assert_eq!(report.constant_c, Some(Ratio::from_integer(2)));
    assert!(unimodality(&small).unique_mode);
    let big = IntPolynomial::from_slice(&[1, 12, 52, 105, 104, 48, 8]);
    assert_eq!(detect_f_symmetry(&big).constant_c.unwrap().to_string(), "2");
}
