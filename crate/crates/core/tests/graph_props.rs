mod common;

use std::collections::BTreeSet;

use hermix::graph::{enumerate_simple_cycles, ParseError};
use hermix::phase::arc_balance;
use hermix::{parse_graph, MixedGraph};
use proptest::prelude::*;

fn component_count(graph: &MixedGraph) -> usize {
    let n = graph.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for e in graph.edges() {
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        parent[a] = b;
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

proptest! {
    #[test]
    fn text_round_trip(g in common::arb_graph(8)) {
        prop_assert_eq!(parse_graph(&g.to_text()).unwrap(), g.clone());
        prop_assert_eq!(g.to_string().parse::<MixedGraph>().unwrap(), g);
    }

    #[test]
    fn cycle_rank(g in common::arb_graph(8)) {
        let basis = g.fundamental_cycles();
        let c = component_count(&g);
        prop_assert_eq!(basis.len() + g.n(), g.edge_count() + c);
        prop_assert_eq!(g.connected_components().len(), c);
        prop_assert_eq!(g.is_forest(), basis.is_empty());
        for w in &basis.cycles {
            prop_assert!(w.is_closed());
            let inner: BTreeSet<usize> = w.vertices[1..].iter().copied().collect();
            prop_assert_eq!(inner.len(), w.edge_count());
            prop_assert!(w.steps(&g).is_ok());
        }
    }

    #[test]
    fn simple_cycles_match_subset_enumeration(g in common::arb_graph(6)) {
        let lib: BTreeSet<Vec<usize>> = enumerate_simple_cycles(&g.underlying(), g.n())
            .into_iter()
            .map(|c| c.0)
            .collect();
        let oracle: BTreeSet<Vec<usize>> = common::brute_cycles(&g).into_iter().collect();
        prop_assert_eq!(lib, oracle);
    }

    #[test]
    fn balance_agrees_with_oracle(g in common::arb_graph(6)) {
        for c in common::brute_cycles(&g) {
            let mut closed = c.clone();
            closed.push(c[0]);
            let (b, len) = arc_balance(&g, &closed.into()).unwrap();
            prop_assert_eq!((b, len), common::cycle_data(&g, &c));
        }
    }

    #[test]
    fn degrees(g in common::arb_graph(8)) {
        let profile = g.degree_profile();
        let expected: Vec<usize> = (0..g.n())
            .map(|u| (0..g.n()).filter(|&v| common::arc_sign(&g, u, v).is_some()).count())
            .collect();
        prop_assert_eq!(profile.max_degree, expected.iter().copied().max().unwrap_or(0));
        prop_assert_eq!(&profile.degrees, &expected);
        prop_assert_eq!(profile.regular, expected.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn assignments_are_a_bijection() {
    for n in 0..=4 {
        let total = MixedGraph::assignment_count(n).unwrap();
        let graphs: BTreeSet<String> = (0..total)
            .map(|i| MixedGraph::from_assignment(n, i).to_text())
            .collect();
        assert_eq!(graphs.len() as u64, total);
    }
    let mut digits = vec![0u8; 6];
    for i in 0..4096u64 {
        let mut k = i;
        for d in digits.iter_mut() {
            *d = (k % 4) as u8;
            k /= 4;
        }
        assert_eq!(MixedGraph::from_assignment(4, i), common::graph_from_digits(4, &digits));
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    assert!(matches!(parse_graph("# nothing\n"), Err(ParseError::MissingVertexCount)));
    assert!(matches!(parse_graph("x\n"), Err(ParseError::BadVertexCount { line: 1, .. })));
    assert!(matches!(
        parse_graph("3\n0 -> 1\n1 => 2\n"),
        Err(ParseError::Malformed { line: 3, .. })
    ));
    assert!(matches!(
        parse_graph("3\n0 -> 1\n\n1 -- 0\n"),
        Err(ParseError::Invalid { line: 4, .. })
    ));
    assert!(matches!(parse_graph("2\n0 -> 5\n"), Err(ParseError::Invalid { line: 2, .. })));
    assert!(matches!(parse_graph("2\n1 -- 1\n"), Err(ParseError::Invalid { line: 2, .. })));
}
