mod common;

use common::*;
use kernelkit::cycles::{enumerate_directed_cycles, Parity};
use kernelkit::io::{parse_json, parse_text, to_json, to_text, GraphDoc};
use kernelkit::scc::{find_cycle, is_acyclic, strongly_connected_components};
use kernelkit::{ColoredDigraph, Digraph, EdgeDirection, Error, Orientation, UndirectedGraph};
use proptest::prelude::*;

fn arb_colored(max_n: usize) -> impl Strategy<Value = ColoredDigraph> {
    (any::<u64>(), 1..=max_n, 0.0..0.7f64).prop_map(|(seed, n, p)| random_colored(&mut rng(seed), n, p))
}

fn arb_orientation(max_n: usize) -> impl Strategy<Value = Orientation> {
    arb_digraph(1, max_n).prop_flat_map(|d| {
        let g = UndirectedGraph::underlying(&d);
        let m = g.edge_count();
        proptest::collection::vec(0u8..3, m).prop_map(move |codes| {
            let dirs = codes
                .iter()
                .map(|c| match c {
                    0 => EdgeDirection::Forward,
                    1 => EdgeDirection::Backward,
                    _ => EdgeDirection::Both,
                })
                .collect();
            Orientation::new(g.clone(), dirs).unwrap()
        })
    })
}

fn round_trips(doc: GraphDoc) -> Result<(), TestCaseError> {
    prop_assert_eq!(&parse_text(&to_text(&doc)).unwrap(), &doc);
    prop_assert_eq!(&parse_json(&to_json(&doc)).unwrap(), &doc);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cycles_match_naive_dfs(d in arb_digraph(1, 7), max_len in 2usize..8) {
        let max_len = max_len.min(d.vertex_count());
        let naive = naive_cycles(&d, max_len);
        let all = enumerate_directed_cycles(&d, Parity::All, max_len, None).unwrap();
        prop_assert_eq!(&all, &naive);
        let odd = enumerate_directed_cycles(&d, Parity::Odd, max_len, None).unwrap();
        let even = enumerate_directed_cycles(&d, Parity::Even, max_len, None).unwrap();
        prop_assert!(odd.iter().all(|c| c.len() % 2 == 1));
        prop_assert!(even.iter().all(|c| c.len() % 2 == 0));
        prop_assert_eq!(odd.len() + even.len(), all.len());
    }

    #[test]
    fn acyclicity_agrees_with_cycle_list(d in arb_digraph(1, 7)) {
        let any = !naive_cycles(&d, d.vertex_count()).is_empty();
        prop_assert_eq!(is_acyclic(&d), !any);
        if let Some(c) = find_cycle(&d) {
            for i in 0..c.len() {
                prop_assert!(d.has_arc(c[i], c[(i + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn scc_members_reach_each_other(d in arb_digraph(1, 7)) {
        let cond = strongly_connected_components(&d);
        let reach = kernelkit::scc::reachability(&d);
        for u in 0..d.vertex_count() {
            for v in 0..d.vertex_count() {
                let mutual = u == v || (reach[u].contains(v) && reach[v].contains(u));
                prop_assert_eq!(cond.component_of(u) == cond.component_of(v), mutual);
            }
        }
        prop_assert!(is_acyclic(cond.dag()));
    }

    #[test]
    fn digraph_round_trip(d in arb_digraph(1, 9)) {
        round_trips(GraphDoc::Digraph(d))?;
    }

    #[test]
    fn colored_round_trip(cd in arb_colored(9)) {
        round_trips(GraphDoc::Colored(cd))?;
    }

    #[test]
    fn graph_and_orientation_round_trip(o in arb_orientation(7)) {
        round_trips(GraphDoc::Graph(o.base().clone()))?;
        let back = Orientation::from_digraph(o.base(), &o.to_digraph()).unwrap();
        prop_assert_eq!(&back, &o);
        round_trips(GraphDoc::Orientation(o))?;
    }
}

#[test]
fn cycle_budget_is_reported() {
    let d = kernelkit::families::complete_symmetric(6);
    assert!(matches!(
        enumerate_directed_cycles(&d, Parity::All, 6, Some(10)),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let cases = [
        ("digraph 2\n0 1\n1 1\n", 3),
        ("digraph 2\n# comment\n0 5\n", 3),
        ("cdigraph 2\n0 1\n", 2),
        ("cdigraph 2\n0 1 g\n", 2),
        ("graph 3\n0 1\n1 0\n", 3),
        ("orientation 3\n1 0 fwd\n", 2),
        ("orientation 3\n0 1 sideways\n", 2),
        ("tree 3\n", 1),
    ];
    for (text, line) in cases {
        match parse_text(text) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?} gave {other:?}"),
        }
    }
    assert!(parse_text("").is_err());
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let doc = parse_text("# header comment\ndigraph 3\n\n0 1 # first\n1 2\n").unwrap();
    let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(doc, GraphDoc::Digraph(d));
}
