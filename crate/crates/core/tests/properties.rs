use eocd::domination::{find_eocd, is_ecd_set, is_eod_set, SearchMode};
use eocd::edgelist::{parse_edge_list, write_edge_list};
use eocd::empty_pd::recognize_empty_pd;
use eocd::graph::Graph;
use eocd::reduction::{CnfFormula, Literal};
use eocd::transforms::{ecd_to_eod, eod_to_ecd};
use eocd::tree::{decompose, random_eocd_tree, TreeOpSequence};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=n * 2).prop_map(move |pairs| {
            let mut edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_list_round_trip(g in graph_strategy(12)) {
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert!(back.edges().eq(g.edges()));
    }

    #[test]
    fn found_certificates_are_valid(g in graph_strategy(12)) {
        for mode in [SearchMode::Any, SearchMode::EmptyIntersection, SearchMode::EmptyPMinusD] {
            if let Some(cert) = find_eocd(&g, mode) {
                prop_assert!(is_eod_set(&g, cert.d()) && is_ecd_set(&g, cert.p()));
                prop_assert!(mode.admits(cert.d(), cert.p()));
            }
        }
    }

    #[test]
    fn contraction_then_split_is_eod(g in graph_strategy(12)) {
        if let Some(cert) = find_eocd(&g, SearchMode::Any) {
            let contraction = eod_to_ecd(&g, cert.d()).unwrap();
            prop_assert!(is_ecd_set(&contraction.graph, &contraction.code));
            prop_assert_eq!(contraction.graph.n(), g.n() - cert.d().len() / 2);
            let plan = contraction.inverse_plan(&g);
            let split = ecd_to_eod(&contraction.graph, &contraction.code, &plan).unwrap();
            prop_assert_eq!(split.graph.n(), g.n());
            prop_assert_eq!(split.graph.edge_count(), g.edge_count());
            prop_assert!(is_eod_set(&split.graph, &split.eod));
        }
    }

    #[test]
    fn empty_pd_recognizer_matches_search(g in graph_strategy(12)) {
        prop_assert_eq!(recognize_empty_pd(&g).is_some(), find_eocd(&g, SearchMode::EmptyPMinusD).is_some());
    }

    #[test]
    fn random_trees_round_trip(steps in 0usize..25, seed in any::<u64>()) {
        let t = random_eocd_tree(steps, seed);
        t.state.certificate();
        let seq = decompose(&t.state.tree, &t.state.d, &t.state.p).unwrap();
        let parsed = TreeOpSequence::parse(&seq.to_text()).unwrap();
        prop_assert_eq!(&parsed, &seq);
        let rebuilt = parsed.replay_relabelled().unwrap();
        prop_assert!(rebuilt.tree.edges().eq(t.state.tree.edges()));
        rebuilt.certificate();
    }

    #[test]
    fn dimacs_round_trip(n in 3usize..7, raw in proptest::collection::vec((any::<[bool; 3]>(), 0usize..1000), 0..6)) {
        let clauses = raw.into_iter().map(|(signs, pick)| {
            let a = pick % n;
            let b = (a + 1 + pick / n % (n - 1)) % n;
            let c = (0..n).find(|v| *v != a && *v != b).unwrap();
            [Literal { var: a, positive: signs[0] }, Literal { var: b, positive: signs[1] }, Literal { var: c, positive: signs[2] }]
        }).collect();
        let f = CnfFormula::new(n, clauses).unwrap();
        prop_assert_eq!(CnfFormula::parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }
}
