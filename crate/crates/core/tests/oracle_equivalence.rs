use eocd::corpus::{all_labeled_graphs, nonisomorphic_trees, random_nonisomorphic_graphs};
use eocd::domination::{find_ecd, find_eocd, find_eod, gamma, gamma_t, SearchMode};
use eocd::graph::Graph;
use eocd::tree::is_eocd_tree;

/// Subsets of `0..n` as vertex lists whose chosen neighbourhoods partition `V`.
fn partitioning_subsets(g: &Graph, closed: bool) -> Vec<Vec<usize>> {
    let n = g.n();
    let hood = |v: usize| {
        let mut h: Vec<usize> = g.neighbors(v).to_vec();
        if closed {
            h.push(v);
        }
        h
    };
    (0u64..1 << n)
        .map(|mask| (0..n).filter(|v| mask >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|set| {
            let mut count = vec![0; n];
            for &v in set {
                for w in hood(v) {
                    count[w] += 1;
                }
            }
            count.iter().all(|&c| c == 1)
        })
        .collect()
}

fn min_dominating(g: &Graph, closed: bool) -> Option<usize> {
    let n = g.n();
    (0u64..1 << n)
        .filter(|mask| {
            (0..n).all(|w| (closed && mask >> w & 1 == 1) || g.neighbors(w).iter().any(|&v| mask >> v & 1 == 1))
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
}

fn eocd_modes(g: &Graph) -> [bool; 3] {
    let ds = partitioning_subsets(g, false);
    let ps = partitioning_subsets(g, true);
    let any = !ds.is_empty() && !ps.is_empty();
    let pair = |ok: &dyn Fn(&[usize], &[usize]) -> bool| ds.iter().any(|d| ps.iter().any(|p| ok(d, p)));
    [
        any,
        pair(&|d, p| d.iter().all(|v| !p.contains(v))),
        pair(&|d, p| p.iter().all(|v| d.contains(v))),
    ]
}

#[test]
fn efficient_sets_on_all_graphs_up_to_five_vertices() {
    for n in 0..=5 {
        for g in all_labeled_graphs(n) {
            assert_eq!(find_ecd(&g).is_some(), !partitioning_subsets(&g, true).is_empty());
            assert_eq!(find_eod(&g).is_some(), !partitioning_subsets(&g, false).is_empty());
        }
    }
}

#[test]
fn search_modes_on_sampled_graphs() {
    let modes = [SearchMode::Any, SearchMode::EmptyIntersection, SearchMode::EmptyPMinusD];
    for g in random_nonisomorphic_graphs(600, 11) {
        let expected = eocd_modes(&g);
        for (mode, want) in modes.iter().zip(expected) {
            let found = find_eocd(&g, *mode);
            assert_eq!(found.is_some(), want, "{mode} on {:?}", g.edges().collect::<Vec<_>>());
            if let Some(cert) = found {
                assert!(mode.admits(cert.d(), cert.p()));
            }
        }
    }
}

#[test]
fn domination_numbers_on_sampled_graphs() {
    for g in random_nonisomorphic_graphs(300, 5) {
        assert_eq!(Some(gamma(&g)), min_dominating(&g, true));
        assert_eq!(gamma_t(&g).ok(), min_dominating(&g, false));
    }
}

#[test]
fn tree_recognition_up_to_ten_vertices() {
    for n in 1..=10 {
        for t in nonisomorphic_trees(n) {
            let both = !partitioning_subsets(&t, false).is_empty() && !partitioning_subsets(&t, true).is_empty();
            assert_eq!(is_eocd_tree(&t).unwrap().is_some(), both);
        }
    }
}
