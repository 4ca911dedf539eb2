//! Graph and formula generators for exhaustive and randomized checks.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::reduction::{CnfFormula, Literal};

/// All trees on `n >= 1` vertices up to isomorphism, in a fixed order.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "a tree has at least one vertex");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut levels: Vec<usize> = (0..n).collect();
    loop {
        let tree = tree_from_levels(&levels);
        if seen.insert(tree_canonical_form(&tree)) {
            out.push(tree);
        }
        if !next_level_sequence(&mut levels) {
            return out;
        }
    }
}

/// Advances a canonical rooted level sequence; false after the star.
fn next_level_sequence(levels: &mut [usize]) -> bool {
    let Some(p) = (1..levels.len()).rev().find(|&i| levels[i] > 1) else {
        return false;
    };
    let q = (0..p)
        .rev()
        .find(|&i| levels[i] == levels[p] - 1)
        .expect("a parent level exists");
    for i in p..levels.len() {
        levels[i] = levels[i - (p - q)];
    }
    true
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let edges = (1..levels.len()).map(|i| {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] + 1 == levels[i])
            .expect("a parent precedes");
        (parent, i)
    });
    Graph::from_edges(levels.len(), edges.collect::<Vec<_>>()).expect("level sequences give trees")
}

/// Isomorphism-invariant string of a tree: the smaller AHU code over its centers.
pub fn tree_canonical_form(tree: &Graph) -> String {
    centers(tree)
        .into_iter()
        .map(|c| ahu(tree, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn centers(tree: &Graph) -> Vec<usize> {
    let n = tree.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = tree.vertices().map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = tree.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in tree.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn ahu(tree: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = tree
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(tree, w, v))
        .collect();
    children.sort_unstable();
    format!("({})", children.concat())
}

/// Every labeled graph on `n <= 6` vertices, indexed by edge bitmask.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "2^15 graphs is the largest exhaustive family");
    let pairs = pairs(n);
    (0u32..1 << pairs.len())
        .map(|mask| graph_from_mask(n, &pairs, mask as u64))
        .collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("pairs are distinct")
}

/// Canonical edge bitmask of a graph on at most 11 vertices: the minimum over
/// all relabelings that respect the colour refinement order.
pub fn canonical_mask(graph: &Graph) -> u64 {
    let n = graph.n();
    assert!(n <= 11, "canonical masks are limited to 11 vertices");
    let cells = refined_cells(graph);
    let adjacency: Vec<u32> = graph
        .vertices()
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut order = Vec::with_capacity(n);
    let mut best = u64::MAX;
    search_orders(&cells, 0, &mut order, &adjacency, &mut best);
    best
}

fn search_orders(cells: &[Vec<usize>], cell: usize, order: &mut Vec<usize>, adjacency: &[u32], best: &mut u64) {
    if cell == cells.len() {
        *best = (*best).min(mask_of_order(order, adjacency));
        return;
    }
    let mut members = cells[cell].clone();
    permute(&mut members, 0, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        search_orders(cells, cell + 1, order, adjacency, best);
        order.truncate(len);
    });
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Bitmask of the graph relabelled so that `order[i]` becomes vertex `i`.
fn mask_of_order(order: &[usize], adjacency: &[u32]) -> u64 {
    let mut mask = 0u64;
    let mut bit = 0;
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            if adjacency[order[a]] >> order[b] & 1 == 1 {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// Vertex classes of the stable colour refinement, ordered by colour.
fn refined_cells(graph: &Graph) -> Vec<Vec<usize>> {
    let n = graph.n();
    let mut colour: Vec<usize> = vec![0; n];
    let mut classes = 1;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = graph
            .vertices()
            .map(|v| {
                let mut around: Vec<usize> = graph.neighbors(v).iter().map(|&w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colour = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells
}

/// Pairwise non-isomorphic random graphs on `7` or `8` vertices, up to
/// `target` of them, with edge densities between 0.15 and 0.85.
pub fn random_nonisomorphic_graphs(target: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let budget = target.saturating_mul(40).max(1000);
    for _ in 0..budget {
        if out.len() >= target {
            break;
        }
        let n = if rng.gen_bool(0.5) { 7 } else { 8 };
        let density = rng.gen_range(0.15..0.85);
        let pairs = pairs(n);
        let mask = pairs
            .iter()
            .enumerate()
            .filter(|_| rng.gen_bool(density))
            .fold(0u64, |m, (k, _)| m | 1 << k);
        let graph = graph_from_mask(n, &pairs, mask);
        if seen.insert((n, canonical_mask(&graph))) {
            out.push(graph);
        }
    }
    out
}

/// `G ∘ K1`: every vertex of `graph` gets a new pendant neighbour `v + n`.
pub fn corona(graph: &Graph) -> Graph {
    let n = graph.n();
    let edges = graph.edges().chain((0..n).map(|v| (v, v + n)));
    Graph::from_edges(2 * n, edges.collect::<Vec<_>>()).expect("pendants are new vertices")
}

/// A random graph admitting a certificate with `P ⊆ D`: `centers` pairwise
/// far centres `0..centers`, each with a pendant leaf, and `others` vertices
/// each joined to one centre and randomly among themselves.
pub fn random_empty_pd_graph(centers: usize, others: usize, density: f64, seed: u64) -> Graph {
    assert!(centers >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * centers + others;
    let mut edges: Vec<(usize, usize)> = (0..centers).map(|c| (c, centers + c)).collect();
    let first_other = 2 * centers;
    for r in first_other..n {
        edges.push((rng.gen_range(0..centers), r));
        for s in r + 1..n {
            if rng.gen_bool(density) {
                edges.push((r, s));
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let edges = edges.into_iter().map(|(a, b)| (order[a], order[b]));
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("edges are distinct")
}

/// Every formula on three variables with at most `max_clauses` clauses over
/// `{x1, x2, x3}`, in every polarity pattern and clause order.
pub fn exhaustive_formulas(max_clauses: usize) -> Vec<CnfFormula> {
    let clauses: Vec<[Literal; 3]> = (0u8..8)
        .map(|signs| {
            [0, 1, 2].map(|v| Literal {
                var: v,
                positive: signs >> v & 1 == 0,
            })
        })
        .collect();
    let mut out = Vec::new();
    for n_vars in 1..=3 {
        out.push(CnfFormula::new(n_vars, Vec::new()).expect("no clauses"));
    }
    let mut layer: Vec<Vec<[Literal; 3]>> = vec![Vec::new()];
    for _ in 0..max_clauses {
        layer = layer
            .iter()
            .flat_map(|prefix| {
                clauses.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(*c);
                    next
                })
            })
            .collect();
        out.extend(
            layer
                .iter()
                .map(|cs| CnfFormula::new(3, cs.clone()).expect("distinct variables")),
        );
    }
    out
}

/// A random formula with `n_vars >= 3` variables and `clauses` clauses of
/// three distinct variables.
pub fn random_formula(n_vars: usize, clauses: usize, seed: u64) -> CnfFormula {
    assert!(n_vars >= 3, "clauses need three distinct variables");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars: Vec<usize> = (0..n_vars).collect();
    let clauses = (0..clauses)
        .map(|_| {
            let chosen: Vec<usize> = vars.choose_multiple(&mut rng, 3).copied().collect();
            [0, 1, 2].map(|k| Literal {
                var: chosen[k],
                positive: rng.gen_bool(0.5),
            })
        })
        .collect();
    CnfFormula::new(n_vars, clauses).expect("distinct variables")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| nonisomorphic_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
        assert!(nonisomorphic_trees(9).iter().all(Graph::is_tree));
    }

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(all_labeled_graphs(4).len(), 64);
        assert_eq!(all_labeled_graphs(0).len(), 1);
    }

    #[test]
    fn canonical_mask_counts_isomorphism_classes() {
        for (n, classes) in [(3, 4), (4, 11), (5, 34)] {
            let distinct: HashSet<u64> = all_labeled_graphs(n).iter().map(canonical_mask).collect();
            assert_eq!(distinct.len(), classes, "n = {n}");
        }
    }

    #[test]
    fn random_sample_is_nonisomorphic() {
        let sample = random_nonisomorphic_graphs(300, 3);
        assert_eq!(sample.len(), 300);
        let distinct: HashSet<(usize, u64)> = sample.iter().map(|g| (g.n(), canonical_mask(g))).collect();
        assert_eq!(distinct.len(), 300);
    }

    #[test]
    fn formulas() {
        assert_eq!(exhaustive_formulas(2).len(), 3 + 8 + 64);
        let f = random_formula(4, 4, 1);
        assert_eq!(f.clauses().len(), 4);
        assert_eq!(random_formula(4, 4, 1), f);
    }

    #[test]
    fn corona_shape() {
        let c = corona(&crate::families::path(3).unwrap());
        assert_eq!((c.n(), c.edge_count()), (6, 5));
    }
}
