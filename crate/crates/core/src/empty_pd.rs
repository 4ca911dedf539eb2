//! Polynomial recognition of EOCD graphs whose ECD set lies inside the EOD set.
//!
//! Once `K2` components are set aside, `P` has to be the set of all support
//! vertices and `D` is `P` plus one leaf per support. What remains is checking
//! that the closed neighborhoods of `P` cover the graph and that any two
//! supports are at distance at least 3.

use std::collections::VecDeque;

use crate::domination::{is_ecd_set, is_eod_set, EocdCertificate};
use crate::graph::{Graph, VertexSet};

/// The forced candidate pair `(D, P)`, or `None` when some non-`K2`
/// component has no leaf.
pub fn empty_pd_candidate(graph: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = graph.n();
    let mut d = VertexSet::new(n);
    let mut p = VertexSet::new(n);
    for component in graph.connected_components() {
        let members = component.to_vec();
        if members.len() == 2 && graph.has_edge(members[0], members[1]) {
            d.insert(members[0]);
            d.insert(members[1]);
            p.insert(members[0]);
            continue;
        }
        let mut has_leaf = false;
        for &leaf in members.iter().filter(|&&v| graph.degree(v) == 1) {
            has_leaf = true;
            let support = graph.neighbors(leaf)[0];
            assert!(graph.degree(support) > 1, "a leaf next to a leaf forms a K2 component");
            if p.insert(support) {
                d.insert(support);
                // Leaves are visited in increasing order, so this is the smallest one.
                d.insert(leaf);
            }
        }
        if !has_leaf {
            return None;
        }
    }
    Some((d, p))
}

/// Decides whether `graph` has a certificate with `P ⊆ D`, and returns one.
pub fn recognize_empty_pd(graph: &Graph) -> Option<EocdCertificate> {
    let (d, p) = empty_pd_candidate(graph)?;
    let n = graph.n();
    let mut covered = vec![false; n];
    for v in p.iter() {
        covered[v] = true;
        for &x in graph.neighbors(v) {
            covered[x] = true;
        }
    }
    if covered.contains(&false) {
        return None;
    }
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for source in p.iter() {
        for &v in &touched {
            dist[v] = usize::MAX;
        }
        touched.clear();
        dist[source] = 0;
        touched.push(source);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            if dist[u] == 2 {
                continue;
            }
            for &w in graph.neighbors(u) {
                if dist[w] == usize::MAX {
                    if p.contains(w) {
                        return None;
                    }
                    dist[w] = dist[u] + 1;
                    touched.push(w);
                    queue.push_back(w);
                }
            }
        }
    }
    Some(EocdCertificate::new(graph, d, p).expect("accepted candidates are valid certificates"))
}

/// `P` is an ECD set exactly when `D` is an EOD set, for the forced candidate.
pub fn candidate_sets_agree(graph: &Graph) -> bool {
    match empty_pd_candidate(graph) {
        Some((d, p)) => is_ecd_set(graph, &p) == is_eod_set(graph, &d),
        None => true,
    }
}
