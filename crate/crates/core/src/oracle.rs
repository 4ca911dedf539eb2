//! Reference answers by plain subset enumeration, for graphs on at most
//! [`ORACLE_LIMIT`] vertices. Shares no code with the search in
//! [`crate::domination`].

use crate::graph::Graph;

pub const ORACLE_LIMIT: usize = 24;

fn masks(graph: &Graph, closed: bool) -> Vec<u32> {
    assert!(
        graph.n() <= ORACLE_LIMIT,
        "the oracle is limited to {ORACLE_LIMIT} vertices"
    );
    graph
        .vertices()
        .map(|v| {
            let open = graph.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w);
            if closed {
                open | 1 << v
            } else {
                open
            }
        })
        .collect()
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Whether the neighbourhoods of the vertices in `set` partition the vertex set.
fn partitions(hoods: &[u32], set: u32, n: usize) -> bool {
    let mut covered = 0u32;
    for (v, &hood) in hoods.iter().enumerate() {
        if set >> v & 1 == 1 {
            if covered & hood != 0 {
                return false;
            }
            covered |= hood;
        }
    }
    covered == full(n)
}

/// Every subset whose closed neighbourhoods partition `V`, as bitmasks.
pub fn ecd_sets(graph: &Graph) -> Vec<u32> {
    let hoods = masks(graph, true);
    (0..=full(graph.n()))
        .filter(|&s| partitions(&hoods, s, graph.n()))
        .collect()
}

/// Every subset whose open neighbourhoods partition `V`, as bitmasks.
pub fn eod_sets(graph: &Graph) -> Vec<u32> {
    let hoods = masks(graph, false);
    (0..=full(graph.n()))
        .filter(|&s| partitions(&hoods, s, graph.n()))
        .collect()
}

/// Whether some ECD set `p` and EOD set `d` satisfy `accept(d, p)`.
pub fn eocd_pair(graph: &Graph, accept: impl Fn(u32, u32) -> bool) -> Option<(u32, u32)> {
    let ds = eod_sets(graph);
    let ps = ecd_sets(graph);
    ds.iter()
        .find_map(|&d| ps.iter().find(|&&p| accept(d, p)).map(|&p| (d, p)))
}

/// Size of a smallest dominating set.
pub fn gamma(graph: &Graph) -> usize {
    smallest_cover(graph, true).expect("V dominates itself")
}

/// Size of a smallest total dominating set, or `None` with an isolated vertex.
pub fn gamma_t(graph: &Graph) -> Option<usize> {
    smallest_cover(graph, false)
}

fn smallest_cover(graph: &Graph, closed: bool) -> Option<usize> {
    let n = graph.n();
    let hoods = masks(graph, closed);
    (0..=full(n))
        .filter(|&s| {
            let covered = hoods
                .iter()
                .enumerate()
                .filter(|&(v, _)| s >> v & 1 == 1)
                .fold(0, |m, (_, &h)| m | h);
            covered == full(n)
        })
        .map(|s| s.count_ones() as usize)
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn small_values() {
        assert_eq!(ecd_sets(&path(5).unwrap()), vec![0b01001, 0b10010]);
        assert!(eod_sets(&path(5).unwrap()).is_empty());
        assert_eq!(gamma(&cycle(12).unwrap()), 4);
        assert_eq!(gamma_t(&path(4).unwrap()), Some(2));
        assert_eq!(gamma_t(&Graph::empty(2)), None);
        assert!(eocd_pair(&path(4).unwrap(), |_, _| true).is_some());
    }
}
