//! Exact domination and total domination numbers.
//!
//! Both are minimum set covers: choosing `v` covers `N[v]` for domination and
//! `N(v)` for total domination. The search deepens the size bound from a
//! counting lower bound up to the greedy solution size. Each level is a
//! branch and bound that picks the uncovered vertex with the fewest possible
//! coverers and prunes when the best remaining gains cannot finish the cover.

use thiserror::Error;

use super::Neighborhood;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("vertex {0} is isolated, so no total dominating set exists")]
    IsolatedVertex(usize),
}

/// The domination number `γ(G)`.
pub fn gamma(graph: &Graph) -> usize {
    CoverSearch::new(graph, Neighborhood::Closed).minimum()
}

/// The total domination number `γ_t(G)`; undefined with isolated vertices.
pub fn gamma_t(graph: &Graph) -> Result<usize, DominationError> {
    if let Some(v) = graph.isolated_vertex() {
        return Err(DominationError::IsolatedVertex(v));
    }
    Ok(CoverSearch::new(graph, Neighborhood::Open).minimum())
}

type Bits = Vec<u64>;

fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn overlap(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

struct CoverSearch {
    n: usize,
    masks: Vec<Bits>,
    coverers: Vec<Vec<usize>>,
}

impl CoverSearch {
    fn new(graph: &Graph, kind: Neighborhood) -> Self {
        let n = graph.n();
        let words = n.div_ceil(64);
        let mut masks = vec![vec![0u64; words]; n];
        let mut coverers = vec![Vec::new(); n];
        for v in graph.vertices() {
            for x in kind.covers(graph, v) {
                masks[v][x / 64] |= 1 << (x % 64);
                coverers[x].push(v);
            }
        }
        for list in &mut coverers {
            list.sort_unstable();
        }
        CoverSearch { n, masks, coverers }
    }

    fn all(&self) -> Bits {
        let mut bits = vec![0u64; self.n.div_ceil(64)];
        for x in 0..self.n {
            bits[x / 64] |= 1 << (x % 64);
        }
        bits
    }

    fn greedy(&self) -> usize {
        let mut uncovered = self.all();
        let mut chosen = 0;
        while count(&uncovered) > 0 {
            let best = (0..self.n)
                .max_by_key(|&v| (overlap(&self.masks[v], &uncovered), std::cmp::Reverse(v)))
                .expect("non-empty graph");
            for (u, m) in uncovered.iter_mut().zip(&self.masks[best]) {
                *u &= !m;
            }
            chosen += 1;
        }
        chosen
    }

    fn minimum(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let upper = self.greedy();
        let widest = self.masks.iter().map(|m| count(m)).max().unwrap_or(1).max(1);
        let lower = self.n.div_ceil(widest);
        (lower..upper)
            .find(|&k| self.covers_within(&self.all(), k))
            .unwrap_or(upper)
    }

    fn covers_within(&self, uncovered: &Bits, budget: usize) -> bool {
        let left = count(uncovered);
        if left == 0 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let gains: Vec<usize> = self.masks.iter().map(|m| overlap(m, uncovered)).collect();
        let mut best = gains.clone();
        best.sort_unstable_by(|a, b| b.cmp(a));
        if best.iter().take(budget).sum::<usize>() < left {
            return false;
        }

        let target = (0..self.n)
            .filter(|&x| uncovered[x / 64] >> (x % 64) & 1 == 1)
            .min_by_key(|&x| self.coverers[x].len())
            .expect("something is uncovered");
        let mut options = self.coverers[target].clone();
        options.sort_by_key(|&v| std::cmp::Reverse(gains[v]));
        options.into_iter().any(|v| {
            let next: Bits = uncovered.iter().zip(&self.masks[v]).map(|(u, m)| u & !m).collect();
            self.covers_within(&next, budget - 1)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Smallest subset size whose chosen neighborhoods cover everything, by enumeration.
    fn brute(graph: &Graph, closed: bool) -> usize {
        let n = graph.n();
        (0u32..1 << n)
            .filter(|s| {
                (0..n).all(|x| (closed && s >> x & 1 == 1) || graph.neighbors(x).iter().any(|&y| s >> y & 1 == 1))
            })
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn small_values() {
        assert_eq!(gamma(&path(4)), 2);
        assert_eq!(gamma(&path(2)), 1);
        assert_eq!(gamma(&cycle(12)), 4);
        assert_eq!(gamma_t(&path(4)), Ok(2));
        assert_eq!(gamma_t(&path(2)), Ok(2));
        assert_eq!(gamma(&Graph::empty(0)), 0);
        assert_eq!(gamma(&Graph::empty(3)), 3);
    }

    #[test]
    fn isolated_vertex_is_an_error() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(gamma_t(&g), Err(DominationError::IsolatedVertex(2)));
    }

    #[test]
    fn matches_enumeration_on_cycles_and_paths() {
        for n in 3..=14 {
            assert_eq!(gamma(&cycle(n)), brute(&cycle(n), true), "C{n}");
            assert_eq!(gamma_t(&cycle(n)).unwrap(), brute(&cycle(n), false), "C{n}");
        }
        for n in 2..=14 {
            assert_eq!(gamma(&path(n)), brute(&path(n), true), "P{n}");
            assert_eq!(gamma_t(&path(n)).unwrap(), brute(&path(n), false), "P{n}");
        }
    }
}
