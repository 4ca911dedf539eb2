//! Moving between EOD and ECD graphs.
//!
//! Contracting the matching induced by an EOD set gives a graph in which the
//! contracted vertices form a perfect code. Conversely, splitting every vertex
//! of a perfect code into two adjacent halves, with its neighbors shared
//! between them, gives a graph in which the halves form an EOD set.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::domination::{cover_defect, is_ecd_set, is_eod_set, CoverDefect, Neighborhood};
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("not an EOD set: {0}")]
    InvalidEod(CoverDefect),
    #[error("not an ECD set: {0}")]
    InvalidEcd(CoverDefect),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("split plan names vertex {0}, which is not in the code")]
    NotACodeVertex(usize),
    #[error("split plan for vertex {0} is not a partition of its neighborhood")]
    NotAPartition(usize),
}

/// Result of contracting an EOD matching.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Graph,
    /// The contracted vertices, an ECD set of `graph`.
    pub code: VertexSet,
    /// Old vertex id to new vertex id.
    pub map: Vec<usize>,
    /// The contracted pairs `(a, b)` with `a < b`, in order of their new id.
    pub pairs: Vec<(usize, usize)>,
}

impl Contraction {
    /// The split plan that separates every contracted vertex back into the
    /// neighbors of its two pre-images.
    pub fn inverse_plan(&self, original: &Graph) -> SplitPlan {
        let mut plan = SplitPlan::new();
        for &(a, b) in &self.pairs {
            let side = |x: usize, other: usize| -> Vec<usize> {
                original
                    .neighbors(x)
                    .iter()
                    .filter(|&&y| y != other)
                    .map(|&y| self.map[y])
                    .collect()
            };
            plan.insert(self.map[a], side(a, b), side(b, a));
        }
        plan
    }
}

/// Contracts the matching `⟨d⟩` of an EOD set `d`.
pub fn eod_to_ecd(graph: &Graph, d: &VertexSet) -> Result<Contraction, TransformError> {
    if let Some(defect) = cover_defect(graph, d, Neighborhood::Open) {
        return Err(TransformError::InvalidEod(defect));
    }
    let pairs: Vec<(usize, usize)> = d
        .iter()
        .filter_map(|v| {
            let w = *graph.neighbors(v).iter().find(|&&w| d.contains(w))?;
            (v < w).then_some((v, w))
        })
        .collect();
    let (contracted, map) = graph.contract_edges(&pairs)?;
    let code = VertexSet::from_iter_with_capacity(contracted.n(), pairs.iter().map(|&(a, _)| map[a]));
    assert!(
        is_ecd_set(&contracted, &code),
        "contraction of an EOD matching yields a perfect code"
    );
    Ok(Contraction {
        graph: contracted,
        code,
        map,
        pairs,
    })
}

/// For each code vertex, the neighbors that go to the `A` half and those
/// that go to the `B` half. Code vertices without an entry keep every
/// neighbor on the `A` half.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SplitPlan {
    sides: BTreeMap<usize, (VertexSet, VertexSet)>,
}

impl SplitPlan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: usize, a: impl IntoIterator<Item = usize>, b: impl IntoIterator<Item = usize>) {
        self.sides.insert(v, (a.into_iter().collect(), b.into_iter().collect()));
    }

    pub fn with(mut self, v: usize, a: impl IntoIterator<Item = usize>, b: impl IntoIterator<Item = usize>) -> Self {
        self.insert(v, a, b);
        self
    }

    fn b_side(&self, v: usize) -> Option<&VertexSet> {
        self.sides.get(&v).map(|(_, b)| b)
    }
}

/// Result of splitting a perfect code.
#[derive(Debug, Clone)]
pub struct Split {
    pub graph: Graph,
    /// Both halves of every split vertex, an EOD set of `graph`.
    pub eod: VertexSet,
    /// `(v_A, v_B)` for each code vertex `v`, ascending by `v`.
    pub halves: Vec<(usize, usize)>,
}

/// Splits every vertex of the perfect code `p` into adjacent halves.
///
/// `v_A` keeps the id of `v`; the `v_B` vertices are appended in ascending
/// order of `v` and labelled `<name>_B`.
pub fn ecd_to_eod(graph: &Graph, p: &VertexSet, plan: &SplitPlan) -> Result<Split, TransformError> {
    if let Some(defect) = cover_defect(graph, p, Neighborhood::Closed) {
        return Err(TransformError::InvalidEcd(defect));
    }
    for (&v, (a, b)) in &plan.sides {
        if !p.contains(v) {
            return Err(TransformError::NotACodeVertex(v));
        }
        if !a.is_disjoint(b) || a.union(b) != graph.open_neighborhood(v) {
            return Err(TransformError::NotAPartition(v));
        }
    }

    let n = graph.n();
    let halves: Vec<(usize, usize)> = p.iter().enumerate().map(|(i, v)| (v, n + i)).collect();
    let mut b_id = vec![None; n];
    for &(v, vb) in &halves {
        b_id[v] = Some(vb);
    }
    // Code vertices are pairwise at distance at least 3, so an edge has at most one code end.
    let moved = |u: usize, x: usize| match (b_id[u], plan.b_side(u)) {
        (Some(ub), Some(b)) if b.contains(x) => ub,
        _ => u,
    };
    let edges = graph
        .edges()
        .map(|(u, x)| (moved(u, x), moved(x, u)))
        .chain(halves.iter().copied());
    let labels: Vec<(usize, String)> = graph
        .labels()
        .iter()
        .map(|(&v, l)| (v, l.clone()))
        .chain(
            halves
                .iter()
                .map(|&(v, vb)| (vb, format!("{}_B", graph.display_name(v)))),
        )
        .collect();
    let split = Graph::from_edges(n + halves.len(), edges)?.with_labels(labels);
    let eod = VertexSet::from_iter_with_capacity(split.n(), halves.iter().flat_map(|&(a, b)| [a, b]));
    assert!(is_eod_set(&split, &eod), "splitting a perfect code yields an EOD set");
    Ok(Split {
        graph: split,
        eod,
        halves,
    })
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

    #[test]
    fn contracts_p4_and_k2() {
        let c = eod_to_ecd(&path(4), &VertexSet::from([1, 2])).unwrap();
        assert_eq!(c.graph.n(), 3);
        assert_eq!(c.graph.degree(c.map[1]), 2);
        assert_eq!(c.code, VertexSet::from([c.map[1]]));

        let c = eod_to_ecd(&path(2), &VertexSet::from([0, 1])).unwrap();
        assert_eq!(c.graph.n(), 1);
        assert_eq!(c.code, VertexSet::from([0]));
    }

    #[test]
    fn contracts_c12() {
        let c = eod_to_ecd(&cycle(12), &VertexSet::from([0, 1, 4, 5, 8, 9])).unwrap();
        assert_eq!(c.graph.n(), 9);
        assert_eq!(c.code.len(), 3);
        assert!(is_ecd_set(&c.graph, &c.code));
    }

    #[test]
    fn rejects_invalid_eod() {
        let err = eod_to_ecd(&path(5), &VertexSet::from([1, 2])).unwrap_err();
        assert_eq!(err, TransformError::InvalidEod(CoverDefect::Uncovered(4)));
    }

    #[test]
    fn splits_examples() {
        let p3 = path(3);
        let s = ecd_to_eod(&p3, &VertexSet::from([1]), &SplitPlan::new().with(1, [0], [2])).unwrap();
        assert_eq!(s.graph.n(), 4);
        assert_eq!(s.graph.degree_sequence(), vec![2, 2, 1, 1]);
        assert_eq!(s.eod, VertexSet::from([1, 3]));
        assert_eq!(s.graph.label(3), Some("1_B"));

        let k1 = Graph::empty(1);
        let s = ecd_to_eod(&k1, &VertexSet::from([0]), &SplitPlan::new()).unwrap();
        assert_eq!(s.graph.edge_count(), 1);
        assert_eq!(s.eod, VertexSet::from([0, 1]));

        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = ecd_to_eod(&star, &VertexSet::from([0]), &SplitPlan::new().with(0, [1], [2, 3])).unwrap();
        assert_eq!(s.graph.n(), 5);
        assert!(s.graph.is_tree());
    }

    #[test]
    fn rejects_bad_plans() {
        let p3 = path(3);
        let code = VertexSet::from([1]);
        let err = ecd_to_eod(&p3, &code, &SplitPlan::new().with(1, [0], [0, 2])).unwrap_err();
        assert_eq!(err, TransformError::NotAPartition(1));
        let err = ecd_to_eod(&p3, &code, &SplitPlan::new().with(0, [1], [])).unwrap_err();
        assert_eq!(err, TransformError::NotACodeVertex(0));
        assert!(matches!(
            ecd_to_eod(&p3, &VertexSet::from([0]), &SplitPlan::new()),
            Err(TransformError::InvalidEcd(_))
        ));
    }

    #[test]
    fn round_trip_keeps_order() {
        let g = cycle(12);
        let d = VertexSet::from([0, 1, 4, 5, 8, 9]);
        let c = eod_to_ecd(&g, &d).unwrap();
        let s = ecd_to_eod(&c.graph, &c.code, &c.inverse_plan(&g)).unwrap();
        assert_eq!(s.graph.n(), g.n());
        assert_eq!(s.graph.degree_sequence(), g.degree_sequence());
    }
}
