//! Efficient open and closed domination: verification and exact search.
//!
//! An *ECD set* (perfect code) `P` is a vertex set whose closed neighborhoods
//! `N[v]` partition the vertex set; an *EOD set* `D` is one whose open
//! neighborhoods `N(v)` do. Both searches are exact cover instances over the
//! vertex set. A graph with an isolated vertex has no EOD set, since nothing
//! can cover that vertex.

mod certificate;
mod number;
mod structure;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact_cover::ExactCover;
use crate::graph::{Graph, VertexSet};

pub use certificate::{CertificateError, CertificateRecord, EocdCertificate};
pub use number::{gamma, gamma_t, DominationError};
pub use structure::{
    check_empty_dp_characterization, check_empty_pd_characterization, classify_partition, Bullet, BulletCheck,
    StructureReport,
};

/// Which neighborhood a center covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Neighborhood {
    Open,
    Closed,
}

impl Neighborhood {
    fn covers(self, graph: &Graph, center: usize) -> impl Iterator<Item = usize> + '_ {
        let own = (self == Neighborhood::Closed).then_some(center);
        graph.neighbors(center).iter().copied().chain(own)
    }
}

/// Why a set fails to be an efficient (open or closed) dominating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverDefect {
    /// A member is not a vertex of the graph.
    NotAVertex(usize),
    /// No chosen neighborhood contains this vertex.
    Uncovered(usize),
    /// Two or more chosen neighborhoods contain this vertex.
    Overcovered { vertex: usize, centers: Vec<usize> },
}

impl fmt::Display for CoverDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverDefect::NotAVertex(v) => write!(f, "{v} is not a vertex of the graph"),
            CoverDefect::Uncovered(v) => write!(f, "vertex {v} is not covered"),
            CoverDefect::Overcovered { vertex, centers } => {
                write!(f, "vertex {vertex} is covered more than once, by {centers:?}")
            }
        }
    }
}

/// First defect (smallest vertex) of `centers` as a partition by the given neighborhoods.
pub fn cover_defect(graph: &Graph, centers: &VertexSet, kind: Neighborhood) -> Option<CoverDefect> {
    let n = graph.n();
    if let Some(v) = centers.iter().find(|&v| v >= n) {
        return Some(CoverDefect::NotAVertex(v));
    }
    let mut count = vec![0u32; n];
    for c in centers.iter() {
        for x in kind.covers(graph, c) {
            count[x] += 1;
        }
    }
    let v = count.iter().position(|&k| k != 1)?;
    if count[v] == 0 {
        return Some(CoverDefect::Uncovered(v));
    }
    let centers = centers
        .iter()
        .filter(|&c| kind.covers(graph, c).any(|x| x == v))
        .collect();
    Some(CoverDefect::Overcovered { vertex: v, centers })
}

pub fn is_ecd_set(graph: &Graph, set: &VertexSet) -> bool {
    cover_defect(graph, set, Neighborhood::Closed).is_none()
}

pub fn is_eod_set(graph: &Graph, set: &VertexSet) -> bool {
    cover_defect(graph, set, Neighborhood::Open).is_none()
}

fn neighborhood_cover(graph: &Graph, kind: Neighborhood) -> (ExactCover, Vec<usize>) {
    let mut problem = ExactCover::new(graph.n(), 0);
    let mut centers = Vec::with_capacity(graph.n());
    for v in graph.vertices() {
        // An empty open neighborhood covers nothing and never helps.
        if kind == Neighborhood::Open && graph.degree(v) == 0 {
            continue;
        }
        problem.add_option(kind.covers(graph, v));
        centers.push(v);
    }
    (problem, centers)
}

fn find_efficient(graph: &Graph, kind: Neighborhood) -> Option<VertexSet> {
    let (problem, centers) = neighborhood_cover(graph, kind);
    let rows = problem.first_solution()?;
    Some(VertexSet::from_iter_with_capacity(
        graph.n(),
        rows.into_iter().map(|r| centers[r]),
    ))
}

/// Every efficient dominating set of the given kind, in search order.
pub fn all_efficient_sets(graph: &Graph, kind: Neighborhood) -> Vec<VertexSet> {
    let (problem, centers) = neighborhood_cover(graph, kind);
    problem
        .all_solutions()
        .into_iter()
        .map(|rows| VertexSet::from_iter_with_capacity(graph.n(), rows.into_iter().map(|r| centers[r])))
        .collect()
}

/// Some ECD set (perfect code) of `graph`, or `None` if there is none.
pub fn find_ecd(graph: &Graph) -> Option<VertexSet> {
    find_efficient(graph, Neighborhood::Closed)
}

/// Some EOD set of `graph`, or `None` if there is none.
pub fn find_eod(graph: &Graph) -> Option<VertexSet> {
    find_efficient(graph, Neighborhood::Open)
}

/// Constraint on how the EOD set `D` and ECD set `P` of a certificate relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum SearchMode {
    /// No constraint; the two sets are searched independently.
    #[default]
    Any,
    /// `D ∩ P = ∅`.
    EmptyIntersection,
    /// `P - D = ∅`, i.e. `P ⊆ D`.
    EmptyPMinusD,
}

impl SearchMode {
    pub fn admits(self, d: &VertexSet, p: &VertexSet) -> bool {
        match self {
            SearchMode::Any => true,
            SearchMode::EmptyIntersection => d.is_disjoint(p),
            SearchMode::EmptyPMinusD => p.is_subset(d),
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Any => "any",
            SearchMode::EmptyIntersection => "empty-dp",
            SearchMode::EmptyPMinusD => "empty-pd",
        })
    }
}

impl std::str::FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "any" => Ok(SearchMode::Any),
            "empty-dp" => Ok(SearchMode::EmptyIntersection),
            "empty-pd" => Ok(SearchMode::EmptyPMinusD),
            other => Err(format!(
                "unknown search mode `{other}` (expected any, empty-dp or empty-pd)"
            )),
        }
    }
}

/// Searches for an EOD set and an ECD set satisfying `mode`.
///
/// The constrained modes solve one joint exact cover problem: a copy of the
/// vertex set for open coverage, a copy for closed coverage, and per vertex
/// the options "in D only", "in P only" and "in both" as the mode allows.
/// For `EmptyIntersection` a secondary item per vertex keeps it out of both sets.
pub fn find_eocd(graph: &Graph, mode: SearchMode) -> Option<EocdCertificate> {
    let (d, p) = match mode {
        SearchMode::Any => (find_eod(graph)?, find_ecd(graph)?),
        SearchMode::EmptyIntersection | SearchMode::EmptyPMinusD => joint_search(graph, mode)?,
    };
    let cert = EocdCertificate::new(graph, d, p).expect("search returns valid sets");
    debug_assert!(mode.admits(cert.d(), cert.p()));
    Some(cert)
}

#[derive(Clone, Copy)]
enum Role {
    DOnly,
    POnly,
    Both,
}

fn joint_search(graph: &Graph, mode: SearchMode) -> Option<(VertexSet, VertexSet)> {
    let n = graph.n();
    let secondary = if mode == SearchMode::EmptyIntersection { n } else { 0 };
    let mut problem = ExactCover::new(2 * n, secondary);
    let mut roles = Vec::new();
    let open = |v: usize| graph.neighbors(v).iter().copied();
    let closed = |v: usize| graph.neighbors(v).iter().map(|&x| n + x).chain(Some(n + v));
    for v in graph.vertices() {
        match mode {
            SearchMode::EmptyIntersection => {
                if graph.degree(v) > 0 {
                    problem.add_option(open(v).chain(Some(2 * n + v)));
                    roles.push((v, Role::DOnly));
                }
                problem.add_option(closed(v).chain(Some(2 * n + v)));
                roles.push((v, Role::POnly));
            }
            SearchMode::EmptyPMinusD => {
                if graph.degree(v) > 0 {
                    problem.add_option(open(v));
                    roles.push((v, Role::DOnly));
                    problem.add_option(open(v).chain(closed(v)));
                    roles.push((v, Role::Both));
                }
            }
            SearchMode::Any => unreachable!("independent search"),
        }
    }
    let rows = problem.first_solution()?;
    let mut d = VertexSet::new(n);
    let mut p = VertexSet::new(n);
    for r in rows {
        let (v, role) = roles[r];
        match role {
            Role::DOnly => {
                d.insert(v);
            }
            Role::POnly => {
                p.insert(v);
            }
            Role::Both => {
                d.insert(v);
                p.insert(v);
            }
        }
    }
    Some((d, p))
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
    fn verifies_closed_codes() {
        assert!(is_ecd_set(&path(4), &VertexSet::from([0, 3])));
        assert!(is_ecd_set(&path(2), &VertexSet::from([0])));
        assert!(!is_ecd_set(&cycle(4), &VertexSet::from([0])));
        assert_eq!(
            cover_defect(&cycle(4), &VertexSet::from([0]), Neighborhood::Closed),
            Some(CoverDefect::Uncovered(2))
        );
        assert_eq!(
            cover_defect(&path(4), &VertexSet::from([0, 2]), Neighborhood::Closed),
            Some(CoverDefect::Overcovered {
                vertex: 1,
                centers: vec![0, 2]
            })
        );
        assert_eq!(
            cover_defect(&path(4), &VertexSet::from([7]), Neighborhood::Closed),
            Some(CoverDefect::NotAVertex(7))
        );
    }

    #[test]
    fn verifies_open_codes() {
        assert!(is_eod_set(&path(4), &VertexSet::from([1, 2])));
        assert!(is_eod_set(&path(2), &VertexSet::from([0, 1])));
        assert!(!is_eod_set(&path(5), &VertexSet::from([1, 2])));
        assert_eq!(
            cover_defect(&path(5), &VertexSet::from([1, 2]), Neighborhood::Open),
            Some(CoverDefect::Uncovered(4))
        );
    }

    #[test]
    fn finds_codes_on_examples() {
        assert_eq!(find_ecd(&path(5)), Some(VertexSet::from([0, 3])));
        let k2 = find_ecd(&path(2)).unwrap();
        assert!(k2 == VertexSet::from([0]) || k2 == VertexSet::from([1]));
        assert_eq!(find_ecd(&cycle(4)), None);

        assert_eq!(find_eod(&path(5)), None);
        assert_eq!(find_eod(&path(2)), Some(VertexSet::from([0, 1])));
        let d = find_eod(&cycle(12)).unwrap();
        assert_eq!(d.len(), 6);
        assert!(is_eod_set(&cycle(12), &d));
    }

    #[test]
    fn isolated_vertices_block_open_codes() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(find_eod(&g), None);
        assert_eq!(find_ecd(&g), Some(VertexSet::from([0, 2])));
        assert!(!is_eod_set(&g, &VertexSet::from([0, 1, 2])));
    }

    #[test]
    fn eocd_search_modes() {
        assert!(find_eocd(&path(5), SearchMode::Any).is_none());
        let cert = find_eocd(&path(2), SearchMode::Any).unwrap();
        assert_eq!(cert.d(), &VertexSet::from([0, 1]));
        assert_eq!(cert.p(), &VertexSet::from([0]));
        assert!(find_eocd(&cycle(12), SearchMode::Any).is_some());

        // Every perfect code of C12 meets every EOD set of C12.
        assert!(find_eocd(&cycle(12), SearchMode::EmptyIntersection).is_none());
        assert!(find_eocd(&cycle(12), SearchMode::EmptyPMinusD).is_none());
        let cert = find_eocd(&path(4), SearchMode::EmptyIntersection).unwrap();
        assert!(cert.dp().is_empty());

        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let cert = find_eocd(&star, SearchMode::EmptyPMinusD).unwrap();
        assert!(cert.p_only().is_empty());
        assert!(find_eocd(&star, SearchMode::EmptyIntersection).is_none());
        // P4 only has D = {1,2}, P = {0,3}.
        assert!(find_eocd(&path(4), SearchMode::EmptyIntersection).is_some());
        assert!(find_eocd(&path(4), SearchMode::EmptyPMinusD).is_none());
    }

    #[test]
    fn mode_parsing() {
        for mode in [SearchMode::Any, SearchMode::EmptyIntersection, SearchMode::EmptyPMinusD] {
            assert_eq!(mode.to_string().parse::<SearchMode>(), Ok(mode));
        }
        assert!("both".parse::<SearchMode>().is_err());
    }
}
