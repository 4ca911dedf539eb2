//! How an EOD set and an ECD set sit relative to each other.
//!
//! Writing `DP = D ∩ P`, `DO = D - P`, `PO = P - D` and `R` for the rest:
//!
//! * a `DP` vertex has exactly one neighbor in `DO` and none in `PO`;
//! * a `PO` vertex has exactly one neighbor in `DO` and none in `DP`;
//! * a `DO` vertex and an `R` vertex each have either one `PO` neighbor and
//!   one `DO` neighbor, or a single `DP` neighbor (and nothing else from `D ∪ P`);
//! * `DP` with its `DO` partners induces a matching;
//! * `PO` with its `DO` partners induces `k` disjoint copies of `P4`, `2k = |PO|`;
//! * `DO` is never empty.

use serde::Serialize;

use super::certificate::EocdCertificate;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Bullet {
    DpNeighbors,
    POnlyNeighbors,
    DOnlyNeighbors,
    RNeighbors,
    DpMatching,
    POnlyPaths,
    DOnlyNonEmpty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BulletCheck {
    pub bullet: Bullet,
    pub passed: bool,
    /// A vertex witnessing the failure, when one exists.
    pub counterexample: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub checks: Vec<BulletCheck>,
    /// Number of `P4` copies induced by `P - D` and its partners.
    pub p4_count: usize,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, bullet: Bullet) -> &BulletCheck {
        self.checks
            .iter()
            .find(|c| c.bullet == bullet)
            .expect("every bullet is checked")
    }
}

struct Blocks {
    dp: VertexSet,
    d_only: VertexSet,
    p_only: VertexSet,
    r: VertexSet,
}

impl Blocks {
    /// Neighbor counts of `v` in (DP, DO, PO).
    fn counts(&self, graph: &Graph, v: usize) -> (usize, usize, usize) {
        let nb = graph.neighbors(v);
        let c = |s: &VertexSet| nb.iter().filter(|&&x| s.contains(x)).count();
        (c(&self.dp), c(&self.d_only), c(&self.p_only))
    }
}

fn first_failure(set: &VertexSet, ok: impl Fn(usize) -> bool) -> Option<usize> {
    set.iter().find(|&v| !ok(v))
}

fn check(bullet: Bullet, counterexample: Option<usize>) -> BulletCheck {
    BulletCheck {
        bullet,
        passed: counterexample.is_none(),
        counterexample,
    }
}

/// Checks every structural property of a valid certificate.
///
/// The certificate type guarantees validity, so this never fails outright; a
/// failed bullet would indicate a bug and carries a counterexample vertex.
pub fn classify_partition(graph: &Graph, cert: &EocdCertificate) -> StructureReport {
    let blocks = Blocks {
        dp: cert.dp(),
        d_only: cert.d_only(),
        p_only: cert.p_only(),
        r: cert.r(),
    };
    let mut checks = Vec::with_capacity(7);

    checks.push(check(
        Bullet::DpNeighbors,
        first_failure(&blocks.dp, |v| {
            let (_, o, p) = blocks.counts(graph, v);
            o == 1 && p == 0
        }),
    ));
    checks.push(check(
        Bullet::POnlyNeighbors,
        first_failure(&blocks.p_only, |v| {
            let (dp, o, _) = blocks.counts(graph, v);
            o == 1 && dp == 0
        }),
    ));
    let either_way = |v: usize| {
        let (dp, o, p) = blocks.counts(graph, v);
        (p == 1 && o == 1 && dp == 0) || (dp == 1 && o == 0 && p == 0)
    };
    checks.push(check(Bullet::DOnlyNeighbors, first_failure(&blocks.d_only, either_way)));
    checks.push(check(Bullet::RNeighbors, first_failure(&blocks.r, either_way)));

    let partners = |set: &VertexSet| {
        let mut out = set.clone();
        for v in set.iter() {
            out = out.union(&VertexSet::from_iter(
                graph
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&x| blocks.d_only.contains(x)),
            ));
        }
        out
    };

    let matching = partners(&blocks.dp);
    let (sub, back) = graph.induced_subgraph(&matching).expect("subset of V");
    let bad = sub.vertices().find(|&v| sub.degree(v) != 1).map(|v| back[v]);
    checks.push(check(Bullet::DpMatching, bad));

    let paths = partners(&blocks.p_only);
    let (sub, back) = graph.induced_subgraph(&paths).expect("subset of V");
    let (p4_count, bad) = count_p4_components(&sub);
    let bad = bad
        .map(|v| back[v])
        .or_else(|| (2 * p4_count != blocks.p_only.len()).then(|| blocks.p_only.iter().next().unwrap_or(0)));
    checks.push(check(Bullet::POnlyPaths, bad));

    let empty = blocks.d_only.is_empty().then_some(0);
    checks.push(check(Bullet::DOnlyNonEmpty, empty));

    StructureReport { checks, p4_count }
}

/// Number of components when every component is a `P4`; otherwise a vertex of
/// the first component that is not.
fn count_p4_components(graph: &Graph) -> (usize, Option<usize>) {
    let mut count = 0;
    for comp in graph.connected_components() {
        let edges: usize = comp.iter().map(|v| graph.degree(v)).sum::<usize>() / 2;
        let max_deg = comp.iter().map(|v| graph.degree(v)).max().unwrap_or(0);
        if comp.len() != 4 || edges != 3 || max_deg != 2 {
            return (count, comp.iter().next());
        }
        count += 1;
    }
    (count, None)
}

/// Whether `⟨A⟩` is a disjoint union of `P4`s and every vertex outside `A` has
/// exactly one neighbor of `⟨A⟩`-degree 1 and exactly one of `⟨A⟩`-degree 2.
pub fn check_empty_dp_characterization(graph: &Graph, a: &VertexSet) -> bool {
    let Ok((sub, back)) = graph.induced_subgraph(a) else {
        return false;
    };
    if count_p4_components(&sub).1.is_some() {
        return false;
    }
    let mut inner_degree = vec![usize::MAX; graph.n()];
    for v in sub.vertices() {
        inner_degree[back[v]] = sub.degree(v);
    }
    graph.vertices().filter(|&v| !a.contains(v)).all(|v| {
        let nb = graph.neighbors(v);
        let ends = nb.iter().filter(|&&x| inner_degree[x] == 1).count();
        let middles = nb.iter().filter(|&&x| inner_degree[x] == 2).count();
        ends == 1 && middles == 1
    })
}

/// Whether `⟨D⟩` is a perfect matching on `D` in which every edge has an
/// endpoint of degree 1 in `G`, and every vertex outside `D` is adjacent to
/// exactly one matched vertex designated as the `P` endpoint.
///
/// The `P` endpoint of an edge is its endpoint of larger degree; for a `K2`
/// component (both ends of degree 1) it is the smaller id.
pub fn check_empty_pd_characterization(graph: &Graph, d: &VertexSet) -> bool {
    let n = graph.n();
    if d.iter().any(|v| v >= n) {
        return false;
    }
    let mut is_p_end = vec![false; n];
    for v in d.iter() {
        let inside: Vec<usize> = graph.neighbors(v).iter().copied().filter(|&x| d.contains(x)).collect();
        let [w] = inside[..] else {
            return false;
        };
        let (dv, dw) = (graph.degree(v), graph.degree(w));
        if dv != 1 && dw != 1 {
            return false;
        }
        is_p_end[v] = dv > dw || (dv == dw && v < w);
    }
    graph
        .vertices()
        .filter(|&v| !d.contains(v))
        .all(|v| graph.neighbors(v).iter().filter(|&&x| is_p_end[x]).count() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{find_eocd, SearchMode};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn k2_and_p4_reports() {
        let k2 = path(2);
        let cert = EocdCertificate::new(&k2, VertexSet::from([0, 1]), VertexSet::from([0])).unwrap();
        let report = classify_partition(&k2, &cert);
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.p4_count, 0);

        let p4 = path(4);
        let cert = EocdCertificate::new(&p4, VertexSet::from([1, 2]), VertexSet::from([0, 3])).unwrap();
        let report = classify_partition(&p4, &cert);
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.p4_count, 1);
        assert_eq!(cert.p_only().to_vec(), vec![0, 3]);
    }

    #[test]
    fn empty_dp_characterization() {
        let p4 = path(4);
        assert!(check_empty_dp_characterization(&p4, &VertexSet::full(4)));
        assert!(!check_empty_dp_characterization(&p4, &VertexSet::from([0, 1])));

        // Two P4s plus a vertex adjacent to an end of one and a middle of the other.
        let g = Graph::from_edge_list(9, &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (8, 0), (8, 5)]).unwrap();
        assert!(check_empty_dp_characterization(&g, &VertexSet::from_iter(0..8)));
        let cert = find_eocd(&g, SearchMode::EmptyIntersection).unwrap();
        assert_eq!(cert.d(), &VertexSet::from([1, 2, 5, 6]));
        assert_eq!(cert.p(), &VertexSet::from([0, 3, 4, 7]));
    }

    #[test]
    fn empty_pd_characterization() {
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(check_empty_pd_characterization(&star, &VertexSet::from([0, 1])));
        assert!(!check_empty_pd_characterization(&path(4), &VertexSet::from([1, 2])));
        assert!(check_empty_pd_characterization(&path(2), &VertexSet::from([0, 1])));
        // Not a matching.
        assert!(!check_empty_pd_characterization(&path(3), &VertexSet::from([0, 1, 2])));
    }
}
