//! Executable checks of the main results, each reported as pass or fail
//! with a time limit.

use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus;
use crate::domination::{all_efficient_sets, find_ecd, find_eocd, find_eod, gamma, gamma_t, Neighborhood, SearchMode};
use crate::empty_pd::recognize_empty_pd;
use crate::families::{complete_bipartite, cycle, hypercube, path};
use crate::graph::Graph;
use crate::oracle;
use crate::reduction::{brute_force_one_in_three, build_reduction, CnfFormula};
use crate::sierpinski::{sierpinski, sierpinski_eod_set, sierpinski_is_eocd};
use crate::tree::{decompose, is_eocd_tree, random_eocd_tree, TreeOp};

/// Result of one check.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl fmt::Display for ClaimOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let limit = self
            .limit
            .map(|l| format!(" (limit {}s)", l.as_secs()))
            .unwrap_or_default();
        write!(
            f,
            "[{}] {:>2} {}: {} in {:.2}s{}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64(),
            limit
        )
    }
}

pub type Check = fn() -> Result<String, String>;

/// Identifier, title, time limit and body of every check.
pub const CLAIMS: [(u8, &str, Option<u64>, Check); 11] = [
    (1, "paths", Some(10), paths),
    (2, "cycles", Some(30), cycles),
    (3, "complete bipartite graphs", None, bipartite),
    (4, "hypercubes", None, hypercubes),
    (5, "Sierpinski graphs", Some(120), sierpinski_graphs),
    (6, "oracle equivalence", None, oracle_equivalence),
    (7, "trees on at most 12 vertices", Some(300), trees),
    (8, "necessity of O3 and O5", None, necessity),
    (9, "reduction equivalence", Some(600), reduction),
    (10, "extremal relations", None, extremal),
    (11, "empty P - D recognition", None, empty_pd_recognition),
];

/// Runs one check by identifier.
pub fn run_claim(id: u8) -> Option<ClaimOutcome> {
    let &(id, title, limit, check) = CLAIMS.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let limit = limit.map(Duration::from_secs);
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let (passed, detail) = match result {
        Ok(detail) if in_time => (true, detail),
        Ok(detail) => (false, format!("{detail}; over the time limit")),
        Err(detail) => (false, detail),
    };
    Some(ClaimOutcome {
        id,
        title,
        passed,
        detail,
        elapsed,
        limit,
    })
}

/// Runs every check in order.
pub fn run_all() -> Vec<ClaimOutcome> {
    CLAIMS.iter().filter_map(|c| run_claim(c.0)).collect()
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn is_eocd(graph: &Graph) -> bool {
    find_eocd(graph, SearchMode::Any).is_some()
}

fn paths() -> Result<String, String> {
    for n in 2..=30 {
        let found = is_eocd(&path(n).expect("n >= 2"));
        ensure(found == (n % 4 != 1), || format!("P_{n}: found {found}"))?;
    }
    Ok("P_2..P_30 match n mod 4 != 1".into())
}

fn cycles() -> Result<String, String> {
    let mismatches: Vec<usize> = (3..=36usize)
        .into_par_iter()
        .filter(|&n| is_eocd(&cycle(n).expect("n >= 3")) != (n % 12 == 0))
        .collect();
    ensure(mismatches.is_empty(), || {
        format!("mismatch at C_n for n in {mismatches:?}")
    })?;
    Ok("C_3..C_36 match n mod 12 == 0".into())
}

fn bipartite() -> Result<String, String> {
    for r in 1..=5 {
        for t in r..=5 {
            let found = is_eocd(&complete_bipartite(r, t).expect("r, t >= 1"));
            ensure(found == (r == 1), || format!("K_{r},{t}: found {found}"))?;
        }
    }
    Ok("K_r,t for 1 <= r <= t <= 5 match r == 1".into())
}

fn hypercubes() -> Result<String, String> {
    for n in 1..=4u32 {
        let found = is_eocd(&hypercube(n).expect("1 <= n <= 4"));
        ensure(found == (n == 1), || format!("Q_{n}: found {found}"))?;
    }
    Ok("Q_1 only among Q_1..Q_4".into())
}

fn sierpinski_graphs() -> Result<String, String> {
    for (p, n) in [(3, 2), (5, 2), (3, 3), (4, 2), (6, 2), (4, 3)] {
        let g = sierpinski(p, n).map_err(|e| e.to_string())?;
        let found = is_eocd(&g);
        let predicted = sierpinski_is_eocd(p, n).map_err(|e| e.to_string())?;
        ensure(found == (p % 2 == 0) && predicted == found, || {
            format!("S_{p}^{n}: found {found}")
        })?;
        if p % 2 == 0 {
            let d = sierpinski_eod_set(p, n).map_err(|e| e.to_string())?;
            ensure(crate::domination::is_eod_set(&g, &d), || {
                format!("S_{p}^{n}: explicit set is not an EOD set")
            })?;
            ensure(d.len() == g.n() / p, || {
                format!("S_{p}^{n}: explicit set has size {}", d.len())
            })?;
        }
    }
    for (p, expected) in [(4, 4), (6, 6)] {
        let g = sierpinski(p, 2).expect("small");
        let value = gamma_t(&g).map_err(|e| e.to_string())?;
        ensure(value == expected, || format!("gamma_t(S_{p}^2) = {value}"))?;
    }
    Ok("odd p rejected, even p certified; gamma_t(S_4^2) = 4, gamma_t(S_6^2) = 6, EOD set of S_4^3 has size 16".into())
}

fn sample_graphs() -> &'static [Graph] {
    static SAMPLE: OnceLock<Vec<Graph>> = OnceLock::new();
    SAMPLE.get_or_init(|| corpus::random_nonisomorphic_graphs(10_000, 2024))
}

fn agrees_with_oracle(g: &Graph) -> bool {
    let ecd = oracle::ecd_sets(g);
    let eod = oracle::eod_sets(g);
    let masks = |sets: Vec<crate::graph::VertexSet>| {
        let mut out: Vec<u32> = sets.iter().map(|s| s.iter().fold(0, |m, v| m | 1 << v)).collect();
        out.sort_unstable();
        out
    };
    find_ecd(g).is_some() == !ecd.is_empty()
        && find_eod(g).is_some() == !eod.is_empty()
        && masks(all_efficient_sets(g, Neighborhood::Closed)) == ecd
        && masks(all_efficient_sets(g, Neighborhood::Open)) == eod
}

fn oracle_equivalence() -> Result<String, String> {
    let sample = sample_graphs();
    ensure(sample.len() >= 10_000, || {
        format!("only {} sampled graphs", sample.len())
    })?;
    let mut total = sample.len();
    for n in 0..=6 {
        let graphs = corpus::all_labeled_graphs(n);
        total += graphs.len();
        if let Some(g) = graphs.par_iter().find_any(|g| !agrees_with_oracle(g)) {
            return Err(format!("disagreement on {:?}", g.edges().collect::<Vec<_>>()));
        }
    }
    if let Some(g) = sample.par_iter().find_any(|g| !agrees_with_oracle(g)) {
        return Err(format!("disagreement on {:?}", g.edges().collect::<Vec<_>>()));
    }
    Ok(format!(
        "{total} graphs ({} non-isomorphic on 7 or 8 vertices)",
        sample.len()
    ))
}

fn check_tree(tree: &Graph) -> Result<bool, String> {
    let edges = || format!("{:?}", tree.edges().collect::<Vec<_>>());
    let brute = !oracle::ecd_sets(tree).is_empty() && !oracle::eod_sets(tree).is_empty();
    let found = is_eocd_tree(tree).map_err(|e| e.to_string())?;
    ensure(found.is_some() == brute, || {
        format!("recognition disagrees on {}", edges())
    })?;
    if let Some((d, p)) = found {
        let seq = decompose(tree, &d, &p).map_err(|e| format!("{}: {e}", edges()))?;
        let rebuilt = seq.replay_relabelled().map_err(|e| format!("{}: {e}", edges()))?;
        ensure(rebuilt.tree.edges().eq(tree.edges()), || {
            format!("replay differs on {}", edges())
        })?;
        rebuilt.certificate();
    }
    Ok(brute)
}

fn trees() -> Result<String, String> {
    let all: Vec<Graph> = (1..=12).flat_map(corpus::nonisomorphic_trees).collect();
    let results: Result<Vec<bool>, String> = all.par_iter().map(check_tree).collect();
    let eocd = results?.into_iter().filter(|&b| b).count();
    Ok(format!(
        "{} trees, {eocd} EOCD, all rebuilt by decompose and replay",
        all.len()
    ))
}

/// `K_{1,3}` with its legs subdivided by 5, 8 and 8 vertices.
pub fn subdivided_claw() -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for inner in [5, 8, 8] {
        let mut prev = 0;
        for _ in 0..=inner {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, edges).expect("a spider")
}

/// `P_22` on `v_1..v_22` (ids 0..21) with pendant paths `v_5 u w` and `v_18 x y`.
pub fn p22_plus() -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..22).map(|i| (i - 1, i)).collect();
    edges.extend([(4, 22), (22, 23), (17, 24), (24, 25)]);
    Graph::from_edges(26, edges)
        .expect("a caterpillar-like tree")
        .with_labels(
            (0..22).map(|i| (i, format!("v{}", i + 1))).chain(
                ["u", "w", "x", "y"]
                    .iter()
                    .enumerate()
                    .map(|(k, s)| (22 + k, s.to_string())),
            ),
        )
}

fn necessity() -> Result<String, String> {
    let mut parts = Vec::new();
    for (name, tree, op) in [
        ("subdivided claw", subdivided_claw(), TreeOp::O3),
        ("P_22+", p22_plus(), TreeOp::O5),
    ] {
        let (d, p) = is_eocd_tree(&tree)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{name} is not an EOCD tree"))?;
        let seq = decompose(&tree, &d, &p).map_err(|e| e.to_string())?;
        ensure(seq.contains(op), || {
            format!("{name} decomposes without {op}: {:?}", seq.ops())
        })?;
        parts.push(format!("{name} uses {op}"));
    }
    Ok(parts.join(", "))
}

fn reduction_formulas() -> Vec<CnfFormula> {
    let mut formulas = corpus::exhaustive_formulas(2);
    formulas.extend((0..100u64).map(|seed| corpus::random_formula(3 + seed as usize % 2, 1 + seed as usize % 4, seed)));
    formulas
}

fn check_formula(f: &CnfFormula) -> Result<bool, String> {
    let r = build_reduction(f);
    let solutions = brute_force_one_in_three(f).map_err(|e| e.to_string())?;
    let found = find_eocd(&r.graph, SearchMode::Any);
    ensure(found.is_some() == !solutions.is_empty(), || {
        format!("equivalence fails for {f}")
    })?;
    if let Some(cert) = found {
        let a = r
            .assignment_from_witness(cert.d(), cert.p())
            .map_err(|e| format!("{f}: {e}"))?;
        ensure(solutions.contains(&a), || {
            format!("{f}: extracted assignment is not a solution")
        })?;
        for i in 0..f.n_vars() {
            let at = |name| r.layout.named(name, i).expect("known name");
            let (d, p) = (cert.d(), cert.p());
            let structural = d.contains(at("q"))
                && p.contains(at("q"))
                && ["c1", "c4", "c5"].iter().all(|&c| d.contains(at(c)))
                && ["c3", "c6"].iter().all(|&c| p.contains(at(c)))
                && d.contains(at("u")) != d.contains(at("ubar"))
                && p.contains(at("u")) != p.contains(at("ubar"));
            ensure(structural, || {
                format!("{f}: gadget {} breaks the forced structure", i + 1)
            })?;
        }
    }
    for a in &solutions {
        let cert = r.witness_from_assignment(a).map_err(|e| format!("{f}: {e}"))?;
        let back = r
            .assignment_from_witness(cert.d(), cert.p())
            .map_err(|e| format!("{f}: {e}"))?;
        ensure(&back == a, || format!("{f}: round trip changed {a:?} to {back:?}"))?;
    }
    Ok(!solutions.is_empty())
}

fn reduction() -> Result<String, String> {
    let formulas = reduction_formulas();
    let results: Result<Vec<bool>, String> = formulas.par_iter().map(check_formula).collect();
    let satisfiable = results?.into_iter().filter(|&b| b).count();
    Ok(format!(
        "{} formulas, {satisfiable} satisfiable, round trips exact",
        formulas.len()
    ))
}

fn family_instances() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (2..=30).map(|n| path(n).expect("n >= 2")).collect();
    graphs.extend([12, 24, 36].map(|n| cycle(n).expect("n >= 3")));
    graphs.extend((1..=5).map(|t| complete_bipartite(1, t).expect("t >= 1")));
    graphs.push(hypercube(1).expect("n = 1"));
    graphs.extend([4, 6].map(|p| sierpinski(p, 2).expect("small")));
    graphs
}

fn extremal() -> Result<String, String> {
    let mut graphs = family_instances();
    graphs.extend((0..300u64).map(|seed| random_eocd_tree(1 + seed as usize % 6, seed).state.tree));
    let counts: Result<Vec<(bool, bool)>, String> = graphs
        .par_iter()
        .map(|g| {
            let empty_dp = find_eocd(g, SearchMode::EmptyIntersection).is_some();
            let empty_pd = find_eocd(g, SearchMode::EmptyPMinusD).is_some();
            if empty_dp || empty_pd {
                let (gm, gt) = (gamma(g), gamma_t(g).map_err(|e| e.to_string())?);
                let edges = || format!("{:?}", g.edges().collect::<Vec<_>>());
                ensure(!empty_dp || gt == gm, || {
                    format!("D ∩ P empty but gamma_t = {gt}, gamma = {gm} on {}", edges())
                })?;
                ensure(!empty_pd || gt == 2 * gm, || {
                    format!("P - D empty but gamma_t = {gt}, gamma = {gm} on {}", edges())
                })?;
            }
            Ok((empty_dp, empty_pd))
        })
        .collect();
    let counts = counts?;
    let dp = counts.iter().filter(|c| c.0).count();
    let pd = counts.iter().filter(|c| c.1).count();
    Ok(format!(
        "{} graphs: {dp} with empty D ∩ P, {pd} with empty P - D",
        graphs.len()
    ))
}

fn empty_pd_corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=12).flat_map(corpus::nonisomorphic_trees).collect();
    graphs.extend((0..=5).flat_map(corpus::all_labeled_graphs));
    graphs.extend(sample_graphs().iter().cloned());
    graphs.extend(
        sample_graphs()
            .iter()
            .filter(|g| g.n() == 7)
            .take(500)
            .map(corpus::corona),
    );
    graphs.extend(
        (0..300u64)
            .map(|seed| random_eocd_tree(1 + seed as usize % 4, seed).state.tree)
            .filter(|t| t.n() <= 14),
    );
    graphs.extend((0..300u64).map(|seed| {
        let centers = 1 + seed as usize % 4;
        let others = seed as usize % (15 - 2 * centers);
        corpus::random_empty_pd_graph(centers, others, 0.3, seed)
    }));
    graphs
}

/// `count` disjoint copies of `K_{1,leaves}`.
pub fn star_forest(count: usize, leaves: usize) -> Graph {
    let size = leaves + 1;
    let edges = (0..count).flat_map(|s| (1..size).map(move |l| (s * size, s * size + l)));
    Graph::from_edges(count * size, edges.collect::<Vec<_>>()).expect("disjoint stars")
}

fn empty_pd_recognition() -> Result<String, String> {
    let graphs = empty_pd_corpus();
    let positives: Result<Vec<bool>, String> = graphs
        .par_iter()
        .map(|g| {
            let fast = recognize_empty_pd(g).is_some();
            let exact = find_eocd(g, SearchMode::EmptyPMinusD).is_some();
            ensure(fast == exact, || {
                format!("disagreement on {:?}", g.edges().collect::<Vec<_>>())
            })?;
            Ok(fast)
        })
        .collect();
    let positives = positives?.into_iter().filter(|&b| b).count();
    let forest = star_forest(2000, 4);
    let start = Instant::now();
    let recognized = recognize_empty_pd(&forest).is_some();
    let elapsed = start.elapsed();
    ensure(recognized, || "the star forest is not recognized".into())?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("star forest took {:.3}s", elapsed.as_secs_f64())
    })?;
    Ok(format!(
        "{} graphs agree ({positives} positive); {}-vertex star forest in {:.3}s",
        graphs.len(),
        forest.n(),
        elapsed.as_secs_f64()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_shapes() {
        let claw = subdivided_claw();
        assert_eq!(claw.n(), 25);
        assert!(claw.is_tree() && claw.degree(0) == 3);
        let p = p22_plus();
        assert_eq!(p.n(), 26);
        assert!(p.is_tree());
        assert_eq!(star_forest(3, 2).edge_count(), 6);
    }

    #[test]
    fn quick_claims_pass() {
        for id in [1, 3, 4, 8] {
            let outcome = run_claim(id).unwrap();
            assert!(outcome.passed, "{outcome}");
        }
        assert!(run_claim(99).is_none());
    }
}
