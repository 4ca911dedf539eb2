//! EOCD trees built from `K2` by five local operations.
//!
//! A tree state is a tree `T` with an EOD set `D` and an ECD set `P`. Each
//! operation attaches new vertices next to vertices with prescribed
//! memberships and degrees and rewrites `D` and `P` so the result is again a
//! valid certificate:
//!
//! | op | attachment | new vertices | edges added |
//! |----|------------|--------------|-------------|
//! | O1 | `u ∈ D∩P` | `v` | `uv` |
//! | O2 | `w ∉ D` | `x, u, v` | `wx, xu, uv` |
//! | O3 | `t ∈ D-P` | `z, w, x, u, v` | `tz, zw, wx, xu, uv` |
//! | O4 | path `v u x` | `y` | `xy` |
//! | O5 | path `u x w z w' x'` | `v` | `uv` |
//!
//! Every EOCD tree arises this way, and [`decompose`] recovers a sequence
//! from a tree and its certificate.

mod decompose;
mod random;
mod recognize;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination::{cover_defect, CertificateError, EocdCertificate, Neighborhood};
use crate::graph::{Graph, VertexSet};

pub use decompose::decompose;
pub use random::{random_eocd_tree, RandomTree};
pub use recognize::is_eocd_tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("the graph is not a tree")]
    NotATree,
    #[error(transparent)]
    InvalidCertificate(#[from] CertificateError),
    #[error("{op} expects {attach} attachment and {new} new vertices")]
    Arity { op: TreeOp, attach: usize, new: usize },
    #[error("{op} needs new vertex ids {expected:?}, got {found:?}")]
    NewIds {
        op: TreeOp,
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("{op} precondition failed: {clause}")]
    Precondition { op: TreeOp, clause: &'static str },
    #[error("cannot decompose at vertex {vertex}: {reason}")]
    Decompose { vertex: usize, reason: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TreeOp {
    O1,
    O2,
    O3,
    O4,
    O5,
}

impl TreeOp {
    pub const ALL: [TreeOp; 5] = [TreeOp::O1, TreeOp::O2, TreeOp::O3, TreeOp::O4, TreeOp::O5];

    pub fn attach_len(self) -> usize {
        match self {
            TreeOp::O1 | TreeOp::O2 | TreeOp::O3 => 1,
            TreeOp::O4 => 3,
            TreeOp::O5 => 6,
        }
    }

    /// Number of vertices the operation adds.
    pub fn growth(self) -> usize {
        match self {
            TreeOp::O1 | TreeOp::O4 | TreeOp::O5 => 1,
            TreeOp::O2 => 3,
            TreeOp::O3 => 5,
        }
    }
}

impl fmt::Display for TreeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = TreeOp::ALL.iter().position(|op| op == self).expect("listed") + 1;
        write!(f, "O{i}")
    }
}

impl FromStr for TreeOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "O1" => Ok(TreeOp::O1),
            "O2" => Ok(TreeOp::O2),
            "O3" => Ok(TreeOp::O3),
            "O4" => Ok(TreeOp::O4),
            "O5" => Ok(TreeOp::O5),
            other => Err(format!("unknown operation `{other}`")),
        }
    }
}

/// One operation with the vertices it attaches to and the ids of the vertices
/// it adds, both in the order of the table in the module docs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeOpStep {
    pub op: TreeOp,
    pub attach: Vec<usize>,
    pub new: Vec<usize>,
}

impl TreeOpStep {
    /// A step whose new vertices get the next free ids of a tree on `n` vertices.
    pub fn next(op: TreeOp, attach: Vec<usize>, n: usize) -> Self {
        TreeOpStep {
            op,
            attach,
            new: (n..n + op.growth()).collect(),
        }
    }

    fn added_edges(&self) -> Vec<(usize, usize)> {
        let (a, s) = (&self.attach, &self.new);
        match self.op {
            TreeOp::O1 => vec![(a[0], s[0])],
            TreeOp::O2 | TreeOp::O3 => std::iter::once(a[0])
                .chain(s.iter().copied())
                .collect::<Vec<_>>()
                .windows(2)
                .map(|w| (w[0], w[1]))
                .collect(),
            TreeOp::O4 => vec![(a[2], s[0])],
            TreeOp::O5 => vec![(a[0], s[0])],
        }
    }
}

fn ids(list: &[usize]) -> String {
    list.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for TreeOpStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} attach={} new={}", self.op, ids(&self.attach), ids(&self.new))
    }
}

fn check(ok: bool, op: TreeOp, clause: &'static str) -> Result<(), TreeError> {
    if ok {
        Ok(())
    } else {
        Err(TreeError::Precondition { op, clause })
    }
}

/// Applies one operation to a tree with a valid certificate.
///
/// The new vertices must be numbered `n, n+1, ...` in order. The returned
/// certificate is checked before it is handed back.
pub fn apply_step(
    tree: &Graph,
    d: &VertexSet,
    p: &VertexSet,
    step: &TreeOpStep,
) -> Result<(Graph, VertexSet, VertexSet), TreeError> {
    let op = step.op;
    if step.attach.len() != op.attach_len() || step.new.len() != op.growth() {
        return Err(TreeError::Arity {
            op,
            attach: op.attach_len(),
            new: op.growth(),
        });
    }
    if !tree.is_tree() {
        return Err(TreeError::NotATree);
    }
    EocdCertificate::new(tree, d.clone(), p.clone())?;
    let n = tree.n();
    let expected: Vec<usize> = (n..n + op.growth()).collect();
    if step.new != expected {
        return Err(TreeError::NewIds {
            op,
            expected,
            found: step.new.clone(),
        });
    }
    let a = &step.attach;
    check(a.iter().all(|&v| v < n), op, "attachment vertices exist")?;
    let dp = |v: usize| d.contains(v) && p.contains(v);
    let path = |vs: &[usize]| vs.windows(2).all(|w| tree.has_edge(w[0], w[1]));

    let mut d = d.clone();
    let mut p = p.clone();
    let s = &step.new;
    match op {
        TreeOp::O1 => {
            check(dp(a[0]), op, "u ∈ D ∩ P")?;
        }
        TreeOp::O2 => {
            check(!d.contains(a[0]), op, "w ∉ D")?;
            let (u, v) = (s[1], s[2]);
            p.insert(if p.contains(a[0]) { v } else { u });
            d.insert(u);
            d.insert(v);
        }
        TreeOp::O3 => {
            check(d.contains(a[0]) && !p.contains(a[0]), op, "t ∈ D - P")?;
            let (w, x, u, v) = (s[1], s[2], s[3], s[4]);
            d.insert(u);
            d.insert(x);
            p.insert(v);
            p.insert(w);
        }
        TreeOp::O4 => {
            let (v, u, x) = (a[0], a[1], a[2]);
            check(path(a), op, "v u x is a path")?;
            check(tree.degree(v) == 1, op, "deg(v) = 1")?;
            check(tree.degree(u) == 2, op, "deg(u) = 2")?;
            check(d.contains(u) && d.contains(x), op, "u, x ∈ D")?;
            check(p.contains(u), op, "u ∈ P")?;
            p.remove(u);
            p.insert(v);
            p.insert(s[0]);
        }
        TreeOp::O5 => {
            let (u, x, w, _z, w2, x2) = (a[0], a[1], a[2], a[3], a[4], a[5]);
            check(path(a), op, "u x w z w' x' is a path")?;
            check(tree.degree(u) == 1 && tree.degree(x2) == 1, op, "deg(u) = deg(x') = 1")?;
            check(
                [x, w, w2].iter().all(|&y| tree.degree(y) == 2),
                op,
                "deg(x) = deg(w) = deg(w') = 2",
            )?;
            check([u, x, w2, x2].iter().all(|&y| d.contains(y)), op, "u, x, w', x' ∈ D")?;
            check(p.contains(x) && p.contains(w2), op, "x, w' ∈ P")?;
            p.remove(x);
            p.remove(w2);
            p.insert(s[0]);
            p.insert(x2);
            p.insert(w);
        }
    }

    let grown = Graph::from_edges(n + op.growth(), tree.edges().chain(step.added_edges()))
        .expect("new edges join existing and new vertices")
        .with_labels(tree.labels().iter().map(|(&v, l)| (v, l.clone())));
    debug_assert!(grown.is_tree());
    assert!(
        cover_defect(&grown, &d, Neighborhood::Open).is_none(),
        "{op} keeps D an EOD set"
    );
    assert!(
        cover_defect(&grown, &p, Neighborhood::Closed).is_none(),
        "{op} keeps P an ECD set"
    );
    Ok((grown, d, p))
}

/// A construction history starting from `K2` on `{0, 1}` with `D = {0, 1}`
/// and `P = {0}`.
///
/// Steps use construction ids, which grow densely as vertices are added.
/// When the history was recovered from an existing tree, `relabel` maps
/// construction ids to that tree's ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeOpSequence {
    pub steps: Vec<TreeOpStep>,
    pub relabel: Option<Vec<usize>>,
}

/// A tree with a certificate, as produced by replaying a sequence.
#[derive(Debug, Clone)]
pub struct TreeState {
    pub tree: Graph,
    pub d: VertexSet,
    pub p: VertexSet,
}

impl TreeState {
    pub fn k2() -> Self {
        TreeState {
            tree: Graph::from_edge_list(2, &[(0, 1)]).expect("K2"),
            d: VertexSet::from([0, 1]),
            p: VertexSet::from([0]),
        }
    }

    pub fn apply(&mut self, step: &TreeOpStep) -> Result<(), TreeError> {
        let (tree, d, p) = apply_step(&self.tree, &self.d, &self.p, step)?;
        *self = TreeState { tree, d, p };
        Ok(())
    }

    pub fn certificate(&self) -> EocdCertificate {
        EocdCertificate::new(&self.tree, self.d.clone(), self.p.clone()).expect("tree states carry valid certificates")
    }
}

impl TreeOpSequence {
    pub fn ops(&self) -> Vec<TreeOp> {
        self.steps.iter().map(|s| s.op).collect()
    }

    pub fn contains(&self, op: TreeOp) -> bool {
        self.steps.iter().any(|s| s.op == op)
    }

    /// Replays the steps from `K2` in construction ids.
    pub fn replay(&self) -> Result<TreeState, TreeError> {
        let mut state = TreeState::k2();
        for step in &self.steps {
            state.apply(step)?;
        }
        Ok(state)
    }

    /// Replays the steps and then applies `relabel`, if present.
    pub fn replay_relabelled(&self) -> Result<TreeState, TreeError> {
        let state = self.replay()?;
        let Some(map) = &self.relabel else {
            return Ok(state);
        };
        let n = state.tree.n();
        let tree =
            Graph::from_edges(n, state.tree.edges().map(|(u, v)| (map[u], map[v]))).expect("relabel is a permutation");
        Ok(TreeState {
            tree,
            d: VertexSet::from_iter_with_capacity(n, state.d.iter().map(|v| map[v])),
            p: VertexSet::from_iter_with_capacity(n, state.p.iter().map(|v| map[v])),
        })
    }

    /// One line per step, `Oi attach=<ids> new=<ids>`, then `relabel <ids>` if present.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&step.to_string());
            out.push('\n');
        }
        if let Some(map) = &self.relabel {
            out.push_str(&format!("relabel {}\n", ids(map)));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, TreeError> {
        let mut seq = TreeOpSequence::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| TreeError::Parse { line: i + 1, message };
            let mut words = line.split_whitespace();
            let head = words.next().expect("non-empty line");
            if head == "relabel" {
                let list = words.next().ok_or_else(|| err("missing relabel ids".into()))?;
                seq.relabel = Some(parse_ids(list).map_err(err)?);
                continue;
            }
            let op: TreeOp = head.parse().map_err(err)?;
            let mut attach = None;
            let mut new = None;
            for word in words {
                match word.split_once('=') {
                    Some(("attach", list)) => attach = Some(parse_ids(list).map_err(err)?),
                    Some(("new", list)) => new = Some(parse_ids(list).map_err(err)?),
                    _ => return Err(err(format!("unexpected token `{word}`"))),
                }
            }
            seq.steps.push(TreeOpStep {
                op,
                attach: attach.ok_or_else(|| err("missing attach=".into()))?,
                new: new.ok_or_else(|| err("missing new=".into()))?,
            });
        }
        Ok(seq)
    }
}

fn parse_ids(list: &str) -> Result<Vec<usize>, String> {
    if list.is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|s| s.parse().map_err(|_| format!("bad vertex id `{s}`")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn o1_on_k2_gives_p3() {
        let mut state = TreeState::k2();
        state.apply(&TreeOpStep::next(TreeOp::O1, vec![0], 2)).unwrap();
        assert_eq!(state.tree.degree_sequence(), vec![2, 1, 1]);
        assert_eq!(state.d, VertexSet::from([0, 1]));
        assert_eq!(state.p, VertexSet::from([0]));
    }

    #[test]
    fn o1_then_o4_gives_p4() {
        let mut state = TreeState::k2();
        state.apply(&TreeOpStep::next(TreeOp::O1, vec![0], 2)).unwrap();
        // v u x = 2 0 1
        state.apply(&TreeOpStep::next(TreeOp::O4, vec![2, 0, 1], 3)).unwrap();
        assert_eq!(state.tree.degree_sequence(), vec![2, 2, 1, 1]);
        assert_eq!(state.p, VertexSet::from([2, 3]));
    }

    #[test]
    fn o3_on_k2_gives_p7() {
        let mut state = TreeState::k2();
        state.apply(&TreeOpStep::next(TreeOp::O3, vec![1], 2)).unwrap();
        assert_eq!(state.tree.n(), 7);
        assert_eq!(state.tree.max_degree(), 2);
        assert!(state.tree.is_tree());
        state.certificate();
    }

    #[test]
    fn preconditions_name_the_clause() {
        let k2 = TreeState::k2();
        let err = apply_step(&k2.tree, &k2.d, &k2.p, &TreeOpStep::next(TreeOp::O1, vec![1], 2)).unwrap_err();
        assert_eq!(
            err,
            TreeError::Precondition {
                op: TreeOp::O1,
                clause: "u ∈ D ∩ P"
            }
        );
        let err = apply_step(&k2.tree, &k2.d, &k2.p, &TreeOpStep::next(TreeOp::O2, vec![0], 2)).unwrap_err();
        assert!(matches!(err, TreeError::Precondition { clause: "w ∉ D", .. }));
        let bad_ids = TreeOpStep {
            op: TreeOp::O1,
            attach: vec![0],
            new: vec![5],
        };
        assert!(matches!(
            apply_step(&k2.tree, &k2.d, &k2.p, &bad_ids),
            Err(TreeError::NewIds { .. })
        ));
    }

    #[test]
    fn growth_sizes() {
        let sizes: Vec<usize> = TreeOp::ALL.iter().map(|op| op.growth()).collect();
        assert_eq!(sizes, vec![1, 3, 5, 1, 1]);
    }

    #[test]
    fn text_round_trip() {
        let seq = TreeOpSequence {
            steps: vec![
                TreeOpStep::next(TreeOp::O1, vec![0], 2),
                TreeOpStep::next(TreeOp::O4, vec![2, 0, 1], 3),
            ],
            relabel: Some(vec![3, 1, 0, 2]),
        };
        let text = seq.to_text();
        assert_eq!(text, "O1 attach=0 new=2\nO4 attach=2,0,1 new=3\nrelabel 3,1,0,2\n");
        assert_eq!(TreeOpSequence::parse(&text).unwrap(), seq);
        assert!(matches!(
            TreeOpSequence::parse("O9 attach=0 new=2"),
            Err(TreeError::Parse { line: 1, .. })
        ));
    }
}
