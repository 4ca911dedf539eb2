//! Peeling an EOCD tree down to `K2`.
//!
//! Root the remaining tree at its smallest vertex and take a deepest leaf `v`
//! (smallest id on ties) with support `u`. Depending on whether `v` lies in
//! `D` and/or `P`, a short pendant piece near `v` is removed, `D` and `P` are
//! adjusted, and the operation that puts the piece back is recorded. Every
//! structural expectation is checked locally; a tree that does not look the
//! way the case analysis predicts is reported as an error instead of being
//! patched up.

use super::{TreeError, TreeOp, TreeOpSequence, TreeOpStep};
use crate::domination::EocdCertificate;
use crate::graph::{Graph, VertexSet};

/// Recovers a construction sequence for `tree` from one of its certificates.
///
/// Steps are expressed in construction ids and `relabel` maps them back to
/// the ids of `tree`, so that [`TreeOpSequence::replay_relabelled`] rebuilds
/// `tree` exactly.
pub fn decompose(tree: &Graph, d: &VertexSet, p: &VertexSet) -> Result<TreeOpSequence, TreeError> {
    if !tree.is_tree() {
        return Err(TreeError::NotATree);
    }
    EocdCertificate::new(tree, d.clone(), p.clone())?;
    let mut work = Peeler::new(tree, d.clone(), p.clone());
    while work.alive_count > 2 {
        let reduction = work.next_reduction()?;
        work.apply(reduction)?;
    }
    let sequence = work.into_sequence();

    let rebuilt = sequence.replay_relabelled()?;
    assert!(
        rebuilt.tree.edges().eq(tree.edges()),
        "replaying the decomposition rebuilds the input tree"
    );
    Ok(sequence)
}

struct Reduction {
    remove: Vec<usize>,
    d: VertexSet,
    p: VertexSet,
    op: TreeOp,
    attach: Vec<usize>,
    new: Vec<usize>,
}

struct Peeler {
    adj: Vec<Vec<usize>>,
    alive: Vec<bool>,
    alive_count: usize,
    d: VertexSet,
    p: VertexSet,
    depth: Vec<usize>,
    recorded: Vec<(TreeOp, Vec<usize>, Vec<usize>)>,
}

fn fail<T>(vertex: usize, reason: impl Into<String>) -> Result<T, TreeError> {
    Err(TreeError::Decompose {
        vertex,
        reason: reason.into(),
    })
}

fn require(ok: bool, vertex: usize, reason: &str) -> Result<(), TreeError> {
    if ok {
        Ok(())
    } else {
        fail(vertex, reason)
    }
}

impl Peeler {
    fn new(tree: &Graph, d: VertexSet, p: VertexSet) -> Self {
        let n = tree.n();
        Peeler {
            adj: (0..n).map(|v| tree.neighbors(v).to_vec()).collect(),
            alive: vec![true; n],
            alive_count: n,
            d,
            p,
            depth: vec![0; n],
            recorded: Vec::new(),
        }
    }

    fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn in_d(&self, v: usize) -> bool {
        self.d.contains(v)
    }

    fn in_p(&self, v: usize) -> bool {
        self.p.contains(v)
    }

    fn only_d(&self, v: usize) -> bool {
        self.in_d(v) && !self.in_p(v)
    }

    fn only_p(&self, v: usize) -> bool {
        self.in_p(v) && !self.in_d(v)
    }

    fn both(&self, v: usize) -> bool {
        self.in_d(v) && self.in_p(v)
    }

    fn neither(&self, v: usize) -> bool {
        !self.in_d(v) && !self.in_p(v)
    }

    /// The neighbor of a degree-2 vertex `x` that is not `from`.
    fn other(&self, x: usize, from: usize) -> Result<usize, TreeError> {
        require(self.deg(x) == 2, x, "expected degree 2")?;
        Ok(if self.adj[x][0] == from {
            self.adj[x][1]
        } else {
            self.adj[x][0]
        })
    }

    fn neighbor_where(&self, x: usize, pred: impl Fn(usize) -> bool) -> Option<usize> {
        self.adj[x].iter().copied().find(|&y| pred(y))
    }

    /// Deepest leaf from the smallest alive vertex, smallest id on ties.
    fn deepest_leaf(&mut self) -> usize {
        let root = self.alive.iter().position(|&a| a).expect("tree is non-empty");
        let mut seen = vec![false; self.adj.len()];
        let mut queue = std::collections::VecDeque::from([root]);
        seen[root] = true;
        self.depth[root] = 0;
        let mut best: Option<usize> = None;
        while let Some(x) = queue.pop_front() {
            if self.deg(x) == 1 {
                best = match best {
                    Some(b) if (self.depth[b], std::cmp::Reverse(b)) >= (self.depth[x], std::cmp::Reverse(x)) => {
                        Some(b)
                    }
                    _ => Some(x),
                };
            }
            for i in 0..self.adj[x].len() {
                let y = self.adj[x][i];
                if !seen[y] {
                    seen[y] = true;
                    self.depth[y] = self.depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        best.expect("a tree with at least two vertices has a leaf")
    }

    fn next_reduction(&mut self) -> Result<Reduction, TreeError> {
        let v = self.deepest_leaf();
        let u = self.adj[v][0];
        match (self.in_d(v), self.in_p(v)) {
            (false, false) => self.case1(v, u),
            (true, false) => self.case2(v, u),
            (true, true) => self.case3(v, u),
            (false, true) => self.case4(v, u),
        }
    }

    fn reduction(
        &self,
        remove: Vec<usize>,
        d: VertexSet,
        p: VertexSet,
        op: TreeOp,
        attach: Vec<usize>,
        new: Vec<usize>,
    ) -> Reduction {
        Reduction {
            remove,
            d,
            p,
            op,
            attach,
            new,
        }
    }

    fn without(set: &VertexSet, drop: &[usize]) -> VertexSet {
        let mut out = set.clone();
        for &x in drop {
            out.remove(x);
        }
        out
    }

    fn with(set: VertexSet, add: &[usize]) -> VertexSet {
        let mut out = set;
        for &x in add {
            out.insert(x);
        }
        out
    }

    /// A leaf outside `D ∪ P` hanging from `u ∈ D ∩ P`: undone by O1.
    fn case1(&self, v: usize, u: usize) -> Result<Reduction, TreeError> {
        require(
            self.deg(v) == 1 && self.neither(v),
            v,
            "expected a leaf outside D and P",
        )?;
        require(self.both(u), u, "support of a leaf outside D and P must be in D ∩ P")?;
        Ok(self.reduction(vec![v], self.d.clone(), self.p.clone(), TreeOp::O1, vec![u], vec![v]))
    }

    /// A leaf in `D - P`: remove the pendant path `v u x`, undone by O2.
    fn case2(&self, v: usize, u: usize) -> Result<Reduction, TreeError> {
        require(self.both(u), u, "support of a leaf in D - P must be in D ∩ P")?;
        if let Some(l) = self.neighbor_where(u, |y| y != v && self.deg(y) == 1) {
            return self.case1(l, u);
        }
        let x = self.other(u, v)?;
        let w = self.other(x, u)?;
        require(self.neither(w), w, "expected a vertex outside D and P")?;
        let d = Self::without(&self.d, &[u, v]);
        let p = Self::without(&self.p, &[u]);
        Ok(self.reduction(vec![v, u, x], d, p, TreeOp::O2, vec![w], vec![x, u, v]))
    }

    /// A leaf in `D ∩ P`: remove the pendant path `v u x`, undone by O2.
    fn case3(&self, v: usize, u: usize) -> Result<Reduction, TreeError> {
        require(self.deg(v) == 1 && self.both(v), v, "expected a leaf in D ∩ P")?;
        require(self.only_d(u), u, "expected a vertex in D - P")?;
        let x = self.other(u, v)?;
        require(self.neither(x), x, "expected a vertex outside D and P")?;
        let w = self.other(x, u)?;
        require(self.only_p(w), w, "expected a vertex in P - D")?;
        let d = Self::without(&self.d, &[u, v]);
        let p = Self::without(&self.p, &[v]);
        Ok(self.reduction(vec![v, u, x], d, p, TreeOp::O2, vec![w], vec![x, u, v]))
    }

    /// A leaf in `P - D`.
    fn case4(&self, v: usize, u: usize) -> Result<Reduction, TreeError> {
        require(self.only_d(u), u, "support of a leaf in P - D must be in D - P")?;
        let x = self.other(u, v)?;
        require(self.only_d(x), x, "expected a vertex in D - P")?;

        if let Some(y) = self.neighbor_where(x, |y| y != u && self.deg(y) == 1) {
            require(self.in_p(y), y, "a leaf next to x must be in P")?;
            let p = Self::with(Self::without(&self.p, &[v, y]), &[u]);
            return Ok(self.reduction(vec![y], self.d.clone(), p, TreeOp::O4, vec![v, u, x], vec![y]));
        }

        let w = self.other(x, u)?;
        require(self.only_p(w), w, "expected a vertex in P - D")?;
        if self.deg(w) >= 3 {
            // Another branch at w must be a pendant x' u' v' as in case 3.
            for &x2 in &self.adj[w] {
                if x2 == x || self.deg(x2) != 2 || !self.neither(x2) {
                    continue;
                }
                let u2 = self.other(x2, w)?;
                if self.deg(u2) != 2 || !self.only_d(u2) {
                    continue;
                }
                let v2 = self.other(u2, x2)?;
                if self.deg(v2) == 1 && self.both(v2) {
                    return self.case3(v2, u2);
                }
            }
            return fail(w, "no pendant path ending in D ∩ P below this vertex");
        }

        let z = self.other(w, x)?;
        require(self.neither(z), z, "expected a vertex outside D and P")?;
        if self.deg(z) == 2 {
            let t = self.other(z, w)?;
            require(self.only_d(t), t, "expected a vertex in D - P")?;
            let d = Self::without(&self.d, &[u, x]);
            let p = Self::without(&self.p, &[v, w]);
            return Ok(self.reduction(vec![v, u, x, w, z], d, p, TreeOp::O3, vec![t], vec![z, w, x, u, v]));
        }

        let down = |a: usize, b: usize| self.depth[b] == self.depth[a] + 1;
        let Some(w2) = self.neighbor_where(z, |y| y != w && down(z, y)) else {
            return fail(z, "expected a second child");
        };
        require(!self.in_p(w2), w2, "a child of z next to w cannot be in P")?;
        let Some(x2) = self.neighbor_where(w2, |y| y != z && self.in_p(y)) else {
            return fail(w2, "expected a neighbor in P below");
        };

        if !self.in_d(w2) {
            require(self.in_d(x2), x2, "expected a vertex in D ∩ P")?;
            let Some(u2) = self.neighbor_where(x2, |y| y != w2 && self.in_d(y)) else {
                return fail(x2, "expected a neighbor in D below");
            };
            if let Some(u3) = self.neighbor_where(x2, |y| y != w2 && y != u2) {
                return self.case1(u3, x2);
            }
            if self.deg(w2) == 2 && self.deg(u2) == 1 {
                let d = Self::without(&self.d, &[u2, x2]);
                let p = Self::without(&self.p, &[x2]);
                return Ok(self.reduction(vec![u2, x2, w2], d, p, TreeOp::O2, vec![z], vec![w2, x2, u2]));
            }
            let Some(x3) = self.neighbor_where(w2, |y| y != z && y != x2) else {
                return fail(w2, "expected a third neighbor");
            };
            require(self.neither(x3), x3, "expected a vertex outside D and P")?;
            let Some(u3) = self.neighbor_where(x3, |y| y != w2 && self.both(y)) else {
                return fail(x3, "expected a neighbor in D ∩ P");
            };
            let Some(v3) = self.neighbor_where(u3, |y| y != x3 && self.in_d(y)) else {
                return fail(u3, "expected a neighbor in D");
            };
            require(self.deg(v3) == 1, v3, "expected a leaf")?;
            return self.case2(v3, u3);
        }

        if self.in_d(x2) {
            if let Some(u2) = self.neighbor_where(x2, |y| y != w2) {
                return self.case1(u2, x2);
            }
            require(self.deg(w2) == 2, w2, "expected degree 2")?;
            let p = Self::with(Self::without(&self.p, &[x2, w, v]), &[x, w2]);
            return Ok(self.reduction(
                vec![v],
                self.d.clone(),
                p,
                TreeOp::O5,
                vec![u, x, w, z, w2, x2],
                vec![v],
            ));
        }

        require(self.deg(x2) == 1, x2, "expected a leaf")?;
        let Some(x3) = self.neighbor_where(w2, |y| y != z && self.in_d(y)) else {
            return fail(w2, "expected a neighbor in D below");
        };
        require(self.deg(x3) == 2, x3, "expected degree 2")?;
        let u3 = self.other(x3, w2)?;
        require(self.deg(u3) == 1 && self.in_p(u3), u3, "expected a leaf in P")?;
        let p = Self::with(Self::without(&self.p, &[x2, u3]), &[x3]);
        Ok(self.reduction(vec![x2], self.d.clone(), p, TreeOp::O4, vec![u3, x3, w2], vec![x2]))
    }

    fn apply(&mut self, r: Reduction) -> Result<(), TreeError> {
        for &x in &r.remove {
            self.alive[x] = false;
            self.alive_count -= 1;
        }
        for &x in &r.remove {
            for y in std::mem::take(&mut self.adj[x]) {
                self.adj[y].retain(|&z| z != x);
            }
        }
        self.d = r.d;
        self.p = r.p;
        if let Some(bad) = self.defect() {
            return fail(bad, format!("{} reduction leaves an invalid certificate", r.op));
        }
        self.recorded.push((r.op, r.attach, r.new));
        Ok(())
    }

    /// A vertex where the current sets fail to be an EOD / ECD pair.
    fn defect(&self) -> Option<usize> {
        let n = self.adj.len();
        let mut open = vec![0u32; n];
        let mut closed = vec![0u32; n];
        for v in (0..n).filter(|&v| self.alive[v]) {
            if self.in_d(v) {
                self.adj[v].iter().for_each(|&y| open[y] += 1);
            }
            if self.in_p(v) {
                closed[v] += 1;
                self.adj[v].iter().for_each(|&y| closed[y] += 1);
            }
        }
        let stray = self.d.iter().chain(self.p.iter()).find(|&v| !self.alive[v]);
        stray.or_else(|| (0..n).find(|&v| self.alive[v] && (open[v] != 1 || closed[v] != 1)))
    }

    fn into_sequence(self) -> TreeOpSequence {
        let n = self.adj.len();
        let pair: Vec<usize> = (0..n).filter(|&v| self.alive[v]).collect();
        let (a, b) = if self.p.contains(pair[0]) {
            (pair[0], pair[1])
        } else {
            (pair[1], pair[0])
        };
        let mut to_cons = vec![usize::MAX; n];
        let mut relabel = vec![a, b];
        to_cons[a] = 0;
        to_cons[b] = 1;
        let mut steps = Vec::with_capacity(self.recorded.len());
        for (op, attach, new) in self.recorded.into_iter().rev() {
            let attach = attach.iter().map(|&x| to_cons[x]).collect();
            let step = TreeOpStep::next(op, attach, relabel.len());
            for &x in &new {
                to_cons[x] = relabel.len();
                relabel.push(x);
            }
            steps.push(step);
        }
        TreeOpSequence {
            steps,
            relabel: Some(relabel),
        }
    }
}
