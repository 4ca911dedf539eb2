use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Vertices per variable gadget.
pub const GADGET_SIZE: usize = 23;

/// Local names in id order.
pub const LOCAL_NAMES: [&str; GADGET_SIZE] = [
    "u", "ubar", "t1", "t2", "t3", "t4", "q", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "v1", "v2", "w1", "w2", "w3",
    "w4", "w5", "w6", "w7",
];

pub(crate) const U: usize = 0;
pub(crate) const UBAR: usize = 1;
pub(crate) const T1: usize = 2;
pub(crate) const T2: usize = 3;
pub(crate) const T3: usize = 4;
pub(crate) const T4: usize = 5;
pub(crate) const Q: usize = 6;
pub(crate) const V1: usize = 14;
pub(crate) const V2: usize = 15;

/// `c_k` for `k` in `1..=7`.
pub(crate) const fn c(k: usize) -> usize {
    6 + k
}

/// `w_k` for `k` in `1..=7`.
pub(crate) const fn w(k: usize) -> usize {
    15 + k
}

/// The 30 gadget edges on local ids.
pub fn gadget_edges() -> Vec<(usize, usize)> {
    let mut edges = vec![
        (U, UBAR),
        (UBAR, T1),
        (T1, U),
        (U, V1),
        (V1, V2),
        (V2, UBAR),
        (w(2), V1),
        (V1, w(1)),
        (w(1), w(3)),
        (w(3), w(4)),
        (w(4), w(5)),
        (w(5), w(6)),
        (w(6), V2),
        (V2, w(7)),
        (w(1), w(2)),
        (w(2), w(3)),
        (w(6), w(7)),
        (w(7), w(5)),
        (T1, T2),
        (T2, Q),
        (T3, Q),
        (Q, T4),
        (Q, c(1)),
    ];
    edges.extend((1..=7).map(|k| (c(k), c(k % 7 + 1))));
    edges
}

/// The gadget of variable `i` (0-based) on its own, labelled `name_{i+1}`.
pub fn build_gadget(i: usize) -> Graph {
    Graph::from_edges(GADGET_SIZE, gadget_edges())
        .expect("local ids are in range")
        .with_labels((0..GADGET_SIZE).map(|v| (v, format!("{}_{}", LOCAL_NAMES[v], i + 1))))
}

/// Global ids of gadget and clause vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetLayout {
    pub n_vars: usize,
    pub n_clauses: usize,
}

impl GadgetLayout {
    /// Global id of local vertex `local` in the gadget of variable `i`.
    pub fn vertex(&self, i: usize, local: usize) -> usize {
        assert!(i < self.n_vars && local < GADGET_SIZE);
        GADGET_SIZE * i + local
    }

    /// Global id of the vertex by local name, e.g. `("w3", 0)`.
    pub fn named(&self, name: &str, i: usize) -> Option<usize> {
        let local = LOCAL_NAMES.iter().position(|&n| n == name)?;
        (i < self.n_vars).then(|| self.vertex(i, local))
    }

    pub fn u(&self, i: usize) -> usize {
        self.vertex(i, U)
    }

    pub fn ubar(&self, i: usize) -> usize {
        self.vertex(i, UBAR)
    }

    /// Global id of clause vertex `y_j`.
    pub fn clause(&self, j: usize) -> usize {
        assert!(j < self.n_clauses);
        GADGET_SIZE * self.n_vars + j
    }

    pub fn n(&self) -> usize {
        GADGET_SIZE * self.n_vars + self.n_clauses
    }

    /// Variable and local id of a gadget vertex, `None` for clause vertices.
    pub fn locate(&self, v: usize) -> Option<(usize, usize)> {
        (v < GADGET_SIZE * self.n_vars).then_some((v / GADGET_SIZE, v % GADGET_SIZE))
    }

    pub fn label(&self, v: usize) -> String {
        match self.locate(v) {
            Some((i, local)) => format!("{}_{}", LOCAL_NAMES[local], i + 1),
            None => format!("y_{}", v - GADGET_SIZE * self.n_vars + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gadget_shape() {
        let g = build_gadget(0);
        assert_eq!((g.n(), g.edge_count()), (23, 30));
        assert_eq!(g.degree(Q), 4);
        assert_eq!(g.degree(V1), 4);
        assert_eq!(g.degree(V2), 4);
        assert!(g.is_connected());
        assert_eq!(g.vertex_by_label("w7_1"), Some(w(7)));
        assert_eq!(build_gadget(2).label(UBAR), Some("ubar_3"));
    }

    #[test]
    fn layout_ids() {
        let layout = GadgetLayout {
            n_vars: 2,
            n_clauses: 3,
        };
        assert_eq!(layout.n(), 49);
        assert_eq!(layout.named("q", 1), Some(29));
        assert_eq!(layout.clause(2), 48);
        assert_eq!(layout.label(48), "y_3");
        assert_eq!(layout.locate(30), Some((1, 7)));
        assert_eq!(layout.named("c9", 0), None);
    }
}
