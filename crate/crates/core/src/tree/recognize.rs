//! Linear-time EOD and ECD existence on trees.
//!
//! Both are bottom-up dynamic programs over the tree rooted at vertex 0,
//! followed by a top-down pass that picks a witness.

use super::TreeError;
use crate::graph::{Graph, VertexSet};

/// Parent pointers and a BFS order from vertex 0.
fn rooted(tree: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = tree.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    order.push(0);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &w in tree.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    (parent, order)
}

fn children<'a>(tree: &'a Graph, parent: &'a [usize], v: usize) -> impl Iterator<Item = usize> + 'a {
    tree.neighbors(v).iter().copied().filter(move |&c| parent[c] == v)
}

/// An EOD set and an ECD set of `tree`, if both exist.
pub fn is_eocd_tree(tree: &Graph) -> Result<Option<(VertexSet, VertexSet)>, TreeError> {
    if !tree.is_tree() {
        return Err(TreeError::NotATree);
    }
    let (parent, order) = rooted(tree);
    let Some(d) = eod_on_tree(tree, &parent, &order) else {
        return Ok(None);
    };
    let Some(p) = ecd_on_tree(tree, &parent, &order) else {
        return Ok(None);
    };
    Ok(Some((d, p)))
}

/// `ok[v][a][h]`: the subtree of `v` can be completed with `v ∈ D` iff
/// `a == 1` and with exactly `h` children of `v` in `D`.
fn eod_on_tree(tree: &Graph, parent: &[usize], order: &[usize]) -> Option<VertexSet> {
    let n = tree.n();
    let mut ok = vec![[[false; 2]; 2]; n];
    for &v in order.iter().rev() {
        for a in 0..2 {
            // Each child c needs exactly one D-neighbor, so its own
            // child count is 1 - a. Track how many children can be in D.
            let mut ways = [true, false]; // exactly 0 / exactly 1 children in D so far
            for c in children(tree, parent, v) {
                let out = ok[c][0][1 - a];
                let inn = ok[c][1][1 - a];
                ways = [ways[0] && out, (ways[1] && out) || (ways[0] && inn)];
            }
            ok[v][a] = ways;
        }
    }
    let root_state = (0..2).find(|&a| ok[0][a][1])?;

    let mut in_d = vec![false; n];
    let mut want = vec![0usize; n];
    in_d[0] = root_state == 1;
    want[0] = 1;
    for &v in order {
        let a = usize::from(in_d[v]);
        let h = 1 - a;
        let kids: Vec<usize> = children(tree, parent, v).collect();
        // Pick the D-child (if one is wanted) so that the rest can stay out.
        let chosen = if want[v] == 1 {
            let pick = kids
                .iter()
                .copied()
                .find(|&c| ok[c][1][h] && kids.iter().all(|&o| o == c || ok[o][0][h]))
                .expect("feasible state has a witness");
            Some(pick)
        } else {
            None
        };
        for c in kids {
            in_d[c] = Some(c) == chosen;
            want[c] = h;
        }
    }
    Some(VertexSet::from_iter_with_capacity(n, (0..n).filter(|&v| in_d[v])))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Closed {
    InP,
    ByChild,
    ByParent,
}

fn ecd_on_tree(tree: &Graph, parent: &[usize], order: &[usize]) -> Option<VertexSet> {
    let n = tree.n();
    // [InP, ByChild, ByParent]
    let mut ok = vec![[false; 3]; n];
    for &v in order.iter().rev() {
        let mut all_by_parent = true;
        let mut all_by_child = true;
        let mut one_in_p = false;
        for c in children(tree, parent, v) {
            let [c_in, c_child, c_parent] = ok[c];
            all_by_parent &= c_parent;
            one_in_p = (one_in_p && c_child) || (all_by_child && c_in);
            all_by_child &= c_child;
        }
        ok[v] = [all_by_parent, one_in_p, all_by_child];
    }
    let mut state = vec![Closed::ByParent; n];
    state[0] = if ok[0][0] {
        Closed::InP
    } else if ok[0][1] {
        Closed::ByChild
    } else {
        return None;
    };
    for &v in order {
        let kids: Vec<usize> = children(tree, parent, v).collect();
        match state[v] {
            Closed::InP => kids.iter().for_each(|&c| state[c] = Closed::ByParent),
            Closed::ByParent => kids.iter().for_each(|&c| state[c] = Closed::ByChild),
            Closed::ByChild => {
                let pick = kids
                    .iter()
                    .copied()
                    .find(|&c| ok[c][0] && kids.iter().all(|&o| o == c || ok[o][1]))
                    .expect("feasible state has a witness");
                for c in kids {
                    state[c] = if c == pick { Closed::InP } else { Closed::ByChild };
                }
            }
        }
    }
    Some(VertexSet::from_iter_with_capacity(
        n,
        (0..n).filter(|&v| state[v] == Closed::InP),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{is_ecd_set, is_eod_set};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn paths() {
        for n in 1..=30 {
            let g = path(n);
            let found = is_eocd_tree(&g).unwrap();
            assert_eq!(found.is_some(), n % 4 != 1, "P{n}");
            if let Some((d, p)) = found {
                assert!(is_eod_set(&g, &d) && is_ecd_set(&g, &p));
            }
        }
    }

    #[test]
    fn k2_certificate() {
        let (d, p) = is_eocd_tree(&path(2)).unwrap().unwrap();
        assert_eq!(d, VertexSet::from([0, 1]));
        assert_eq!(p, VertexSet::from([0]));
    }

    #[test]
    fn rejects_non_trees() {
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(is_eocd_tree(&c3), Err(TreeError::NotATree));
    }
}
