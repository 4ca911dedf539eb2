use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{TreeOp, TreeOpSequence, TreeOpStep, TreeState};
use crate::graph::Graph;

/// A random EOCD tree together with the history that built it.
#[derive(Debug, Clone)]
pub struct RandomTree {
    pub state: TreeState,
    pub sequence: TreeOpSequence,
}

/// Every attachment at which `op` may be applied to `state`.
pub fn feasible_attachments(state: &TreeState, op: TreeOp) -> Vec<Vec<usize>> {
    let TreeState { tree, d, p } = state;
    let v_all = tree.vertices();
    let deg = |v: usize| tree.degree(v);
    let others = |x: usize, from: usize| tree.neighbors(x).iter().copied().filter(move |&y| y != from);
    match op {
        TreeOp::O1 => v_all
            .filter(|&u| d.contains(u) && p.contains(u))
            .map(|u| vec![u])
            .collect(),
        TreeOp::O2 => v_all.filter(|&w| !d.contains(w)).map(|w| vec![w]).collect(),
        TreeOp::O3 => v_all
            .filter(|&t| d.contains(t) && !p.contains(t))
            .map(|t| vec![t])
            .collect(),
        TreeOp::O4 => leaves(tree)
            .filter_map(|v| {
                let u = tree.neighbors(v)[0];
                let x = others(u, v).next()?;
                (deg(u) == 2 && d.contains(u) && p.contains(u) && d.contains(x)).then(|| vec![v, u, x])
            })
            .collect(),
        TreeOp::O5 => {
            let mut out = Vec::new();
            for u in leaves(tree) {
                let x = tree.neighbors(u)[0];
                if deg(x) != 2 || !d.contains(u) || !d.contains(x) || !p.contains(x) {
                    continue;
                }
                let Some(w) = others(x, u).next() else { continue };
                if deg(w) != 2 {
                    continue;
                }
                let z = others(w, x).next().expect("degree 2");
                for w2 in others(z, w) {
                    if deg(w2) != 2 || !d.contains(w2) || !p.contains(w2) {
                        continue;
                    }
                    let x2 = others(w2, z).next().expect("degree 2");
                    if deg(x2) == 1 && d.contains(x2) {
                        out.push(vec![u, x, w, z, w2, x2]);
                    }
                }
            }
            out
        }
    }
}

fn leaves(tree: &Graph) -> impl Iterator<Item = usize> + '_ {
    tree.vertices().filter(move |&v| tree.degree(v) == 1)
}

/// Grows a tree from `K2` by `steps` operations. Each step picks an
/// operation uniformly among those applicable somewhere, then an attachment
/// uniformly. The result depends only on `steps` and `seed`.
pub fn random_eocd_tree(steps: usize, seed: u64) -> RandomTree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = TreeState::k2();
    let mut sequence = TreeOpSequence::default();
    for _ in 0..steps {
        let options: Vec<(TreeOp, Vec<Vec<usize>>)> = TreeOp::ALL
            .iter()
            .map(|&op| (op, feasible_attachments(&state, op)))
            .filter(|(_, at)| !at.is_empty())
            .collect();
        let (op, attachments) = options.choose(&mut rng).expect("O1 or O2 is always applicable");
        let attach = attachments.choose(&mut rng).expect("non-empty").clone();
        let step = TreeOpStep::next(*op, attach, state.tree.n());
        state
            .apply(&step)
            .expect("feasible attachments satisfy the preconditions");
        sequence.steps.push(step);
    }
    RandomTree { state, sequence }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::decompose;

    #[test]
    fn zero_steps_is_k2() {
        let t = random_eocd_tree(0, 1);
        assert_eq!(t.state.tree.n(), 2);
        assert!(t.sequence.steps.is_empty());
    }

    #[test]
    fn one_step_sizes() {
        for seed in 0..20 {
            let t = random_eocd_tree(1, seed);
            assert!([3, 5, 7].contains(&t.state.tree.n()));
            t.state.certificate();
        }
    }

    #[test]
    fn deterministic_and_round_trips() {
        let a = random_eocd_tree(50, 7);
        let b = random_eocd_tree(50, 7);
        assert_eq!(a.sequence, b.sequence);
        let replayed = a.sequence.replay().unwrap();
        assert!(replayed.tree.edges().eq(a.state.tree.edges()));
        let seq = decompose(&a.state.tree, &a.state.d, &a.state.p).unwrap();
        let rebuilt = seq.replay_relabelled().unwrap();
        assert!(rebuilt.tree.edges().eq(a.state.tree.edges()));
    }
}
