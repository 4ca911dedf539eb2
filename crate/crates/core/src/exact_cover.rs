//! Exact cover by Algorithm X on dancing links.
//!
//! Items `0..primary` must be covered exactly once; items
//! `primary..primary + secondary` at most once. The search always branches on
//! the primary item with the fewest remaining options (ties go to the smallest
//! item) and tries options in insertion order, so the first solution found is
//! a deterministic function of the input.

use std::ops::ControlFlow;

#[derive(Debug, Clone, Default)]
pub struct ExactCover {
    primary: usize,
    secondary: usize,
    options: Vec<Vec<usize>>,
}

impl ExactCover {
    pub fn new(primary: usize, secondary: usize) -> Self {
        ExactCover {
            primary,
            secondary,
            options: Vec::new(),
        }
    }

    /// Adds an option and returns its index. Duplicate items inside one
    /// option are ignored.
    ///
    /// # Panics
    ///
    /// If an item is out of range.
    pub fn add_option(&mut self, items: impl IntoIterator<Item = usize>) -> usize {
        let mut items: Vec<usize> = items.into_iter().collect();
        items.sort_unstable();
        items.dedup();
        let total = self.primary + self.secondary;
        assert!(items.iter().all(|&i| i < total), "item out of range");
        self.options.push(items);
        self.options.len() - 1
    }

    pub fn option_count(&self) -> usize {
        self.options.len()
    }

    /// The first solution in search order, as sorted option indices.
    pub fn first_solution(&self) -> Option<Vec<usize>> {
        let mut found = None;
        self.for_each_solution(|rows| {
            found = Some(rows.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    pub fn all_solutions(&self) -> Vec<Vec<usize>> {
        let mut all = Vec::new();
        self.for_each_solution(|rows| {
            all.push(rows.to_vec());
            ControlFlow::Continue(())
        });
        all
    }

    /// Visits solutions (sorted option indices) until the callback breaks.
    pub fn for_each_solution(&self, mut visit: impl FnMut(&[usize]) -> ControlFlow<()>) {
        let mut links = Links::build(self);
        let mut chosen = Vec::new();
        let _ = links.search(&mut chosen, &mut visit);
    }
}

struct Links {
    // Horizontal list of active primary items; node 0 is the root.
    left: Vec<usize>,
    right: Vec<usize>,
    // Vertical lists, one per item, over every node.
    up: Vec<usize>,
    down: Vec<usize>,
    top: Vec<usize>,
    len: Vec<usize>,
    row_of: Vec<usize>,
    row_start: Vec<usize>,
    row_end: Vec<usize>,
}

impl Links {
    fn build(problem: &ExactCover) -> Links {
        let items = problem.primary + problem.secondary;
        let headers = items + 1;
        let nodes = headers + problem.options.iter().map(Vec::len).sum::<usize>();
        let mut links = Links {
            left: (0..headers).collect(),
            right: (0..headers).collect(),
            up: (0..nodes).collect(),
            down: (0..nodes).collect(),
            top: vec![0; nodes],
            len: vec![0; headers],
            row_of: vec![usize::MAX; nodes],
            row_start: Vec::with_capacity(problem.options.len()),
            row_end: Vec::with_capacity(problem.options.len()),
        };
        // Root plus primary items form a circular list; secondary items stay self-linked.
        for h in 0..=problem.primary {
            links.right[h] = if h == problem.primary { 0 } else { h + 1 };
            links.left[h] = if h == 0 { problem.primary } else { h - 1 };
        }
        let mut next = headers;
        for (row, option) in problem.options.iter().enumerate() {
            links.row_start.push(next);
            for &item in option {
                let header = item + 1;
                let x = next;
                next += 1;
                links.top[x] = header;
                links.row_of[x] = row;
                let last = links.up[header];
                links.up[x] = last;
                links.down[x] = header;
                links.down[last] = x;
                links.up[header] = x;
                links.len[header] += 1;
            }
            links.row_end.push(next);
        }
        links
    }

    /// Other nodes of the row containing `x`, cyclically starting after `x`.
    fn row_after(&self, x: usize) -> impl Iterator<Item = usize> {
        let row = self.row_of[x];
        let (start, end) = (self.row_start[row], self.row_end[row]);
        (x + 1..end).chain(start..x)
    }

    fn row_before(&self, x: usize) -> impl Iterator<Item = usize> {
        let row = self.row_of[x];
        let (start, end) = (self.row_start[row], self.row_end[row]);
        (start..x).rev().chain((x + 1..end).rev())
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            for j in self.row_after(i) {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.len[self.top[j]] -= 1;
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            for j in self.row_before(i) {
                self.len[self.top[j]] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    fn search(
        &mut self,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.right[0] == 0 {
            let mut rows: Vec<usize> = chosen.iter().map(|&x| self.row_of[x]).collect();
            rows.sort_unstable();
            return visit(&rows);
        }
        let mut best = self.right[0];
        let mut c = self.right[best];
        while c != 0 {
            if self.len[c] < self.len[best] {
                best = c;
            }
            c = self.right[c];
        }
        if self.len[best] == 0 {
            return ControlFlow::Continue(());
        }

        self.cover(best);
        let mut r = self.down[best];
        let mut flow = ControlFlow::Continue(());
        while r != best {
            chosen.push(r);
            for j in self.row_after(r) {
                self.cover(self.top[j]);
            }
            flow = self.search(chosen, visit);
            for j in self.row_before(r) {
                self.uncover(self.top[j]);
            }
            chosen.pop();
            if flow.is_break() {
                break;
            }
            r = self.down[r];
        }
        self.uncover(best);
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knuth_example() {
        // Items A..G = 0..6, the classic instance with unique solution {0, 3, 4}.
        let mut ec = ExactCover::new(7, 0);
        ec.add_option([2, 4, 5]);
        ec.add_option([0, 3, 6]);
        ec.add_option([1, 2, 5]);
        ec.add_option([0, 3]);
        ec.add_option([1, 6]);
        ec.add_option([3, 4, 6]);
        assert_eq!(ec.all_solutions(), vec![vec![0, 3, 4]]);
    }

    #[test]
    fn secondary_items_are_optional_but_exclusive() {
        let mut ec = ExactCover::new(2, 1);
        ec.add_option([0, 2]);
        ec.add_option([1, 2]);
        ec.add_option([0]);
        ec.add_option([1]);
        let mut sols = ec.all_solutions();
        sols.sort();
        assert_eq!(sols, vec![vec![0, 3], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn uncoverable_item_means_no_solution() {
        let mut ec = ExactCover::new(3, 0);
        ec.add_option([0, 1]);
        assert_eq!(ec.first_solution(), None);
        assert_eq!(ExactCover::new(0, 0).first_solution(), Some(vec![]));
    }

    #[test]
    fn counts_all_covers_of_a_small_set() {
        // All singletons and pairs of {0,1,2}: the set partitions of a 3-set number 4
        // (excluding the full block, which is not offered).
        let mut ec = ExactCover::new(3, 0);
        for i in 0..3 {
            ec.add_option([i]);
        }
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            ec.add_option([a, b]);
        }
        assert_eq!(ec.all_solutions().len(), 4);
    }
}
