//! Exhaustive enumeration of rooted labeled trees on `[n]`.
//!
//! Trees come out in lexicographic order of their parent arrays, with the root
//! encoded as `0`. The stream can be split by the value of the first entry so
//! that partitions are consumed in parallel and merged back in order.

use rayon::prelude::*;

use crate::filter::ClassFilter;
use crate::tree::RootedTree;

/// Lexicographic stream of the rooted trees on `[n]` passing a filter.
pub struct RootedTrees {
    n: usize,
    first: Option<u32>,
    filter: ClassFilter,
    parents: Vec<u32>,
    started: bool,
    done: bool,
}

impl RootedTrees {
    pub fn new(n: usize, filter: ClassFilter) -> Self {
        let first = if filter.rooted_at_min { Some(0) } else { None };
        Self::build(n, first, filter)
    }

    /// Only the trees whose label `1` has parent `first` (0 = label 1 is the root).
    pub fn with_first_parent(n: usize, first: u32, filter: ClassFilter) -> Self {
        let first = if filter.rooted_at_min && first != 0 { None } else { Some(first) };
        let mut it = Self::build(n, first, filter);
        if it.first.is_none() {
            it.done = true;
        }
        it
    }

    fn build(n: usize, first: Option<u32>, filter: ClassFilter) -> Self {
        RootedTrees { n, first, filter, parents: vec![0; n], started: false, done: n == 0 }
    }

    fn zeros_before(&self, i: usize) -> usize {
        self.parents[..i].iter().filter(|&&p| p == 0).count()
    }

    fn allowed(&self, i: usize, zeros_before: usize, v: u32) -> bool {
        if v as usize == i + 1 || v as usize > self.n {
            return false;
        }
        if i == 0 {
            if let Some(f) = self.first {
                if v != f {
                    return false;
                }
            }
        }
        if v == 0 {
            return zeros_before == 0;
        }
        // the last position must supply the root if nothing earlier did
        !(i + 1 == self.n && zeros_before == 0)
    }

    fn next_allowed(&self, i: usize, after: Option<u32>) -> Option<u32> {
        let zb = self.zeros_before(i);
        let start = after.map_or(0, |a| a + 1);
        (start..=self.n as u32).find(|&v| self.allowed(i, zb, v))
    }

    /// Fills positions `from..` with their smallest admissible values.
    fn fill(&mut self, from: usize) -> bool {
        for i in from..self.n {
            match self.next_allowed(i, None) {
                Some(v) => self.parents[i] = v,
                None => return false,
            }
        }
        true
    }

    fn advance(&mut self) -> bool {
        let mut i = self.n;
        while i > 0 {
            i -= 1;
            if let Some(v) = self.next_allowed(i, Some(self.parents[i])) {
                self.parents[i] = v;
                if self.fill(i + 1) {
                    return true;
                }
            }
        }
        false
    }

    fn acyclic(&self) -> bool {
        let n = self.n;
        let mut state = vec![0u8; n + 1];
        for start in 1..=n {
            let mut cur = start;
            let mut steps = 0;
            while cur != 0 && state[cur] != 2 {
                steps += 1;
                if steps > n {
                    return false;
                }
                cur = self.parents[cur - 1] as usize;
            }
            let mut cur = start;
            while cur != 0 && state[cur] != 2 {
                state[cur] = 2;
                cur = self.parents[cur - 1] as usize;
            }
        }
        true
    }

    fn current(&self) -> RootedTree {
        let labels = (1..=self.n as u32).collect();
        let parent = self.parents.iter().map(|&p| (p != 0).then(|| p as usize - 1)).collect();
        RootedTree::from_ranks_unchecked(labels, parent)
    }
}

impl Iterator for RootedTrees {
    type Item = RootedTree;

    fn next(&mut self) -> Option<RootedTree> {
        loop {
            if self.done {
                return None;
            }
            let ok = if self.started {
                self.advance()
            } else {
                self.started = true;
                self.fill(0)
            };
            if !ok {
                self.done = true;
                return None;
            }
            if self.acyclic() {
                let t = self.current();
                if self.filter.matches(&t) {
                    return Some(t);
                }
            }
        }
    }
}

/// Every rooted tree on `[n]` passing `filter`, in canonical order.
pub fn enumerate_rooted(n: usize, filter: &ClassFilter) -> RootedTrees {
    RootedTrees::new(n, filter.clone())
}

/// The `n^(n-2)` trees on `[n]`, each rooted at label `1`.
pub fn enumerate_unrooted(n: usize) -> RootedTrees {
    RootedTrees::new(n, ClassFilter::unrooted())
}

/// Values of the first parent-array entry that split the stream into partitions.
pub fn partitions(n: usize) -> Vec<u32> {
    (0..=n as u32).filter(|&v| v != 1).collect()
}

/// Maps every partition of the filtered stream in parallel, returning the
/// per-partition results in canonical order.
pub fn map_partitions<T, F>(n: usize, filter: &ClassFilter, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(RootedTrees) -> T + Sync,
{
    partitions(n).into_par_iter().map(|first| f(RootedTrees::with_first_parent(n, first, filter.clone()))).collect()
}

/// Exact number of trees on `[n]` passing `filter`.
pub fn count_trees(n: usize, filter: &ClassFilter) -> u64 {
    map_partitions(n, filter, |it| it.count() as u64).into_iter().sum()
}
