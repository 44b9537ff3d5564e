//! Rooted labeled trees over arbitrary sets of positive labels.
//!
//! A tree is stored by rank: position `i` holds the `i`-th smallest label and
//! `parent[i]` is the rank of its parent. Every statistic in this crate only
//! compares labels, so ranks and labels are interchangeable internally and a
//! relabeling never changes a statistic computed by rank. The smallest label
//! plays the role of node `1` and the largest the role of node `n`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

/// Errors raised when building or querying a [`RootedTree`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("tree has no nodes")]
    Empty,
    #[error("label 0 is not allowed; labels are positive integers")]
    ZeroLabel,
    #[error("label {0} appears more than once")]
    DuplicateLabel(u32),
    #[error("label {0} is not in the tree")]
    UnknownLabel(u32),
    #[error("parent {parent} of {child} is not a label of the tree")]
    UnknownParent { child: u32, parent: u32 },
    #[error("root {0} must not have a parent")]
    RootHasParent(u32),
    #[error("no root: every label has a parent")]
    NoRoot,
    #[error("more than one root ({0} and {1}); the forest is disconnected")]
    Disconnected(u32, u32),
    #[error("parent links starting at {0} run into a cycle")]
    Cycle(u32),
    #[error("expected {expected} labels, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("{0} is the root and has no entering edge")]
    IsRoot(u32),
    #[error("no proper edge on the path from the maximum label to the root")]
    NoProperEdgeOnMaxPath,
    #[error("the maximum label {0} is a leaf")]
    MaxIsLeaf(u32),
    #[error("the minimum label {0} is a leaf")]
    MinIsLeaf(u32),
    #[error("the minimum label {0} is the root")]
    MinIsRoot(u32),
}

/// A rooted tree on a finite set of distinct positive labels.
///
/// Values are immutable from the outside: every operation returns a new tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootedTree {
    labels: Vec<u32>,
    parent: Vec<Option<usize>>,
}

impl RootedTree {
    /// Builds a tree from its root and a child-to-parent map.
    pub fn build(root: u32, parent: &BTreeMap<u32, u32>) -> Result<Self, TreeError> {
        if parent.contains_key(&root) {
            return Err(TreeError::RootHasParent(root));
        }
        let mut labels: Vec<u32> = parent.keys().copied().collect();
        labels.push(root);
        labels.sort_unstable();
        if labels[0] == 0 {
            return Err(TreeError::ZeroLabel);
        }
        let ranks: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut ranked = vec![None; labels.len()];
        for (&child, &p) in parent {
            let pr = *ranks.get(&p).ok_or(TreeError::UnknownParent { child, parent: p })?;
            ranked[ranks[&child]] = Some(pr);
        }
        Self::from_ranks(labels, ranked)
    }

    /// Builds a tree on `[n]` from a parent array: `parents[i]` is the parent of
    /// label `i + 1`, and `0` marks the root.
    pub fn from_parent_array(parents: &[u32]) -> Result<Self, TreeError> {
        let labels: Vec<u32> = (1..=parents.len() as u32).collect();
        Self::from_labels_and_parents(&labels, parents)
    }

    /// Builds a tree from sorted distinct labels and positionally matching
    /// parent labels (`0` for the root).
    pub fn from_labels_and_parents(labels: &[u32], parents: &[u32]) -> Result<Self, TreeError> {
        if labels.len() != parents.len() {
            return Err(TreeError::SizeMismatch { expected: labels.len(), actual: parents.len() });
        }
        if labels.is_empty() {
            return Err(TreeError::Empty);
        }
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(TreeError::DuplicateLabel(w[0]));
            }
        }
        if sorted[0] == 0 {
            return Err(TreeError::ZeroLabel);
        }
        let mut root = None;
        let mut map = BTreeMap::new();
        for (&l, &p) in labels.iter().zip(parents) {
            if p == 0 {
                if let Some(r) = root {
                    return Err(TreeError::Disconnected(r, l));
                }
                root = Some(l);
            } else {
                map.insert(l, p);
            }
        }
        let root = root.ok_or(TreeError::NoRoot)?;
        Self::build(root, &map)
    }

    /// Validates a rank-indexed parent vector.
    pub(crate) fn from_ranks(labels: Vec<u32>, parent: Vec<Option<usize>>) -> Result<Self, TreeError> {
        let n = labels.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if n != parent.len() {
            return Err(TreeError::SizeMismatch { expected: n, actual: parent.len() });
        }
        let mut root = None;
        for (i, p) in parent.iter().enumerate() {
            match p {
                None => {
                    if let Some(r) = root {
                        return Err(TreeError::Disconnected(labels[r], labels[i]));
                    }
                    root = Some(i);
                }
                Some(q) if *q >= n => return Err(TreeError::UnknownParent { child: labels[i], parent: *q as u32 }),
                _ => {}
            }
        }
        if root.is_none() {
            return Err(TreeError::NoRoot);
        }
        // 0 = unvisited, 1 = on current walk, 2 = reaches root
        let mut state = vec![0u8; n];
        for start in 0..n {
            let mut walk = Vec::new();
            let mut cur = start;
            loop {
                match state[cur] {
                    2 => break,
                    1 => return Err(TreeError::Cycle(labels[start])),
                    _ => {}
                }
                state[cur] = 1;
                walk.push(cur);
                match parent[cur] {
                    Some(p) => cur = p,
                    None => break,
                }
            }
            for w in walk {
                state[w] = 2;
            }
        }
        Ok(RootedTree { labels, parent })
    }

    /// Unchecked constructor for internal surgery; validity is re-checked in debug builds.
    pub(crate) fn from_ranks_unchecked(labels: Vec<u32>, parent: Vec<Option<usize>>) -> Self {
        debug_assert!(Self::from_ranks(labels.clone(), parent.clone()).is_ok(), "invalid tree: {parent:?}");
        RootedTree { labels, parent }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn root(&self) -> u32 {
        self.labels[self.root_rank()]
    }

    pub fn min_label(&self) -> u32 {
        self.labels[0]
    }

    pub fn max_label(&self) -> u32 {
        self.labels[self.len() - 1]
    }

    /// Parent of `v`, or `None` when `v` is the root.
    pub fn parent(&self, v: u32) -> Result<Option<u32>, TreeError> {
        let i = self.rank(v)?;
        Ok(self.parent[i].map(|p| self.labels[p]))
    }

    /// Child-to-parent map over labels.
    pub fn parent_map(&self) -> BTreeMap<u32, u32> {
        self.parent.iter().enumerate().filter_map(|(i, p)| p.map(|p| (self.labels[i], self.labels[p]))).collect()
    }

    /// Parent labels positionally matching [`labels`](Self::labels), `0` for the root.
    pub fn parent_labels(&self) -> Vec<u32> {
        self.parent.iter().map(|p| p.map_or(0, |p| self.labels[p])).collect()
    }

    /// True when the label set is exactly `{1, ..., n}`.
    pub fn is_standard(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
    }

    /// Children of `v` in increasing label order.
    pub fn children(&self, v: u32) -> Result<Vec<u32>, TreeError> {
        let i = self.rank(v)?;
        Ok(self.kids(i).into_iter().map(|c| self.labels[c]).collect())
    }

    pub fn degree(&self, v: u32) -> Result<usize, TreeError> {
        Ok(self.deg(self.rank(v)?))
    }

    /// Whether `x` lies in the subtree rooted at `y`; every node is its own descendant.
    pub fn is_descendant(&self, x: u32, y: u32) -> Result<bool, TreeError> {
        Ok(self.below(self.rank(x)?, self.rank(y)?))
    }

    /// The labels `v, parent(v), ..., root`.
    pub fn path_to_root(&self, v: u32) -> Result<Vec<u32>, TreeError> {
        let i = self.rank(v)?;
        Ok(self.upward(i).into_iter().map(|r| self.labels[r]).collect())
    }

    /// Smallest label in the subtree rooted at `v`.
    pub fn beta(&self, v: u32) -> Result<u32, TreeError> {
        Ok(self.labels[self.beta_rank(self.rank(v)?)])
    }

    /// Whether the edge entering `c` is proper, i.e. `parent(c) < beta(c)`.
    pub fn is_proper(&self, c: u32) -> Result<bool, TreeError> {
        let i = self.rank(c)?;
        match self.parent[i] {
            None => Err(TreeError::IsRoot(c)),
            Some(p) => Ok(p < self.beta_rank(i)),
        }
    }

    pub fn improper_count(&self) -> usize {
        (0..self.len()).filter(|&i| matches!(self.parent[i], Some(p) if p >= self.beta_rank(i))).count()
    }

    /// Number of proper edges on the path from the maximum label to the root.
    pub fn proper_on_max_path(&self) -> usize {
        let path = self.upward(self.max_rank());
        path.windows(2).filter(|w| w[1] < self.beta_rank(w[0])).count()
    }

    /// First node on the max-to-root path whose entering edge from below is proper.
    pub fn upper_critical(&self) -> Result<u32, TreeError> {
        self.upper_critical_rank().map(|r| self.labels[r]).ok_or(TreeError::NoProperEdgeOnMaxPath)
    }

    /// The lower critical node: first `u != max` on the path from the maximum
    /// label down to `beta(max)` with `u < beta(T_max - T_u)`.
    pub fn lower_critical(&self) -> Result<u32, TreeError> {
        self.lower_critical_rank().map(|r| self.labels[r])
    }

    /// First node `u` above the minimum on the min-to-root path with
    /// `u < beta(T_root - T_u)`; the root always qualifies.
    pub fn mu(&self) -> Result<u32, TreeError> {
        self.mu_rank().map(|r| self.labels[r])
    }

    /// Largest `beta(b)` over the children `b` of the maximum label.
    pub fn alpha(&self) -> Result<u32, TreeError> {
        self.alpha_rank().map(|r| self.labels[r])
    }

    /// Smallest `beta(a)` over the children `a` of the minimum label.
    pub fn beta_star(&self) -> Result<u32, TreeError> {
        self.beta_star_rank().map(|r| self.labels[r])
    }

    /// Order-isomorphic relabeling by `new_labels` (any order; sorted internally).
    pub fn relabel(&self, new_labels: &[u32]) -> Result<RootedTree, TreeError> {
        if new_labels.len() != self.len() {
            return Err(TreeError::SizeMismatch { expected: self.len(), actual: new_labels.len() });
        }
        let mut sorted = new_labels.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(TreeError::DuplicateLabel(w[0]));
            }
        }
        if sorted[0] == 0 {
            return Err(TreeError::ZeroLabel);
        }
        Ok(RootedTree { labels: sorted, parent: self.parent.clone() })
    }

    /// Same shape relabeled onto `{1, ..., n}`.
    pub fn standardize(&self) -> RootedTree {
        RootedTree { labels: (1..=self.len() as u32).collect(), parent: self.parent.clone() }
    }

    /// The subtree rooted at `v` as a tree over its own labels.
    pub fn subtree(&self, v: u32) -> Result<RootedTree, TreeError> {
        Ok(self.extract(self.rank(v)?).0)
    }

    /// Packs the rank-level shape into a `u64` (4 bits per node); `None` above 15 nodes.
    ///
    /// Two trees over the same label set are equal iff their codes are equal.
    pub fn packed_code(&self) -> Option<u64> {
        if self.len() > 15 {
            return None;
        }
        Some(self.parent.iter().fold(0u64, |acc, p| (acc << 4) | p.map_or(0, |p| p as u64 + 1)))
    }

    // ---- rank-level helpers shared with the bijection module ----

    pub(crate) fn rank(&self, v: u32) -> Result<usize, TreeError> {
        self.labels.binary_search(&v).map_err(|_| TreeError::UnknownLabel(v))
    }

    pub(crate) fn label_of(&self, r: usize) -> u32 {
        self.labels[r]
    }

    pub(crate) fn parent_rank(&self, r: usize) -> Option<usize> {
        self.parent[r]
    }

    pub(crate) fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub(crate) fn root_rank(&self) -> usize {
        self.parent.iter().position(Option::is_none).expect("validated tree has a root")
    }

    pub(crate) fn max_rank(&self) -> usize {
        self.len() - 1
    }

    pub(crate) fn kids(&self, r: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.parent[c] == Some(r)).collect()
    }

    pub(crate) fn deg(&self, r: usize) -> usize {
        self.parent.iter().filter(|&&p| p == Some(r)).count()
    }

    /// Whether `x` is in the subtree of `y`.
    pub(crate) fn below(&self, x: usize, y: usize) -> bool {
        let mut cur = Some(x);
        while let Some(c) = cur {
            if c == y {
                return true;
            }
            cur = self.parent[c];
        }
        false
    }

    pub(crate) fn upward(&self, r: usize) -> Vec<usize> {
        let mut path = vec![r];
        let mut cur = r;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path
    }

    /// Path from `top` down to `bottom`, both included; `bottom` must lie below `top`.
    pub(crate) fn downward(&self, top: usize, bottom: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = bottom;
        loop {
            path.push(cur);
            if cur == top {
                break;
            }
            cur = self.parent[cur].expect("bottom lies below top");
        }
        path.reverse();
        path
    }

    pub(crate) fn beta_rank(&self, r: usize) -> usize {
        (0..self.len()).find(|&j| self.below(j, r)).expect("a node is in its own subtree")
    }

    /// Smallest rank in `T_top - T_cut`, or `None` when that set is empty.
    pub(crate) fn beta_minus(&self, top: usize, cut: usize) -> Option<usize> {
        (0..self.len()).find(|&j| self.below(j, top) && !self.below(j, cut))
    }

    pub(crate) fn upper_critical_rank(&self) -> Option<usize> {
        let path = self.upward(self.max_rank());
        path.windows(2).find(|w| w[1] < self.beta_rank(w[0])).map(|w| w[1])
    }

    pub(crate) fn lower_critical_rank(&self) -> Result<usize, TreeError> {
        let mx = self.max_rank();
        if self.deg(mx) == 0 {
            return Err(TreeError::MaxIsLeaf(self.max_label()));
        }
        let path = self.downward(mx, self.beta_rank(mx));
        Ok(path[1..]
            .iter()
            .copied()
            .find(|&u| self.beta_minus(mx, u).is_none_or(|b| u < b))
            .expect("beta(max) always qualifies"))
    }

    pub(crate) fn mu_rank(&self) -> Result<usize, TreeError> {
        let root = self.root_rank();
        if root == 0 {
            return Err(TreeError::MinIsRoot(self.min_label()));
        }
        let path = self.upward(0);
        Ok(path[1..]
            .iter()
            .copied()
            .find(|&u| self.beta_minus(root, u).is_none_or(|b| u < b))
            .expect("the root always qualifies"))
    }

    pub(crate) fn alpha_rank(&self) -> Result<usize, TreeError> {
        self.kids(self.max_rank())
            .into_iter()
            .map(|b| self.beta_rank(b))
            .max()
            .ok_or(TreeError::MaxIsLeaf(self.max_label()))
    }

    pub(crate) fn beta_star_rank(&self) -> Result<usize, TreeError> {
        self.kids(0).into_iter().map(|a| self.beta_rank(a)).min().ok_or(TreeError::MinIsLeaf(self.min_label()))
    }

    /// The subtree at `top` as its own tree, with the global ranks of its members.
    pub(crate) fn extract(&self, top: usize) -> (RootedTree, Vec<usize>) {
        let members: Vec<usize> = (0..self.len()).filter(|&j| self.below(j, top)).collect();
        let local = |g: usize| members.binary_search(&g).expect("member");
        let labels = members.iter().map(|&g| self.labels[g]).collect();
        let parent = members.iter().map(|&g| if g == top { None } else { self.parent[g].map(local) }).collect();
        (RootedTree { labels, parent }, members)
    }

    /// Replaces the subtree at `top` (whose members are `members`) by `sub`,
    /// which must be a tree over exactly the same labels.
    pub(crate) fn graft(&self, top: usize, members: &[usize], sub: &RootedTree) -> RootedTree {
        debug_assert_eq!(members.len(), sub.len());
        let mut parent = self.parent.clone();
        let attach = self.parent[top];
        for (local, &global) in members.iter().enumerate() {
            parent[global] = match sub.parent[local] {
                None => attach,
                Some(lp) => Some(members[lp]),
            };
        }
        RootedTree::from_ranks_unchecked(self.labels.clone(), parent)
    }

    /// Same tree with the parent vector replaced (used by in-place style surgery).
    pub(crate) fn with_parents(&self, parent: Vec<Option<usize>>) -> RootedTree {
        RootedTree::from_ranks_unchecked(self.labels.clone(), parent)
    }

    /// Set of labels in the subtree at `v`.
    pub fn subtree_labels(&self, v: u32) -> Result<BTreeSet<u32>, TreeError> {
        let r = self.rank(v)?;
        Ok((0..self.len()).filter(|&j| self.below(j, r)).map(|j| self.labels[j]).collect())
    }
}
