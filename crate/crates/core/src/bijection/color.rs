//! Maps that add or remove a new root below all labels.
//!
//! * `color_split` / `color_merge`: a tree on `[n]` whose minimum has some
//!   children colored black corresponds to an unrooted tree on `[n + 1]`.
//!   A new root receives the black subtrees and the rest of the tree, then
//!   every label shifts up by one. The improper count is unchanged.
//! * `hoist` / `unhoist`: the special case where every child of the minimum
//!   is black. It maps trees on `[n]` whose minimum has `r` children onto
//!   unrooted trees on `[n + 1]` where `1` has `r + 1` children and `2` is a leaf.

use std::collections::{BTreeMap, BTreeSet};

use super::{outside, BijectionError};
use crate::tree::RootedTree;

/// A tree together with a set of black children of its minimum label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTree {
    tree: RootedTree,
    black: BTreeSet<u32>,
}

impl ColoredTree {
    pub fn new(tree: RootedTree, black: impl IntoIterator<Item = u32>) -> Result<Self, BijectionError> {
        let black: BTreeSet<u32> = black.into_iter().collect();
        let kids = tree.children(tree.min_label())?;
        if let Some(b) = black.iter().find(|b| !kids.contains(b)) {
            return Err(outside("colored tree", format!("{b} is not a child of the minimum")));
        }
        Ok(ColoredTree { tree, black })
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn black(&self) -> &BTreeSet<u32> {
        &self.black
    }
}

fn require_standard(map: &'static str, t: &RootedTree) -> Result<(), BijectionError> {
    if t.is_standard() {
        Ok(())
    } else {
        Err(outside(map, "labels must be exactly 1..n"))
    }
}

/// Hangs the black subtrees and the remainder under a new root, then shifts labels up.
pub fn color_split(c: &ColoredTree) -> Result<RootedTree, BijectionError> {
    let t = &c.tree;
    require_standard("color_split", t)?;
    let mut map = BTreeMap::new();
    map.insert(t.root() + 1, 1);
    for (child, parent) in t.parent_map() {
        let to = if c.black.contains(&child) { 1 } else { parent + 1 };
        map.insert(child + 1, to);
    }
    Ok(RootedTree::build(1, &map)?)
}

/// Inverse of [`color_split`]: the root's branch holding `2` is the remainder;
/// the other branches return to `2` as black children.
pub fn color_merge(t: &RootedTree) -> Result<ColoredTree, BijectionError> {
    const MAP: &str = "color_merge";
    require_standard(MAP, t)?;
    if t.len() < 2 || t.root() != 1 {
        return Err(outside(MAP, "expects at least two labels with root 1"));
    }
    let rest = t.children(1)?.into_iter().find(|&c| t.is_descendant(2, c).unwrap_or(false));
    let rest = rest.expect("2 lies in some branch of the root");
    let mut map = BTreeMap::new();
    let mut black = BTreeSet::new();
    for (child, parent) in t.parent_map() {
        if parent != 1 {
            map.insert(child - 1, parent - 1);
        } else if child != rest {
            map.insert(child - 1, 1);
            black.insert(child - 1);
        }
    }
    let tree = RootedTree::build(rest - 1, &map)?;
    Ok(ColoredTree { tree, black })
}

/// Puts a new root above the tree and moves every subtree of the minimum to it.
pub fn hoist(t: &RootedTree) -> Result<RootedTree, BijectionError> {
    let kids = t.children(t.min_label())?;
    color_split(&ColoredTree::new(t.clone(), kids)?)
}

/// Inverse of [`hoist`]; requires root `1` and `2` a leaf.
pub fn unhoist(t: &RootedTree) -> Result<RootedTree, BijectionError> {
    require_standard("unhoist", t)?;
    if t.len() < 2 || t.root() != 1 || t.degree(2)? != 0 {
        return Err(outside("unhoist", "expects root 1 and a leaf 2"));
    }
    Ok(color_merge(t)?.tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: &[u32]) -> RootedTree {
        RootedTree::from_parent_array(p).unwrap()
    }

    #[test]
    fn split_examples() {
        let plain = ColoredTree::new(t(&[0, 1]), []).unwrap();
        assert_eq!(color_split(&plain).unwrap(), t(&[0, 1, 2]));
        let black = ColoredTree::new(t(&[0, 1]), [2]).unwrap();
        let split = color_split(&black).unwrap();
        assert_eq!(split, t(&[0, 1, 1]));
        assert_eq!(color_merge(&split).unwrap(), black);
        assert_eq!(color_merge(&t(&[0, 1, 2])).unwrap(), plain);
    }

    #[test]
    fn hoist_examples() {
        assert_eq!(hoist(&t(&[0, 1])).unwrap(), t(&[0, 1, 1]));
        assert_eq!(hoist(&t(&[0])).unwrap(), t(&[0, 1]));
        assert_eq!(unhoist(&t(&[0, 1, 1])).unwrap(), t(&[0, 1]));
        assert_eq!(unhoist(&t(&[0, 1])).unwrap(), t(&[0]));
        assert!(unhoist(&t(&[0, 1, 2])).is_err());
    }

    #[test]
    fn black_must_be_children_of_min() {
        assert!(ColoredTree::new(t(&[0, 1, 2]), [3]).is_err());
    }
}
