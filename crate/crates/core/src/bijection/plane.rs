//! Trees in which every edge is improper correspond to increasing plane trees.
//!
//! In such a tree the minimum is a leaf. Walking from it to the root through
//! `v_1, ..., v_t`, the tree splits into the pieces `T(v_1) - {min}` and
//! `T(v_i) - T(v_{i-1})`, each rooted at `v_i` and again all-improper. The
//! plane tree has the minimum as root and the images of the pieces as its
//! children, in path order.

use std::collections::BTreeMap;

use super::{outside, BijectionError};
use crate::plane::PlaneTree;
use crate::tree::RootedTree;

pub fn to_plane(t: &RootedTree) -> Result<PlaneTree, BijectionError> {
    if t.improper_count() + 1 != t.len() {
        return Err(outside("to_plane", "the tree has a proper edge"));
    }
    Ok(plane_of(t))
}

fn plane_of(t: &RootedTree) -> PlaneTree {
    let path = t.upward(0);
    let children = path
        .windows(2)
        .map(|e| {
            let (lower, top) = (e[0], e[1]);
            let mut map = BTreeMap::new();
            for j in (0..t.len()).filter(|&j| j != top && t.below(j, top) && !t.below(j, lower)) {
                let parent = t.parent_rank(j).expect("non-root member");
                map.insert(t.label_of(j), t.label_of(parent));
            }
            let piece = RootedTree::build(t.label_of(top), &map).expect("a piece is a subtree");
            plane_of(&piece)
        })
        .collect();
    PlaneTree::new(t.min_label(), children)
}

pub fn from_plane(p: &PlaneTree) -> Result<RootedTree, BijectionError> {
    if !p.has_distinct_labels() {
        return Err(outside("from_plane", "labels repeat"));
    }
    if !p.is_increasing() {
        return Err(outside("from_plane", "the plane tree is not increasing"));
    }
    let mut map = BTreeMap::new();
    let root = chain(p, &mut map);
    Ok(RootedTree::build(root, &map)?)
}

/// Rebuilds the pieces of `p` and chains them root to root below the label
/// of `p`; returns the root of the chain.
fn chain(p: &PlaneTree, map: &mut BTreeMap<u32, u32>) -> u32 {
    let mut below = p.label;
    for c in &p.children {
        let r = chain(c, map);
        map.insert(below, r);
        below = r;
    }
    below
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_node_example() {
        let t = RootedTree::from_parent_array(&[9, 6, 7, 0, 9, 4, 4, 9, 6]).unwrap();
        let p = to_plane(&t).unwrap();
        assert_eq!(p.to_string(), "1(5(8(9)) 2(6) 3(7 4))");
        assert_eq!(from_plane(&p).unwrap(), t);
    }

    #[test]
    fn small_cases() {
        let t = RootedTree::from_parent_array(&[2, 0]).unwrap();
        assert_eq!(to_plane(&t).unwrap().to_string(), "1(2)");
        let single = RootedTree::from_parent_array(&[0]).unwrap();
        assert_eq!(to_plane(&single).unwrap().to_string(), "1");
        assert_eq!(from_plane(&"1".parse().unwrap()).unwrap(), single);
    }

    #[test]
    fn domain_errors() {
        let proper = RootedTree::from_parent_array(&[0, 1]).unwrap();
        assert!(to_plane(&proper).is_err());
        assert!(from_plane(&"2(1)".parse().unwrap()).is_err());
    }
}
