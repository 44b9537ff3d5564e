//! The degree-preserving bijection on unrooted trees (rooted at their
//! minimum): trees whose second-smallest label has a child correspond to
//! trees with one more improper edge whose maximum has a child, with the
//! degree of the minimum unchanged.
//!
//! The rooted bijection is applied inside the branch of the root that holds
//! the second-smallest label. When that branch does not hold the maximum and
//! the maximum is a leaf, the branches holding the two are first relabeled so
//! that they trade the second-smallest and the maximum label.

use std::collections::BTreeMap;

use super::rooted::{rooted_fwd, rooted_inv};
use super::{outside, BijectionError};
use crate::tree::RootedTree;

/// The child of the root whose subtree holds `r`.
fn branch_of(t: &RootedTree, r: usize) -> usize {
    t.kids(t.root_rank()).into_iter().find(|&c| t.below(r, c)).expect("r is not the root")
}

fn replace_branch(
    t: &RootedTree,
    top: usize,
    f: fn(&RootedTree) -> Result<RootedTree, BijectionError>,
) -> Result<RootedTree, BijectionError> {
    let (sub, members) = t.extract(top);
    Ok(t.graft(top, &members, &f(&sub)?))
}

/// Same shape over the label set with `from` replaced by `to`.
fn trade_label(t: &RootedTree, from: u32, to: u32) -> RootedTree {
    let labels: Vec<u32> = t.labels().iter().map(|&l| if l == from { to } else { l }).collect();
    t.relabel(&labels).expect("labels stay distinct")
}

/// Replaces branches `a` and `b` of the root by the given trees (which cover
/// the same labels between them).
fn reassemble(t: &RootedTree, a: usize, b: usize, new_a: &RootedTree, new_b: &RootedTree) -> RootedTree {
    let root = t.root();
    let mut map: BTreeMap<u32, u32> = t.parent_map();
    for top in [a, b] {
        for l in t.subtree_labels(t.label_of(top)).expect("present") {
            map.remove(&l);
        }
    }
    for part in [new_a, new_b] {
        map.extend(part.parent_map());
        map.insert(part.root(), root);
    }
    RootedTree::build(root, &map).expect("branches are reattached to the root")
}

fn check_rooted_at_min(map: &'static str, t: &RootedTree) -> Result<(), BijectionError> {
    if t.len() < 2 {
        return Err(outside(map, "needs at least two labels"));
    }
    if t.root_rank() != 0 {
        return Err(outside(map, "the tree is not rooted at its minimum"));
    }
    Ok(())
}

pub fn unrooted_fwd(t: &RootedTree) -> Result<RootedTree, BijectionError> {
    check_rooted_at_min("unrooted_fwd", t)?;
    if t.deg(1) == 0 {
        return Err(outside("unrooted_fwd", "the second-smallest label is a leaf"));
    }
    let mx = t.max_rank();
    let x = branch_of(t, 1);
    let y = branch_of(t, mx);
    if x == y || t.deg(mx) > 0 {
        return replace_branch(t, x, rooted_fwd);
    }
    let (second, top) = (t.label_of(1), t.label_of(mx));
    let tx = t.subtree(t.label_of(x))?;
    let ty = t.subtree(t.label_of(y))?;
    let r = rooted_fwd(&trade_label(&tx, second, top))?;
    let s = trade_label(&ty, top, second);
    Ok(reassemble(t, x, y, &r, &s))
}

pub fn unrooted_inv(t: &RootedTree) -> Result<RootedTree, BijectionError> {
    check_rooted_at_min("unrooted_inv", t)?;
    let mx = t.max_rank();
    if t.deg(mx) == 0 {
        return Err(outside("unrooted_inv", "the maximum is a leaf"));
    }
    let u = branch_of(t, mx);
    let v = branch_of(t, 1);
    if u == v {
        return replace_branch(t, u, rooted_inv);
    }
    let tv = t.subtree(t.label_of(v))?;
    if tv.deg(tv.max_rank()) > 0 {
        return replace_branch(t, v, rooted_inv);
    }
    let (second, top) = (t.label_of(1), t.label_of(mx));
    let tu = t.subtree(t.label_of(u))?;
    let x_part = trade_label(&rooted_inv(&tu)?, top, second);
    let y_part = trade_label(&tv, second, top);
    Ok(reassemble(t, u, v, &x_part, &y_part))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: &[u32]) -> RootedTree {
        RootedTree::from_parent_array(p).unwrap()
    }

    #[test]
    fn chain_example() {
        let before = t(&[0, 1, 2, 3]);
        let after = unrooted_fwd(&before).unwrap();
        assert_eq!(after, t(&[0, 1, 4, 2]));
        assert_eq!(unrooted_inv(&after).unwrap(), before);
    }

    #[test]
    fn relabeling_branch() {
        // root 1 with branches 2 -> 3 and 4 (a leaf maximum in its own branch)
        let before = t(&[0, 1, 2, 1]);
        let after = unrooted_fwd(&before).unwrap();
        assert_eq!(after.degree(1).unwrap(), 2);
        assert_eq!(after.improper_count(), before.improper_count() + 1);
        assert!(after.degree(4).unwrap() > 0);
        assert_eq!(unrooted_inv(&after).unwrap(), before);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(unrooted_fwd(&t(&[2, 0])), Err(BijectionError::OutsideDomain { .. })));
        assert!(matches!(unrooted_fwd(&t(&[0, 1, 1])), Err(BijectionError::OutsideDomain { .. })));
        assert!(matches!(unrooted_inv(&t(&[0, 1, 1])), Err(BijectionError::OutsideDomain { .. })));
    }
}
