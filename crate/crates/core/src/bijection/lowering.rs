//! Lowering and lifting: mutually inverse path reversals that move the
//! maximum label up the tree or back down, changing the improper count by one.

use super::BijectionError;
use crate::tree::{RootedTree, TreeError};

/// Reverses the path from the maximum label up to the upper critical node;
/// the maximum takes that node's former parent (or becomes the root).
pub fn lower(t: &RootedTree) -> Result<RootedTree, BijectionError> {
    let mx = t.max_rank();
    let path = t.upward(mx);
    let j = (1..path.len()).find(|&j| path[j] < t.beta_rank(path[j - 1])).ok_or(TreeError::NoProperEdgeOnMaxPath)?;
    let mut p = t.parents().to_vec();
    let attach = p[path[j]];
    for i in 1..=j {
        p[path[i]] = Some(path[i - 1]);
    }
    p[mx] = attach;
    Ok(t.with_parents(p))
}

/// Reverses the path from the maximum label down to the lower critical node;
/// that node takes the maximum's former parent (or becomes the root).
pub fn lift(t: &RootedTree) -> Result<RootedTree, BijectionError> {
    let mx = t.max_rank();
    let lam = t.lower_critical_rank()?;
    let path = t.downward(mx, lam);
    let mut p = t.parents().to_vec();
    let attach = p[mx];
    for w in path.windows(2) {
        p[w[0]] = Some(w[1]);
    }
    p[lam] = attach;
    Ok(t.with_parents(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: &[u32]) -> RootedTree {
        RootedTree::from_parent_array(p).unwrap()
    }

    #[test]
    fn lowering_pair() {
        let left = t(&[2, 0, 4, 2, 9, 4, 2, 9, 6]);
        let right = t(&[2, 0, 4, 6, 9, 9, 2, 9, 2]);
        assert_eq!(lower(&left).unwrap(), right);
        assert_eq!(lift(&right).unwrap(), left);
        assert_eq!(right.improper_count(), left.improper_count() + 1);
    }

    #[test]
    fn small_chain() {
        assert_eq!(lower(&t(&[2, 0, 1])).unwrap(), t(&[3, 0, 2]));
        assert_eq!(lift(&t(&[3, 0, 2])).unwrap(), t(&[2, 0, 1]));
    }

    #[test]
    fn errors() {
        assert_eq!(lower(&t(&[2, 3, 0])), Err(TreeError::NoProperEdgeOnMaxPath.into()));
        assert_eq!(lift(&t(&[0, 1, 2])), Err(TreeError::MaxIsLeaf(3).into()));
        assert!(lower(&t(&[0])).is_err());
    }
}
