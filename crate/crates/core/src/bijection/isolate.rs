//! Isolating the minimum: a bijection from trees whose minimum has exactly
//! one child `v` (with `w = beta(v)`) onto trees whose minimum is a non-root
//! leaf with `mu = w`, adding one improper edge.
//!
//! Forward: cut `v` off the minimum, cut the root-to-minimum path into pieces
//! `R_1, ..., R_s`, hang every piece under `w`, and make `v` the root.

use std::fmt;

use super::{corrupt, outside, BijectionError};
use crate::tree::RootedTree;

/// The node `w` and the last path node of each piece (`v_{j_1}, ..., v_{j_s}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolateAudit {
    pub w: u32,
    pub cuts: Vec<u32>,
}

impl fmt::Display for IsolateAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cuts: Vec<String> = self.cuts.iter().map(u32::to_string).collect();
        write!(f, "w={} pieces={} cuts=[{}]", self.w, self.cuts.len(), cuts.join(","))
    }
}

/// Whether `z` is below every node of `T_top - T_z`; vacuous when that set is empty.
fn clears_rest(t: &RootedTree, top: usize, z: usize) -> bool {
    t.beta_minus(top, z).is_none_or(|b| z < b)
}

pub fn isolate_min(t: &RootedTree) -> Result<(RootedTree, IsolateAudit), BijectionError> {
    const MAP: &str = "isolate_min";
    let kids = t.kids(0);
    if kids.len() != 1 {
        return Err(outside(MAP, format!("the minimum has {} children, expected 1", kids.len())));
    }
    let v = kids[0];
    let w = t.beta_rank(v);
    let root = t.root_rank();
    let path = t.downward(root, 0);
    let cond = |j: usize| j == 0 || clears_rest(t, root, path[j]);
    let j1 = (0..path.len()).find(|&j| cond(j) && path[j] < w).expect("the minimum qualifies");
    let cuts: Vec<usize> = std::iter::once(j1).chain((j1 + 1..path.len()).filter(|&j| cond(j))).collect();
    debug_assert_eq!(cuts.last(), Some(&(path.len() - 1)));

    let mut p = t.parents().to_vec();
    p[v] = None;
    let mut start = 0;
    for &j in &cuts {
        p[path[start]] = Some(w);
        start = j + 1;
    }
    let out = t.with_parents(p);
    debug_assert!({
        // piece minima strictly decrease below w, and each piece's minimum
        // lies under its cut node
        let mut prev = w;
        let mut start = 0;
        cuts.iter().all(|&j| {
            let b = out.beta_rank(path[start]);
            let ok = b < prev && out.below(b, path[j]);
            prev = b;
            start = j + 1;
            ok
        })
    });
    let audit = IsolateAudit { w: t.label_of(w), cuts: cuts.iter().map(|&j| t.label_of(path[j])).collect() };
    Ok((out, audit))
}

pub fn isolate_min_inv(t: &RootedTree) -> Result<(RootedTree, IsolateAudit), BijectionError> {
    const MAP: &str = "isolate_min_inv";
    if t.deg(0) != 0 {
        return Err(outside(MAP, "the minimum is not a leaf"));
    }
    let w = t.mu_rank().map_err(|_| outside(MAP, "the minimum is the root"))?;
    let mut pieces: Vec<usize> = t.kids(w).into_iter().filter(|&c| t.beta_rank(c) < w).collect();
    pieces.sort_by_key(|&c| std::cmp::Reverse(t.beta_rank(c)));

    let mut located = Vec::with_capacity(pieces.len());
    let mut bound = w;
    for &c in &pieces {
        let path = t.downward(c, t.beta_rank(c));
        let z = path
            .iter()
            .enumerate()
            .find(|&(j, &z)| (j == 0 || clears_rest(t, c, z)) && z < bound)
            .map(|(_, &z)| z)
            .ok_or_else(|| corrupt(MAP, format!("no cut node in the piece at {}", t.label_of(c))))?;
        located.push(z);
        bound = t.beta_rank(c);
    }
    if located.last() != Some(&0) {
        return Err(corrupt(MAP, "the last piece does not end at the minimum"));
    }

    let mut p = t.parents().to_vec();
    let old_root = t.root_rank();
    for i in 1..pieces.len() {
        p[pieces[i]] = Some(located[i - 1]);
    }
    p[pieces[0]] = None;
    p[old_root] = Some(0);
    let audit = IsolateAudit { w: t.label_of(w), cuts: located.iter().map(|&z| t.label_of(z)).collect() };
    Ok((t.with_parents(p), audit))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: &[u32]) -> RootedTree {
        RootedTree::from_parent_array(p).unwrap()
    }

    #[test]
    fn small_examples() {
        let (out, audit) = isolate_min(&t(&[2, 0, 1])).unwrap();
        assert_eq!(out, t(&[3, 3, 0]));
        assert_eq!(audit.w, 3);
        assert_eq!(isolate_min_inv(&out).unwrap().0, t(&[2, 0, 1]));

        // root 3, 3 -> 1 -> 2
        let (out, audit) = isolate_min(&t(&[3, 1, 0])).unwrap();
        assert_eq!(out, t(&[3, 0, 2]));
        assert_eq!(audit, IsolateAudit { w: 2, cuts: vec![1] });
        assert_eq!(isolate_min_inv(&out).unwrap().0, t(&[3, 1, 0]));
    }

    #[test]
    fn twenty_node_example() {
        let left = t(&[5, 17, 8, 3, 17, 7, 16, 7, 0, 15, 14, 16, 14, 1, 9, 9, 3, 12, 11, 10]);
        let right = t(&[5, 17, 8, 3, 17, 7, 16, 11, 11, 15, 14, 16, 14, 0, 9, 11, 11, 12, 11, 10]);
        let (out, audit) = isolate_min(&left).unwrap();
        assert_eq!(out, right);
        assert_eq!(audit.w, 11);
        assert_eq!(audit.cuts.len(), 4);
        assert_eq!(right.mu().unwrap(), 11);
        let (back, inv_audit) = isolate_min_inv(&right).unwrap();
        assert_eq!(back, left);
        assert_eq!(inv_audit, audit);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(isolate_min(&t(&[0, 1, 1])), Err(BijectionError::OutsideDomain { .. })));
        assert!(matches!(isolate_min(&t(&[2, 0])), Err(BijectionError::OutsideDomain { .. })));
        assert!(matches!(isolate_min_inv(&t(&[0, 1])), Err(BijectionError::OutsideDomain { .. })));
        assert!(isolate_min_inv(&t(&[3, 0, 2])).is_ok());
    }
}
