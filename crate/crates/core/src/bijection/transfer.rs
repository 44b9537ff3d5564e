//! The transfer bijection: from trees with no proper edge on the
//! maximum-to-root path whose minimum has `m >= 1` children, onto trees of
//! the same kind with `m` more improper edges, a leaf minimum, at least `m`
//! children under the maximum and lower critical node above the minimum.
//! It splits into four cases according to how the minimum and maximum sit.

use std::cmp::Reverse;
use std::fmt;

use super::isolate::{isolate_min, isolate_min_inv, IsolateAudit};
use super::{corrupt, outside, BijectionError};
use crate::tree::RootedTree;

/// Which case a tree fell into, with the data located along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// The minimum is not below the maximum and `alpha < beta*`:
    /// all subtrees of the minimum move to the maximum.
    A,
    /// `alpha > beta*`: the maximum trades places with the subtree at `alpha`
    /// before the minimum's subtrees move to it.
    B { alpha: u32 },
    /// The minimum is below the maximum, which has at least two children and
    /// `alpha < beta*`: the branch holding the minimum moves to `located`.
    C { located: u32 },
    /// The minimum is below the maximum, which has a single child: the
    /// minimum is isolated inside that child's subtree.
    D { isolate: IsolateAudit },
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::A => write!(f, "A"),
            CaseTag::B { alpha } => write!(f, "B alpha={alpha}"),
            CaseTag::C { located } => write!(f, "C located={located}"),
            CaseTag::D { isolate } => write!(f, "D {isolate}"),
        }
    }
}

impl CaseTag {
    pub fn letter(&self) -> char {
        match self {
            CaseTag::A => 'A',
            CaseTag::B { .. } => 'B',
            CaseTag::C { .. } => 'C',
            CaseTag::D { .. } => 'D',
        }
    }
}

fn move_all(p: &mut [Option<usize>], kids: &[usize], to: usize) {
    for &c in kids {
        p[c] = Some(to);
    }
}

/// Children of `r` by increasing subtree minimum.
fn kids_by_beta(t: &RootedTree, r: usize) -> Vec<usize> {
    let mut kids = t.kids(r);
    kids.sort_by_key(|&c| t.beta_rank(c));
    kids
}

pub fn transfer(t: &RootedTree) -> Result<(RootedTree, CaseTag), BijectionError> {
    const MAP: &str = "transfer";
    if t.proper_on_max_path() != 0 {
        return Err(outside(MAP, "the maximum-to-root path has a proper edge"));
    }
    let min_kids = t.kids(0);
    if min_kids.is_empty() {
        return Err(outside(MAP, "the minimum is a leaf"));
    }
    let mx = t.max_rank();
    let alpha = t.alpha_rank()?;
    let beta_star = t.beta_star_rank()?;
    let mut p = t.parents().to_vec();

    if alpha > beta_star {
        let q = p[alpha].expect("alpha lies below the maximum");
        let max_kids = t.kids(mx);
        p[alpha] = p[mx];
        for &c in &max_kids {
            if c != alpha {
                p[c] = Some(alpha);
            }
        }
        p[mx] = Some(if q == mx { alpha } else { q });
        move_all(&mut p, &min_kids, mx);
        return Ok((t.with_parents(p), CaseTag::B { alpha: t.label_of(alpha) }));
    }
    if alpha == beta_star {
        return Err(outside(MAP, "alpha equals beta*"));
    }
    if !t.below(0, mx) {
        move_all(&mut p, &min_kids, mx);
        return Ok((t.with_parents(p), CaseTag::A));
    }
    let max_kids = kids_by_beta(t, mx);
    if max_kids.len() == 1 {
        let b = max_kids[0];
        let a = kids_by_beta(t, 0);
        move_all(&mut p, &a[1..], mx);
        let moved = t.with_parents(p);
        let (sub, members) = moved.extract(b);
        let (sub, audit) = isolate_min(&sub)?;
        return Ok((moved.graft(b, &members, &sub), CaseTag::D { isolate: audit }));
    }
    let (b1, b2) = (max_kids[0], max_kids[1]);
    let third = max_kids.get(2).map(|&b| t.beta_rank(b));
    let path = t.downward(b2, t.beta_rank(b2));
    let c = path
        .iter()
        .enumerate()
        .map(|(i, &c)| (i, c))
        .find(|&(i, c)| {
            (i == 0 || t.beta_minus(b2, c).is_none_or(|b| c < b)) && c < beta_star && third.is_none_or(|b3| c < b3)
        })
        .map(|(_, c)| c)
        .ok_or_else(|| corrupt(MAP, "no node qualifies in the second branch"))?;
    p[b1] = Some(c);
    move_all(&mut p, &min_kids, mx);
    Ok((t.with_parents(p), CaseTag::C { located: t.label_of(c) }))
}

/// Inverse of [`transfer`] for a tree produced from a minimum with `m` children.
pub fn transfer_inv(t: &RootedTree, m: usize) -> Result<(RootedTree, CaseTag), BijectionError> {
    const MAP: &str = "transfer_inv";
    if m == 0 {
        return Err(outside(MAP, "m must be positive"));
    }
    if t.deg(0) != 0 {
        return Err(outside(MAP, "the minimum is not a leaf"));
    }
    if t.proper_on_max_path() != 0 {
        return Err(outside(MAP, "the maximum-to-root path has a proper edge"));
    }
    let mx = t.max_rank();
    let d = t.deg(mx);
    if d < m {
        return Err(outside(MAP, format!("the maximum has {d} children, fewer than {m}")));
    }
    let mut p = t.parents().to_vec();
    let mut by_beta_desc = t.kids(mx);
    by_beta_desc.sort_by_key(|&c| Reverse(t.beta_rank(c)));

    match (t.below(0, mx), d > m) {
        (false, true) => {
            move_all(&mut p, &by_beta_desc[..m], 0);
            Ok((t.with_parents(p), CaseTag::A))
        }
        (false, false) => {
            move_all(&mut p, &by_beta_desc, 0);
            let u = t.with_parents(p.clone());
            let path = u.downward(u.root_rank(), mx);
            let y = path
                .windows(2)
                .find(|e| e[0] < u.beta_rank(e[1]))
                .map(|e| e[0])
                .ok_or_else(|| corrupt(MAP, "no proper edge on the root-to-maximum path"))?;
            for c in u.kids(y) {
                if u.beta_rank(c) > y && !u.below(mx, c) {
                    p[c] = Some(mx);
                }
            }
            // exchange the labels of y and the maximum
            let swap = |r: usize| {
                if r == y {
                    mx
                } else if r == mx {
                    y
                } else {
                    r
                }
            };
            let mut q = vec![None; p.len()];
            for (r, par) in p.iter().enumerate() {
                q[swap(r)] = par.map(swap);
            }
            Ok((t.with_parents(q), CaseTag::B { alpha: t.label_of(y) }))
        }
        (true, true) => {
            let x = t.lower_critical_rank()?;
            if x == 0 {
                return Err(corrupt(MAP, "the lower critical node is the minimum"));
            }
            move_all(&mut p, &by_beta_desc[..m], 0);
            let c = t.kids(x).into_iter().find(|&c| t.below(0, c)).expect("x lies above the minimum");
            p[c] = Some(mx);
            Ok((t.with_parents(p), CaseTag::C { located: t.label_of(x) }))
        }
        (true, false) => {
            let c = *by_beta_desc.last().expect("d >= m >= 1");
            debug_assert!(t.below(0, c));
            // undo the isolation inside c's branch first, then return the
            // other branches to the minimum
            let (sub, members) = t.extract(c);
            let (sub, audit) = isolate_min_inv(&sub)?;
            let mut p = t.graft(c, &members, &sub).parents().to_vec();
            move_all(&mut p, &by_beta_desc[..m - 1], 0);
            Ok((t.with_parents(p), CaseTag::D { isolate: audit }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: &[u32]) -> RootedTree {
        RootedTree::from_parent_array(p).unwrap()
    }

    #[test]
    fn case_a_example() {
        // root 3, 3 -> {1, 5}, 1 -> 4, 5 -> 2
        let before = t(&[3, 5, 0, 1, 3]);
        let (after, case) = transfer(&before).unwrap();
        assert_eq!(after, t(&[3, 5, 0, 5, 3]));
        assert_eq!(case, CaseTag::A);
        assert_eq!(after.improper_count(), before.improper_count() + 1);
        assert_eq!(transfer_inv(&after, 1).unwrap().0, before);
    }

    #[test]
    fn requires_no_proper_edge_on_max_path() {
        assert!(matches!(transfer(&t(&[2, 0, 1])), Err(BijectionError::OutsideDomain { .. })));
        assert!(matches!(transfer(&t(&[3, 3, 0])), Err(BijectionError::OutsideDomain { .. })));
    }
}
