//! The rooted bijection between trees whose minimum has a child and trees
//! with one more improper edge whose maximum has a child.
//!
//! Forward: with `i >= 1` proper edges on the maximum-to-root path, lower
//! once; with `i = 0`, transfer and then lift `m - 1` times, where `m` is the
//! degree of the minimum.

use std::fmt;

use super::lowering::{lift, lower};
use super::transfer::{transfer, transfer_inv, CaseTag};
use super::{outside, BijectionError};
use crate::tree::RootedTree;

/// Dispatch trace of one application of the rooted bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedAudit {
    pub direction: &'static str,
    /// Proper edges on the maximum-to-root path of the input.
    pub proper_on_max_path: usize,
    /// `None` when a single lowering or lifting step was used.
    pub case: Option<CaseTag>,
    /// Number of lifting (forward) or lowering (inverse) steps around the transfer.
    pub path_steps: usize,
}

impl fmt::Display for RootedAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "direction={} proper_on_max_path={} ", self.direction, self.proper_on_max_path)?;
        match &self.case {
            None if self.direction == "fwd" => write!(f, "route=lower"),
            None => write!(f, "route=lift"),
            Some(c) => write!(f, "route=transfer case={} path_steps={}", c, self.path_steps),
        }
    }
}

pub fn rooted_fwd_audited(t: &RootedTree) -> Result<(RootedTree, RootedAudit), BijectionError> {
    let m = t.deg(0);
    if m == 0 {
        return Err(outside("rooted_fwd", "the minimum is a leaf"));
    }
    let i = t.proper_on_max_path();
    let mut audit = RootedAudit { direction: "fwd", proper_on_max_path: i, case: None, path_steps: 0 };
    if i >= 1 {
        return Ok((lower(t)?, audit));
    }
    let (mut out, case) = transfer(t)?;
    for _ in 1..m {
        out = lift(&out)?;
    }
    audit.case = Some(case);
    audit.path_steps = m - 1;
    Ok((out, audit))
}

pub fn rooted_inv_audited(t: &RootedTree) -> Result<(RootedTree, RootedAudit), BijectionError> {
    let mx = t.max_rank();
    if t.deg(mx) == 0 {
        return Err(outside("rooted_inv", "the maximum is a leaf"));
    }
    let i = t.proper_on_max_path();
    let mut audit = RootedAudit { direction: "inv", proper_on_max_path: i, case: None, path_steps: 0 };
    if t.deg(0) > 0 || t.lower_critical_rank()? == 0 {
        return Ok((lift(t)?, audit));
    }
    let mut u = t.clone();
    for _ in 0..i {
        u = lower(&u)?;
    }
    let (out, case) = transfer_inv(&u, i + 1)?;
    audit.case = Some(case);
    audit.path_steps = i;
    Ok((out, audit))
}

pub fn rooted_fwd(t: &RootedTree) -> Result<RootedTree, BijectionError> {
    rooted_fwd_audited(t).map(|(t, _)| t)
}

pub fn rooted_inv(t: &RootedTree) -> Result<RootedTree, BijectionError> {
    rooted_inv_audited(t).map(|(t, _)| t)
}
