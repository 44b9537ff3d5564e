//! Predicates naming refined tree classes such as "k improper edges, the
//! minimum has positive degree, the lower critical node exceeds the minimum".

use std::cmp::Ordering;

use crate::tree::RootedTree;

/// Which node a degree constraint refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeRole {
    Min,
    /// Second smallest label (node `2` in the unrooted convention).
    SecondMin,
    Max,
    Label(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBound {
    Exactly(usize),
    AtLeast(usize),
}

impl DegreeBound {
    pub fn zero() -> Self {
        DegreeBound::Exactly(0)
    }

    pub fn positive() -> Self {
        DegreeBound::AtLeast(1)
    }

    pub fn admits(self, d: usize) -> bool {
        match self {
            DegreeBound::Exactly(e) => d == e,
            DegreeBound::AtLeast(e) => d >= e,
        }
    }
}

/// Constraint on the lower critical node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaBound {
    Equals(u32),
    AboveMin,
    IsMin,
}

/// A conjunction of optional constraints. An empty filter admits every tree.
///
/// Constraints on the lower critical node or on `alpha` implicitly require the
/// maximum label to have a child; constraints on `beta*` require the minimum to
/// have a child; a `mu` constraint requires the minimum not to be the root.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassFilter {
    pub improper: Option<usize>,
    pub degrees: Vec<(NodeRole, DegreeBound)>,
    pub lambda: Option<LambdaBound>,
    pub mu: Option<u32>,
    pub proper_on_max_path: Option<usize>,
    /// `Some(true)`: the minimum lies below the maximum; `Some(false)`: it does not.
    pub min_below_max: Option<bool>,
    /// Required ordering of `alpha` relative to `beta*`.
    pub alpha_vs_beta_star: Option<Ordering>,
    pub beta_star: Option<u32>,
    /// Only trees rooted at their minimum label (the unrooted convention).
    pub rooted_at_min: bool,
}

impl ClassFilter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Unrooted trees: rooted at the smallest label.
    pub fn unrooted() -> Self {
        ClassFilter { rooted_at_min: true, ..Self::default() }
    }

    pub fn improper(mut self, k: usize) -> Self {
        self.improper = Some(k);
        self
    }

    pub fn degree(mut self, role: NodeRole, bound: DegreeBound) -> Self {
        self.degrees.push((role, bound));
        self
    }

    pub fn lambda(mut self, bound: LambdaBound) -> Self {
        self.lambda = Some(bound);
        self
    }

    pub fn mu(mut self, w: u32) -> Self {
        self.mu = Some(w);
        self
    }

    pub fn proper_on_max_path(mut self, i: usize) -> Self {
        self.proper_on_max_path = Some(i);
        self
    }

    pub fn min_below_max(mut self, below: bool) -> Self {
        self.min_below_max = Some(below);
        self
    }

    pub fn alpha_vs_beta_star(mut self, ord: Ordering) -> Self {
        self.alpha_vs_beta_star = Some(ord);
        self
    }

    pub fn beta_star(mut self, w: u32) -> Self {
        self.beta_star = Some(w);
        self
    }

    pub fn matches(&self, t: &RootedTree) -> bool {
        if self.rooted_at_min && t.root_rank() != 0 {
            return false;
        }
        if let Some(k) = self.improper {
            if t.improper_count() != k {
                return false;
            }
        }
        for &(role, bound) in &self.degrees {
            let r = match role {
                NodeRole::Min => 0,
                NodeRole::Max => t.max_rank(),
                NodeRole::SecondMin => {
                    if t.len() < 2 {
                        return false;
                    }
                    1
                }
                NodeRole::Label(l) => match t.rank(l) {
                    Ok(r) => r,
                    Err(_) => return false,
                },
            };
            if !bound.admits(t.deg(r)) {
                return false;
            }
        }
        if let Some(i) = self.proper_on_max_path {
            if t.proper_on_max_path() != i {
                return false;
            }
        }
        if let Some(below) = self.min_below_max {
            if t.below(0, t.max_rank()) != below {
                return false;
            }
        }
        if let Some(bound) = self.lambda {
            let Ok(l) = t.lower_critical_rank() else { return false };
            let ok = match bound {
                LambdaBound::Equals(label) => t.label_of(l) == label,
                LambdaBound::AboveMin => l > 0,
                LambdaBound::IsMin => l == 0,
            };
            if !ok {
                return false;
            }
        }
        if let Some(w) = self.mu {
            match t.mu_rank() {
                Ok(m) if t.label_of(m) == w => {}
                _ => return false,
            }
        }
        if let Some(w) = self.beta_star {
            match t.beta_star_rank() {
                Ok(b) if t.label_of(b) == w => {}
                _ => return false,
            }
        }
        if let Some(ord) = self.alpha_vs_beta_star {
            match (t.alpha_rank(), t.beta_star_rank()) {
                (Ok(a), Ok(b)) if a.cmp(&b) == ord => {}
                _ => return false,
            }
        }
        true
    }
}
