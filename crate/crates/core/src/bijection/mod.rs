//! Forward and inverse forms of every tree bijection, working on arbitrary
//! label sets through the roles "minimum label" and "maximum label".

mod color;
mod isolate;
mod lowering;
mod plane;
mod rooted;
mod transfer;
mod unrooted;

use thiserror::Error;

use crate::tree::TreeError;

pub use color::{color_merge, color_split, hoist, unhoist, ColoredTree};
pub use isolate::{isolate_min, isolate_min_inv, IsolateAudit};
pub use lowering::{lift, lower};
pub use plane::{from_plane, to_plane};
pub use rooted::{rooted_fwd, rooted_fwd_audited, rooted_inv, rooted_inv_audited, RootedAudit};
pub use transfer::{transfer, transfer_inv, CaseTag};
pub use unrooted::{unrooted_fwd, unrooted_inv};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("{map}: input is outside the domain: {reason}")]
    OutsideDomain { map: &'static str, reason: String },
    #[error("{map}: input is not in the image of the forward map: {reason}")]
    Corrupt { map: &'static str, reason: String },
}

pub(crate) fn outside(map: &'static str, reason: impl Into<String>) -> BijectionError {
    BijectionError::OutsideDomain { map, reason: reason.into() }
}

pub(crate) fn corrupt(map: &'static str, reason: impl Into<String>) -> BijectionError {
    BijectionError::Corrupt { map, reason: reason.into() }
}
