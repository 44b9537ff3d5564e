//! Exact Ramanujan/Shor polynomials, improper-edge statistics on labeled
//! trees, the constructive bijections between refined tree classes, and an
//! exhaustive-enumeration oracle that certifies them.

#![allow(clippy::needless_range_loop)]

pub mod bijection;
pub mod enumerate;
pub mod filter;
pub mod format;
pub mod plane;
pub mod poly;
pub mod recurrences;
pub mod series;
pub mod tree;
pub mod verify;

pub use enumerate::{count_trees, enumerate_rooted, enumerate_unrooted, RootedTrees};
pub use filter::{ClassFilter, DegreeBound, LambdaBound, NodeRole};
pub use plane::PlaneTree;
pub use poly::IntPoly;
pub use series::RatSeries;
pub use tree::{RootedTree, TreeError};
