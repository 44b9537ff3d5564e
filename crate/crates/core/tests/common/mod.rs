//! Golden figure data shared by the figure tests and the acceptance target.

use std::collections::BTreeSet;

use ramanujan_core::bijection::{
    from_plane, isolate_min, isolate_min_inv, lift, lower, rooted_fwd, rooted_inv, to_plane,
};
use ramanujan_core::format::parse_trees;
use ramanujan_core::{enumerate_rooted, ClassFilter, DegreeBound, NodeRole, PlaneTree, RootedTree};

pub const MIN_HAS_CHILD_4_1: &str = include_str!("../data/rooted_4_nodes_1_improper_min_has_child.txt");
pub const MAX_HAS_CHILD_4_2: &str = include_str!("../data/rooted_4_nodes_2_improper_max_has_child.txt");
pub const LOWERING_PAIR: &str = include_str!("../data/lowering_pair_9_nodes.txt");
pub const ALL_IMPROPER_9: &str = include_str!("../data/all_improper_9_nodes.txt");
pub const PLANE_9: &str = include_str!("../data/increasing_plane_9_nodes.txt");
pub const ISOLATE_PAIR: &str = include_str!("../data/isolate_pair_20_nodes.txt");

pub fn trees(text: &str) -> Vec<RootedTree> {
    parse_trees(text).expect("well-formed data file")
}

fn as_set(ts: impl IntoIterator<Item = RootedTree>) -> BTreeSet<Vec<u32>> {
    ts.into_iter().map(|t| t.parent_labels()).collect()
}

/// Each golden check with a short description and its outcome.
pub fn figure_checks() -> Vec<(&'static str, bool)> {
    let mut out = Vec::new();

    let listed_min = trees(MIN_HAS_CHILD_4_1);
    let listed_max = trees(MAX_HAS_CHILD_4_2);
    let min_filter = ClassFilter::new().improper(1).degree(NodeRole::Min, DegreeBound::positive());
    let max_filter = ClassFilter::new().improper(2).degree(NodeRole::Max, DegreeBound::positive());
    let enumerated_min: Vec<RootedTree> = enumerate_rooted(4, &min_filter).collect();
    let enumerated_max: Vec<RootedTree> = enumerate_rooted(4, &max_filter).collect();
    out.push((
        "16 listed trees in R_{4,1}[deg(1)>0]",
        listed_min.len() == 16 && as_set(listed_min.clone()).len() == 16,
    ));
    out.push((
        "R_{4,1}[deg(1)>0] enumeration equals the listed set",
        as_set(enumerated_min) == as_set(listed_min.clone()),
    ));
    out.push((
        "16 listed trees in R_{4,2}[deg(4)>0]",
        listed_max.len() == 16 && as_set(listed_max.clone()).len() == 16,
    ));
    out.push((
        "R_{4,2}[deg(4)>0] enumeration equals the listed set",
        as_set(enumerated_max) == as_set(listed_max.clone()),
    ));
    let images: Result<Vec<_>, _> = listed_min.iter().map(rooted_fwd).collect();
    out.push((
        "rooted_fwd maps the first set onto the second",
        images.is_ok_and(|i| as_set(i) == as_set(listed_max.clone())),
    ));
    let preimages: Result<Vec<_>, _> = listed_max.iter().map(rooted_inv).collect();
    out.push((
        "rooted_inv maps the second set onto the first",
        preimages.is_ok_and(|i| as_set(i) == as_set(listed_min)),
    ));

    let pair = trees(LOWERING_PAIR);
    out.push(("lowering pair: lower(left) = right", lower(&pair[0]).is_ok_and(|t| t == pair[1])));
    out.push(("lowering pair: lift(right) = left", lift(&pair[1]).is_ok_and(|t| t == pair[0])));

    let tree = &trees(ALL_IMPROPER_9)[0];
    let plane: PlaneTree = PLANE_9.trim().parse().expect("well-formed plane tree");
    out.push(("plane pair: to_plane(tree) = plane tree", to_plane(tree).is_ok_and(|p| p == plane)));
    out.push(("plane pair: from_plane(plane tree) = tree", from_plane(&plane).is_ok_and(|t| &t == tree)));

    let iso = trees(ISOLATE_PAIR);
    out.push(("isolate pair: forward", isolate_min(&iso[0]).is_ok_and(|(t, _)| t == iso[1])));
    out.push(("isolate pair: inverse", isolate_min_inv(&iso[1]).is_ok_and(|(t, _)| t == iso[0])));
    out
}
