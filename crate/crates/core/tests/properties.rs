//! Randomized invariants on trees larger than the exhaustive range.

use std::collections::BTreeMap;

use proptest::prelude::*;
use ramanujan_core::bijection::{
    color_merge, color_split, from_plane, hoist, isolate_min, isolate_min_inv, lift, lower, rooted_fwd, rooted_inv,
    to_plane, unhoist, unrooted_fwd, unrooted_inv, ColoredTree,
};
use ramanujan_core::format::{format_tree, parse_tree};
use ramanujan_core::RootedTree;

/// A tree on `[n]`: labels in random order, each attached to an earlier one.
fn tree(max_n: usize) -> impl Strategy<Value = RootedTree> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let labels: Vec<u32> = (1..=n as u32).collect();
            (Just(labels).prop_shuffle(), prop::collection::vec(any::<prop::sample::Index>(), n))
        })
        .prop_map(|(order, picks)| {
            let mut map = BTreeMap::new();
            for j in 1..order.len() {
                map.insert(order[j], order[picks[j].index(j)]);
            }
            RootedTree::build(order[0], &map).unwrap()
        })
}

/// The same shape rooted at label 1 (the unrooted convention).
fn reroot_at_one(t: &RootedTree) -> RootedTree {
    let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (c, p) in t.parent_map() {
        adj.entry(c).or_default().push(p);
        adj.entry(p).or_default().push(c);
    }
    let mut map = BTreeMap::new();
    let mut stack = vec![1u32];
    let mut seen = vec![1u32];
    while let Some(v) = stack.pop() {
        for &w in adj.get(&v).into_iter().flatten() {
            if !seen.contains(&w) {
                seen.push(w);
                map.insert(w, v);
                stack.push(w);
            }
        }
    }
    RootedTree::build(1, &map).unwrap()
}

/// Relabels so that every node exceeds all its descendants (labels decrease
/// going down in postorder), which makes every edge improper.
fn make_all_improper(t: &RootedTree) -> RootedTree {
    let mut order = Vec::new();
    postorder(t, t.root(), &mut order);
    let rank: BTreeMap<u32, u32> = order.iter().enumerate().map(|(i, &v)| (v, i as u32 + 1)).collect();
    let map = t.parent_map().iter().map(|(c, p)| (rank[c], rank[p])).collect();
    RootedTree::build(rank[&t.root()], &map).unwrap()
}

fn postorder(t: &RootedTree, v: u32, out: &mut Vec<u32>) {
    for c in t.children(v).unwrap() {
        postorder(t, c, out);
    }
    out.push(v);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_format_round_trips(t in tree(14)) {
        prop_assert_eq!(parse_tree(&format_tree(&t)).unwrap(), t);
    }

    #[test]
    fn statistics_survive_order_preserving_relabeling(t in tree(12), gap in 1u32..5) {
        let labels: Vec<u32> = t.labels().iter().map(|l| l * gap + 7).collect();
        let r = t.relabel(&labels).unwrap();
        prop_assert_eq!(r.improper_count(), t.improper_count());
        prop_assert_eq!(r.proper_on_max_path(), t.proper_on_max_path());
        prop_assert_eq!(r.standardize(), t.clone());
    }

    #[test]
    fn rooted_round_trip(t in tree(14)) {
        if t.degree(t.min_label()).unwrap() > 0 {
            let image = rooted_fwd(&t).unwrap();
            prop_assert_eq!(image.improper_count(), t.improper_count() + 1);
            prop_assert!(image.degree(image.max_label()).unwrap() > 0);
            prop_assert_eq!(rooted_inv(&image).unwrap(), t.clone());
        }
        if t.degree(t.max_label()).unwrap() > 0 {
            let pre = rooted_inv(&t).unwrap();
            prop_assert_eq!(pre.improper_count() + 1, t.improper_count());
            prop_assert_eq!(rooted_fwd(&pre).unwrap(), t);
        }
    }

    #[test]
    fn lowering_round_trip(t in tree(14)) {
        if t.proper_on_max_path() >= 1 {
            let low = lower(&t).unwrap();
            prop_assert_eq!(low.proper_on_max_path() + 1, t.proper_on_max_path());
            prop_assert_eq!(low.improper_count(), t.improper_count() + 1);
            prop_assert_eq!(lift(&low).unwrap(), t);
        }
    }

    #[test]
    fn isolate_round_trip(t in tree(14)) {
        if t.degree(t.min_label()).unwrap() == 1 {
            let (out, audit) = isolate_min(&t).unwrap();
            prop_assert_eq!(out.degree(out.min_label()).unwrap(), 0);
            prop_assert_eq!(out.mu().unwrap(), t.beta_star().unwrap());
            prop_assert_eq!(audit.w, t.beta_star().unwrap());
            prop_assert_eq!(isolate_min_inv(&out).unwrap().0, t);
        }
    }

    #[test]
    fn unrooted_round_trip(t in tree(14)) {
        let u = reroot_at_one(&t);
        if u.len() >= 2 && u.degree(2).unwrap() > 0 {
            let image = unrooted_fwd(&u).unwrap();
            prop_assert_eq!(image.root(), 1);
            prop_assert_eq!(image.degree(1).unwrap(), u.degree(1).unwrap());
            prop_assert_eq!(unrooted_inv(&image).unwrap(), u);
        }
    }

    #[test]
    fn coloring_round_trip(t in tree(13), mask in any::<u16>()) {
        let kids = t.children(1).unwrap();
        let black: Vec<u32> = kids.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, &c)| c).collect();
        let colored = ColoredTree::new(t.clone(), black).unwrap();
        let split = color_split(&colored).unwrap();
        prop_assert_eq!(split.improper_count(), t.improper_count());
        prop_assert_eq!(color_merge(&split).unwrap(), colored);
        let hoisted = hoist(&t).unwrap();
        prop_assert_eq!(hoisted.degree(2).unwrap(), 0);
        prop_assert_eq!(unhoist(&hoisted).unwrap(), t);
    }

    #[test]
    fn plane_round_trip(t in tree(14)) {
        // a chain hanging from the maximum down to the minimum is all-improper;
        // splice it onto the random tree's shape to land in the domain often
        let all_improper = make_all_improper(&t);
        let p = to_plane(&all_improper).unwrap();
        prop_assert!(p.is_increasing());
        prop_assert_eq!(p.len(), t.len());
        prop_assert_eq!(from_plane(&p).unwrap(), all_improper);
    }
}
