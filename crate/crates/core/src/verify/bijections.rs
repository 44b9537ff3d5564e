//! Set-level certification of every bijection by exhaustive enumeration:
//! the forward map sends each domain tree into the codomain with the stated
//! statistic changes, distinct trees to distinct trees, and onto the whole
//! codomain; the inverse undoes it from both sides.

use std::collections::HashSet;

use super::{timed, VerificationReport};
use crate::bijection::{
    color_merge, color_split, from_plane, hoist, isolate_min, isolate_min_inv, lift, lower, rooted_fwd, rooted_inv,
    to_plane, transfer, transfer_inv, unhoist, unrooted_fwd, unrooted_inv, BijectionError, ColoredTree,
};
use crate::enumerate::map_partitions;
use crate::filter::ClassFilter;
use crate::format::format_tree;
use crate::plane::{increasing_plane_trees, PlaneTree};
use crate::tree::RootedTree;

type Pred<'a> = &'a (dyn Fn(&RootedTree) -> bool + Sync);
type Map<'a> = &'a (dyn Fn(&RootedTree) -> Result<RootedTree, BijectionError> + Sync);
type Delta<'a> = &'a (dyn Fn(&RootedTree, &RootedTree) -> bool + Sync);

/// A map to certify. Domain and codomain are subsets of the trees on
/// `[n]` admitted by the universe filters; `delta(source, image)` states how
/// the statistics change.
struct MapSpec<'a> {
    name: String,
    domain_n: usize,
    domain_universe: ClassFilter,
    domain: Pred<'a>,
    codomain_n: usize,
    codomain_universe: ClassFilter,
    codomain: Pred<'a>,
    fwd: Map<'a>,
    inv: Map<'a>,
    delta: Delta<'a>,
}

#[derive(Default)]
struct Tally {
    size: u64,
    /// Trees mapped into the other side with the stated deltas.
    landed: u64,
    /// Trees recovered by applying the opposite map afterwards.
    recovered: u64,
    images: Vec<u64>,
    counterexample: Option<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.size += other.size;
        self.landed += other.landed;
        self.recovered += other.recovered;
        self.images.extend(other.images);
        self.counterexample = self.counterexample.or(other.counterexample);
        self
    }

    fn fail(&mut self, what: &str, t: &RootedTree) {
        if self.counterexample.is_none() {
            self.counterexample = Some(format!("{what}: {}", format_tree(t).replace('\n', " / ")));
        }
    }
}

/// Applies `there` to every tree of one side and `back` to its image.
fn sweep(
    n: usize,
    universe: &ClassFilter,
    side: Pred,
    there: Map,
    lands: &(dyn Fn(&RootedTree, &RootedTree) -> bool + Sync),
    back: Map,
    keep_images: bool,
) -> Tally {
    map_partitions(n, universe, |trees| {
        let mut tally = Tally::default();
        for t in trees.filter(|t| side(t)) {
            tally.size += 1;
            let image = match there(&t) {
                Ok(image) => image,
                Err(e) => {
                    tally.fail(&format!("map failed ({e})"), &t);
                    continue;
                }
            };
            if lands(&t, &image) {
                tally.landed += 1;
            } else {
                tally.fail("image outside the target class", &t);
            }
            if keep_images {
                tally.images.push(image.packed_code().expect("at most 15 nodes"));
            }
            match back(&image) {
                Ok(again) if again == t => tally.recovered += 1,
                _ => tally.fail("not recovered by the opposite map", &t),
            }
        }
        tally
    })
    .into_iter()
    .fold(Tally::default(), Tally::merge)
}

fn in_class(t: &RootedTree, n: usize, universe: &ClassFilter, pred: Pred) -> bool {
    t.len() == n && t.is_standard() && universe.matches(t) && pred(t)
}

/// Records the checks for one map; returns the domain and codomain sizes.
fn certify(report: &mut VerificationReport, spec: &MapSpec) -> (u64, u64) {
    let into_codomain = |s: &RootedTree, img: &RootedTree| {
        in_class(img, spec.codomain_n, &spec.codomain_universe, spec.codomain) && (spec.delta)(s, img)
    };
    let into_domain = |s: &RootedTree, pre: &RootedTree| {
        in_class(pre, spec.domain_n, &spec.domain_universe, spec.domain) && (spec.delta)(pre, s)
    };
    let fwd = sweep(spec.domain_n, &spec.domain_universe, spec.domain, spec.fwd, &into_codomain, spec.inv, true);
    let inv = sweep(spec.codomain_n, &spec.codomain_universe, spec.codomain, spec.inv, &into_domain, spec.fwd, false);
    let mut images = fwd.images;
    images.sort_unstable();
    images.dedup();
    let distinct = images.len() as u64;
    let params = format!("n={}", spec.domain_n);
    let name = &spec.name;
    report.compare(format!("{name}: domain lands in codomain with stated deltas"), &params, fwd.size, fwd.landed);
    report.compare(format!("{name}: injective"), &params, fwd.size, distinct);
    report.compare(format!("{name}: image is the whole codomain"), &params, inv.size, distinct);
    report.compare(format!("{name}: inverse after forward is the identity"), &params, fwd.size, fwd.recovered);
    report.compare(format!("{name}: codomain lands in domain under the inverse"), &params, inv.size, inv.landed);
    report.compare(format!("{name}: forward after inverse is the identity"), &params, inv.size, inv.recovered);
    if let Some(c) = fwd.counterexample.or(inv.counterexample) {
        report.compare(format!("{name}: counterexample"), &params, "none", c);
    }
    (fwd.size, inv.size)
}

fn lambda_above_min(t: &RootedTree) -> bool {
    t.lower_critical().is_ok_and(|l| l > t.min_label())
}

fn deg(t: &RootedTree, v: u32) -> usize {
    t.degree(v).expect("label in tree")
}

fn deg_min(t: &RootedTree) -> usize {
    deg(t, t.min_label())
}

fn deg_max(t: &RootedTree) -> usize {
    deg(t, t.max_label())
}

fn min_below_max(t: &RootedTree) -> bool {
    t.is_descendant(t.min_label(), t.max_label()).expect("labels in tree")
}

/// `k` and `i` (proper edges on the maximum-to-root path) move by the given amounts.
fn shifts(s: &RootedTree, img: &RootedTree, dk: i64, di: i64) -> bool {
    img.improper_count() as i64 == s.improper_count() as i64 + dk
        && img.proper_on_max_path() as i64 == s.proper_on_max_path() as i64 + di
}

/// A map between two classes of rooted trees on the same `[n]`.
fn same_size<'a>(
    name: &str,
    n: usize,
    domain: Pred<'a>,
    codomain: Pred<'a>,
    fwd: Map<'a>,
    inv: Map<'a>,
    delta: Delta<'a>,
) -> MapSpec<'a> {
    MapSpec {
        name: name.to_string(),
        domain_n: n,
        domain_universe: ClassFilter::new(),
        domain,
        codomain_n: n,
        codomain_universe: ClassFilter::new(),
        codomain,
        fwd,
        inv,
        delta,
    }
}

fn rooted_specs(report: &mut VerificationReport, n: usize) {
    certify(
        report,
        &same_size(
            "rooted: R_{n,k}[deg(min)>0] -> R_{n,k+1}[deg(max)>0]",
            n,
            &|t| deg_min(t) > 0,
            &|t| deg_max(t) > 0,
            &rooted_fwd,
            &rooted_inv,
            &|s, img| img.improper_count() == s.improper_count() + 1,
        ),
    );
    certify(
        report,
        &same_size(
            "lowering: R^(i)_{n,k}[deg(min)>0], i>=1 -> R^(i-1)_{n,k+1}[deg(max)>0, deg(min)>0 or lambda=min]",
            n,
            &|t| t.proper_on_max_path() >= 1 && deg_min(t) > 0,
            &|t| deg_max(t) > 0 && (deg_min(t) > 0 || t.lower_critical().is_ok_and(|l| l == t.min_label())),
            &lower,
            &lift,
            &|s, img| shifts(s, img, 1, -1),
        ),
    );
    certify(
        report,
        &same_size(
            "lowering restricted: R^(i)_{n,k}[deg(max)=m, deg(min)=0, lambda>min] -> R^(i-1)_{n,k+1}[deg(max)=m+1, deg(min)=0, lambda>min]",
            n,
            &|t| t.proper_on_max_path() >= 1 && deg_min(t) == 0 && lambda_above_min(t),
            &|t| deg_max(t) >= 2 && deg_min(t) == 0 && lambda_above_min(t),
            &lower,
            &lift,
            &|s, img| shifts(s, img, 1, -1) && deg_max(img) == deg_max(s) + 1,
        ),
    );
    certify(
        report,
        &same_size(
            "isolate: R_{n,k}[deg(min)=1] -> R_{n,k+1}[deg(min)=0, min not the root], mu = beta*",
            n,
            &|t| deg_min(t) == 1,
            &|t| deg_min(t) == 0 && t.root() != t.min_label(),
            &|t| isolate_min(t).map(|(o, _)| o),
            &|t| isolate_min_inv(t).map(|(o, _)| o),
            &|s, img| img.improper_count() == s.improper_count() + 1 && img.mu().ok() == s.beta_star().ok(),
        ),
    );

    for m in 1..n {
        let delta = move |s: &RootedTree, img: &RootedTree| shifts(s, img, m as i64, 0);
        let inv = move |t: &RootedTree| transfer_inv(t, m).map(|(o, _)| o);
        let in_domain = move |t: &RootedTree| t.proper_on_max_path() == 0 && deg_min(t) == m;
        let in_codomain = move |t: &RootedTree| {
            t.proper_on_max_path() == 0 && deg_min(t) == 0 && deg_max(t) >= m && lambda_above_min(t)
        };
        let whole = certify(
            report,
            &same_size(
                &format!(
                    "transfer m={m}: R^(0)_{{n,k}}[deg(min)=m] -> R^(0)_{{n,k+m}}[deg(min)=0, deg(max)>=m, lambda>min]"
                ),
                n,
                &in_domain,
                &in_codomain,
                &|t| transfer(t).map(|(o, _)| o),
                &inv,
                &delta,
            ),
        );
        let below = |t: &RootedTree| min_below_max(t);
        let alpha_low = |t: &RootedTree| t.alpha().ok() < t.beta_star().ok();
        type Case = (char, Box<dyn Fn(&RootedTree) -> bool + Sync>, Box<dyn Fn(&RootedTree) -> bool + Sync>);
        let cases: Vec<Case> = vec![
            ('A', Box::new(move |t| !below(t) && alpha_low(t)), Box::new(move |t| deg_max(t) > m && !below(t))),
            ('B', Box::new(move |t| !alpha_low(t)), Box::new(move |t| deg_max(t) == m && !below(t))),
            (
                'C',
                Box::new(move |t| below(t) && deg_max(t) >= 2 && alpha_low(t)),
                Box::new(move |t| deg_max(t) > m && below(t)),
            ),
            ('D', Box::new(move |t| below(t) && deg_max(t) == 1), Box::new(move |t| deg_max(t) == m && below(t))),
        ];
        let mut parts = (0, 0);
        for (letter, source, target) in &cases {
            let fwd = |t: &RootedTree| {
                let (out, tag) = transfer(t)?;
                if tag.letter() == *letter {
                    Ok(out)
                } else {
                    Err(BijectionError::Corrupt { map: "transfer", reason: format!("dispatched to case {tag}") })
                }
            };
            let (d, c) = certify(
                report,
                &same_size(
                    &format!("transfer case {letter} m={m}"),
                    n,
                    &|t| in_domain(t) && source(t),
                    &|t| in_codomain(t) && target(t),
                    &fwd,
                    &inv,
                    &delta,
                ),
            );
            parts = (parts.0 + d, parts.1 + c);
        }
        // the four cases split both sides with nothing left over
        let params = format!("n={n}");
        report.compare(format!("transfer m={m}: case domains partition the domain"), &params, whole.0, parts.0);
        report.compare(format!("transfer m={m}: case codomains partition the codomain"), &params, whole.1, parts.1);
    }
}

fn unrooted_spec(report: &mut VerificationReport, n: usize) {
    certify(
        report,
        &MapSpec {
            name: "unrooted: T_{n,k}[deg(2)>0] -> T_{n,k+1}[deg(n)>0], deg(1) preserved".to_string(),
            domain_n: n,
            domain_universe: ClassFilter::unrooted(),
            domain: &|t| deg(t, 2) > 0,
            codomain_n: n,
            codomain_universe: ClassFilter::unrooted(),
            codomain: &|t| deg_max(t) > 0,
            fwd: &unrooted_fwd,
            inv: &unrooted_inv,
            delta: &|s, img| img.improper_count() == s.improper_count() + 1 && deg(img, 1) == deg(s, 1),
        },
    );
}

fn hoist_spec(report: &mut VerificationReport, n: usize) {
    certify(
        report,
        &MapSpec {
            name: "hoist: R_{n,k}[deg(1)=r] -> T_{n+1,k}[deg(1)=r+1, deg(2)=0]".to_string(),
            domain_n: n,
            domain_universe: ClassFilter::new(),
            domain: &|_| true,
            codomain_n: n + 1,
            codomain_universe: ClassFilter::unrooted(),
            codomain: &|t| deg(t, 2) == 0,
            fwd: &hoist,
            inv: &unhoist,
            delta: &|s, img| img.improper_count() == s.improper_count() && deg(img, 1) == deg(s, 1) + 1,
        },
    );
}

/// All subsets of `items`.
fn subsets(items: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    (0u32..1 << items.len())
        .map(move |mask| items.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, &c)| c).collect())
}

/// Coloring: pairs (tree on `[n]`, set of black children of 1) correspond to
/// the `(n+1)^(n-1)` trees on `[n+1]` with the same number of improper edges.
fn color_spec(report: &mut VerificationReport, n: usize) {
    let name = "color: colored R_{n,k} -> T_{n+1,k}";
    let params = format!("n={n}");
    let parts = map_partitions(n, &ClassFilter::new(), |trees| {
        let (mut pairs, mut landed, mut recovered, mut images) = (0u64, 0u64, 0u64, Vec::new());
        for t in trees {
            let kids = t.children(t.min_label()).expect("label in tree");
            for black in subsets(&kids) {
                pairs += 1;
                let colored = ColoredTree::new(t.clone(), black).expect("children of the minimum");
                let Ok(image) = color_split(&colored) else { continue };
                if in_class(&image, n + 1, &ClassFilter::unrooted(), &|_| true)
                    && image.improper_count() == t.improper_count()
                {
                    landed += 1;
                }
                if color_merge(&image).is_ok_and(|c| c == colored) {
                    recovered += 1;
                }
                images.push(image.packed_code().expect("at most 15 nodes"));
            }
        }
        (pairs, landed, recovered, images)
    });
    let (mut pairs, mut landed, mut recovered, mut images) = (0, 0, 0, Vec::new());
    for (p, l, r, i) in parts {
        pairs += p;
        landed += l;
        recovered += r;
        images.extend(i);
    }
    images.sort_unstable();
    images.dedup();
    let back = map_partitions(n + 1, &ClassFilter::unrooted(), |trees| {
        let (mut size, mut ok) = (0u64, 0u64);
        for t in trees {
            size += 1;
            if color_merge(&t).and_then(|c| color_split(&c)).is_ok_and(|again| again == t) {
                ok += 1;
            }
        }
        (size, ok)
    })
    .into_iter()
    .fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    report.compare(format!("{name}: domain lands in codomain with k preserved"), &params, pairs, landed);
    report.compare(format!("{name}: injective"), &params, pairs, images.len());
    report.compare(format!("{name}: image is the whole codomain"), &params, back.0, images.len());
    report.compare(
        format!("{name}: codomain has (n+1)^(n-1) trees"),
        &params,
        (n as u64 + 1).pow(n as u32 - 1),
        back.0,
    );
    report.compare(format!("{name}: inverse after forward is the identity"), &params, pairs, recovered);
    report.compare(format!("{name}: forward after inverse is the identity"), &params, back.0, back.1);
}

/// All-improper trees on `[n]` against increasing plane trees on `[n]`.
pub fn check_plane(nmax: usize) -> VerificationReport {
    timed("plane", |report| {
        for n in 1..=nmax {
            plane_spec(report, n);
        }
    })
}

fn plane_spec(report: &mut VerificationReport, n: usize) {
    let name = "plane: R_{n,n-1} -> increasing plane trees on [n]";
    let params = format!("n={n}");
    let parts = map_partitions(n, &ClassFilter::new().improper(n - 1), |trees| {
        let (mut size, mut landed, mut recovered, mut images) = (0u64, 0u64, 0u64, Vec::new());
        for t in trees {
            size += 1;
            let Ok(p) = to_plane(&t) else { continue };
            if p.len() == n && p.is_increasing() && p.has_distinct_labels() {
                landed += 1;
            }
            if from_plane(&p).is_ok_and(|again| again == t) {
                recovered += 1;
            }
            images.push(p);
        }
        (size, landed, recovered, images)
    });
    let (mut size, mut landed, mut recovered, mut images) = (0, 0, 0, Vec::new());
    for (s, l, r, i) in parts {
        size += s;
        landed += l;
        recovered += r;
        images.extend(i);
    }
    let image_set: HashSet<PlaneTree> = images.into_iter().collect();
    let targets = increasing_plane_trees(n);
    let target_set: HashSet<&PlaneTree> = targets.iter().collect();
    let back = targets
        .iter()
        .filter(|p| from_plane(p).is_ok_and(|t| t.improper_count() + 1 == n && to_plane(&t).is_ok_and(|q| &q == *p)))
        .count();
    let double_factorial: u64 = (1..n.max(2) as u64).map(|j| 2 * j - 1).product();
    report.compare(format!("{name}: domain has (2n-3)!! trees"), &params, double_factorial, size);
    report.compare(format!("{name}: domain lands in codomain"), &params, size, landed);
    report.compare(format!("{name}: injective"), &params, size, image_set.len());
    report.compare(
        format!("{name}: image is the whole codomain"),
        &params,
        target_set.len(),
        image_set.iter().filter(|p| target_set.contains(p)).count(),
    );
    report.compare(format!("{name}: inverse after forward is the identity"), &params, size, recovered);
    report.compare(format!("{name}: forward after inverse is the identity"), &params, targets.len(), back);
}

/// Certifies every bijection on trees with up to `nmax` nodes.
pub fn check_bijections(nmax: usize) -> VerificationReport {
    timed("bijections", |report| {
        for n in 1..=nmax {
            rooted_specs(report, n);
            if n >= 2 {
                unrooted_spec(report, n);
            }
            if n < nmax {
                hoist_spec(report, n);
                color_spec(report, n);
            }
            plane_spec(report, n);
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_certification() {
        let r = check_bijections(5);
        assert!(r.all_pass(), "{}", r.failures().map(|f| f.to_string()).collect::<Vec<_>>().join("\n"));
    }

    #[test]
    fn plane_counts() {
        let r = check_plane(6);
        assert!(r.all_pass(), "{r}");
        let c = r.results.iter().find(|c| c.params == "n=6" && c.check.ends_with("injective")).unwrap();
        assert_eq!(c.actual, "945");
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let all: Vec<Vec<u32>> = subsets(&[2, 5]).collect();
        assert_eq!(all, vec![vec![], vec![2], vec![5], vec![2, 5]]);
    }
}
