//! Exhaustive-enumeration oracle: table reproduction, recurrence and
//! counting identities, bijection certification and the lower-critical-node
//! recurrence checker. Every suite is exact and deterministic.

mod bijections;
mod conjecture;
mod golden;
mod identities;
mod recurrences;
mod report;

use std::collections::BTreeMap;
use std::time::Instant;

pub use bijections::{check_bijections, check_plane};
pub use conjecture::check_conjecture;
pub use identities::{check_identities, check_interpretations};
pub use recurrences::{check_genfun, check_recurrences, reproduce_tables};
pub use report::{CheckResult, VerificationReport};

use crate::enumerate::{count_trees, map_partitions};
use crate::filter::ClassFilter;
use crate::tree::RootedTree;

/// Exact size of a filtered class of trees on `[n]` (the filter decides
/// between the rooted and the unrooted convention).
pub fn count_class(n: usize, filter: &ClassFilter) -> u64 {
    count_trees(n, filter)
}

/// Histogram of `key` over the trees on `[n]` passing `filter`; trees for
/// which `key` returns `None` are skipped. Partitions run in parallel.
pub(crate) fn census<K, F>(n: usize, filter: &ClassFilter, key: F) -> BTreeMap<K, u64>
where
    K: Ord + Send,
    F: Fn(&RootedTree) -> Option<K> + Sync,
{
    let parts = map_partitions(n, filter, |trees| {
        let mut h = BTreeMap::new();
        for t in trees {
            if let Some(k) = key(&t) {
                *h.entry(k).or_insert(0u64) += 1;
            }
        }
        h
    });
    let mut total = BTreeMap::new();
    for part in parts {
        for (k, c) in part {
            *total.entry(k).or_insert(0) += c;
        }
    }
    total
}

/// Runs `body` on a fresh report for `suite` and stamps the wall time.
pub(crate) fn timed(suite: &str, body: impl FnOnce(&mut VerificationReport)) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(suite);
    body(&mut report);
    report.elapsed = start.elapsed();
    report
}

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 6] = ["tables", "recurrences", "identities", "bijections", "conjecture", "genfun"];

/// Dispatches a suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, nmax: usize) -> Option<VerificationReport> {
    Some(match name {
        "tables" => reproduce_tables(),
        "recurrences" => check_recurrences(nmax),
        "identities" => check_identities(nmax),
        "bijections" => check_bijections(nmax),
        "conjecture" => check_conjecture(nmax),
        "genfun" => check_genfun(nmax),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filter::{DegreeBound, LambdaBound, NodeRole};

    #[test]
    fn class_counts() {
        let f = ClassFilter::new().improper(2).lambda(LambdaBound::Equals(1));
        assert_eq!(count_class(5, &f), 29);
        let f = ClassFilter::new().improper(3).lambda(LambdaBound::Equals(3));
        assert_eq!(count_class(4, &f), 3);
        let f = ClassFilter::new().improper(1).degree(NodeRole::Min, DegreeBound::positive());
        assert_eq!(count_class(4, &f), 16);
    }

    #[test]
    fn census_totals() {
        let h = census(4, &ClassFilter::new(), |t| Some(t.improper_count()));
        assert_eq!(h.values().sum::<u64>(), 64);
        assert_eq!(h[&3], 15);
    }
}
