//! Counting and polynomial identities checked against exhaustive enumeration.
//!
//! `T_m` denotes the trees on `[m]` rooted at `1` (the unrooted convention) and
//! `R_m` all rooted trees on `[m]`; `k` is always the number of improper edges.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{census, timed, VerificationReport};
use crate::filter::ClassFilter;
use crate::poly::IntPoly;
use crate::recurrences::{f_table, q_table_shor, PolyTable};
use crate::tree::RootedTree;

/// Degrees of label 1, label 2 and the maximum label (0 when the label is absent).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Degrees {
    one: usize,
    two: usize,
    max: usize,
}

fn degrees(t: &RootedTree) -> Degrees {
    let deg = |v: u32| t.degree(v).unwrap_or(0);
    Degrees { one: deg(1), two: if t.len() >= 2 { deg(2) } else { 0 }, max: deg(t.max_label()) }
}

/// Histograms `(k, degrees) -> count` for `R_m` and `T_m`, indexed by `m`.
struct Censuses {
    rooted: Vec<BTreeMap<(usize, Degrees), u64>>,
    unrooted: Vec<BTreeMap<(usize, Degrees), u64>>,
}

impl Censuses {
    fn build(rooted_max: usize, unrooted_max: usize) -> Self {
        let key = |t: &RootedTree| Some((t.improper_count(), degrees(t)));
        let build = |max: usize, filter: ClassFilter| -> Vec<_> {
            (0..=max).map(|m| if m == 0 { BTreeMap::new() } else { census(m, &filter, key) }).collect()
        };
        Censuses {
            rooted: build(rooted_max, ClassFilter::new()),
            unrooted: build(unrooted_max, ClassFilter::unrooted()),
        }
    }

    fn sum<F: Fn(Degrees) -> bool>(h: &BTreeMap<(usize, Degrees), u64>, k: i64, pred: F) -> i64 {
        h.iter().filter(|((kk, d), _)| *kk as i64 == k && pred(*d)).map(|(_, c)| *c as i64).sum()
    }

    /// `|T_{m,k}[pred]|`.
    fn t(&self, m: usize, k: i64, pred: impl Fn(Degrees) -> bool) -> i64 {
        Self::sum(&self.unrooted[m], k, pred)
    }

    /// `|R_{m,k}[pred]|`.
    fn r(&self, m: usize, k: i64, pred: impl Fn(Degrees) -> bool) -> i64 {
        Self::sum(&self.rooted[m], k, pred)
    }

    /// `sum over T_{m,k}[pred] of x^(deg(1) - 1)`.
    fn t_poly(&self, m: usize, k: i64, pred: impl Fn(Degrees) -> bool) -> IntPoly {
        self.unrooted[m]
            .iter()
            .filter(|((kk, d), _)| *kk as i64 == k && pred(*d))
            .fold(IntPoly::zero(), |acc, ((_, d), c)| &acc + &IntPoly::monomial(*c, d.one - 1))
    }

    /// `sum over R_{m,k} of (x+1)^deg(1)`.
    fn r_poly(&self, m: usize, k: i64) -> IntPoly {
        self.rooted[m].iter().filter(|((kk, _), _)| *kk as i64 == k).fold(IntPoly::zero(), |acc, ((_, d), c)| {
            &acc + &IntPoly::linear(1).pow(d.one as u32).scale(&BigInt::from(*c))
        })
    }
}

fn any(_: Degrees) -> bool {
    true
}

/// Tree counts against `f(n, k)` and Cayley's formula for `n <= f_max`, and
/// both tree interpretations of `Q_{n,k}` (and their equivalence) for `n <= zeng_max`.
fn interpretations(report: &mut VerificationReport, c: &Censuses, q: &PolyTable, f_max: usize, zeng_max: usize) {
    let f = f_table(f_max);
    for n in 1..=f_max {
        let mut total = 0i64;
        for k in 0..n {
            let count = c.r(n, k as i64, any);
            total += count;
            report.compare("f(n,k) = |R_{n,k}|", format!("n={n} k={k}"), &f[n][k], count);
        }
        report.compare("|R_n| = n^(n-1)", format!("n={n}"), (n as i64).pow(n as u32 - 1), total);
    }
    for n in 1..=zeng_max {
        for k in 0..n as i64 {
            let params = format!("n={n} k={k}");
            let qnk = q.get(n as i64, k);
            let unrooted = c.t_poly(n + 1, k, any);
            let rooted = c.r_poly(n, k);
            report.compare("zeng-1: Q_{n,k} = sum over T_{n+1,k} of x^(deg1-1)", &params, &qnk, &unrooted);
            report.compare("zeng-2: Q_{n,k} = sum over R_{n,k} of (x+1)^deg1", &params, &qnk, &rooted);
            report.compare("equiv-12: both tree sums agree", &params, unrooted, rooted);
        }
    }
}

/// `f(n,k)` counts for `n <= nmax` and the two tree interpretations of `Q_{n,k}` for `n < nmax`.
pub fn check_interpretations(nmax: usize) -> VerificationReport {
    timed("interpretations", |report| {
        let c = Censuses::build(nmax, nmax);
        let q = q_table_shor(nmax);
        interpretations(report, &c, &q, nmax, nmax.saturating_sub(1));
    })
}

/// Every tree-counting identity around the Shor recurrence for `1 <= n <= nmax`
/// (trees on up to `nmax + 1` nodes), including the interpretations of `Q_{n,k}`.
pub fn check_identities(nmax: usize) -> VerificationReport {
    timed("identities", |report| {
        let c = Censuses::build(nmax, nmax + 1);
        let q = q_table_shor(nmax);
        interpretations(report, &c, &q, nmax, nmax);
        let x = IntPoly::x();
        for n in 1..=nmax {
            let ni = n as i64;
            for k in 0..ni {
                let params = format!("n={n} k={k}");
                let qs = |a: i64, b: i64| q.get(a, b);
                report.compare(
                    "cor: Q_{n,k}(x-1) = sum over T_{n+1,k}[deg2=0]",
                    &params,
                    qs(ni, k).shift(-1),
                    c.t_poly(n + 1, k, |d| d.two == 0),
                );
                if n >= 2 {
                    report.compare(
                        "q-1: (x+n-1)Q_{n-1,k} = sum over T_{n+1,k}[deg(n+1)=0]",
                        &params,
                        &IntPoly::linear(ni - 1) * &qs(ni - 1, k),
                        c.t_poly(n + 1, k, |d| d.max == 0),
                    );
                    let shifted = qs(ni, k).shift(-1);
                    let rhs =
                        &(&(&x - &IntPoly::constant(k)) * &qs(ni - 1, k)) + &qs(ni - 1, k - 1).scale_i64(ni + k - 2);
                    report.compare("q-4: Q_{n,k}(x-1) = (x-k)Q_{n-1,k} + (n+k-2)Q_{n-1,k-1}", &params, shifted, rhs);
                }
                report.compare(
                    "q-2: (n+k-2)Q_{n-1,k-1} = sum over T_{n+1,k}[deg(n+1)>0]",
                    &params,
                    qs(ni - 1, k - 1).scale_i64(ni + k - 2),
                    c.t_poly(n + 1, k, |d| d.max > 0),
                );
                report.compare(
                    "q-3: (n+k-1)Q_{n-1,k} = sum over T_{n+1,k+1}[deg(n+1)>0]",
                    &params,
                    qs(ni - 1, k).scale_i64(ni + k - 1),
                    c.t_poly(n + 1, k + 1, |d| d.max > 0),
                );
                report.compare(
                    "main-comb: T_{n+1,k}[deg2>0] and T_{n+1,k+1}[deg(n+1)>0] have equal x^(deg1-1) sums",
                    &params,
                    c.t_poly(n + 1, k, |d| d.two > 0),
                    c.t_poly(n + 1, k + 1, |d| d.max > 0),
                );
                report.compare(
                    "rnkk: R_{n,k}[deg1>0] = (n+k-1)R_{n-1,k}",
                    &params,
                    (ni + k - 1) * c.r(n - 1, k, any),
                    c.r(n, k, |d| d.one > 0),
                );
                for r in 0..=n {
                    let params = format!("n={n} k={k} r={r}");
                    report.compare(
                        "tnk-r: T_{n+1,k}[deg2>0,deg1=r] = T_{n+1,k+1}[deg(n+1)>0,deg1=r]",
                        &params,
                        c.t(n + 1, k, |d| d.two > 0 && d.one == r),
                        c.t(n + 1, k + 1, |d| d.max > 0 && d.one == r),
                    );
                    report.compare(
                        "deg-2-0: T_{n+1,k}[deg2>0,deg1=r] = (n+k-1)T_{n,k}[deg1=r]",
                        &params,
                        (ni + k - 1) * c.t(n, k, |d| d.one == r),
                        c.t(n + 1, k, |d| d.two > 0 && d.one == r),
                    );
                }
                if n >= 2 {
                    auxiliary(report, &c, n, k);
                }
            }
        }
    })
}

/// The three auxiliary recurrences behind the inductive proofs, in their
/// unrooted (refined by `deg(1) = r`) and rooted forms, for `n >= 2`.
fn auxiliary(report: &mut VerificationReport, c: &Censuses, n: usize, k: i64) {
    let ni = n as i64;
    for r in 0..=n {
        let params = format!("n={n} k={k} r={r}");
        let t = |m: usize, kk: i64, two_pos: bool, rr: usize| {
            if rr > n {
                return 0;
            }
            c.t(m, kk, |d| d.one == rr && (!two_pos || d.two > 0))
        };
        let below = |rr: usize| r.checked_sub(rr);
        report.compare(
            "aux-i: T_{n+1,k+1}[deg(n+1)>0,deg1=r] = (n+k-1)T_{n,k}[deg1=r]",
            &params,
            (ni + k - 1) * t(n, k, false, r),
            c.t(n + 1, k + 1, |d| d.max > 0 && d.one == r),
        );
        let one_less = |two_pos| below(1).map_or(0, |rr| t(n, k, two_pos, rr));
        report.compare(
            "aux-ii: T_{n+1,k}[deg2>0,deg1=r] recurrence",
            &params,
            (ni - 2) * t(n, k, true, r) + one_less(true) + t(n, k, false, r) + (ni + k - 2) * t(n, k - 1, true, r),
            t(n + 1, k, true, r),
        );
        report.compare(
            "aux-iii: T_{n+1,k}[deg1=r] recurrence",
            &params,
            (ni - 1) * t(n, k, false, r) + one_less(false) + (ni + k - 2) * t(n, k - 1, false, r),
            t(n + 1, k, false, r),
        );
    }
    let params = format!("n={n} k={k}");
    let r = |m: usize, kk: i64, one_pos: bool| c.r(m, kk, |d| !one_pos || d.one > 0);
    report.compare(
        "aux-rooted-i: R_{n,k+1}[deg(n)>0] = (n+k-1)R_{n-1,k}",
        &params,
        (ni + k - 1) * r(n - 1, k, false),
        c.r(n, k + 1, |d| d.max > 0),
    );
    report.compare(
        "aux-rooted-ii: R_{n,k}[deg1>0] recurrence",
        &params,
        (ni - 2) * r(n - 1, k, true) + r(n - 1, k, false) + (ni + k - 2) * r(n - 1, k - 1, true),
        r(n, k, true),
    );
    report.compare(
        "aux-rooted-iii: R_{n,k} = (n-1)R_{n-1,k} + (n+k-2)R_{n-1,k-1}",
        &params,
        (ni - 1) * r(n - 1, k, false) + (ni + k - 2) * r(n - 1, k - 1, false),
        r(n, k, false),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpretations_small() {
        let r = check_interpretations(5);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn identities_small() {
        let r = check_identities(4);
        assert!(r.all_pass(), "{}", r.failures().map(|f| f.to_string()).collect::<Vec<_>>().join("\n"));
    }

    #[test]
    fn zeng_one_example() {
        let c = Censuses::build(3, 4);
        assert_eq!(c.t_poly(4, 1, any), IntPoly::from_i64s(&[4, 3]));
    }
}
