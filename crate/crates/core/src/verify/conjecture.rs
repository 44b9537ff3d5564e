//! Finite verification of the recurrence for `|R_{n,k}[lambda = i]|`, its
//! special cases and the double-factorial count of `R_{n,n-1}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::golden;
use super::recurrences::lambda_census;
use super::{census, timed, VerificationReport};
use crate::filter::ClassFilter;
use crate::recurrences::f_table;

/// For `3 <= n <= nmax`, `1 <= i <= n-2` and every `k`:
/// `|R_{n,k}[lambda=i]| = (n-2)|R_{n-1,k}[lambda=i]| + (n+k-3)|R_{n-1,k-1}[lambda=i]|`;
/// also `|R_{n,1}[lambda=i]| = (n-2)!`, `|R_{n,k}[lambda=n-1]| = f(n-1,k-1)` and
/// `|R_{n,n-1}| = (2n-3)!!`, and the published lambda tables for `n <= 5`.
pub fn check_conjecture(nmax: usize) -> VerificationReport {
    timed("conjecture", |report| {
        let top = nmax.max(5);
        let lambda: Vec<BTreeMap<(usize, u32), u64>> =
            (0..=top).map(|n| if n == 0 { BTreeMap::new() } else { lambda_census(n) }).collect();
        let by_k: Vec<BTreeMap<usize, u64>> = (0..=top)
            .map(
                |n| if n == 0 { BTreeMap::new() } else { census(n, &ClassFilter::new(), |t| Some(t.improper_count())) },
            )
            .collect();
        let l = |n: usize, k: i64, i: u32| -> i64 {
            if k < 0 {
                return 0;
            }
            lambda[n].get(&(k as usize, i)).copied().unwrap_or(0) as i64
        };

        for &(i, n, k, count) in golden::LAMBDA {
            report.compare("lambda table cell", format!("lambda={i} n={n} k={k}"), count, l(n, k as i64, i));
        }

        for n in 3..=nmax {
            let ni = n as i64;
            for i in 1..=n as u32 - 2 {
                for k in 0..ni {
                    let expected = (ni - 2) * l(n - 1, k, i) + (ni + k - 3) * l(n - 1, k - 1, i);
                    report.compare("lambda recurrence", format!("n={n} k={k} i={i}"), expected, l(n, k, i));
                }
            }
        }

        let f = f_table(nmax);
        let mut factorial: i64 = 1;
        let mut double_factorial: i64 = 1;
        for n in 2..=nmax {
            if n >= 3 {
                factorial *= n as i64 - 2;
                double_factorial *= 2 * n as i64 - 3;
            }
            for i in 1..n as u32 {
                report.compare("s-1: |R_{n,1}[lambda=i]| = (n-2)!", format!("n={n} i={i}"), factorial, l(n, 1, i));
            }
            for k in 1..n {
                let params = format!("n={n} k={k}");
                let actual = l(n, k as i64, n as u32 - 1);
                report.compare("s-2: |R_{n,k}[lambda=n-1]| = f(n-1,k-1)", &params, &f[n - 1][k - 1], actual);
                let enumerated = by_k[n - 1].get(&(k - 1)).copied().unwrap_or(0);
                report.compare("s-2: |R_{n,k}[lambda=n-1]| = |R_{n-1,k-1}|", &params, enumerated, actual);
            }
            let count = by_k[n].get(&(n - 1)).copied().unwrap_or(0);
            report.compare("|R_{n,n-1}| = (2n-3)!!", format!("n={n}"), double_factorial, count);
            report.compare("f(n,n-1) = (2n-3)!!", format!("n={n}"), BigInt::from(double_factorial), &f[n][n - 1]);
        }
    })
}
