//! Table reproduction, recurrence cross-validation and the generating-function suite.

use num_bigint::BigInt;

use super::golden;
use super::{census, timed, VerificationReport};
use crate::filter::ClassFilter;
use crate::poly::IntPoly;
use crate::recurrences::{check_sums, f_table, PsiMethod, QMethod};
use crate::series::{verify_genfun, verify_genfun_with};

/// Histogram `(k, lambda) -> count` over `R_n` (trees whose maximum is a leaf have no lambda).
pub(crate) fn lambda_census(n: usize) -> std::collections::BTreeMap<(usize, u32), u64> {
    census(n, &ClassFilter::new(), |t| t.lower_critical().ok().map(|l| (t.improper_count(), l)))
}

/// Regenerates every cell of the psi, Q and lambda tables and compares it with
/// the transcribed values, including the column sums `x^r` and `(x+n)^(n-1)`.
pub fn reproduce_tables() -> VerificationReport {
    timed("tables", |report| {
        let psi = PsiMethod::Bew.table(golden::PSI_RMAX);
        for &(r, k, coeffs) in golden::PSI {
            report.compare("psi cell", format!("r={r} k={k}"), IntPoly::from_i64s(coeffs), psi.get(r as i64, k));
        }
        for r in 0..=golden::PSI_RMAX {
            let sum = (1..=r as i64 + 1).fold(IntPoly::zero(), |acc, k| &acc + &psi.get(r as i64, k));
            report.compare("psi column sum", format!("r={r}"), IntPoly::monomial(1, r), sum);
        }
        let q = QMethod::Shor.table(golden::Q_NMAX);
        for &(n, k, coeffs) in golden::Q {
            report.compare("Q cell", format!("n={n} k={k}"), IntPoly::from_i64s(coeffs), q.get(n as i64, k));
        }
        for n in 1..=golden::Q_NMAX {
            let sum = (0..n as i64).fold(IntPoly::zero(), |acc, k| &acc + &q.get(n as i64, k));
            report.compare("Q column sum", format!("n={n}"), IntPoly::linear(n as i64).pow(n as u32 - 1), sum);
        }
        let lambda: Vec<_> = (0..=5).map(lambda_census).collect();
        for &(i, n, k, count) in golden::LAMBDA {
            let actual = lambda[n].get(&(k, i)).copied().unwrap_or(0);
            report.compare("lambda table cell", format!("lambda={i} n={n} k={k}"), count, actual);
        }
    })
}

/// Cross-validates both psi recurrences for `r <= nmax` and all five Q
/// constructions for `n <= nmax`, plus the closed-form sums and `Q_{n,k}(0) = f(n,k)`.
pub fn check_recurrences(nmax: usize) -> VerificationReport {
    timed("recurrences", |report| {
        let bew = PsiMethod::Bew.table(nmax);
        let ram = PsiMethod::Ramanujan.table(nmax);
        for r in 0..=nmax as i64 {
            for k in 1..=r + 1 {
                report.compare("psi bew = ramanujan", format!("r={r} k={k}"), bew.get(r, k), ram.get(r, k));
            }
        }
        let tables: Vec<_> = QMethod::ALL.iter().map(|m| (m, m.table(nmax))).collect();
        let (_, reference) = &tables[0];
        for n in 1..=nmax as i64 {
            for k in 0..n {
                for (method, table) in &tables[1..] {
                    report.compare(
                        format!("Q shor = {method}"),
                        format!("n={n} k={k}"),
                        reference.get(n, k),
                        table.get(n, k),
                    );
                }
            }
        }
        for s in check_sums(nmax) {
            report.record(format!("{} sum", s.family), format!("index={}", s.index), s.expected, s.actual, s.pass);
        }
        let f = f_table(nmax);
        for n in 1..=nmax {
            for k in 0..n {
                let q0 = reference.get(n as i64, k as i64).eval(&BigInt::from(0));
                report.compare("Q(0) = f", format!("n={n} k={k}"), &f[n][k], q0);
            }
        }
    })
}

/// The generating function at `r <= rmax`, `x` in `-2..=5`, order 10, plus
/// the negative control with `psi_2(1, x)` replaced by `2`, which must fail.
pub fn check_genfun(rmax: usize) -> VerificationReport {
    const ORDER: usize = 10;
    timed("genfun", |report| {
        for r in 0..=rmax {
            for x in -2..=5 {
                let c = verify_genfun(r, x, ORDER);
                let actual = match c.mismatch {
                    None => "equal".to_string(),
                    Some(j) => format!("differ at u^{j}"),
                };
                report.compare("generating function", format!("r={r} x={x} M={ORDER}"), "equal", actual);
            }
        }
        let bad = [IntPoly::from_i64s(&[-1, 1]), IntPoly::constant(2)];
        let control = verify_genfun_with(1, 3, ORDER, &bad);
        let actual = if control.pass() { "accepted" } else { "rejected" };
        report.compare("negative control psi_2(1,x) := 2", format!("r=1 x=3 M={ORDER}"), "rejected", actual);
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_reproduce() {
        let r = reproduce_tables();
        assert!(r.all_pass(), "{r}");
        assert_eq!(r.checks(), 15 + 5 + 15 + 5 + 30);
    }

    #[test]
    fn small_recurrences() {
        let r = check_recurrences(6);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn genfun_suite() {
        let r = check_genfun(2);
        assert!(r.all_pass(), "{r}");
    }
}
