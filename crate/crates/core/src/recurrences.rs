//! The polynomial families `psi_k(r, x)` and `Q_{n,k}(x)` and the numbers
//! `f(n, k)`, each computed by several independent recurrences so that they
//! can be cross-checked against one another.
//!
//! Out-of-range indices give zero: `psi_k(r, x) = 0` unless `1 <= k <= r + 1`,
//! and `Q_{n,k}(x) = f(n, k) = 0` unless `n >= 1` and `0 <= k <= n - 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::poly::IntPoly;

/// Rows of a triangular table, indexed `[row][col]`; missing cells read as zero.
#[derive(Clone, Debug, Default)]
pub struct PolyTable {
    rows: Vec<Vec<IntPoly>>,
}

impl PolyTable {
    pub fn get(&self, row: i64, col: i64) -> IntPoly {
        if row < 0 || col < 0 {
            return IntPoly::zero();
        }
        self.rows.get(row as usize).and_then(|r| r.get(col as usize)).cloned().unwrap_or_default()
    }

    fn cell(&self, row: i64, col: i64) -> Option<&IntPoly> {
        if row < 0 || col < 0 {
            return None;
        }
        self.rows.get(row as usize)?.get(col as usize)
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }
}

fn lin(c: i64) -> IntPoly {
    IntPoly::linear(c)
}

fn times(p: Option<&IntPoly>, q: &IntPoly) -> IntPoly {
    p.map_or_else(IntPoly::zero, |p| p * q)
}

fn scaled(p: Option<&IntPoly>, c: i64) -> IntPoly {
    p.map_or_else(IntPoly::zero, |p| p.scale_i64(c))
}

/// `psi` rows `0..=rmax` by the three-term recurrence
/// `psi_k(r) = (x - r - k + 1) psi_k(r - 1) + (r + k - 2) psi_{k-1}(r - 1)`.
pub fn psi_table_bew(rmax: usize) -> PolyTable {
    let mut t = PolyTable { rows: vec![vec![IntPoly::zero(), IntPoly::one()]] };
    for r in 1..=rmax as i64 {
        let row = (0..=r + 1)
            .map(|k| {
                if k == 0 {
                    return IntPoly::zero();
                }
                &times(t.cell(r - 1, k), &lin(-r - k + 1)) + &scaled(t.cell(r - 1, k - 1), r + k - 2)
            })
            .collect();
        t.rows.push(row);
    }
    t
}

/// `psi` rows `0..=rmax` by the shifted recurrence
/// `psi_k(r + 1, x) = (x - 1) psi_k(r, x - 1) + psi_{k-1}(r + 1, x) - psi_{k-1}(r + 1, x - 1)`,
/// filling each row in increasing `k`.
pub fn psi_table_ramanujan(rmax: usize) -> PolyTable {
    let mut t = PolyTable { rows: vec![vec![IntPoly::zero(), IntPoly::one()]] };
    for r in 0..rmax as i64 {
        let mut row = vec![IntPoly::zero()];
        for k in 1..=r + 2 {
            let prev = &row[k as usize - 1];
            let shifted_down = t.cell(r, k).map(|p| p.shift(-1));
            let cell = &(&times(shifted_down.as_ref(), &lin(-1)) + prev) - &prev.shift(-1);
            row.push(cell);
        }
        t.rows.push(row);
    }
    t
}

pub fn psi_bew(r: usize, k: i64) -> IntPoly {
    psi_table_bew(r).get(r as i64, k)
}

pub fn psi_ramanujan(r: usize, k: i64) -> IntPoly {
    psi_table_ramanujan(r).get(r as i64, k)
}

fn q_base() -> PolyTable {
    PolyTable { rows: vec![vec![], vec![IntPoly::one()]] }
}

/// `Q` rows `0..=nmax` by `Q_{n,k} = (x + n - 1) Q_{n-1,k} + (n + k - 2) Q_{n-1,k-1}`.
pub fn q_table_shor(nmax: usize) -> PolyTable {
    let mut t = q_base();
    for n in 2..=nmax as i64 {
        let row =
            (0..n).map(|k| &times(t.cell(n - 1, k), &lin(n - 1)) + &scaled(t.cell(n - 1, k - 1), n + k - 2)).collect();
        t.rows.push(row);
    }
    t.rows.truncate(nmax + 1);
    t
}

/// `Q` rows by `Q_{n,k}(x) = (x - k + 1) Q_{n-1,k}(x + 1) + (n + k - 2) Q_{n-1,k-1}(x + 1)`.
pub fn q_table_shor_alt(nmax: usize) -> PolyTable {
    let mut t = q_base();
    for n in 2..=nmax as i64 {
        let row = (0..n)
            .map(|k| {
                let a = t.cell(n - 1, k).map(|p| p.shift(1));
                let b = t.cell(n - 1, k - 1).map(|p| p.shift(1));
                &times(a.as_ref(), &lin(1 - k)) + &scaled(b.as_ref(), n + k - 2)
            })
            .collect();
        t.rows.push(row);
    }
    t.rows.truncate(nmax + 1);
    t
}

/// `Q` rows by `Q_{n,k}(x) = (x + n - 1) Q_{n-1,k}(x) + Q_{n,k-1}(x) - Q_{n,k-1}(x - 1)`,
/// filling each row in increasing `k`.
pub fn q_table_zeng_a(nmax: usize) -> PolyTable {
    let mut t = q_base();
    for n in 2..=nmax as i64 {
        let mut row: Vec<IntPoly> = Vec::new();
        for k in 0..n {
            let mut cell = times(t.cell(n - 1, k), &lin(n - 1));
            if let Some(prev) = row.last() {
                cell = &(&cell + prev) - &prev.shift(-1);
            }
            row.push(cell);
        }
        t.rows.push(row);
    }
    t.rows.truncate(nmax + 1);
    t
}

/// `Q` rows from the implicit relation `Q_{n,k}(x) - Q_{n,k}(x - 1) = (n + k - 1) Q_{n-1,k}(x)`.
///
/// The difference determines every coefficient but the constant term, solved
/// from the top degree `n - 1 - k` downward; the constant term is `f(n, k)`.
pub fn q_table_zeng_b(nmax: usize) -> PolyTable {
    let mut t = q_base();
    for n in 2..=nmax as i64 {
        let row = (0..n)
            .map(|k| {
                let diff = scaled(t.cell(n - 1, k), n + k - 1);
                solve_backward_difference(&diff, (n - 1 - k) as usize, f(n as usize, k))
            })
            .collect();
        t.rows.push(row);
    }
    t.rows.truncate(nmax + 1);
    t
}

/// Finds `q` of degree at most `degree` with `q(x) - q(x - 1) = diff` and `q(0) = constant`.
///
/// The coefficient of `x^m` in `q(x) - q(x - 1)` is
/// `sum_{j > m} c_j * C(j, m) * (-1)^(j - m + 1)`, whose `j = m + 1` term is
/// `(m + 1) c_{m+1}`; so each `c_{m+1}` follows from the higher ones.
fn solve_backward_difference(diff: &IntPoly, degree: usize, constant: BigInt) -> IntPoly {
    let mut c = vec![BigInt::zero(); degree + 1];
    c[0] = constant;
    for m in (0..degree).rev() {
        let mut rhs = diff.coeff(m);
        for j in (m + 2)..=degree {
            let term = &c[j] * binomial(BigInt::from(j), BigInt::from(m));
            if (j - m) % 2 == 1 {
                rhs -= term;
            } else {
                rhs += term;
            }
        }
        let (quot, rem) = rhs.div_rem(&BigInt::from(m + 1));
        debug_assert!(rem.is_zero(), "backward difference is not integral");
        c[m + 1] = quot;
    }
    IntPoly::from_coeffs(c)
}

/// `Q` rows via the substitution `Q_{n,k}(x) = psi_{k+1}(n - 1, x + n)`.
pub fn q_table_from_psi(nmax: usize) -> PolyTable {
    let psi = psi_table_bew(nmax.saturating_sub(1));
    let mut t = PolyTable { rows: vec![vec![]] };
    for n in 1..=nmax as i64 {
        t.rows.push((0..n).map(|k| psi.get(n - 1, k + 1).shift(n)).collect());
    }
    t
}

fn q_from(table: PolyTable, n: usize, k: i64) -> IntPoly {
    table.get(n as i64, k)
}

pub fn q_shor(n: usize, k: i64) -> IntPoly {
    q_from(q_table_shor(n), n, k)
}

pub fn q_shor_alt(n: usize, k: i64) -> IntPoly {
    q_from(q_table_shor_alt(n), n, k)
}

pub fn q_zeng_a(n: usize, k: i64) -> IntPoly {
    q_from(q_table_zeng_a(n), n, k)
}

pub fn q_zeng_b(n: usize, k: i64) -> IntPoly {
    q_from(q_table_zeng_b(n), n, k)
}

pub fn q_from_psi(n: usize, k: i64) -> IntPoly {
    q_from(q_table_from_psi(n), n, k)
}

/// Rows `0..=nmax` of `f(n, k) = (n - 1) f(n - 1, k) + (n + k - 2) f(n - 1, k - 1)`, `f(1, 0) = 1`.
pub fn f_table(nmax: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![], vec![BigInt::one()]];
    for n in 2..=nmax {
        let prev = &rows[n - 1];
        let get = |k: i64| -> BigInt {
            if k < 0 {
                BigInt::zero()
            } else {
                prev.get(k as usize).cloned().unwrap_or_default()
            }
        };
        let row = (0..n as i64).map(|k| get(k) * (n as i64 - 1) + get(k - 1) * (n as i64 + k - 2)).collect();
        rows.push(row);
    }
    rows.truncate(nmax + 1);
    rows
}

pub fn f(n: usize, k: i64) -> BigInt {
    if n == 0 || k < 0 || k >= n as i64 {
        return BigInt::zero();
    }
    f_table(n)[n][k as usize].clone()
}

/// Recurrence used to build `psi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PsiMethod {
    Bew,
    Ramanujan,
}

/// Recurrence used to build `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QMethod {
    Shor,
    ShorAlt,
    ZengA,
    ZengB,
    FromPsi,
}

impl PsiMethod {
    pub const ALL: [PsiMethod; 2] = [PsiMethod::Bew, PsiMethod::Ramanujan];

    pub fn table(self, rmax: usize) -> PolyTable {
        match self {
            PsiMethod::Bew => psi_table_bew(rmax),
            PsiMethod::Ramanujan => psi_table_ramanujan(rmax),
        }
    }
}

impl QMethod {
    pub const ALL: [QMethod; 5] = [QMethod::Shor, QMethod::ShorAlt, QMethod::ZengA, QMethod::ZengB, QMethod::FromPsi];

    pub fn table(self, nmax: usize) -> PolyTable {
        match self {
            QMethod::Shor => q_table_shor(nmax),
            QMethod::ShorAlt => q_table_shor_alt(nmax),
            QMethod::ZengA => q_table_zeng_a(nmax),
            QMethod::ZengB => q_table_zeng_b(nmax),
            QMethod::FromPsi => q_table_from_psi(nmax),
        }
    }
}

impl fmt::Display for PsiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PsiMethod::Bew => "bew",
            PsiMethod::Ramanujan => "ramanujan",
        })
    }
}

impl fmt::Display for QMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QMethod::Shor => "shor",
            QMethod::ShorAlt => "shor-alt",
            QMethod::ZengA => "zeng-a",
            QMethod::ZengB => "zeng-b",
            QMethod::FromPsi => "from-psi",
        })
    }
}

impl FromStr for PsiMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        PsiMethod::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| format!("unknown psi method {s:?} (expected bew or ramanujan)"))
    }
}

impl FromStr for QMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        QMethod::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| format!("unknown Q method {s:?} (expected shor, shor-alt, zeng-a, zeng-b or from-psi)"))
    }
}

/// Outcome of one closed-form sum check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumCheck {
    /// `"psi"`, `"Q"` or `"f"`.
    pub family: &'static str,
    /// `r` for `psi`, `n` otherwise.
    pub index: usize,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Checks `sum_k psi_k(r, x) = x^r`, `sum_k Q_{n,k}(x) = (x + n)^(n-1)` and
/// `sum_k f(n, k) = n^(n-1)` for every `r < nmax` and `1 <= n <= nmax`.
pub fn check_sums(nmax: usize) -> Vec<SumCheck> {
    let mut out = Vec::new();
    let psi = psi_table_bew(nmax.saturating_sub(1));
    for r in 0..nmax {
        let sum = (1..=r as i64 + 1).fold(IntPoly::zero(), |acc, k| &acc + &psi.get(r as i64, k));
        let expected = IntPoly::monomial(1, r);
        out.push(SumCheck {
            family: "psi",
            index: r,
            pass: sum == expected,
            expected: expected.to_string(),
            actual: sum.to_string(),
        });
    }
    let q = q_table_shor(nmax);
    let fs = f_table(nmax);
    for n in 1..=nmax {
        let sum = (0..n as i64).fold(IntPoly::zero(), |acc, k| &acc + &q.get(n as i64, k));
        let expected = IntPoly::linear(n as i64).pow(n as u32 - 1);
        out.push(SumCheck {
            family: "Q",
            index: n,
            pass: sum == expected,
            expected: expected.to_string(),
            actual: sum.to_string(),
        });
        let fsum: BigInt = fs[n].iter().sum();
        let expected = BigInt::from(n).pow(n as u32 - 1);
        out.push(SumCheck {
            family: "f",
            index: n,
            pass: fsum == expected,
            expected: expected.to_string(),
            actual: fsum.to_string(),
        });
    }
    out
}
