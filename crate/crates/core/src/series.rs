//! Truncated power series in `u` with exact rational coefficients, used to
//! check the generating function that defines `psi_k(r, x)`:
//!
//! `sum_{k>=0} (x+k)^(r+k) e^(-u(x+k)) u^k / k! = sum_{k=1}^{r+1} psi_k(r, x) / (1-u)^(r+k)`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::IntPoly;
use crate::recurrences::psi_table_bew;

/// Coefficients of `u^0 ... u^order`; everything above is discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<BigRational>,
}

impl RatSeries {
    pub fn zero(order: usize) -> Self {
        RatSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn from_coeffs(order: usize, coeffs: Vec<BigRational>) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `u^j`, dropping terms above the order.
    pub fn shift_up(&self, j: usize) -> Self {
        let mut s = Self::zero(self.order());
        for i in j..=self.order() {
            s.coeffs[i] = self.coeffs[i - j].clone();
        }
        s
    }

    /// Index of the first coefficient that differs, if any.
    pub fn first_difference(&self, other: &RatSeries) -> Option<usize> {
        (0..=self.order().max(other.order())).find(|&i| self.coeffs.get(i) != other.coeffs.get(i))
    }
}

impl Add for &RatSeries {
    type Output = RatSeries;

    fn add(self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        RatSeries { coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;

    fn mul(self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        let mut out = RatSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out.coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        out
    }
}

impl fmt::Display for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})u"),
                _ => format!("({c})u^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0 + O(u^{})", self.order() + 1)
        } else {
            write!(f, "{} + O(u^{})", terms.join(" + "), self.order() + 1)
        }
    }
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `e^(-c u) = sum_j (-c)^j u^j / j!` up to `u^order`.
pub fn exp_linear(c: i64, order: usize) -> RatSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = BigRational::one();
    for j in 0..=order {
        coeffs.push(term.clone());
        term = term * int(-c) / int(j as i64 + 1);
    }
    RatSeries { coeffs }
}

/// `(1 - u)^(-p) = sum_j C(j + p - 1, p - 1) u^j` up to `u^order`; `p >= 1`.
pub fn inv_power(p: usize, order: usize) -> RatSeries {
    assert!(p >= 1, "inv_power needs a positive exponent");
    RatSeries { coeffs: (0..=order).map(|j| int(binomial(BigInt::from(j + p - 1), BigInt::from(p - 1)))).collect() }
}

/// Integer power with `0^0 = 1`.
fn ipow(base: i64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// Left side of the generating function at `x = x_val`, summed over `k <= order`
/// (the `k`-th term is divisible by `u^k`, so the truncation is exact).
pub fn genfun_lhs(r: usize, x_val: i64, order: usize) -> RatSeries {
    let mut total = RatSeries::zero(order);
    let mut k_factorial = BigInt::one();
    for k in 0..=order {
        if k > 0 {
            k_factorial *= k;
        }
        let base = x_val + k as i64;
        let weight = BigRational::new(ipow(base, r + k), k_factorial.clone());
        let term = exp_linear(base, order).scale(&weight).shift_up(k);
        total = &total + &term;
    }
    total
}

/// Right side at `x = x_val` given the values `psi_1(r, x_val), ..., psi_{r+1}(r, x_val)`.
pub fn genfun_rhs(r: usize, psi_values: &[BigInt], order: usize) -> RatSeries {
    psi_values.iter().enumerate().fold(RatSeries::zero(order), |acc, (i, v)| {
        let k = i + 1;
        &acc + &inv_power(r + k, order).scale(&int(v.clone()))
    })
}

/// Result of comparing both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenfunCheck {
    pub r: usize,
    pub x: i64,
    pub order: usize,
    /// First mismatching coefficient, `None` when both sides agree.
    pub mismatch: Option<usize>,
}

impl GenfunCheck {
    pub fn pass(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for GenfunCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "genfun r={} x={} M={}: ", self.r, self.x, self.order)?;
        match self.mismatch {
            None => write!(f, "PASS"),
            Some(j) => write!(f, "FAIL(coeff {j})"),
        }
    }
}

/// Compares both sides using the supplied `psi_1(r, x), ..., psi_{r+1}(r, x)`.
pub fn verify_genfun_with(r: usize, x_val: i64, order: usize, psi: &[IntPoly]) -> GenfunCheck {
    let x = BigInt::from(x_val);
    let values: Vec<BigInt> = psi.iter().map(|p| p.eval(&x)).collect();
    let lhs = genfun_lhs(r, x_val, order);
    let rhs = genfun_rhs(r, &values, order);
    GenfunCheck { r, x: x_val, order, mismatch: lhs.first_difference(&rhs) }
}

/// Compares both sides with `psi` computed by its three-term recurrence.
pub fn verify_genfun(r: usize, x_val: i64, order: usize) -> GenfunCheck {
    let table = psi_table_bew(r);
    let psi: Vec<IntPoly> = (1..=r as i64 + 1).map(|k| table.get(r as i64, k)).collect();
    verify_genfun_with(r, x_val, order, &psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn exp_examples() {
        assert_eq!(exp_linear(0, 3), RatSeries::from_coeffs(3, vec![int(1)]));
        assert_eq!(exp_linear(1, 2).coeffs(), &[int(1), int(-1), rat(1, 2)]);
        assert_eq!(exp_linear(3, 1).coeffs(), &[int(1), int(-3)]);
    }

    #[test]
    fn inv_power_examples() {
        assert_eq!(inv_power(1, 3).coeffs(), &[int(1), int(1), int(1), int(1)]);
        assert_eq!(inv_power(2, 2).coeffs(), &[int(1), int(2), int(3)]);
        assert_eq!(inv_power(3, 1).coeffs(), &[int(1), int(3)]);
    }

    #[test]
    fn exp_times_its_inverse_is_one() {
        let prod = &exp_linear(4, 6) * &exp_linear(-4, 6);
        assert_eq!(prod, RatSeries::from_coeffs(6, vec![int(1)]));
    }

    #[test]
    fn identity_examples() {
        assert!(verify_genfun(0, 1, 5).pass());
        assert!(verify_genfun(3, 2, 8).pass());
        assert_eq!(verify_genfun(2, 0, 6).to_string(), "genfun r=2 x=0 M=6: PASS");
    }

    #[test]
    fn perturbed_psi_is_rejected() {
        // psi_1(1, x) = x - 1 and psi_2(1, x) = 1; replace the latter by 2
        let bad = vec![IntPoly::from_i64s(&[-1, 1]), IntPoly::constant(2)];
        let check = verify_genfun_with(1, 3, 6, &bad);
        assert!(!check.pass());
        assert!(check.to_string().ends_with(&format!("FAIL(coeff {})", check.mismatch.unwrap())));
    }

    fn series(order: usize) -> impl Strategy<Value = RatSeries> {
        prop::collection::vec((-20i64..20, 1i64..6), order + 1)
            .prop_map(move |v| RatSeries::from_coeffs(order, v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn product_is_truncated_convolution(a in series(10), b in series(10)) {
            let prod = &a * &b;
            for m in 0..=10 {
                let mut brute = BigRational::zero();
                for i in 0..=m {
                    brute += a.coeff(i) * b.coeff(m - i);
                }
                prop_assert_eq!(prod.coeff(m), &brute);
            }
        }
    }
}
