use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::engine::independence_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Polynomial;
use crate::scalar::IntegerCoefficient;
use crate::{Integer, Rational};

/// Outcome of an f-symmetry check `a_{n-i} = c^{n/2 - i} * a_i` over all
/// `0 <= i <= n`.
///
/// From [`detect_f_symmetry`], `constant_c` is the detected constant and a
/// symmetric polynomial always reports `c = 1`. From [`verify_f_symmetry`]
/// the report is relative to the constant that was passed in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = "T: FromStr"))]
pub struct FSymmetryReport<T: IntegerCoefficient = Integer> {
    pub symmetric: bool,
    pub f_symmetric: bool,
    #[serde(rename = "c", with = "super::ratio_string")]
    pub constant_c: Option<Ratio<T>>,
    pub degree: usize,
    pub failures: Vec<usize>,
}

pub fn is_symmetric<T: crate::scalar::Coefficient>(p: &Polynomial<T>) -> bool {
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}

fn pow<T: IntegerCoefficient>(base: &T, e: usize) -> T {
    num_traits::pow(base.clone(), e)
}

/// Does `a_{n-i} = c^{n/2-i} a_i` hold at index `i`? Even degrees compare
/// `a_{n-i} den^e = a_i num^e` with `e = n/2 - i` moved to whichever side
/// keeps it non-negative. Odd degrees square both sides and require the two
/// coefficients to share a sign.
fn holds_at<T: IntegerCoefficient>(p: &Polynomial<T>, c: &Ratio<T>, i: usize) -> bool {
    let n = p.degree();
    let (lo, hi) = (p.coefficient(i), p.coefficient(n - i));
    let (num, den) = (c.numer(), c.denom());
    let k = n as i64 - 2 * i as i64;
    if n.is_multiple_of(2) {
        let e = (k / 2).unsigned_abs() as usize;
        if k >= 0 {
            hi * pow(den, e) == lo * pow(num, e)
        } else {
            hi * pow(num, e) == lo * pow(den, e)
        }
    } else {
        if hi.signum() != lo.signum() {
            return false;
        }
        let e = k.unsigned_abs() as usize;
        let (hi2, lo2) = (hi.clone() * hi, lo.clone() * lo);
        if k >= 0 {
            hi2 * pow(den, e) == lo2 * pow(num, e)
        } else {
            hi2 * pow(num, e) == lo2 * pow(den, e)
        }
    }
}

pub fn verify_f_symmetry<T: IntegerCoefficient>(
    p: &Polynomial<T>,
    c: &Ratio<T>,
) -> Result<FSymmetryReport<T>> {
    if !c.is_positive() {
        return Err(Error::NonPositiveConstant);
    }
    let failures: Vec<usize> = (0..=p.degree()).filter(|&i| !holds_at(p, c, i)).collect();
    let f_symmetric = failures.is_empty();
    Ok(FSymmetryReport {
        symmetric: is_symmetric(p),
        f_symmetric,
        constant_c: f_symmetric.then(|| c.clone()),
        degree: p.degree(),
        failures,
    })
}

/// Exact positive `k`-th root of a positive ratio, if it is rational.
fn exact_root<T: IntegerCoefficient>(r: &Ratio<T>, k: usize) -> Option<Ratio<T>> {
    let k32 = u32::try_from(k).ok()?;
    let root = |x: &T| {
        let y = x.nth_root(k32);
        (pow(&y, k) == *x).then_some(y)
    };
    Some(Ratio::new(root(r.numer())?, root(r.denom())?))
}

/// Candidate for `c`, in order: `(a_n a_1)/(a_0 a_{n-1})`; the first
/// well-defined ratio of ratios `(a_{n-i} a_{i+1})/(a_i a_{n-i-1})`; the
/// rational `k`-th root of `(a_{n-i}/a_i)^2` with `k = n - 2i > 0`.
fn candidate<T: IntegerCoefficient>(p: &Polynomial<T>) -> Option<Ratio<T>> {
    let n = p.degree();
    if n == 0 {
        return None;
    }
    let a = |i: usize| p.coefficient(i);
    for i in 0..n {
        let (x, y, z, w) = (a(n - i), a(i + 1), a(i), a(n - i - 1));
        if !x.is_zero() && !y.is_zero() && !z.is_zero() && !w.is_zero() {
            return Some(Ratio::new(x * y, z * w));
        }
    }
    for i in 0..n.div_ceil(2) {
        let (hi, lo) = (a(n - i), a(i));
        if !hi.is_zero() && !lo.is_zero() {
            let r = Ratio::new(hi, lo);
            return exact_root(&(r.clone() * r), n - 2 * i);
        }
    }
    None
}

/// Finds the constant `c > 0` making `p` f-symmetric, if there is one.
pub fn detect_f_symmetry<T: IntegerCoefficient>(p: &Polynomial<T>) -> FSymmetryReport<T> {
    let n = p.degree();
    if is_symmetric(p) {
        return FSymmetryReport {
            symmetric: true,
            f_symmetric: true,
            constant_c: Some(Ratio::one()),
            degree: n,
            failures: vec![],
        };
    }
    if let Some(c) = candidate(p).filter(Signed::is_positive) {
        return verify_f_symmetry(p, &c).expect("candidate is positive");
    }
    // No positive constant can work; report the indices whose sign pattern
    // already rules every c out.
    let failures = (0..=n)
        .filter(|&i| p.coefficient(i).signum() != p.coefficient(n - i).signum())
        .collect();
    FSymmetryReport {
        symmetric: false,
        f_symmetric: false,
        constant_c: None,
        degree: n,
        failures,
    }
}

/// `m = p(p-1)/2 - q` for `H` with `p` vertices, `q` edges and `α(H) = 2`;
/// the f-symmetry constant of every corona `G ∘ H`.
pub fn predicted_corona_constant(h: &Graph) -> Result<Rational> {
    let alpha = independence_number(h);
    if alpha != 2 {
        return Err(Error::IndependenceNumberNotTwo(alpha));
    }
    let p = h.order();
    Ok(Rational::from_integer(Integer::from(p * (p - 1) / 2 - h.size())))
}
