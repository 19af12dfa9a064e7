//! Dense univariate polynomials.
//!
//! Coefficients are stored in ascending degree order. The vector is never
//! empty: the zero polynomial is `[0]`, so it has degree 0 and
//! [`Polynomial::is_zero`] is the flag that tells it apart from a nonzero
//! constant. Trailing zeros are always trimmed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{Coefficient, IntegerCoefficient};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Polynomial<T> {
    /// Builds from coefficients `a0, a1, ...`; trailing zeros are dropped.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_slice<U: Clone + Into<T>>(coeffs: &[U]) -> Self {
        Self::new(coeffs.iter().cloned().map(Into::into).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(T::zero());
        }
    }

    pub fn zero() -> Self {
        Self {
            coeffs: vec![T::zero()],
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self { coeffs: vec![c] }
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coefficient(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn leading_coefficient(&self) -> &T {
        self.coeffs.last().expect("never empty")
    }

    /// Coefficients in reverse order, i.e. `x^deg * p(1/x)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// `x^k * p`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![T::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Self { coeffs: c }
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        num_traits::pow(self.clone(), k)
    }

    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation over the coefficient ring.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

impl<T: IntegerCoefficient> Polynomial<T> {
    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &Ratio<T>) -> Ratio<T> {
        self.coeffs.iter().rev().fold(Ratio::zero(), |acc, c| {
            acc * x.clone() + Ratio::from_integer(c.clone())
        })
    }

    pub fn to_rational(&self) -> Polynomial<Ratio<T>> {
        self.map(|c| Ratio::from_integer(c.clone()))
    }
}

fn add_coeffs<T: Coefficient>(a: &[T], b: &[T], negate_b: bool) -> Vec<T> {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let mut c = a.get(i).cloned().unwrap_or_else(T::zero);
        if let Some(bi) = b.get(i) {
            if negate_b {
                c -= bi;
            } else {
                c += bi;
            }
        }
        out.push(c);
    }
    out
}

impl<T: Coefficient> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        Polynomial::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl<T: Coefficient> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        Polynomial::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

// Schoolbook convolution.
impl<T: Coefficient> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a.clone() * b.clone());
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Coefficient> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        self.map(|c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Coefficient> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Coefficient> $tr<&Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: &Polynomial<T>) -> Polynomial<T> {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Coefficient> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Coefficient> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl<T: Coefficient> One for Polynomial<T> {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl<T: Coefficient> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Renders `a0 + a1*x + a2*x^2 + ...` with zero terms omitted.
impl<T: Coefficient> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match i {
                0 => f.write_str(&mag)?,
                1 => write!(f, "{mag}*x")?,
                _ => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coefficient> Polynomial<T> {
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl<T: Coefficient + FromStr> Polynomial<T> {
    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Option<Self> {
        items
            .iter()
            .map(|s| s.as_ref().parse().ok())
            .collect::<Option<Vec<T>>>()
            .map(Self::new)
    }
}

/// Serialized as a JSON array of decimal strings, so arbitrary-precision
/// coefficients survive consumers that parse numbers as doubles.
impl<T: Coefficient> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de, T: Coefficient + FromStr> Deserialize<'de> for Polynomial<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        Self::from_decimal_strings(&items).ok_or_else(|| D::Error::custom("invalid coefficient"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntPolynomial, Integer, Rational};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_slice(c)
    }

    // Independent convolution oracle on machine integers.
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for i in 0..a.len() {
            for j in 0..b.len() {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    }

    #[test]
    fn products_and_powers() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(convolve(&[1, 3, 2], &[1, 3, 2]), vec![1, 6, 13, 12, 4]);
        assert_eq!(p(&[1, 3, 2]).pow(2), p(&[1, 6, 13, 12, 4]));
        // (1 + (r+1)x + x^2)^2 at r = 1
        assert_eq!(p(&[1, 2, 1]).pow(2), p(&[1, 4, 6, 4, 1]));
        assert_eq!(p(&[1, 7]).pow(3), p(&[1, 21, 147, 343]));
        assert_eq!(p(&[5]).pow(0), p(&[1]));
    }

    #[test]
    fn no_overflow_at_high_powers() {
        let q = p(&[1, 7]).pow(20);
        assert_eq!(q.coefficient(20), Integer::from(7).pow(20u32));
        // binomial(20,10) * 7^10
        assert_eq!(
            q.coefficient(10),
            Integer::from(184_756) * Integer::from(7).pow(10u32)
        );
    }

    #[test]
    fn degree_and_coefficients() {
        let q = p(&[1, 12, 52]);
        assert_eq!(q.coefficient(1), Integer::from(12));
        assert_eq!(q.coefficient(7), Integer::from(0));
        assert_eq!(p(&[1]).degree(), 0);
        assert_eq!(p(&[1, 2, 0, 0]).degree(), 1);
        let z = p(&[]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), 0);
        assert!(!p(&[3]).is_zero());
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPolynomial::zero());
    }

    #[test]
    fn rational_evaluation() {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(p(&[1, 2, 1]).eval_rational(&r(1, 1)), r(4, 1));
        assert_eq!(p(&[1, 3, 1]).eval_rational(&r(-1, 1)), r(-1, 1));
        assert_eq!(p(&[9, 3, 1]).eval_rational(&r(0, 1)), r(9, 1));
        assert_eq!(p(&[1, 3, 1]).eval_rational(&r(1, 2)), r(11, 4));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 0, 3]).to_string(), "1 + 3*x^2");
        assert_eq!(p(&[0, -2, 1]).to_string(), "-2*x + 1*x^2");
        assert_eq!(p(&[1, -1]).to_string(), "1 - 1*x");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let big = p(&[1, 7]).pow(30);
        let json = serde_json::to_string(&big).unwrap();
        assert!(json.starts_with("[\"1\",\"210\""));
        let back: IntPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, big);
        assert!(serde_json::from_str::<IntPolynomial>("[\"1\",\"x\"]").is_err());
    }

    #[test]
    fn generic_over_machine_integers() {
        let a: Polynomial<i64> = Polynomial::new(vec![1, 3, 2]);
        assert_eq!((&a * &a).coeffs(), &[1, 6, 13, 12, 4]);
        assert_eq!(a.eval(&2), 15);
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn pow_is_repeated_mul(a in small_poly(), k in 0usize..5) {
            let mut acc = IntPolynomial::one();
            for _ in 0..k { acc = &acc * &a; }
            prop_assert_eq!(a.pow(k), acc);
        }

        #[test]
        fn evaluation_is_multiplicative(a in small_poly(), b in small_poly(),
                                        n in -9i64..9, d in 1i64..9) {
            let x = Rational::new(n.into(), d.into());
            prop_assert_eq!((&a * &b).eval_rational(&x), a.eval_rational(&x) * b.eval_rational(&x));
        }

        #[test]
        fn degree_of_product(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
        }
    }
}
