//! Invariants of `r(x) = x / (b0 + b1 x + b2 x^2)`, i.e. maps `f` with
//! `r(f(x)) = r(x)`. Clearing denominators turns the defining equation
//! into `b2 x f^2 - (b0 + b2 x^2) f + b0 x = 0`, whose solutions are
//! `f(x) = x` and `f(x) = b0 / (b2 x)`. Note that `b1` cancels.

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::IntegerCoefficient;

type Fraction<T> = (Polynomial<Ratio<T>>, Polynomial<Ratio<T>>);

/// A candidate map `f`, given as a quotient of polynomials.
#[derive(Debug, Clone, PartialEq)]
pub enum Invariant<T: IntegerCoefficient> {
    /// `f(x) = x`
    Identity,
    /// `f(x) = b0 / (b2 x)`
    Reciprocal,
    /// `f(x) = numerator(x) / denominator(x)`
    Candidate {
        numerator: Polynomial<Ratio<T>>,
        denominator: Polynomial<Ratio<T>>,
    },
}

impl<T: IntegerCoefficient> Invariant<T> {
    fn as_fraction(
        &self,
        b0: &Ratio<T>,
        b2: &Ratio<T>,
    ) -> Result<Fraction<T>> {
        Ok(match self {
            Invariant::Identity => (Polynomial::x(), Polynomial::one()),
            Invariant::Reciprocal => {
                if b2.is_zero() {
                    return Err(Error::ZeroLeadingDenominator);
                }
                (
                    Polynomial::constant(b0.clone()),
                    Polynomial::monomial(b2.clone(), 1),
                )
            }
            Invariant::Candidate {
                numerator,
                denominator,
            } => (numerator.clone(), denominator.clone()),
        })
    }
}

/// Substitutes `f = N/D` into `b2 x f^2 - (b0 + b2 x^2) f + b0 x` and
/// multiplies through by `D^2`. The result is the zero polynomial exactly
/// when `f` is an invariant.
pub fn invariant_residual<T: IntegerCoefficient>(
    b0: &Ratio<T>,
    _b1: &Ratio<T>,
    b2: &Ratio<T>,
    which: &Invariant<T>,
) -> Result<Polynomial<Ratio<T>>> {
    let (num, den) = which.as_fraction(b0, b2)?;
    let x = Polynomial::<Ratio<T>>::x();
    let b2x = x.scale(b2);
    let quad = &Polynomial::constant(b0.clone()) + &x.pow(2).scale(b2);
    let b0x = x.scale(b0);
    Ok(&(&(&b2x * &num.pow(2)) - &(&quad * &(&num * &den))) + &(&b0x * &den.pow(2)))
}

/// Evaluates `r(x)` and `r(f(x))` directly at a rational point. Returns
/// `None` when a denominator vanishes there.
pub fn invariant_holds_at<T: IntegerCoefficient>(
    b: [&Ratio<T>; 3],
    which: &Invariant<T>,
    x: &Ratio<T>,
) -> Result<Option<bool>> {
    let [b0, b1, b2] = b;
    let (num, den) = which.as_fraction(b0, b2)?;
    let r = |t: &Ratio<T>| {
        let d = b0.clone() + b1.clone() * t.clone() + b2.clone() * t.clone() * t.clone();
        (!d.is_zero()).then(|| t.clone() / d)
    };
    let eval = |p: &Polynomial<Ratio<T>>, t: &Ratio<T>| {
        p.coeffs()
            .iter()
            .rev()
            .fold(Ratio::zero(), |acc, c| acc * t.clone() + c.clone())
    };
    let d = eval(&den, x);
    if d.is_zero() {
        return Ok(None);
    }
    let fx = eval(&num, x) / d;
    Ok(match (r(x), r(&fx)) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    })
}
