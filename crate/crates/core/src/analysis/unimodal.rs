use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodalityReport {
    pub unimodal: bool,
    /// Indices attaining the maximum coefficient.
    pub modes: Vec<usize>,
    pub unique_mode: bool,
}

/// Weakly rising then weakly falling coefficients.
pub fn unimodality<T: Coefficient + Ord>(p: &Polynomial<T>) -> UnimodalityReport {
    let c = p.coeffs();
    let max = c.iter().max().expect("never empty");
    let modes: Vec<usize> = (0..c.len()).filter(|&i| c[i] == *max).collect();
    let mut falling = false;
    let mut unimodal = true;
    for w in c.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            unimodal = false;
            break;
        }
    }
    UnimodalityReport {
        unimodal,
        unique_mode: modes.len() == 1,
        modes,
    }
}

/// `(⌈(2nω - 1)/(ω + 1)⌉, t)` with `t = 2n - ⌈(2nω - 1)/(ω + 1)⌉`: the
/// tail `s_lo ≥ ... ≥ s_2n` and the head `s_0 ≤ ... ≤ s_t` checked by
/// [`perfect_tail_check`].
pub fn tail_bounds(omega: usize, n_g: usize) -> (usize, usize) {
    let num = 2 * n_g * omega;
    let den = omega + 1;
    // ⌈(num - 1)/den⌉, which is 0 when num = 0
    let lo = if num == 0 { 0 } else { (num - 1).div_ceil(den) };
    (lo, 2 * n_g - lo)
}

/// Monotone head and tail of a corona polynomial over a perfect graph of
/// order `n_g` and clique number `omega`. Only the inequalities are
/// checked; the hypotheses on the graph are the caller's business.
pub fn perfect_tail_check<T: Coefficient + Ord>(
    p: &Polynomial<T>,
    omega: usize,
    n_g: usize,
) -> Result<bool> {
    if omega == 0 {
        return Err(Error::ZeroOmega);
    }
    if p.degree() != 2 * n_g || p.is_zero() {
        return Err(Error::DegreeMismatch {
            expected: 2 * n_g,
            actual: p.degree(),
        });
    }
    let (lo, t) = tail_bounds(omega, n_g);
    let s = |i: usize| p.coefficient(i);
    let tail = (lo..2 * n_g).all(|i| s(i) >= s(i + 1));
    let head = (0..t).all(|i| s(i) <= s(i + 1));
    Ok(tail && head)
}
