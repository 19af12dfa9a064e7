//! Random symmetric unimodal coefficient sequences for the lemma suites.

use indpoly_core::{IntPolynomial, Integer};
use rand::Rng;

/// Nondecreasing positive sequence of length `len`; when `strict_top` the
/// last step is a strict increase.
fn rising<R: Rng>(rng: &mut R, len: usize, strict_top: bool) -> Vec<i64> {
    let mut v = Vec::with_capacity(len);
    let mut cur = rng.gen_range(1..=5);
    for i in 0..len {
        if i > 0 {
            let plateau = rng.gen_bool(0.25);
            let step = if plateau { 0 } else { rng.gen_range(1..=20) };
            cur += if strict_top && i + 1 == len { step.max(1) } else { step };
        }
        v.push(cur);
    }
    v
}

/// Symmetric unimodal polynomial of exact degree `degree` with positive
/// coefficients. Odd degrees necessarily have two equal central modes.
pub fn symmetric_unimodal<R: Rng>(rng: &mut R, degree: usize, strict_top: bool) -> IntPolynomial {
    let half = rising(rng, degree / 2 + 1, strict_top);
    let mut coeffs = half.clone();
    let mirror = if degree.is_multiple_of(2) {
        &half[..half.len() - 1]
    } else {
        &half[..]
    };
    coeffs.extend(mirror.iter().rev());
    debug_assert_eq!(coeffs.len(), degree + 1);
    IntPolynomial::new(coeffs.into_iter().map(Integer::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use indpoly_core::analysis::{is_symmetric, unimodality};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_sequences_have_the_advertised_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for degree in 0..12 {
            for strict in [false, true] {
                let p = symmetric_unimodal(&mut rng, degree, strict);
                assert_eq!(p.degree(), degree);
                assert!(is_symmetric(&p));
                let u = unimodality(&p);
                assert!(u.unimodal);
                if strict && degree % 2 == 0 && degree > 0 {
                    assert_eq!(u.modes, vec![degree / 2]);
                }
            }
        }
    }
}
