//! Coefficient-sequence analysis: symmetry, f-symmetry, unimodality and the
//! rational-function invariants behind the corona symmetry argument.
//!
//! Everything here is exact; there is no floating point in this module.

mod invariant;
mod symmetry;
mod unimodal;

pub use invariant::{invariant_holds_at, invariant_residual, Invariant};
pub use symmetry::{
    detect_f_symmetry, is_symmetric, predicted_corona_constant, verify_f_symmetry,
    FSymmetryReport,
};
pub use unimodal::{perfect_tail_check, tail_bounds, unimodality, UnimodalityReport};

/// Serde helper: an optional ratio as the string `"num/den"`.
pub(crate) mod ratio_string {
    use std::str::FromStr;

    use num_rational::Ratio;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::scalar::IntegerCoefficient;

    pub fn format<T: IntegerCoefficient>(r: &Ratio<T>) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }

    pub fn parse<T: IntegerCoefficient + FromStr>(s: &str) -> Option<Ratio<T>> {
        let (n, d) = s.split_once('/')?;
        let d: T = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Ratio::new(n.parse().ok()?, d))
    }

    pub fn serialize<T: IntegerCoefficient, S: Serializer>(
        c: &Option<Ratio<T>>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        match c {
            Some(r) => s.serialize_some(&format(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, T: IntegerCoefficient + FromStr, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<Ratio<T>>, D::Error> {
        match Option::<String>::deserialize(d)? {
            None => Ok(None),
            Some(s) => parse(&s)
                .map(Some)
                .ok_or_else(|| D::Error::custom(format!("bad ratio {s:?}"))),
        }
    }
}
