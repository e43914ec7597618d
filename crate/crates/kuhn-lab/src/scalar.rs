//! Dual arithmetic: every expectation formula in this crate is a rational
//! function of the strategy frequencies and the pot size, so each evaluator
//! is generic over a scalar that is either `f64` (fast path, used by the
//! dynamics) or [`Rational`] (exact path, used as ground truth in tests).

use num::BigRational;
use num::{FromPrimitive, Signed, Zero};
use std::ops::Neg;

/// Exact rational scalar backing the ground-truth arithmetic path.
pub type Rational = BigRational;

/// Field-like scalar used by the expectation and equilibrium formulas.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + num_traits::Num + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    /// Whether a residual this close to zero should be treated as sitting
    /// exactly on a bifurcation boundary. Exact arithmetic snaps only true
    /// zeros; floats snap within 1e-9.
    fn snaps_to_zero(&self) -> bool;

    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn snaps_to_zero(&self) -> bool {
        self.abs() <= 1e-9
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(num.into(), den.into())
    }

    fn snaps_to_zero(&self) -> bool {
        self.is_zero()
    }

    fn to_f64(&self) -> f64 {
        num::ToPrimitive::to_f64(self).expect("rational out of f64 range")
    }
}

/// Parses "3", "2/9" or a plain decimal like "6.25" into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let n: num::BigInt = num.trim().parse().ok()?;
        let d: num::BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let sign = if whole.trim_start().starts_with('-') { -1 } else { 1 };
        let w: num::BigInt = if whole.is_empty() || whole == "-" {
            0.into()
        } else {
            whole.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits: num::BigInt = frac.parse().ok()?;
        let scale = num::BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = Rational::new(digits, scale);
        let whole_part = Rational::from_integer(w);
        return Some(if sign < 0 {
            whole_part - frac_part
        } else {
            whole_part + frac_part
        });
    }
    let n: num::BigInt = text.parse().ok()?;
    Some(Rational::from_integer(n))
}

/// Exact rational from an `f64` (every finite float is a dyadic rational).
pub fn rational_from_f64(x: f64) -> Rational {
    Rational::from_f64(x).expect("non-finite float")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("2/9"), Some(Rational::from_ratio(2, 9)));
        assert_eq!(parse_rational("6.25"), Some(Rational::from_ratio(25, 4)));
        assert_eq!(parse_rational("-0.5"), Some(Rational::from_ratio(-1, 2)));
        assert_eq!(parse_rational("7"), Some(Rational::from_int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn snap_behaviour_differs_by_backend() {
        assert!(5e-10f64.snaps_to_zero());
        assert!(!Rational::from_ratio(1, 1_000_000_000_000).snaps_to_zero());
        assert!(Rational::zero().snaps_to_zero());
    }
}
