//! Real radicals of depth at most two, and exact decimal rendering.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::quadext::QuadExt;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `Plus` for nonnegative input.
    pub fn of(s: i8) -> Self {
        if s < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A real number of the form `a + b√d` (tier 1) or `±√(a + b√d)` (tier 2).
///
/// Tier-2 values may carry a radicand that is a perfect square in its own
/// field; `denest::canonicalize` collapses those to tier 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Radical {
    Quad(QuadExt),
    Nested { sign: Sign, radicand: QuadExt },
}

impl Radical {
    /// `sign · √radicand`, rejecting negative radicands.
    pub fn nested(sign: Sign, radicand: QuadExt) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        Ok(Radical::Nested { sign, radicand })
    }

    pub fn rational(r: Rational) -> Self {
        Radical::Quad(QuadExt::rational(r))
    }

    /// Square root of a nonnegative rational as a tier-1 value.
    pub fn sqrt_rational(r: &Rational) -> Result<Self> {
        QuadExt::sqrt_rational(r).map(Radical::Quad)
    }

    pub fn tier(&self) -> u8 {
        match self {
            Radical::Quad(_) => 1,
            Radical::Nested { .. } => 2,
        }
    }

    pub fn as_quad(&self) -> Option<&QuadExt> {
        match self {
            Radical::Quad(q) => Some(q),
            Radical::Nested { .. } => None,
        }
    }

    pub fn signum(&self) -> i8 {
        match self {
            Radical::Quad(q) => q.signum(),
            Radical::Nested { radicand, .. } if radicand.is_zero() => 0,
            Radical::Nested { sign, .. } => sign.as_i8(),
        }
    }

    /// The square of the value, which always lies in a quadratic field.
    pub fn square(&self) -> QuadExt {
        match self {
            Radical::Quad(q) => q.square(),
            Radical::Nested { radicand, .. } => radicand.clone(),
        }
    }

    /// Decimal expansion truncated toward zero after `digits` fractional digits.
    ///
    /// Every printed digit is exact: the scaled value is floored with exact
    /// sign tests, and tier-2 values go through an integer square root.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = ten_pow(digits);
        let (negative, scaled) = match self {
            Radical::Quad(q) => (q.is_negative(), q.abs().scale(&scale).floor()),
            Radical::Nested { sign, radicand } => {
                let squared = radicand.scale(&(&scale * &scale)).floor();
                (*sign == Sign::Minus, squared.sqrt())
            }
        };
        format_scaled(&scaled, negative, digits)
    }
}

/// Truncated decimal of the real `n`th root of a nonnegative `value`.
pub fn root_decimal(value: &QuadExt, n: u32, digits: usize) -> Result<String> {
    if value.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    let scaled = value.scale(&ten_pow(digits).pow(n)).floor();
    Ok(format_scaled(&scaled.nth_root(n), false, digits))
}

fn ten_pow(digits: usize) -> Rational {
    Rational::from_integer(BigInt::from(10u32).pow(digits))
}

fn format_scaled(n: &BigInt, negative: bool, digits: usize) -> String {
    let mut s = n.to_string();
    if s.len() <= digits {
        s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
    }
    let split = s.len() - digits;
    let sign = if negative && !n.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{s}")
    } else {
        format!("{sign}{}.{}", &s[..split], &s[split..])
    }
}

impl Neg for Radical {
    type Output = Radical;

    fn neg(self) -> Radical {
        match self {
            Radical::Quad(q) => Radical::Quad(-q),
            Radical::Nested { sign, radicand } => Radical::Nested {
                sign: sign.flip(),
                radicand,
            },
        }
    }
}

impl Neg for &Radical {
    type Output = Radical;

    fn neg(self) -> Radical {
        -self.clone()
    }
}

impl From<QuadExt> for Radical {
    fn from(q: QuadExt) -> Self {
        Radical::Quad(q)
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radical::Quad(q) => write!(f, "{q}"),
            Radical::Nested { sign, radicand } => {
                let minus = if *sign == Sign::Minus { "-" } else { "" };
                write!(f, "{minus}sqrt({radicand})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn q5(a: Rational, b: Rational) -> QuadExt {
        QuadExt::new(a, b, 5).unwrap()
    }

    #[test]
    fn reciprocal_golden_ratio_decimal() {
        let x = Radical::Quad(q5(rat(-1, 2), rat(1, 2)));
        assert_eq!(x.to_decimal(7), "0.6180339");
    }

    #[test]
    fn rational_decimal_is_padded() {
        assert_eq!(Radical::rational(rat(3, 2)).to_decimal(3), "1.500");
        assert_eq!(Radical::rational(rat(-1, 8)).to_decimal(2), "-0.12");
        assert_eq!(Radical::rational(rat(-1, 800)).to_decimal(2), "0.00");
        assert_eq!(Radical::rational(int(42)).to_decimal(0), "42");
    }

    #[test]
    fn nested_decimal_matches_its_denested_form() {
        let nested = Radical::nested(Sign::Plus, q5(rat(3, 2), rat(1, 2))).unwrap();
        let flat = Radical::Quad(q5(rat(1, 2), rat(1, 2)));
        assert_eq!(nested.to_decimal(7), "1.6180339");
        assert_eq!(flat.to_decimal(7), "1.6180339");
        assert_eq!(nested.to_decimal(40), flat.to_decimal(40));
        assert_eq!((-nested).to_decimal(7), "-1.6180339");
    }

    #[test]
    fn nth_root_decimal() {
        // ρ⁴ = (7+3√5)/2
        let rho4 = q5(rat(7, 2), rat(3, 2));
        assert_eq!(root_decimal(&rho4, 4, 10).unwrap(), "1.6180339887");
        assert_eq!(root_decimal(&QuadExt::rational(int(8)), 3, 2).unwrap(), "2.00");
    }

    #[test]
    fn negative_nested_radicand_is_rejected() {
        assert_eq!(
            Radical::nested(Sign::Plus, q5(int(2), int(-1))),
            Err(Error::NegativeRadicand)
        );
    }

    #[test]
    fn display() {
        let nested = Radical::nested(Sign::Minus, q5(rat(3, 2), rat(-1, 2))).unwrap();
        assert_eq!(nested.to_string(), "-sqrt((3-sqrt(5))/2)");
        assert_eq!(nested.tier(), 2);
    }
}
