//! Rational helpers on top of `num_rational::BigRational`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Largest trial divisor used when extracting square factors.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Builds `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn checked_div(x: &Rational, y: &Rational) -> Result<Rational> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x / y)
}

pub fn checked_inv(x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x.recip())
}

/// Exact integer square root, if `n` is a perfect square.
pub fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a rational, if it is the square of a rational.
///
/// Since the fraction is reduced, it is a square iff numerator and
/// denominator both are.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    let n = integer_sqrt(x.numer())?;
    let d = integer_sqrt(x.denom())?;
    Some(Rational::new(n, d))
}

/// Splits `n > 0` as `s² · d` with `d` squarefree.
///
/// Trial division runs up to [`TRIAL_DIVISION_BOUND`]. A cofactor left over
/// below `bound³` has at most two prime factors, so a perfect-square test
/// settles it; anything larger is rejected with `RadicandTooLarge`.
pub fn square_factor(n: &BigUint) -> Result<(BigUint, u64)> {
    debug_assert!(!n.is_zero());
    match n.to_u128() {
        Some(small) => square_factor_small(small).map(|(s, d)| (BigUint::from(s), d)),
        None => square_factor_big(n),
    }
}

fn square_factor_small(mut rest: u128) -> Result<(u128, u64)> {
    let mut square: u128 = 1;
    let mut free: u128 = 1;
    let mut p: u128 = 2;
    while p <= TRIAL_DIVISION_BOUND as u128 && p * p <= rest {
        let mut count = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            count += 1;
        }
        square *= p.pow(count / 2);
        if count % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if p > TRIAL_DIVISION_BOUND as u128 && p * p <= rest {
        let bound = TRIAL_DIVISION_BOUND as u128;
        if rest > bound.pow(3) {
            return Err(Error::RadicandTooLarge);
        }
        let r = rest.isqrt();
        if r * r == rest {
            square *= r;
            rest = 1;
        }
    }
    let d = u64::try_from(free * rest).map_err(|_| Error::RadicandTooLarge)?;
    Ok((square, d))
}

fn square_factor_big(n: &BigUint) -> Result<(BigUint, u64)> {
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p: u64 = 2;
    while p <= TRIAL_DIVISION_BOUND {
        let pp = BigUint::from(p);
        if &pp * &pp > rest {
            break;
        }
        let mut count = 0u32;
        while (&rest % p).is_zero() {
            rest /= p;
            count += 1;
        }
        if count > 0 {
            square *= pp.pow(count / 2);
            if count % 2 == 1 {
                free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if p > TRIAL_DIVISION_BOUND {
        let bound = BigUint::from(TRIAL_DIVISION_BOUND);
        if rest > bound.pow(3) {
            return Err(Error::RadicandTooLarge);
        }
        let r = rest.sqrt();
        if &r * &r == rest {
            square *= r;
            rest = BigUint::one();
        }
    }
    free *= rest;
    let d = free.to_u64().ok_or(Error::RadicandTooLarge)?;
    Ok((square, d))
}

/// Splits a nonnegative rational `r` as `c² · d` with `c` rational and
/// `d` a squarefree integer (so `√r = |c|·√d`).
pub fn rational_square_factor(r: &Rational) -> Result<(Rational, u64)> {
    if r.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    if r.is_zero() {
        return Ok((Rational::zero(), 1));
    }
    if let Some(root) = rational_sqrt(r) {
        return Ok((root, 1));
    }
    // √(p/q) = √(p·q) / q
    let m = (r.numer() * r.denom()).to_biguint().expect("positive");
    let (s, d) = square_factor(&m)?;
    let c = Rational::new(BigInt::from_biguint(Sign::Plus, s), r.denom().clone());
    Ok((c, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_arithmetic() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(3, 2) * rat(3, 2), rat(9, 4));
        assert!(rat(9, 4) > rat(5, 4) * rat(5, 5));
        assert_eq!(rat(6, -4), rat(-3, 2));
        assert_eq!(rat(6, -4).denom(), &BigInt::from(2));
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(checked_div(&int(1), &int(0)), Err(Error::DivisionByZero));
        assert_eq!(checked_inv(&int(0)), Err(Error::DivisionByZero));
        assert_eq!(checked_inv(&rat(-2, 3)), Ok(rat(-3, 2)));
    }

    #[test]
    fn square_factors() {
        let f = |n: u64| square_factor(&BigUint::from(n)).unwrap();
        assert_eq!(f(20), (BigUint::from(2u32), 5));
        assert_eq!(f(72), (BigUint::from(6u32), 2));
        assert_eq!(f(1), (BigUint::from(1u32), 1));
        assert_eq!(f(49), (BigUint::from(7u32), 1));
        assert_eq!(f(30), (BigUint::from(1u32), 30));
        // cofactor is the square of a prime above the trial bound
        let p = 1_000_003u64;
        assert_eq!(f(p * p * 3), (BigUint::from(p), 3));
        assert_eq!(f(p * 1_000_033), (BigUint::from(1u32), p * 1_000_033));
    }

    #[test]
    fn big_path_agrees_with_small_path() {
        for n in [20u64, 72, 1, 49, 30, 1_000_003 * 1_000_003 * 3, 2 * 3 * 5 * 7 * 11 * 11] {
            let big = BigUint::from(n);
            assert_eq!(square_factor(&big), square_factor_big(&big), "n = {n}");
        }
        let huge = BigUint::from(u128::MAX) * BigUint::from(4u32);
        assert!(square_factor(&huge).is_err());
    }

    #[test]
    fn oversized_radicand_is_rejected() {
        let p = BigUint::from(1_000_003u64);
        let n = &p * &p * &p * BigUint::from(1_000_033u64);
        assert_eq!(square_factor(&n), Err(Error::RadicandTooLarge));
    }

    #[test]
    fn rational_square_factor_of_fractions() {
        assert_eq!(rational_square_factor(&rat(9, 4)).unwrap(), (rat(3, 2), 1));
        assert_eq!(rational_square_factor(&rat(5, 4)).unwrap(), (rat(1, 2), 5));
        // √(1/3) = √3 / 3
        assert_eq!(rational_square_factor(&rat(1, 3)).unwrap(), (rat(1, 3), 3));
        assert_eq!(
            rational_square_factor(&rat(-1, 3)),
            Err(Error::NegativeRadicand)
        );
    }
}
