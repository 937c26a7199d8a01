//! Elements `a + b√d` of a real quadratic field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Radicand stored for pure rationals, so that each value has one stored form.
pub const RATIONAL_SENTINEL: u64 = 2;

/// `a + b√d` with `d` squarefree and `d ≥ 2`.
///
/// When `b = 0` the radicand is pinned to [`RATIONAL_SENTINEL`], so derived
/// equality and hashing coincide with equality of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadExt {
    /// Builds `a + b√d` for any `d ≥ 0`, pulling square factors out of `d`.
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if d == 0 || b.is_zero() {
            return Ok(Self::rational(a));
        }
        let (s, free) = rational::square_factor(&BigUint::from(d))?;
        let b = b * Rational::from_integer(BigInt::from(s));
        if free == 1 {
            Ok(Self::rational(a + b))
        } else {
            Ok(Self::raw(a, b, free))
        }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: RATIONAL_SENTINEL,
        }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    /// `√d` itself, `d` already squarefree.
    pub fn sqrt_of_squarefree(d: u64) -> Self {
        Self::raw(Rational::zero(), Rational::one(), d)
    }

    // `d` must already be squarefree and ≥ 2.
    fn raw(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            debug_assert!(d >= 2);
            QuadExt { a, b, d }
        }
    }

    /// Exact square root of a nonnegative rational.
    ///
    /// The result is rational when `r` is a rational square and otherwise
    /// `c·√d` with the largest square factor pulled out.
    pub fn sqrt_rational(r: &Rational) -> Result<Self> {
        let (c, d) = rational::rational_square_factor(r)?;
        if d == 1 {
            Ok(Self::rational(c))
        } else {
            Ok(Self::raw(Rational::zero(), c, d))
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The rational value, if there is no irrational part.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Radicand of the smallest field containing this value, `None` for rationals.
    pub fn field(&self) -> Option<u64> {
        (!self.is_rational()).then_some(self.d)
    }

    /// Radicand shared by two values, or `MixedFields`.
    pub fn common_field(&self, other: &Self) -> Result<u64> {
        match (self.field(), other.field()) {
            (None, None) => Ok(RATIONAL_SENTINEL),
            (Some(d), None) | (None, Some(d)) => Ok(d),
            (Some(l), Some(r)) if l == r => Ok(l),
            (Some(left), Some(right)) => Err(Error::MixedFields { left, right }),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_field(other)?;
        Ok(Self::raw(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let d = self.common_field(other)?;
        Ok(Self::raw(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_field(other)?;
        let dr = Rational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dr;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::raw(a, b, d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.common_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&n.recip()))
    }

    pub fn square(&self) -> Self {
        self.checked_mul(self).expect("same field")
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.checked_mul(self).expect("same field");
        }
        acc
    }

    /// `a − b√d`.
    pub fn conj(&self) -> Self {
        Self::raw(self.a.clone(), -&self.b, self.d)
    }

    /// `a² − b²d`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.d))
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::raw(&self.a * k, &self.b * k, self.d)
    }

    pub fn add_rational(&self, k: &Rational) -> Self {
        Self::raw(&self.a + k, self.b.clone(), self.d)
    }

    /// Exact sign using rational comparisons only.
    pub fn signum(&self) -> i8 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(BigInt::from(self.d));
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Compares values of two elements lying in a common field.
    pub fn cmp_value(&self, other: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.signum().cmp(&0))
    }

    /// `|self|`.
    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Writes the value as `(A + B√d) / Q` with integers `A`, `B` and `Q > 0`.
    pub fn integer_form(&self) -> (BigInt, BigInt, BigInt) {
        let q = self.a.denom().lcm(self.b.denom());
        let a = self.a.numer() * (&q / self.a.denom());
        let b = self.b.numer() * (&q / self.b.denom());
        (a, b, q)
    }

    /// Exact `⌊self⌋`.
    pub fn floor(&self) -> BigInt {
        let (a, b, q) = self.integer_form();
        if b.is_zero() {
            return a.div_floor(&q);
        }
        // ⌊B√d⌋, using that B²d is never a perfect square here
        let root = (&b * &b * BigInt::from(self.d)).sqrt();
        let t = if b.is_positive() { root } else { -root - 1 };
        // A + B√d lies in [A + t, A + t + 1)
        let upper = (&a + &t + BigInt::one()).div_floor(&q);
        let candidate = Self::rational(Rational::from_integer(upper.clone()));
        if self.checked_sub(&candidate).expect("same field").signum() >= 0 {
            upper
        } else {
            upper - 1
        }
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;

    fn neg(self) -> QuadExt {
        QuadExt::raw(-&self.a, -&self.b, self.d)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;

    fn neg(self) -> QuadExt {
        -&self
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl fmt::Display for QuadExt {
    /// Renders as `(A+B*sqrt(d))/Q`, dropping unit factors and trivial parts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let (a, b, q) = self.integer_form();
        let surd = if b.abs().is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", b.abs(), self.d)
        };
        let body = match (a.is_zero(), b.is_negative()) {
            (true, false) => surd,
            (true, true) => format!("-{surd}"),
            (false, false) => format!("{a}+{surd}"),
            (false, true) => format!("{a}-{surd}"),
        };
        if q.is_one() {
            f.write_str(&body)
        } else if a.is_zero() {
            write!(f, "{body}/{q}")
        } else {
            write!(f, "({body})/{q}")
        }
    }
}
