//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quadext::QuadExt;
use crate::radical::Radical;
use crate::rational::Rational;

/// Coefficients in ascending order of degree; trailing zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Option<Self> {
        let lead = self.leading()?;
        Some(self.scale(&lead.recip()))
    }

    /// True when every odd-degree coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn trailing_constant(&self) -> Rational {
        self.coeff(0)
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] / lead;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Exact value at a radical point.
    ///
    /// Tier-1 points are evaluated by Horner's rule in `Q(√d)`. At a tier-2
    /// point `t = ±√e` the evaluation runs in `Q(√d)[t]/(t² − e)` and yields
    /// `u + v·t`; the sign of `t` does not enter since only `t²` is used.
    pub fn eval_at(&self, x: &Radical) -> RingValue {
        match x {
            Radical::Quad(q) => {
                let mut acc = QuadExt::zero();
                for c in self.coeffs.iter().rev() {
                    acc = acc.checked_mul(q).expect("rational coefficients").add_rational(c);
                }
                RingValue {
                    u: acc,
                    v: QuadExt::zero(),
                    modulus: q.square(),
                }
            }
            Radical::Nested { radicand, .. } => {
                let mut u = QuadExt::zero();
                let mut v = QuadExt::zero();
                // (u + v·t)·t + c = (v·e + c) + u·t
                for c in self.coeffs.iter().rev() {
                    let next_u = v.checked_mul(radicand).expect("same field").add_rational(c);
                    v = u;
                    u = next_u;
                }
                RingValue {
                    u,
                    v,
                    modulus: radicand.clone(),
                }
            }
        }
    }

    /// True iff the polynomial vanishes exactly at `x`.
    pub fn is_root(&self, x: &Radical) -> bool {
        let value = self.eval_at(x);
        if value.is_zero() {
            return true;
        }
        // A tier-2 point whose radicand is a square in Q(√d) lies in Q(√d)
        // itself; then u + v·t = 0 exactly when t = −u/v.
        match x {
            Radical::Nested { radicand, sign } if !value.v.is_zero() => {
                let Ok(w) = (-&value.u).checked_div(&value.v) else {
                    return false;
                };
                w.square() == *radicand && w.signum() == sign.as_i8()
            }
            _ => false,
        }
    }

    /// Renders with the given variable name, e.g. `x^4 - 3x^2 + 1`.
    pub fn render(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push(var),
                _ => {
                    out.push(var);
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }
}

/// Value `u + v·t` of a polynomial at a point `t` with `t² = modulus`.
///
/// For tier-1 points `v` is always zero. `u = v = 0` is an exact zero test
/// whenever `t` lies outside the field of `u` and `v`; use
/// [`Polynomial::is_root`] for the general check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingValue {
    pub u: QuadExt,
    pub v: QuadExt,
    pub modulus: QuadExt,
}

impl RingValue {
    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Ok(RingValue {
            u: self.u.checked_add(&other.u)?,
            v: self.v.checked_add(&other.v)?,
            modulus: self.modulus.clone(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let uu = self.u.checked_mul(&other.u)?;
        let vv = self.v.checked_mul(&other.v)?.checked_mul(&self.modulus)?;
        let uv = self.u.checked_mul(&other.v)?;
        let vu = self.v.checked_mul(&other.u)?;
        Ok(RingValue {
            u: uu.checked_add(&vv)?,
            v: uv.checked_add(&vu)?,
            modulus: self.modulus.clone(),
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('x'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::Sign;
    use crate::rational::{int, rat};

    fn q5(a: Rational, b: Rational) -> QuadExt {
        QuadExt::new(a, b, 5).unwrap()
    }

    fn quartic() -> Polynomial {
        Polynomial::from_ints(&[1, 0, -3, 0, 1])
    }

    #[test]
    fn square_of_shifted_square() {
        let p = Polynomial::from_ints(&[-1, 0, 1]);
        assert_eq!(&p * &p, Polynomial::from_ints(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn quartic_factors_into_golden_quadratics() {
        let minus = Polynomial::from_ints(&[-1, -1, 1]);
        let plus = Polynomial::from_ints(&[-1, 1, 1]);
        assert_eq!(&minus * &plus, quartic());
        let (q, r) = quartic().div_rem(&minus).unwrap();
        assert_eq!(q, plus);
        assert!(r.is_zero());
    }

    #[test]
    fn zero_is_additive_identity_and_normalized() {
        let p = quartic();
        assert_eq!(&p + &Polynomial::zero(), p);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).degree(), None);
        assert_eq!(Polynomial::from_ints(&[1, 2, 0, 0]).coeffs().len(), 2);
    }

    #[test]
    fn evaluation_at_golden_points() {
        let rho = Radical::Quad(q5(rat(1, 2), rat(1, 2)));
        assert!(quartic().eval_at(&rho).is_zero());
        let nested = Radical::nested(Sign::Plus, q5(rat(3, 2), rat(1, 2))).unwrap();
        let value = quartic().eval_at(&nested);
        assert!(value.u.is_zero() && value.v.is_zero());
        assert!(Polynomial::x().eval_at(&Radical::rational(int(0))).is_zero());
    }

    #[test]
    fn roots_and_non_roots() {
        let neg_recip = Radical::Quad(q5(rat(1, 2), rat(-1, 2)));
        assert!(quartic().is_root(&neg_recip));
        let eta = Radical::Quad(q5(rat(3, 2), rat(1, 2)));
        assert!(Polynomial::from_ints(&[1, -3, 1]).is_root(&eta));
        assert!(!Polynomial::from_ints(&[1, 0, 1]).is_root(&Radical::rational(int(1))));
    }

    #[test]
    fn is_root_sees_through_denestable_points() {
        // λ² − λ − 1 has odd part, so u and v are both nonzero at √((3+√5)/2)
        let golden = Polynomial::from_ints(&[-1, -1, 1]);
        let nested = Radical::nested(Sign::Plus, q5(rat(3, 2), rat(1, 2))).unwrap();
        assert!(!golden.eval_at(&nested).is_zero());
        assert!(golden.is_root(&nested));
        assert!(!golden.is_root(&-nested));
        let irreducible = Radical::nested(Sign::Plus, q5(int(2), int(1))).unwrap();
        assert!(Polynomial::from_ints(&[-1, 0, -4, 0, 1]).is_root(&irreducible));
        assert!(!golden.is_root(&irreducible));
    }

    #[test]
    fn render_forms() {
        assert_eq!(quartic().render('x'), "x^4 - 3x^2 + 1");
        let p = Polynomial::new(vec![rat(-3, 2), int(0), rat(1, 2)]);
        assert_eq!(p.render('t'), "1/2t^2 - 3/2");
        assert_eq!(Polynomial::from_ints(&[0, -1]).render('x'), "-x");
        assert_eq!(Polynomial::zero().render('x'), "0");
    }

    #[test]
    fn division_by_zero_polynomial() {
        assert_eq!(
            quartic().div_rem(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
    }
}
