//! Denesting `√(a + b√d)` and deciding equality across radical tiers.
//!
//! `√(a + b√d)` equals some `x + y√d` with rational `x`, `y` exactly when
//! `s = √(a² − b²d)` is rational and one of `(a ± s)/2` is a rational square:
//! squaring gives `x² + dy² = a` and `2xy = b`, so `x²` and `dy²` are the two
//! roots of `t² − at + b²d/4`.
//!
//! When the test fails the square root has degree 4 over the rationals (its
//! square generates `Q(√d)` and it is not itself in `Q(√d)`), so it cannot
//! equal any tier-1 value from any quadratic field. That is what lets
//! [`equal`] compare residual tier-2 values structurally.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::quadext::QuadExt;
use crate::radical::{Radical, Sign};
use crate::rational::{self, Rational};

/// Outcome of [`denest_sqrt`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DenestResult {
    /// `value ≥ 0` and `value² = radicand`.
    Denested { value: QuadExt, witness: Witness },
    /// No element of `Q(√d)` squares to the radicand.
    Irreducible,
}

/// Audit data for a successful denesting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Rational radicand handled by square-factor extraction.
    Rational,
    /// `norm_root = √(a² − b²d)` and which of `(a ± s)/2` was the square `x²`.
    Field { norm_root: Rational, branch: Sign },
}

impl DenestResult {
    pub fn value(&self) -> Option<&QuadExt> {
        match self {
            DenestResult::Denested { value, .. } => Some(value),
            DenestResult::Irreducible => None,
        }
    }

    pub fn is_denested(&self) -> bool {
        matches!(self, DenestResult::Denested { .. })
    }
}

/// Nonnegative square root of `e` inside its own field, if there is one.
pub fn denest_sqrt(e: &QuadExt) -> Result<DenestResult> {
    if e.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    if let Some(r) = e.as_rational() {
        return Ok(DenestResult::Denested {
            value: QuadExt::sqrt_rational(r)?,
            witness: Witness::Rational,
        });
    }
    let (a, b, d) = (e.a(), e.b(), e.d());
    let Some(s) = rational::rational_sqrt(&e.norm()) else {
        return Ok(DenestResult::Irreducible);
    };
    let two = Rational::from_integer(2.into());
    for branch in [Sign::Plus, Sign::Minus] {
        let x2 = match branch {
            Sign::Plus => (a + &s) / &two,
            Sign::Minus => (a - &s) / &two,
        };
        if x2.is_zero() {
            continue;
        }
        let Some(x) = rational::rational_sqrt(&x2) else {
            continue;
        };
        let y = b / (&two * &x);
        let value = QuadExt::new(x, y, d)?.abs();
        debug_assert_eq!(value.square(), *e);
        return Ok(DenestResult::Denested {
            value,
            witness: Witness::Field {
                norm_root: s,
                branch,
            },
        });
    }
    Ok(DenestResult::Irreducible)
}

/// Collapses a tier-2 value to tier 1 when its radicand denests.
pub fn canonicalize(x: &Radical) -> Radical {
    match x {
        Radical::Quad(_) => x.clone(),
        Radical::Nested { sign, radicand } => match denest_sqrt(radicand) {
            Ok(DenestResult::Denested { value, .. }) => match sign {
                Sign::Plus => Radical::Quad(value),
                Sign::Minus => Radical::Quad(-value),
            },
            _ => x.clone(),
        },
    }
}

/// Exact equality of values across representation tiers.
pub fn equal(x: &Radical, y: &Radical) -> bool {
    match (canonicalize(x), canonicalize(y)) {
        (Radical::Quad(p), Radical::Quad(q)) => p == q,
        (
            Radical::Nested { sign: s1, radicand: e1 },
            Radical::Nested { sign: s2, radicand: e2 },
        ) => s1 == s2 && e1 == e2,
        // an irreducible tier-2 value lies outside every quadratic field
        _ => false,
    }
}

/// Multiset equality of root lists under [`equal`].
pub fn multiset_equal(xs: &[Radical], ys: &[Radical]) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    let mut used = vec![false; ys.len()];
    xs.iter().all(|x| {
        let hit = ys
            .iter()
            .enumerate()
            .find(|(i, y)| !used[*i] && equal(x, y))
            .map(|(i, _)| i);
        match hit {
            Some(i) => {
                used[i] = true;
                true
            }
            None => false,
        }
    })
}

/// Monic minimal polynomial over the rationals, of degree 1, 2 or 4.
pub fn minimal_polynomial(x: &Radical) -> Polynomial {
    match canonicalize(x) {
        Radical::Quad(q) => quad_minimal_polynomial(&q),
        // radicand a + b√d with b ≠ 0: (λ² − a)² = b²d
        Radical::Nested { radicand, .. } => {
            if let Some(r) = radicand.as_rational() {
                // only left nested when square-factor extraction gave up
                return Polynomial::new(vec![-r.clone(), Rational::zero(), Rational::one()]);
            }
            let a = radicand.a();
            Polynomial::new(vec![
                radicand.norm(),
                Rational::zero(),
                -(a + a),
                Rational::zero(),
                Rational::one(),
            ])
        }
    }
}

fn quad_minimal_polynomial(q: &QuadExt) -> Polynomial {
    match q.as_rational() {
        Some(r) => Polynomial::new(vec![-r.clone(), Rational::one()]),
        None => Polynomial::new(vec![q.norm(), -q.trace(), Rational::one()]),
    }
}
