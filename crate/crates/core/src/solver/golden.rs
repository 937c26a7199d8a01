//! The golden section and powers of the golden ratio.

use std::fmt;

use num_traits::{One, Signed};

use super::trace::{StepLabel, TraceStep};
use super::{quadratic_roots, roots_text};
use crate::denest;
use crate::error::{Error, Result};
use crate::quadext::QuadExt;
use crate::radical::{self, Radical};
use crate::rational::{rat, Rational};

pub const MAX_EXPONENT: u32 = 64;

/// `ρ = (1 + √5)/2`.
pub fn golden_ratio() -> QuadExt {
    QuadExt::new(rat(1, 2), rat(1, 2), 5).expect("5 is squarefree")
}

/// Cut of a segment of length `a` into a larger part `x` and the rest
/// `a − x` with `a/x = x/(a − x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenSection {
    pub segment: Rational,
    pub larger: QuadExt,
    pub trace: Vec<TraceStep>,
}

impl GoldenSection {
    pub fn root(&self) -> Radical {
        Radical::Quad(self.larger.clone())
    }
}

/// Positive root of `(x + a)·x = a²`, which is `a(√5 − 1)/2`.
pub fn golden_section(a: &Rational) -> Result<GoldenSection> {
    if !a.is_positive() {
        return Err(Error::NonpositiveSegment);
    }
    let seg = QuadExt::rational(a.clone());
    let a2 = a * a;
    let roots = quadratic_roots(&seg, &QuadExt::rational(-&a2))?;
    let Some(Radical::Quad(x)) = roots.iter().find(|r| r.signum() > 0).cloned() else {
        unreachable!("x² + ax − a² has one positive rational-field root")
    };
    let rest = seg.checked_sub(&x)?;
    // x > a − x
    assert!(x.cmp_value(&rest)?.is_gt());
    let ratio = seg.checked_div(&x)?;
    debug_assert_eq!(ratio, x.checked_div(&rest)?);

    let (lhs, rhs) = roots_text('x', &roots);
    let trace = vec![
        TraceStep::new(StepLabel::Rewrite, format!("(x + {a})x"), a2.to_string()),
        TraceStep::new(StepLabel::QuadraticFormula, lhs, rhs),
        TraceStep::new(
            StepLabel::Rewrite,
            format!("{a}/({x})"),
            format!("({x})/({rest}) = {ratio}"),
        ),
    ];
    Ok(GoldenSection {
        segment: a.clone(),
        larger: x,
        trace,
    })
}

/// Exact `ρⁿ` in `Q(√5)`, for `1 ≤ n ≤ 64`.
pub fn golden_power(n: u32) -> Result<QuadExt> {
    if !(1..=MAX_EXPONENT).contains(&n) {
        return Err(Error::ExponentOutOfRange(n));
    }
    Ok(golden_ratio().pow(n))
}

/// `ρ` written as the real `n`th root of `ρⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRep {
    pub n: u32,
    pub inner: QuadExt,
}

/// Result of checking a [`GoldenRep`] against `ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenCheck {
    /// Proven equal by exact algebra (only attempted for `n ≤ 2`).
    pub exact: Option<bool>,
    /// Truncated decimal of the `n`th root.
    pub root_decimal: String,
    /// Truncated decimal of `ρ` at the same precision.
    pub rho_decimal: String,
}

impl GoldenCheck {
    pub fn holds(&self) -> bool {
        self.exact != Some(false) && self.root_decimal == self.rho_decimal
    }
}

pub fn nth_root_representation(n: u32) -> Result<GoldenRep> {
    Ok(GoldenRep {
        n,
        inner: golden_power(n)?,
    })
}

impl GoldenRep {
    pub fn root_decimal(&self, digits: usize) -> String {
        radical::root_decimal(&self.inner, self.n, digits).expect("ρⁿ is positive")
    }

    pub fn verify(&self, digits: usize) -> GoldenCheck {
        let rho = golden_ratio();
        let exact = match self.n {
            1 => Some(self.inner == rho),
            2 => Some(
                denest::denest_sqrt(&self.inner)
                    .ok()
                    .and_then(|r| r.value().cloned())
                    .is_some_and(|v| v == rho),
            ),
            _ => None,
        };
        GoldenCheck {
            exact,
            root_decimal: self.root_decimal(digits),
            rho_decimal: Radical::Quad(rho).to_decimal(digits),
        }
    }
}

impl fmt::Display for GoldenRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            1 => write!(f, "rho = {}", self.inner),
            2 => write!(f, "rho = sqrt({})", self.inner),
            n => write!(f, "rho = root({n}, {})", self.inner),
        }
    }
}

impl GoldenRep {
    /// `true` when `n = 1`, where the representation is `ρ` itself.
    pub fn is_trivial(&self) -> bool {
        self.n.is_one()
    }
}
