//! Exact real root-finding for linear, quadratic and biquadratic equations.
//!
//! Biquadratics `x⁴ + px² + q` are handled two ways. Perfect-square
//! completion rewrites the quartic as `(x² + α)² = βx²` with `α² = q` and
//! `β = 2α − p`, splitting it into two quadratics; its roots come out as
//! elements of a quadratic field whenever that is possible. Substitution
//! solves `u² + pu + q = 0` for `u = x²` and returns `±√u` unsimplified, so
//! the same roots usually appear as nested radicals. The two outputs are
//! compared with [`crate::denest::equal`].

mod golden;
mod trace;

pub use golden::{golden_power, golden_section, nth_root_representation, GoldenRep, GoldenSection};
pub use trace::{StepLabel, TraceStep};

use num_traits::{One, Signed, Zero};

use crate::denest::{self, DenestResult};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::quadext::QuadExt;
use crate::radical::{Radical, Sign};
use crate::rational::{self, Rational};
use trace::{rational_terms, render_terms};

/// Algorithm that produced a [`SolutionSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Linear,
    Quadratic,
    PerfectSquare,
    Substitution,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Linear => "linear",
            Method::Quadratic => "quadratic",
            Method::PerfectSquare => "perfect-square",
            Method::Substitution => "substitution",
        }
    }
}

/// Which biquadratic algorithm [`solve_with`] should use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Perfect-square completion, falling back to substitution.
    #[default]
    Auto,
    PerfectSquare,
    Substitution,
}

/// Real roots with multiplicity, plus the derivation that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub roots: Vec<Radical>,
    pub method: Method,
    pub trace: Vec<TraceStep>,
    /// The monic rational equation solved, when it has rational coefficients.
    pub source: Option<Polynomial>,
}

impl SolutionSet {
    /// True when every root exactly satisfies the source equation.
    pub fn verify(&self) -> bool {
        match &self.source {
            Some(p) => self.roots.iter().all(|r| p.is_root(r)),
            None => true,
        }
    }
}

fn two() -> Rational {
    rational::int(2)
}

/// Roots of `x² + bx + c`, ordered `(−b + √Δ)/2` then `(−b − √Δ)/2`.
fn quadratic_roots(b: &QuadExt, c: &QuadExt) -> Result<[Radical; 2]> {
    b.common_field(c)?;
    let disc = b.square().checked_sub(&c.scale(&rational::int(4)))?;
    if disc.is_negative() {
        return Err(Error::NegativeDiscriminant);
    }
    let root = match disc.as_rational() {
        Some(r) => Some(QuadExt::sqrt_rational(r)?).filter(|t| t.common_field(b).is_ok()),
        None => match denest::denest_sqrt(&disc)? {
            DenestResult::Denested { value, .. } => Some(value),
            DenestResult::Irreducible => None,
        },
    };
    let half = two().recip();
    if let Some(t) = root {
        let plus = (-b).checked_add(&t)?.scale(&half);
        let minus = (-b).checked_sub(&t)?.scale(&half);
        return Ok([Radical::Quad(plus), Radical::Quad(minus)]);
    }
    if b.is_zero() {
        // ±√(−c), with −c irrational here
        let e = -c;
        return Ok([
            Radical::nested(Sign::Plus, e.clone())?,
            Radical::nested(Sign::Minus, e)?,
        ]);
    }
    match disc.as_rational() {
        Some(delta) if b.a().is_zero() => pure_surd_roots(b, delta),
        _ => Err(Error::Unrepresentable),
    }
}

/// Roots `(−k√d ± √Δ)/2` for `b = k√d` and rational `Δ` with `√Δ ∉ Q(√d)`.
///
/// Each root squares to `(k²d + Δ)/4 ∓ (k/2)·√(dΔ)`, an element of
/// `Q(√(dΔ))`, so it is written as a signed square root over that field.
fn pure_surd_roots(b: &QuadExt, delta: &Rational) -> Result<[Radical; 2]> {
    let k = b.b();
    let d = Rational::from_integer(b.d().into());
    let k2d = k * k * &d;
    let cross = QuadExt::sqrt_rational(&(&d * delta))?;
    let base = QuadExt::rational((&k2d + delta) / rational::int(4));
    let half_k = k / two();
    let mut out = Vec::with_capacity(2);
    for branch in [Sign::Plus, Sign::Minus] {
        // sign of −k√d + branch·√Δ
        let lead = if k.is_positive() { Sign::Minus } else { Sign::Plus };
        let sign = if lead == branch || k2d > *delta { lead } else { branch };
        let e = match branch {
            Sign::Plus => base.checked_sub(&cross.scale(&half_k))?,
            Sign::Minus => base.checked_add(&cross.scale(&half_k))?,
        };
        out.push(Radical::nested(sign, e)?);
    }
    Ok([out.remove(0), out.remove(0)])
}

fn roots_text(var: char, roots: &[Radical]) -> (String, String) {
    let rhs = roots
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    (var.to_string(), rhs)
}

fn quadratic_equation_text(b: &QuadExt, c: &QuadExt, var: char) -> String {
    render_terms(&[(QuadExt::one(), 2), (b.clone(), 1), (c.clone(), 0)], var)
}

/// Solves `x² + bx + c = 0` over a common quadratic field.
pub fn solve_quadratic(b: &QuadExt, c: &QuadExt) -> Result<SolutionSet> {
    solve_quadratic_in(b, c, 'x')
}

fn solve_quadratic_in(b: &QuadExt, c: &QuadExt, var: char) -> Result<SolutionSet> {
    let roots = quadratic_roots(b, c)?;
    let (lhs, rhs) = roots_text(var, &roots);
    let trace = vec![
        TraceStep::new(StepLabel::Rewrite, quadratic_equation_text(b, c, var), "0"),
        TraceStep::new(StepLabel::QuadraticFormula, lhs, rhs),
    ];
    let source = match (b.as_rational(), c.as_rational()) {
        (Some(b), Some(c)) => Some(Polynomial::new(vec![c.clone(), b.clone(), Rational::one()])),
        _ => None,
    };
    Ok(SolutionSet {
        roots: roots.to_vec(),
        method: Method::Quadratic,
        trace,
        source,
    })
}

fn biquadratic(p: &Rational, q: &Rational) -> Polynomial {
    Polynomial::new(vec![
        q.clone(),
        Rational::zero(),
        p.clone(),
        Rational::zero(),
        Rational::one(),
    ])
}

/// Solves `x⁴ + px² + q = 0` by completing perfect squares on both sides.
///
/// Needs `q = α²` for rational `α` and `β = 2α − p ≥ 0`. Among the two signs
/// of `α`, one giving a rational `√β` is preferred, then `α = −√q`.
/// `NotApplicable` signals that the caller should fall back to substitution.
pub fn solve_biquadratic_perfect_square(p: &Rational, q: &Rational) -> Result<SolutionSet> {
    solve_perfect_square_in(p, q, 'x')
}

fn solve_perfect_square_in(p: &Rational, q: &Rational, var: char) -> Result<SolutionSet> {
    let r = rational::rational_sqrt(q)
        .ok_or(Error::NotApplicable("constant term is not a rational square"))?;
    let mut candidates = Vec::new();
    for alpha in [-r.clone(), r.clone()] {
        let beta = &alpha + &alpha - p;
        if beta.is_negative() || candidates.iter().any(|(a, _, _)| *a == alpha) {
            continue;
        }
        let root_beta = QuadExt::sqrt_rational(&beta)?;
        candidates.push((alpha, beta, root_beta));
    }
    let pick = candidates
        .iter()
        .position(|(_, _, s)| s.is_rational())
        .or(if candidates.is_empty() { None } else { Some(0) })
        .ok_or(Error::NotApplicable("no square root of the constant term leaves a nonnegative square"))?;
    let (alpha, beta, root_beta) = candidates.swap_remove(pick);

    let mut trace = Vec::new();
    let one = Rational::one();
    trace.push(TraceStep::new(
        StepLabel::Rewrite,
        biquadratic(p, q).render(var),
        rational_terms(
            &[
                (one.clone(), 4),
                (&alpha + &alpha, 2),
                (-&beta, 2),
                (q.clone(), 0),
            ],
            var,
        ),
    ));
    let square_side = Polynomial::new(vec![q.clone(), Rational::zero(), &alpha + &alpha, Rational::zero(), one.clone()]);
    let beta_side = Polynomial::monomial(beta.clone(), 2);
    trace.push(TraceStep::new(
        StepLabel::Rewrite,
        square_side.render(var),
        beta_side.render(var),
    ));
    let inner = Polynomial::new(vec![alpha.clone(), Rational::zero(), one]);
    trace.push(TraceStep::new(
        StepLabel::PerfectSquare,
        format!("({})^2", inner.render(var)),
        beta_side.render(var),
    ));
    let scaled_var = render_terms(&[(root_beta.clone(), 1)], var);
    trace.push(TraceStep::new(
        StepLabel::TakeRoot,
        inner.render(var),
        format!("±{scaled_var}"),
    ));

    let c = QuadExt::rational(alpha);
    let mut roots = Vec::with_capacity(4);
    let mut formula_steps = Vec::new();
    // x² + α = +√β·x first, then x² + α = −√β·x
    for b in [-root_beta.clone(), root_beta] {
        trace.push(TraceStep::new(
            StepLabel::Rewrite,
            quadratic_equation_text(&b, &c, var),
            "0",
        ));
        let pair = quadratic_roots(&b, &c).map_err(|e| match e {
            Error::NegativeDiscriminant => Error::NotApplicable("the split quadratics have complex roots"),
            other => other,
        })?;
        let (lhs, rhs) = roots_text(var, &pair);
        formula_steps.push(TraceStep::new(StepLabel::QuadraticFormula, lhs, rhs));
        roots.extend(pair);
    }
    trace.extend(formula_steps);
    Ok(SolutionSet {
        roots,
        method: Method::PerfectSquare,
        trace,
        source: Some(biquadratic(p, q)),
    })
}

fn substitute_var(var: char) -> char {
    if var == 'u' {
        'v'
    } else {
        'u'
    }
}

/// Solves `x⁴ + px² + q = 0` through `u = x²`, keeping `±√u` nested.
///
/// Only nonnegative `u` contribute roots. Rational `u` still collapse to
/// tier 1 since `√u` is then a plain surd.
pub fn solve_biquadratic_substitution(p: &Rational, q: &Rational) -> Result<SolutionSet> {
    solve_substitution_in(p, q, 'x')
}

fn solve_substitution_in(p: &Rational, q: &Rational, var: char) -> Result<SolutionSet> {
    let u = substitute_var(var);
    let mut trace = vec![TraceStep::new(
        StepLabel::Substitute,
        u.to_string(),
        format!("{var}^2"),
    )];
    let reduced = Polynomial::new(vec![q.clone(), p.clone(), Rational::one()]);
    trace.push(TraceStep::new(StepLabel::Substitute, reduced.render(u), "0"));
    let etas = quadratic_roots(&QuadExt::rational(p.clone()), &QuadExt::rational(q.clone()))?;
    let (lhs, rhs) = roots_text(u, &etas);
    trace.push(TraceStep::new(StepLabel::QuadraticFormula, lhs, rhs));

    let mut roots = Vec::with_capacity(4);
    for eta in &etas {
        let Radical::Quad(eta) = eta else {
            unreachable!("rational coefficients give tier-1 roots")
        };
        if eta.is_negative() {
            continue;
        }
        let pair = match eta.as_rational() {
            Some(r) => {
                let t = QuadExt::sqrt_rational(r)?;
                [Radical::Quad(t.clone()), Radical::Quad(-t)]
            }
            None => [
                Radical::nested(Sign::Plus, eta.clone())?,
                Radical::nested(Sign::Minus, eta.clone())?,
            ],
        };
        trace.push(TraceStep::new(
            StepLabel::BackSubstitute,
            var.to_string(),
            format!("{}, {}", pair[0], pair[1]),
        ));
        roots.extend(pair);
    }
    if roots.is_empty() {
        return Err(Error::NegativeEta);
    }
    Ok(SolutionSet {
        roots,
        method: Method::Substitution,
        trace,
        source: Some(biquadratic(p, q)),
    })
}

/// Solves a rational polynomial equation of degree 1, 2 or biquadratic 4.
pub fn solve_equation(p: &Polynomial) -> Result<SolutionSet> {
    solve_with(p, Strategy::Auto, 'x')
}

/// As [`solve_equation`], choosing the biquadratic algorithm and the
/// variable name used in the trace.
pub fn solve_with(p: &Polynomial, strategy: Strategy, var: char) -> Result<SolutionSet> {
    let degree = p.degree().unwrap_or(0);
    let monic = p.monic().filter(|_| degree > 0).ok_or(Error::UnsupportedDegree {
        degree,
        reason: "constant equations have no roots to find",
    })?;
    let c = |k| monic.coeff(k);
    match degree {
        1 => {
            let root = Radical::rational(-c(0));
            let step = TraceStep::new(StepLabel::Rewrite, var.to_string(), root.to_string());
            Ok(SolutionSet {
                roots: vec![root],
                method: Method::Linear,
                trace: vec![step],
                source: Some(monic),
            })
        }
        2 => solve_quadratic_in(&QuadExt::rational(c(1)), &QuadExt::rational(c(0)), var),
        4 if monic.is_even() => {
            let (pc, qc) = (c(2), c(0));
            match strategy {
                Strategy::PerfectSquare => solve_perfect_square_in(&pc, &qc, var),
                Strategy::Substitution => solve_substitution_in(&pc, &qc, var),
                Strategy::Auto => match solve_perfect_square_in(&pc, &qc, var) {
                    Err(Error::NotApplicable(_)) => solve_substitution_in(&pc, &qc, var),
                    other => other,
                },
            }
        }
        4 => Err(Error::UnsupportedDegree {
            degree,
            reason: "only biquadratic quartics (no odd-degree terms) are supported; \
                     the general quartic is out of scope",
        }),
        3 => Err(Error::UnsupportedDegree {
            degree,
            reason: "cubic equations are out of scope",
        }),
        _ => Err(Error::UnsupportedDegree {
            degree,
            reason: "equations of degree five or more are out of scope",
        }),
    }
}
