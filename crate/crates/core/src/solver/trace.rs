use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::quadext::QuadExt;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepLabel {
    Rewrite,
    PerfectSquare,
    TakeRoot,
    Substitute,
    QuadraticFormula,
    BackSubstitute,
}

impl StepLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            StepLabel::Rewrite => "Rewrite",
            StepLabel::PerfectSquare => "PerfectSquare",
            StepLabel::TakeRoot => "TakeRoot",
            StepLabel::Substitute => "Substitute",
            StepLabel::QuadraticFormula => "QuadraticFormula",
            StepLabel::BackSubstitute => "BackSubstitute",
        }
    }
}

impl fmt::Display for StepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One displayed line of a derivation: `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub label: StepLabel,
    pub lhs: String,
    pub rhs: String,
}

impl TraceStep {
    pub fn new(label: StepLabel, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        TraceStep {
            label,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.label, self.lhs, self.rhs)
    }
}

/// Renders `Σ c·var^k` term by term, without collecting like powers.
pub(crate) fn render_terms(terms: &[(QuadExt, usize)], var: char) -> String {
    let mut out = String::new();
    for (c, k) in terms {
        if c.is_zero() {
            continue;
        }
        let (negative, mag) = match c.as_rational() {
            Some(r) => (r.is_negative(), QuadExt::rational(r.abs())),
            None if c.a().is_zero() => (c.b().is_negative(), c.abs()),
            None => (false, c.clone()),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let unit = mag.as_rational().is_some_and(One::is_one);
        out.push_str(&match (mag.as_rational(), *k) {
            (_, 0) => mag.to_string(),
            _ if unit => power,
            (Some(r), _) => format!("{r}{power}"),
            (None, _) if mag.a().is_zero() => format!("{mag}*{power}"),
            (None, _) => format!("({mag})*{power}"),
        });
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn rational_terms(terms: &[(Rational, usize)], var: char) -> String {
    let terms: Vec<_> = terms
        .iter()
        .map(|(c, k)| (QuadExt::rational(c.clone()), *k))
        .collect();
    render_terms(&terms, var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn term_rendering() {
        let five = QuadExt::sqrt_of_squarefree(5);
        let terms = [
            (QuadExt::one(), 2),
            (-five.clone(), 1),
            (QuadExt::rational(int(1)), 0),
        ];
        assert_eq!(render_terms(&terms, 'x'), "x^2 - sqrt(5)*x + 1");
        let terms = [(QuadExt::new(int(1), int(1), 5).unwrap(), 1)];
        assert_eq!(render_terms(&terms, 'x'), "(1+sqrt(5))*x");
        assert_eq!(
            rational_terms(&[(int(1), 4), (int(-2), 2), (int(-1), 2), (rat(1, 2), 0)], 'y'),
            "y^4 - 2y^2 - y^2 + 1/2"
        );
    }
}
