//! Machine-readable output. Every document carries `"schema": 1`.

use goldroot::solver::{SolutionSet, TraceStep};
use goldroot::{Polynomial, QuadExt, Radical, Rational, Sign};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA: u32 = 1;

/// `a + b√d` with `a`, `b` written as `"p/q"` (or `"p"` for integers).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadJson {
    pub a: String,
    pub b: String,
    pub d: u64,
}

/// A root. Tier 1 fills `a`, `b`, `d`; tier 2 fills `sign` and `radicand`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalJson {
    pub tier: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<QuadJson>,
    /// Informational only; ignored when reading.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveJson {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub charpoly: Option<PolyJson>,
    pub method: String,
    pub variable: String,
    pub roots: Vec<RadicalJson>,
    pub trace: Vec<StepJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    /// Coefficients from the constant term upward.
    pub coefficients: Vec<String>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpolyJson {
    pub schema: u32,
    pub charpoly: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenestJson {
    pub schema: u32,
    pub input: RadicalJson,
    pub denested: bool,
    pub value: RadicalJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualJson {
    pub schema: u32,
    pub equal: bool,
    pub left: RadicalJson,
    pub right: RadicalJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenJson {
    pub schema: u32,
    pub n: u32,
    pub representation: String,
    /// ρⁿ, the quantity under the root.
    pub inner: QuadJson,
    /// `"exact"` or `"decimal"`.
    pub check: String,
    pub holds: bool,
    pub root_decimal: String,
    pub rho_decimal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalJson {
    pub schema: u32,
    pub value: RadicalJson,
}

pub fn quad_to_json(q: &QuadExt) -> QuadJson {
    QuadJson {
        a: q.a().to_string(),
        b: q.b().to_string(),
        d: q.d(),
    }
}

pub fn quad_from_json(q: &QuadJson) -> Result<QuadExt, CliError> {
    let a = rational(&q.a)?;
    let b = rational(&q.b)?;
    QuadExt::new(a, b, q.d).map_err(CliError::Solve)
}

fn rational(s: &str) -> Result<Rational, CliError> {
    let r: Rational = s
        .trim()
        .parse()
        .map_err(|_| CliError::Json(format!("'{s}' is not a rational number")))?;
    Ok(r)
}

pub fn radical_to_json(x: &Radical, digits: usize) -> RadicalJson {
    let (text, decimal) = (Some(x.to_string()), Some(x.to_decimal(digits)));
    match x {
        Radical::Quad(q) => RadicalJson {
            tier: 1,
            a: Some(q.a().to_string()),
            b: Some(q.b().to_string()),
            d: Some(q.d()),
            sign: None,
            radicand: None,
            text,
            decimal,
        },
        Radical::Nested { sign, radicand } => RadicalJson {
            tier: 2,
            a: None,
            b: None,
            d: None,
            sign: Some(sign.as_i8()),
            radicand: Some(quad_to_json(radicand)),
            text,
            decimal,
        },
    }
}

pub fn radical_from_json(x: &RadicalJson) -> Result<Radical, CliError> {
    let missing = |field: &str| CliError::Json(format!("tier-{} root without '{field}'", x.tier));
    match x.tier {
        1 => {
            let q = QuadJson {
                a: x.a.clone().ok_or_else(|| missing("a"))?,
                b: x.b.clone().ok_or_else(|| missing("b"))?,
                d: x.d.ok_or_else(|| missing("d"))?,
            };
            Ok(Radical::Quad(quad_from_json(&q)?))
        }
        2 => {
            let sign = match x.sign.ok_or_else(|| missing("sign"))? {
                1 => Sign::Plus,
                -1 => Sign::Minus,
                s => return Err(CliError::Json(format!("sign must be 1 or -1, found {s}"))),
            };
            let radicand = quad_from_json(x.radicand.as_ref().ok_or_else(|| missing("radicand"))?)?;
            Ok(Radical::nested(sign, radicand)?)
        }
        t => Err(CliError::Json(format!("unknown tier {t}"))),
    }
}

pub fn poly_to_json(p: &Polynomial, var: char) -> PolyJson {
    PolyJson {
        coefficients: p.coeffs().iter().map(ToString::to_string).collect(),
        text: p.render(var),
    }
}

pub fn step_to_json(step: &TraceStep) -> StepJson {
    StepJson {
        label: step.label.as_str().to_owned(),
        lhs: step.lhs.clone(),
        rhs: step.rhs.clone(),
    }
}

pub fn solution_to_json(
    set: &SolutionSet,
    var: char,
    charpoly: Option<&Polynomial>,
    digits: usize,
) -> SolveJson {
    SolveJson {
        schema: SCHEMA,
        charpoly: charpoly.map(|p| poly_to_json(p, var)),
        method: set.method.as_str().to_owned(),
        variable: var.to_string(),
        roots: set.roots.iter().map(|r| radical_to_json(r, digits)).collect(),
        trace: set.trace.iter().map(step_to_json).collect(),
    }
}

/// Reads the `roots` array back out of a `solve` or `eig` document.
pub fn roots_from_str(text: &str) -> Result<Vec<Radical>, CliError> {
    let doc: SolveJson = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
    if doc.schema != SCHEMA {
        return Err(CliError::Json(format!("unsupported schema {}", doc.schema)));
    }
    doc.roots.iter().map(radical_from_json).collect()
}

pub fn to_string<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use goldroot::rational::rat;

    #[test]
    fn tiers_round_trip() {
        let e = QuadExt::new(rat(3, 2), rat(-1, 2), 5).unwrap();
        for x in [
            Radical::Quad(QuadExt::new(rat(1, 2), rat(1, 2), 5).unwrap()),
            Radical::rational(rat(-7, 3)),
            Radical::nested(Sign::Minus, e).unwrap(),
        ] {
            let j = radical_to_json(&x, 5);
            let text = serde_json::to_string(&j).unwrap();
            let back: RadicalJson = serde_json::from_str(&text).unwrap();
            assert_eq!(radical_from_json(&back).unwrap(), x);
        }
    }

    #[test]
    fn tier_one_layout() {
        let x = Radical::Quad(QuadExt::new(rat(1, 2), rat(1, 2), 5).unwrap());
        let v = serde_json::to_value(radical_to_json(&x, 3)).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"tier": 1, "a": "1/2", "b": "1/2", "d": 5,
                               "text": "(1+sqrt(5))/2", "decimal": "1.618"})
        );
    }

    #[test]
    fn malformed_roots() {
        let bad = RadicalJson {
            tier: 2,
            a: None,
            b: None,
            d: None,
            sign: Some(2),
            radicand: Some(QuadJson {
                a: "1".into(),
                b: "0".into(),
                d: 2,
            }),
            text: None,
            decimal: None,
        };
        assert!(radical_from_json(&bad).is_err());
        assert!(roots_from_str("{}").is_err());
        let q = QuadJson {
            a: "x".into(),
            b: "0".into(),
            d: 2,
        };
        assert!(quad_from_json(&q).is_err());
    }
}
