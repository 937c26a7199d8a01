//! Recursive-descent parsers for polynomial equations, matrices and
//! radical expressions. Offsets in errors are byte offsets into the input.

use goldroot::{Matrix, Polynomial, QuadExt, Radical, Rational, Sign};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

pub const MAX_EXPONENT: u64 = 16;

/// A polynomial equation as the user wrote it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedEquation {
    pub polynomial: Polynomial,
    /// `None` when the input mentions no variable at all.
    pub variable: Option<char>,
}

impl ParsedEquation {
    pub fn var(&self) -> char {
        self.variable.unwrap_or('x')
    }
}

struct Cursor<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            text,
            chars: text.char_indices().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    /// Next non-whitespace character, without consuming it.
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.text.len(), |&(o, _)| o)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{want}'")))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> ParseError {
        let offset = {
            self.skip_ws();
            self.offset()
        };
        match self.chars.get(self.pos) {
            Some((_, c)) => ParseError::syntax(offset, format!("expected {wanted}, found '{c}'")),
            None => ParseError::syntax(offset, format!("expected {wanted}, found end of input")),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Unsigned decimal integer; digits must be contiguous.
    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("a number"));
        }
        let from = self.chars[start].0;
        let to = self.offset();
        Ok(self.text[from..to].parse().expect("ascii digits"))
    }

    /// `int` or `int/int`.
    fn fraction(&mut self) -> Result<Rational, ParseError> {
        let n = self.integer()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = {
                self.skip_ws();
                self.offset()
            };
            let d = self.integer()?;
            if d.is_zero() {
                return Err(ParseError::syntax(at, "zero denominator"));
            }
            return Ok(Rational::new(n, d));
        }
        Ok(Rational::from_integer(n))
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.offset();
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_alphabetic()) {
            self.pos += 1;
        }
        &self.text[start..self.offset()]
    }
}

/// Parses `x^4 - 3x^2 + 1 = 0` and similar. A right-hand side other than
/// zero is moved to the left.
pub fn parse_polynomial(text: &str) -> Result<ParsedEquation, ParseError> {
    let mut cur = Cursor::new(text);
    let mut var = None;
    let lhs = parse_side(&mut cur, &mut var)?;
    let polynomial = if cur.eat('=') {
        let rhs = parse_side(&mut cur, &mut var)?;
        &lhs - &rhs
    } else {
        lhs
    };
    if !cur.at_end() {
        return Err(cur.unexpected("'+', '-', '=' or end of input"));
    }
    Ok(ParsedEquation {
        polynomial,
        variable: var,
    })
}

fn parse_side(cur: &mut Cursor<'_>, var: &mut Option<char>) -> Result<Polynomial, ParseError> {
    let mut acc = Polynomial::zero();
    let mut first = true;
    loop {
        let negative = match cur.peek() {
            Some('-') => {
                cur.pos += 1;
                true
            }
            Some('+') => {
                cur.pos += 1;
                false
            }
            _ if first => false,
            _ => break,
        };
        first = false;
        let term = parse_term(cur, var)?;
        acc = if negative { &acc - &term } else { &acc + &term };
    }
    Ok(acc)
}

fn parse_term(cur: &mut Cursor<'_>, var: &mut Option<char>) -> Result<Polynomial, ParseError> {
    let coef = match cur.peek() {
        Some(c) if c.is_ascii_digit() => Some(cur.fraction()?),
        _ => None,
    };
    let starred = coef.is_some() && cur.eat('*');
    let offset = {
        cur.skip_ws();
        cur.offset()
    };
    let letter = match cur.peek() {
        Some(c) if c.is_alphabetic() => {
            cur.pos += 1;
            Some(c)
        }
        _ if starred => return Err(cur.unexpected("a variable")),
        _ if coef.is_none() => return Err(cur.unexpected("a term")),
        _ => None,
    };
    let coef = coef.unwrap_or_else(Rational::one);
    let Some(letter) = letter else {
        return Ok(Polynomial::constant(coef));
    };
    match *var {
        Some(v) if v != letter => {
            return Err(ParseError::MixedVariables {
                offset,
                expected: v,
                found: letter,
            })
        }
        _ => *var = Some(letter),
    }
    let mut exponent = 1u64;
    if cur.eat('^') {
        let at = {
            cur.skip_ws();
            cur.offset()
        };
        let e = cur.integer()?;
        exponent = match u64::try_from(&e) {
            Ok(e) if e <= MAX_EXPONENT => e,
            Ok(e) => return Err(ParseError::ExponentTooLarge { offset: at, exponent: e }),
            Err(_) => {
                return Err(ParseError::ExponentTooLarge {
                    offset: at,
                    exponent: u64::MAX,
                })
            }
        };
    }
    Ok(Polynomial::monomial(coef, exponent as usize))
}

/// Parses rows separated by `;` with entries separated by `,` or whitespace.
pub fn parse_matrix(text: &str) -> Result<Matrix, ParseError> {
    let mut cur = Cursor::new(text);
    let mut rows: Vec<Vec<Rational>> = vec![Vec::new()];
    loop {
        match cur.peek() {
            None => break,
            Some(';') => {
                cur.pos += 1;
                rows.push(Vec::new());
            }
            Some(',') if !rows.last().expect("nonempty").is_empty() => {
                cur.pos += 1;
                if matches!(cur.peek(), None | Some(';') | Some(',')) {
                    return Err(cur.unexpected("a matrix entry"));
                }
            }
            Some('-') | Some('+') => {
                let negative = cur.bump() == Some('-');
                let v = cur.fraction()?;
                rows.last_mut().expect("nonempty").push(if negative { -v } else { v });
            }
            Some(c) if c.is_ascii_digit() => {
                let v = cur.fraction()?;
                rows.last_mut().expect("nonempty").push(v);
            }
            Some(_) => return Err(cur.unexpected("a matrix entry")),
        }
    }
    if let Some(i) = rows.iter().position(Vec::is_empty) {
        return Err(ParseError::syntax(cur.offset(), format!("row {} is empty", i + 1)));
    }
    let width = rows[0].len();
    if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
        return Err(ParseError::RaggedRows {
            row: i + 1,
            expected: width,
            found: row.len(),
        });
    }
    if width != rows.len() {
        return Err(ParseError::NonSquare {
            rows: rows.len(),
            cols: width,
        });
    }
    Matrix::from_rows(rows).map_err(|source| ParseError::Domain { offset: 0, source })
}

/// Parses an arithmetic expression with `sqrt(...)` that evaluates to a
/// [`Radical`]: at most one square root nested inside another.
pub fn parse_radical(text: &str) -> Result<Radical, ParseError> {
    let mut cur = Cursor::new(text);
    let value = expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.unexpected("an operator or end of input"));
    }
    Ok(value)
}

fn expr(cur: &mut Cursor<'_>) -> Result<Radical, ParseError> {
    let mut acc = term(cur)?;
    loop {
        let at = cur.offset();
        let negate = match cur.peek() {
            Some('+') => false,
            Some('-') => true,
            _ => return Ok(acc),
        };
        cur.pos += 1;
        let rhs = term(cur)?;
        let rhs = if negate { -rhs } else { rhs };
        acc = add(acc, rhs, at)?;
    }
}

fn term(cur: &mut Cursor<'_>) -> Result<Radical, ParseError> {
    let mut acc = unary(cur)?;
    loop {
        let at = {
            cur.skip_ws();
            cur.offset()
        };
        match cur.peek() {
            Some('*') => {
                cur.pos += 1;
                let rhs = unary(cur)?;
                acc = mul(acc, rhs, at)?;
            }
            Some('/') => {
                cur.pos += 1;
                let rhs = unary(cur)?;
                acc = div(acc, rhs, at)?;
            }
            // implicit product: 3sqrt(5), 2(1+sqrt(5))
            Some('(') => {
                let rhs = atom(cur)?;
                acc = mul(acc, rhs, at)?;
            }
            Some(c) if c.is_alphabetic() => {
                let rhs = atom(cur)?;
                acc = mul(acc, rhs, at)?;
            }
            _ => return Ok(acc),
        }
    }
}

fn unary(cur: &mut Cursor<'_>) -> Result<Radical, ParseError> {
    match cur.peek() {
        Some('-') => {
            cur.pos += 1;
            Ok(-unary(cur)?)
        }
        Some('+') => {
            cur.pos += 1;
            unary(cur)
        }
        _ => atom(cur),
    }
}

fn atom(cur: &mut Cursor<'_>) -> Result<Radical, ParseError> {
    let at = {
        cur.skip_ws();
        cur.offset()
    };
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => Ok(Radical::rational(Rational::from_integer(cur.integer()?))),
        Some('(') => {
            cur.pos += 1;
            let v = expr(cur)?;
            cur.expect(')')?;
            Ok(v)
        }
        Some(c) if c.is_alphabetic() => {
            let name = cur.word();
            if name != "sqrt" {
                return Err(ParseError::syntax(at, format!("unknown function '{name}'")));
            }
            cur.expect('(')?;
            let inner = expr(cur)?;
            cur.expect(')')?;
            sqrt(inner, at)
        }
        _ => Err(cur.unexpected("a number, '(' or sqrt")),
    }
}

fn domain(offset: usize) -> impl Fn(goldroot::Error) -> ParseError {
    move |source| ParseError::Domain { offset, source }
}

fn scope(offset: usize, message: &str) -> ParseError {
    ParseError::OutOfScope {
        offset,
        message: message.to_owned(),
    }
}

fn sqrt(inner: Radical, at: usize) -> Result<Radical, ParseError> {
    match inner {
        Radical::Quad(q) => {
            if q.is_negative() {
                return Err(domain(at)(goldroot::Error::NegativeRadicand));
            }
            match q.as_rational() {
                Some(r) => Radical::sqrt_rational(r).map_err(domain(at)),
                None => Radical::nested(Sign::Plus, q).map_err(domain(at)),
            }
        }
        Radical::Nested { .. } => Err(scope(at, "square roots nested more than one level deep")),
    }
}

fn add(x: Radical, y: Radical, at: usize) -> Result<Radical, ParseError> {
    match (x, y) {
        (Radical::Quad(p), Radical::Quad(q)) => p.checked_add(&q).map(Radical::Quad).map_err(domain(at)),
        (Radical::Quad(z), other) | (other, Radical::Quad(z)) if z.is_zero() => Ok(other),
        (
            Radical::Nested { sign: s1, radicand: e1 },
            Radical::Nested { sign: s2, radicand: e2 },
        ) if e1 == e2 => Ok(if s1 == s2 {
            // 2√e = √(4e)
            let four = QuadExt::rational(Rational::from_integer(4.into()));
            Radical::Nested {
                sign: s1,
                radicand: e1.checked_mul(&four).map_err(domain(at))?,
            }
        } else {
            Radical::rational(Rational::zero())
        }),
        _ => Err(scope(at, "a sum involving a nested square root is not a single radical")),
    }
}

fn mul(x: Radical, y: Radical, at: usize) -> Result<Radical, ParseError> {
    match (x, y) {
        (Radical::Quad(p), Radical::Quad(q)) => p.checked_mul(&q).map(Radical::Quad).map_err(domain(at)),
        (Radical::Quad(c), Radical::Nested { sign, radicand })
        | (Radical::Nested { sign, radicand }, Radical::Quad(c)) => {
            let Some(c) = c.as_rational() else {
                return Err(scope(at, "a nested square root times an irrational factor"));
            };
            if c.is_zero() {
                return Ok(Radical::rational(Rational::zero()));
            }
            let sign = if c.is_negative() { sign.flip() } else { sign };
            Ok(Radical::Nested {
                sign,
                radicand: radicand.scale(&(c * c)),
            })
        }
        (
            Radical::Nested { sign: s1, radicand: e1 },
            Radical::Nested { sign: s2, radicand: e2 },
        ) => Ok(Radical::Nested {
            sign: s1 * s2,
            radicand: e1.checked_mul(&e2).map_err(domain(at))?,
        }),
    }
}

fn div(x: Radical, y: Radical, at: usize) -> Result<Radical, ParseError> {
    let inverse = match y {
        Radical::Quad(q) => Radical::Quad(q.inv().map_err(domain(at))?),
        Radical::Nested { sign, radicand } => Radical::Nested {
            sign,
            radicand: radicand.inv().map_err(domain(at))?,
        },
    };
    mul(x, inverse, at)
}

#[cfg(test)]
mod tests {
    use super::*;
    use goldroot::rational::{int, rat};

    fn coeffs(text: &str) -> Vec<Rational> {
        parse_polynomial(text).unwrap().polynomial.coeffs().to_vec()
    }

    #[test]
    fn biquadratic_equation() {
        assert_eq!(
            coeffs("x^4 - 3x^2 + 1 = 0"),
            vec![int(1), int(0), int(-3), int(0), int(1)]
        );
        assert_eq!(coeffs("x"), vec![int(0), int(1)]);
        assert_eq!(coeffs("1/2x^2 - 3/2"), vec![rat(-3, 2), int(0), rat(1, 2)]);
        assert_eq!(coeffs("2*t^2 = 2"), vec![int(-2), int(0), int(2)]);
        assert_eq!(coeffs(" - y ^ 2 + y^2 + 5"), vec![int(5)]);
        assert_eq!(parse_polynomial("λ^2 - 1").unwrap().variable, Some('λ'));
    }

    #[test]
    fn polynomial_errors() {
        assert_eq!(
            parse_polynomial("x^2 + y"),
            Err(ParseError::MixedVariables {
                offset: 6,
                expected: 'x',
                found: 'y'
            })
        );
        assert_eq!(
            parse_polynomial("x^17"),
            Err(ParseError::ExponentTooLarge {
                offset: 2,
                exponent: 17
            })
        );
        assert!(matches!(
            parse_polynomial("x^2 +"),
            Err(ParseError::Syntax { offset: 5, .. })
        ));
        assert!(matches!(
            parse_polynomial("3x x"),
            Err(ParseError::Syntax { offset: 3, .. })
        ));
        assert!(matches!(
            parse_polynomial("1/0x"),
            Err(ParseError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(parse_polynomial(""), Err(ParseError::Syntax { offset: 0, .. })));
        assert!(matches!(parse_polynomial("2*"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn matrices() {
        let m = parse_matrix("0,1,0,0; 1,0,1,0; 0,1,0,1; 0,0,1,0").unwrap();
        assert_eq!(m, Matrix::path_adjacency(4).unwrap());
        let m = parse_matrix("5").unwrap();
        assert_eq!(m.dim(), 1);
        let m = parse_matrix("1 -1/2; 3/4 , 2").unwrap();
        assert_eq!(m.get(0, 1), &rat(-1, 2));
        assert_eq!(
            parse_matrix("1,2; 3"),
            Err(ParseError::RaggedRows {
                row: 2,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_matrix("1,2; 3,4; 5,6"),
            Err(ParseError::NonSquare { rows: 3, cols: 2 })
        );
        assert!(matches!(parse_matrix("1,,2"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_matrix("1;"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_matrix("a"), Err(ParseError::Syntax { offset: 0, .. })));
    }

    #[test]
    fn radicals() {
        let rho = QuadExt::new(rat(1, 2), rat(1, 2), 5).unwrap();
        assert_eq!(parse_radical("(1+sqrt(5))/2").unwrap(), Radical::Quad(rho.clone()));
        assert_eq!(parse_radical("(sqrt(5) + 1) / 2").unwrap(), Radical::Quad(rho));
        let e = QuadExt::new(rat(3, 2), rat(1, 2), 5).unwrap();
        assert_eq!(
            parse_radical("sqrt((3+sqrt(5))/2)").unwrap(),
            Radical::nested(Sign::Plus, e.clone()).unwrap()
        );
        assert_eq!(
            parse_radical("-sqrt((3+sqrt(5))/2)").unwrap(),
            Radical::nested(Sign::Minus, e.clone()).unwrap()
        );
        // √e / 2 = √(e/4)
        assert_eq!(
            parse_radical("sqrt(6+2sqrt(5))/2").unwrap(),
            Radical::nested(Sign::Plus, e).unwrap()
        );
        assert_eq!(
            parse_radical("3*sqrt(20)").unwrap(),
            Radical::Quad(QuadExt::new(int(0), int(6), 5).unwrap())
        );
        assert_eq!(parse_radical("sqrt(9/4)").unwrap(), Radical::rational(rat(3, 2)));
    }

    #[test]
    fn radical_errors() {
        assert!(matches!(
            parse_radical("sqrt(sqrt(2+sqrt(3)))"),
            Err(ParseError::OutOfScope { .. })
        ));
        assert!(matches!(
            parse_radical("1 + sqrt(2+sqrt(3))"),
            Err(ParseError::OutOfScope { .. })
        ));
        assert!(matches!(
            parse_radical("sqrt(2) + sqrt(3)"),
            Err(ParseError::Domain {
                source: goldroot::Error::MixedFields { .. },
                ..
            })
        ));
        assert!(matches!(
            parse_radical("sqrt(1-sqrt(5))"),
            Err(ParseError::Domain {
                source: goldroot::Error::NegativeRadicand,
                ..
            })
        ));
        assert!(matches!(
            parse_radical("1/0"),
            Err(ParseError::Domain {
                source: goldroot::Error::DivisionByZero,
                ..
            })
        ));
        assert!(matches!(parse_radical("cbrt(2)"), Err(ParseError::Syntax { offset: 0, .. })));
        assert!(matches!(parse_radical("(1+2"), Err(ParseError::Syntax { offset: 4, .. })));
    }
}
