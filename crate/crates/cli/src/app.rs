//! Argument handling and verb dispatch.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use goldroot::denest::{self, DenestResult};
use goldroot::solver::{self, nth_root_representation, SolutionSet, Strategy};
use goldroot::{Polynomial, Radical};

use crate::error::{CliError, ParseError, EXIT_PARSE};
use crate::json;
use crate::parse::{parse_matrix, parse_polynomial, parse_radical};

#[derive(Debug, Parser)]
#[command(
    name = "goldroot",
    version,
    about = "Exact solver for quadratic and biquadratic equations with nested-radical roots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    /// Print the numbered derivation steps.
    #[arg(long, global = true)]
    pub trace: bool,

    /// Fractional digits in decimal approximations.
    #[arg(long, global = true, default_value_t = 10,
          value_parser = clap::value_parser!(u32).range(1..=100_000))]
    pub digits: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Biquadratic algorithm.
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Solve a polynomial equation, e.g. "x^4 - 3x^2 + 1 = 0".
    Solve {
        #[arg(allow_hyphen_values = true)]
        equation: String,
    },
    /// Characteristic polynomial of a matrix given as "a,b; c,d".
    Charpoly {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Eigenvalues: the characteristic polynomial, then solve.
    Eig {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Denest a radical such as "sqrt((3+sqrt(5))/2)".
    Denest {
        #[arg(allow_hyphen_values = true)]
        radical: String,
    },
    /// Decide whether two radical expressions are the same number.
    Equal {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// The golden ratio as the nth root of its nth power.
    Golden {
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Exact value and decimal expansion of a radical expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    PerfectSquare,
    Substitution,
}

impl From<MethodArg> for Strategy {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Strategy::Auto,
            MethodArg::PerfectSquare => Strategy::PerfectSquare,
            MethodArg::Substitution => Strategy::Substitution,
        }
    }
}

/// What a run produced. `main` copies this to the process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, stdin),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            }
        }
    }
}

/// Executes an already-parsed command.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let mut input = Input { stdin, cache: None };
    match dispatch(cli, &mut input) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err((e, text)) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: diagnostic(&e, text.as_deref()),
        },
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    cache: Option<String>,
}

impl Input<'_> {
    /// The argument itself, or standard input when it is "-".
    fn resolve(&mut self, arg: &str) -> Result<String, CliError> {
        if arg != "-" {
            return Ok(arg.to_owned());
        }
        if self.cache.is_none() {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            self.cache = Some(s.trim().to_owned());
        }
        Ok(self.cache.clone().expect("filled above"))
    }
}

type Failure = (CliError, Option<String>);

fn located(text: &str) -> impl Fn(ParseError) -> Failure + '_ {
    move |e| (CliError::Parse(e), Some(text.to_owned()))
}

fn dispatch(cli: &Cli, input: &mut Input<'_>) -> Result<String, Failure> {
    let digits = cli.digits as usize;
    let json = cli.format == Format::Json;
    let plain = |e: CliError| (e, None);
    // parse errors are reported together with the text they point into
    let mut read = |arg: &str| input.resolve(arg).map_err(plain);

    match &cli.verb {
        Verb::Solve { equation } => {
            let text = read(equation)?;
            let eq = parse_polynomial(&text).map_err(located(&text))?;
            let var = eq.var();
            let set = solver::solve_with(&eq.polynomial, cli.method.into(), var)
                .map_err(|e| plain(e.into()))?;
            Ok(render_solution(cli, &set, var, None, digits, json))
        }
        Verb::Charpoly { matrix } => {
            let text = read(matrix)?;
            let m = parse_matrix(&text).map_err(located(&text))?;
            let p = m.charpoly();
            Ok(if json {
                json::to_string(&json::CharpolyJson {
                    schema: json::SCHEMA,
                    charpoly: json::poly_to_json(&p, 'x'),
                })
            } else {
                format!("{}\n", p.render('x'))
            })
        }
        Verb::Eig { matrix } => {
            let text = read(matrix)?;
            let m = parse_matrix(&text).map_err(located(&text))?;
            let p = m.charpoly();
            let set =
                solver::solve_with(&p, cli.method.into(), 'x').map_err(|e| plain(e.into()))?;
            Ok(render_solution(cli, &set, 'x', Some(&p), digits, json))
        }
        Verb::Denest { radical } => {
            let text = read(radical)?;
            let x = parse_radical(&text).map_err(located(&text))?;
            let result = match &x {
                Radical::Nested { radicand, .. } => {
                    denest::denest_sqrt(radicand).map_err(|e| plain(e.into()))?
                }
                Radical::Quad(q) => DenestResult::Denested {
                    value: q.clone(),
                    witness: denest::Witness::Rational,
                },
            };
            let value = denest::canonicalize(&x);
            if json {
                return Ok(json::to_string(&json::DenestJson {
                    schema: json::SCHEMA,
                    input: json::radical_to_json(&x, digits),
                    denested: result.is_denested(),
                    value: json::radical_to_json(&value, digits),
                }));
            }
            let mut out = String::new();
            match (&x, result.is_denested()) {
                (Radical::Quad(_), _) => writeln!(out, "{x} is not nested").unwrap(),
                (_, true) => writeln!(out, "{x} = {value}").unwrap(),
                (_, false) => writeln!(out, "{x} does not denest over its field").unwrap(),
            }
            if cli.trace {
                if let DenestResult::Denested {
                    witness: denest::Witness::Field { norm_root, branch },
                    ..
                } = &result
                {
                    let e = x.square();
                    let (a, b, d) = (e.a(), e.b(), e.d());
                    writeln!(out, "  1. a^2 - b^2*d = ({a})^2 - ({b})^2*{d} = {}", e.norm()).unwrap();
                    writeln!(out, "  2. sqrt({}) = {norm_root}", e.norm()).unwrap();
                    let x2 = if branch.as_i8() > 0 { a + norm_root } else { a - norm_root } / goldroot::rational::int(2);
                    let op = if branch.as_i8() > 0 { '+' } else { '-' };
                    writeln!(out, "  3. x^2 = ({a} {op} {norm_root})/2 = {x2}").unwrap();
                    let root = result.value().expect("denested");
                    writeln!(out, "  4. y = b/(2x), so sqrt({e}) = {root}").unwrap();
                }
            }
            writeln!(out, "~ {}", value.to_decimal(digits)).unwrap();
            Ok(out)
        }
        Verb::Equal { left, right } => {
            let lt = read(left)?;
            let l = parse_radical(&lt).map_err(located(&lt))?;
            let rt = read(right)?;
            let r = parse_radical(&rt).map_err(located(&rt))?;
            let same = denest::equal(&l, &r);
            Ok(if json {
                json::to_string(&json::EqualJson {
                    schema: json::SCHEMA,
                    equal: same,
                    left: json::radical_to_json(&l, digits),
                    right: json::radical_to_json(&r, digits),
                })
            } else {
                format!("{same}\n")
            })
        }
        Verb::Golden { n } => {
            let rep = nth_root_representation(*n).map_err(|e| plain(e.into()))?;
            let check = rep.verify(digits);
            let kind = if check.exact.is_some() { "exact" } else { "decimal" };
            if json {
                return Ok(json::to_string(&json::GoldenJson {
                    schema: json::SCHEMA,
                    n: *n,
                    representation: rep.to_string(),
                    inner: json::quad_to_json(&rep.inner),
                    check: kind.to_owned(),
                    holds: check.holds(),
                    root_decimal: check.root_decimal,
                    rho_decimal: check.rho_decimal,
                }));
            }
            let verdict = if check.holds() { "holds" } else { "FAILS" };
            let mut out = String::new();
            writeln!(out, "{rep}").unwrap();
            match check.exact {
                Some(_) => writeln!(out, "check: exact, {verdict}").unwrap(),
                None => writeln!(out, "check: {digits} digits, {verdict}").unwrap(),
            }
            writeln!(out, "root: {}", check.root_decimal).unwrap();
            writeln!(out, "rho:  {}", check.rho_decimal).unwrap();
            Ok(out)
        }
        Verb::Eval { expr } => {
            let text = read(expr)?;
            let x = parse_radical(&text).map_err(located(&text))?;
            let value = denest::canonicalize(&x);
            Ok(if json {
                json::to_string(&json::EvalJson {
                    schema: json::SCHEMA,
                    value: json::radical_to_json(&value, digits),
                })
            } else {
                format!("{value}\n~ {}\n", value.to_decimal(digits))
            })
        }
    }
}

fn render_solution(
    cli: &Cli,
    set: &SolutionSet,
    var: char,
    charpoly: Option<&Polynomial>,
    digits: usize,
    json: bool,
) -> String {
    if json {
        return json::to_string(&json::solution_to_json(set, var, charpoly, digits));
    }
    let mut out = String::new();
    if let Some(p) = charpoly {
        writeln!(out, "charpoly: {}", p.render(var)).unwrap();
    }
    writeln!(out, "method: {}", set.method.as_str()).unwrap();
    if cli.trace {
        writeln!(out, "trace:").unwrap();
        for (i, step) in set.trace.iter().enumerate() {
            writeln!(out, "  {}. {step}", i + 1).unwrap();
        }
    }
    if set.roots.is_empty() {
        writeln!(out, "no real roots").unwrap();
    }
    for (i, root) in set.roots.iter().enumerate() {
        writeln!(out, "{var}{} = {root}  ~ {}", i + 1, root.to_decimal(digits)).unwrap();
    }
    out
}

/// `error: ...`, followed by the input and a caret when there is a position.
fn diagnostic(e: &CliError, text: Option<&str>) -> String {
    let mut out = format!("error: {e}\n");
    let offset = match e {
        CliError::Parse(
            ParseError::Syntax { offset, .. }
            | ParseError::MixedVariables { offset, .. }
            | ParseError::ExponentTooLarge { offset, .. }
            | ParseError::OutOfScope { offset, .. }
            | ParseError::Domain { offset, .. },
        ) => Some(*offset),
        _ => None,
    };
    if let (Some(offset), Some(text)) = (offset, text) {
        if !text.contains('\n') {
            let column = text[..offset.min(text.len())].chars().count();
            writeln!(out, "  {text}\n  {}^", " ".repeat(column)).unwrap();
        }
    }
    out
}
