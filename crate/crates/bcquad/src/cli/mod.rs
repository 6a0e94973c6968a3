//! Command-line front end. Every command builds a [`Report`], printed as
//! text or as JSON; both carry the same canonical strings.
//!
//! Exit codes: `0` success, `1` usage, `2` parse error, `3` algebra error,
//! `4` failed precondition.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::bccurve::{bc_curve, bc_vanishing_suite, CurveError};
use crate::coeffs::{CoeffError, ParamScalar, SymbolTable};
use crate::factor::{common_right_factor, right_factors, FactorError};
use crate::parse::{parse_elem, parse_scalar, ParseError};
use crate::pbw::{pbw_check, DEFAULT_DEPTH};
use crate::qalgebra::{commutes, AlgebraError, AlgebraSpec, GradedSlice, QElem};
use crate::resultants::{
    bezout_certificate, render_grid, resultant_sequence, subresultant, sylvester_homogeneous,
    ResultantError,
};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_ALGEBRA: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "bcquad",
    version,
    about = "Resultants and Burchnall-Chaundy curves in Q(a,b,c)"
)]
struct Cli {
    /// Parameters `a,b,c`: rationals or symbol names, e.g. "a,-1,c" or "0,b,0".
    #[arg(
        long,
        global = true,
        default_value = "a,-1,c",
        allow_hyphen_values = true
    )]
    algebra: String,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Extra central symbols, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    symbols: Vec<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Normal form of f*g.
    Mul {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Whether f*g = g*f.
    Commute {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Coefficients gamma(i,j) of x^i*y^j and the homogeneous components.
    Gamma {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Sylvester matrix of two homogeneous elements.
    Sylvester {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Determinant of the homogeneous Sylvester matrix.
    ResHomogeneous {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Resultant of the sequence f, yf, ..., g, yg, ...
    Res {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Subresultant of level L.
    Subres {
        #[arg(long)]
        level: u32,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// F1, F2 with Res(f,g) = F1*f + F2*g.
    Bezout {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Curve Res(f - s, g - t) of a commuting pair.
    BcCurve {
        /// Evaluate the reduced curve at (f, g).
        #[arg(long)]
        verify: bool,
        /// Also reduce and evaluate these subresultant levels.
        #[arg(long, value_delimiter = ',')]
        levels: Vec<u32>,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Right factors of f, or common right factors of f and g.
    RightFactor {
        #[arg(long, default_value_t = 2)]
        bound: u32,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Powers of the companion matrix [[b, a], [-c, 1]].
    PbwCheck {
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
    },
}

/// A value in [`Report::result`]: one canonical string or a list of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Field {
    Text(String),
    List(Vec<String>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub algebra: String,
    pub input: Vec<String>,
    pub result: BTreeMap<String, Field>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Report {
    fn text(&mut self, k: &str, v: impl ToString) {
        self.result
            .insert(k.to_string(), Field::Text(v.to_string()));
    }

    fn list<I: IntoIterator<Item = S>, S: ToString>(&mut self, k: &str, v: I) {
        self.result.insert(
            k.to_string(),
            Field::List(v.into_iter().map(|s| s.to_string()).collect()),
        );
    }

    /// Text rendering; a lone result is printed bare.
    pub fn render_text(&self) -> String {
        let lone = self.result.len() == 1
            && self.matrices.is_empty()
            && self.residue.is_none()
            && self.conditions.is_empty();
        if lone {
            if let Some(Field::Text(v)) = self.result.values().next() {
                return v.clone();
            }
        }
        let mut out = String::new();
        for (k, v) in &self.result {
            match v {
                Field::Text(s) => writeln!(out, "{}: {}", k, s).unwrap(),
                Field::List(items) if items.is_empty() => writeln!(out, "{}: none", k).unwrap(),
                Field::List(items) => {
                    writeln!(out, "{}:", k).unwrap();
                    for i in items {
                        writeln!(out, "  {}", i).unwrap();
                    }
                }
            }
        }
        for (k, m) in &self.matrices {
            writeln!(out, "{}:\n{}", k, render_grid(m)).unwrap();
        }
        if let Some(r) = &self.residue {
            writeln!(out, "residue: {}", r).unwrap();
        }
        for c in &self.conditions {
            writeln!(out, "condition: {}", c).unwrap();
        }
        out.trim_end().to_string()
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::new(EXIT_PARSE, e)
    }
}

impl From<CoeffError> for Failure {
    fn from(e: CoeffError) -> Self {
        let code = match e {
            CoeffError::BadSymbol(_) | CoeffError::UnknownSymbol(_) => EXIT_PARSE,
            _ => EXIT_ALGEBRA,
        };
        Failure::new(code, e)
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        let code = match e {
            AlgebraError::NotHomogeneous => EXIT_PRECONDITION,
            _ => EXIT_ALGEBRA,
        };
        Failure::new(code, e)
    }
}

impl From<ResultantError> for Failure {
    fn from(e: ResultantError) -> Self {
        match e {
            ResultantError::Algebra(a) => a.into(),
            ResultantError::Coeff(c) => c.into(),
            other => Failure::new(EXIT_PRECONDITION, other),
        }
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        match e {
            CurveError::Resultant(r) => r.into(),
            CurveError::Algebra(a) => a.into(),
            other => Failure::new(EXIT_PRECONDITION, other),
        }
    }
}

impl From<FactorError> for Failure {
    fn from(e: FactorError) -> Self {
        match e {
            FactorError::Algebra(a) => a.into(),
            FactorError::Coeff(c) => c.into(),
            other => Failure::new(EXIT_PRECONDITION, other),
        }
    }
}

fn parse_params(table: &Arc<SymbolTable>, spec: &str) -> Result<[ParamScalar; 3], Failure> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(Failure::new(
            EXIT_PARSE,
            format!(
                "--algebra takes three comma-separated scalars a,b,c; got `{}`",
                spec
            ),
        ));
    }
    Ok([
        parse_scalar(table, parts[0])?,
        parse_scalar(table, parts[1])?,
        parse_scalar(table, parts[2])?,
    ])
}

struct Session {
    alg: Arc<AlgebraSpec>,
}

impl Session {
    fn elem(&self, s: &str) -> Result<QElem, Failure> {
        Ok(parse_elem(&self.alg, s)?)
    }

    fn report(&self, inputs: &[&String]) -> Report {
        Report {
            algebra: self.alg.to_string(),
            input: inputs.iter().map(|s| s.to_string()).collect(),
            warnings: self.alg.warnings().to_vec(),
            ..Report::default()
        }
    }
}

fn slice(e: QElem) -> Result<GradedSlice, Failure> {
    Ok(GradedSlice::new(e)?)
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let table = SymbolTable::with_extra(cli.symbols.iter().filter(|s| !s.is_empty()))?;
    let [a, b, c] = parse_params(&table, &cli.algebra)?;
    if let Cmd::PbwCheck { depth } = &cli.cmd {
        let r = pbw_check(&a, &b, &c, *depth);
        let mut rep = Report {
            algebra: format!("Q({}, {}, {})", a, b, c),
            input: vec![format!("depth {}", depth)],
            ..Report::default()
        };
        rep.text("verdict", r.verdict);
        rep.list("lower_right_entries", &r.lower_right_entries);
        rep.conditions = r.notes;
        return Ok(rep);
    }
    let s = Session {
        alg: AlgebraSpec::infer(a, b, c)?,
    };
    Ok(match &cli.cmd {
        Cmd::Mul { f, g } => {
            let mut rep = s.report(&[f, g]);
            rep.text("product", &s.elem(f)? * &s.elem(g)?);
            rep
        }
        Cmd::Commute { f, g } => {
            let (fe, ge) = (s.elem(f)?, s.elem(g)?);
            let mut rep = s.report(&[f, g]);
            rep.text("commutes", commutes(&fe, &ge)?);
            rep.text("fg", &fe * &ge);
            rep.text("gf", &ge * &fe);
            rep
        }
        Cmd::Gamma { f } => {
            let fe = s.elem(f)?;
            let mut rep = s.report(&[f]);
            rep.list(
                "gamma",
                fe.terms()
                    .iter()
                    .map(|(i, j, c)| format!("gamma({},{}) = {}", i, j, c)),
            );
            rep.list(
                "components",
                fe.homogeneous_components()
                    .iter()
                    .map(|h| format!("H{}: {}", h.degree, h.element)),
            );
            rep
        }
        Cmd::Sylvester { f, g } | Cmd::ResHomogeneous { f, g } => {
            let m = sylvester_homogeneous(&slice(s.elem(f)?)?, &slice(s.elem(g)?)?)?;
            let mut rep = s.report(&[f, g]);
            rep.text("resultant", m.determinant()?);
            rep.matrices.insert("sylvester".into(), m.to_strings());
            rep
        }
        Cmd::Res { f, g } => {
            let r = resultant_sequence(&s.elem(f)?, &s.elem(g)?)?;
            let mut rep = s.report(&[f, g]);
            rep.text("resultant", &r.value);
            rep.text("swapped", r.swapped);
            rep.text("sign", r.sign);
            rep.matrices
                .insert("expansion".into(), r.matrix.to_strings());
            rep
        }
        Cmd::Subres { level, f, g } => {
            let r = subresultant(&s.elem(f)?, &s.elem(g)?, *level)?;
            let mut rep = s.report(&[f, g]);
            rep.text("subresultant", &r.value);
            rep.text("level", level);
            rep.matrices
                .insert("expansion".into(), r.matrix.to_strings());
            rep
        }
        Cmd::Bezout { f, g } => {
            let cert = bezout_certificate(&s.elem(f)?, &s.elem(g)?)?;
            let mut rep = s.report(&[f, g]);
            rep.text("F1", &cert.f1);
            rep.text("F2", &cert.f2);
            rep.text("resultant", &cert.resultant);
            rep.text("identity_checked", cert.remainder_identity_checked);
            rep
        }
        Cmd::BcCurve {
            verify,
            levels,
            f,
            g,
        } => {
            let (fe, ge) = (s.elem(f)?, s.elem(g)?);
            let curve = bc_curve(&fe, &ge)?;
            let mut rep = s.report(&[f, g]);
            rep.text("raw", &curve.raw);
            rep.text("reduced", &curve.reduced);
            if *verify {
                rep.residue = Some(curve.residue.to_string());
            }
            if !levels.is_empty() {
                for l in bc_vanishing_suite(&fe, &ge, levels)? {
                    rep.text(&format!("level_{}_reduced", l.level), &l.reduced);
                    rep.text(&format!("level_{}_residue", l.level), &l.residue);
                }
            }
            rep
        }
        Cmd::RightFactor { bound, f, g } => {
            let fe = s.elem(f)?;
            match g {
                None => {
                    let q = right_factors(&fe, *bound)?;
                    let mut rep = s.report(&[f]);
                    rep.list("divisors", q.solutions.iter().map(|r| &r.divisor));
                    rep.list(
                        "quotients",
                        q.solutions.iter().map(|r| {
                            if r.denominator.is_one() {
                                r.quotient.to_string()
                            } else {
                                format!("({})/({})", r.quotient, r.denominator)
                            }
                        }),
                    );
                    rep.conditions = q.conditions.iter().map(|c| c.to_string()).collect();
                    rep
                }
                Some(g) => {
                    let ge = s.elem(g)?;
                    let r = common_right_factor(&fe, &ge, *bound)?;
                    let mut rep = s.report(&[f, g]);
                    rep.list("common_factors", r.factors.iter().map(|c| &c.factor));
                    rep.conditions = r.conditions.iter().map(|c| c.to_string()).collect();
                    rep
                }
            }
        }
        Cmd::PbwCheck { .. } => unreachable!("handled before the algebra is built"),
    })
}

/// Parses `argv` (program name first) and runs one command.
pub fn run_command(argv: &[String]) -> CommandOutput {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            return CommandOutput {
                code: if help { 0 } else { EXIT_USAGE },
                stdout: if help {
                    text.trim_end().to_string()
                } else {
                    String::new()
                },
                stderr: if help {
                    String::new()
                } else {
                    text.trim_end().to_string()
                },
            };
        }
    };
    match execute(&cli) {
        Ok(rep) => {
            let (stdout, stderr) = if cli.json {
                (
                    serde_json::to_string_pretty(&rep).expect("report serializes"),
                    String::new(),
                )
            } else {
                let warn: Vec<String> = rep
                    .warnings
                    .iter()
                    .map(|w| format!("warning: {}", w))
                    .collect();
                (rep.render_text(), warn.join("\n"))
            };
            CommandOutput {
                code: 0,
                stdout,
                stderr,
            }
        }
        Err(f) => CommandOutput {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}", f.message),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CommandOutput {
        let mut v = vec!["bcquad".to_string()];
        v.extend(args.iter().map(|s| s.to_string()));
        run_command(&v)
    }

    #[test]
    fn mul_prints_bare_product() {
        let out = run(&["mul", "--algebra", "a,-1,c", "y^2", "x^2*y^2 + x^2*y"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "x^2*y^4 + x^2*y^3");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["mul", "x y", "x"]).code, EXIT_PARSE);
        assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(
            run(&["mul", "--algebra", "1,-1,1", "x", "y"]).code,
            EXIT_ALGEBRA
        );
        assert_eq!(run(&["bc-curve", "x", "y"]).code, EXIT_PRECONDITION);
    }
}
