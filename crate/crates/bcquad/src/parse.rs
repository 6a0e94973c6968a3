//! Expression front end.
//!
//! ```text
//! expr   := ["+" | "-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" nat)?
//! atom   := rational | ident | "(" expr ")"
//! ```
//!
//! A rational is `123` or `123/45`. `x` and `y` are the generators; any
//! other identifier must be a central symbol of the session table.
//! Multiplication must be written out, so `xy` is an (unknown) identifier
//! rather than a product. The optional leading sign lets printed output
//! such as `-x*y + 1` parse back.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::coeffs::{ParamScalar, Rational, SymbolTable};
use crate::qalgebra::{AlgebraSpec, QElem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("`{0}` must not involve x or y")]
    NotScalar(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
}

/// Parsed expression; products keep the written operand order.
#[derive(Debug, Clone, PartialEq)]
pub enum Ast {
    /// Signed summands; `true` marks subtraction.
    Sum(Vec<(bool, Ast)>),
    Product(Vec<Ast>),
    Power(Box<Ast>, u32),
    Rational(Rational),
    Generator(Generator),
    Symbol(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let ch = bytes[i];
        match ch {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' | b'-' | b'*' | b'^' | b'(' | b')' => {
                out.push((
                    i,
                    match ch {
                        b'+' => Tok::Plus,
                        b'-' => Tok::Minus,
                        b'*' => Tok::Star,
                        b'^' => Tok::Caret,
                        b'(' => Tok::LParen,
                        _ => Tok::RParen,
                    },
                ));
                i += 1;
            }
            b'0'..=b'9' => {
                let end = digits(i);
                let num: BigInt = input[i..end].parse().unwrap();
                if bytes.get(end) == Some(&b'/') {
                    let dend = digits(end + 1);
                    if dend == end + 1 {
                        return Err(ParseError::Syntax {
                            pos: end,
                            msg: "expected a denominator after `/`".into(),
                        });
                    }
                    let den: BigInt = input[end + 1..dend].parse().unwrap();
                    if den.is_zero() {
                        return Err(ParseError::Syntax {
                            pos: end + 1,
                            msg: "zero denominator".into(),
                        });
                    }
                    out.push((i, Tok::Num(Rational::new(num, den))));
                    i = dend;
                } else {
                    out.push((i, Tok::Num(Rational::from_integer(num))));
                    i = end;
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut j = i + 1;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                out.push((i, Tok::Ident(input[i..j].to_string())));
                i = j;
            }
            _ => {
                let shown = input[i..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{}`", shown),
                });
            }
        }
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut parts = Vec::new();
        let mut neg = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            parts.push((neg, self.term()?));
            neg = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        Ok(if parts.len() == 1 && !parts[0].0 {
            parts.pop().unwrap().1
        } else {
            Ast::Sum(parts)
        })
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut fs = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            fs.push(self.factor()?);
        }
        Ok(if fs.len() == 1 {
            fs.pop().unwrap()
        } else {
            Ast::Product(fs)
        })
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            match self.bump() {
                Tok::Num(n) if n.is_integer() && n >= Rational::zero() => {
                    let e: u32 = n.to_integer().try_into().map_err(|_| ParseError::Syntax {
                        pos: self.pos(),
                        msg: "exponent too large".into(),
                    })?;
                    return Ok(Ast::Power(Box::new(base), e));
                }
                _ => return self.err("expected a natural-number exponent after `^`"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Ast::Rational(n))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(match name.as_str() {
                    "x" => Ast::Generator(Generator::X),
                    "y" => Ast::Generator(Generator::Y),
                    _ => Ast::Symbol(name),
                })
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(e)
            }
            Tok::End => self.err("unexpected end of input"),
            t => self.err(format!("unexpected token {:?}", t)),
        }
    }
}

pub fn parse(input: &str) -> Result<Ast, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("trailing input (multiplication must be written with `*`)");
    }
    Ok(e)
}

/// Normal form of an expression, multiplying in the written order.
pub fn normalize(ast: &Ast, alg: &Arc<AlgebraSpec>) -> Result<QElem, ParseError> {
    let t = alg.table();
    Ok(match ast {
        Ast::Sum(parts) => {
            let mut acc = QElem::zero(alg);
            for (neg, a) in parts {
                let v = normalize(a, alg)?;
                acc = if *neg { &acc - &v } else { &acc + &v };
            }
            acc
        }
        Ast::Product(fs) => {
            let mut acc = QElem::one(alg);
            for a in fs {
                acc = &acc * &normalize(a, alg)?;
            }
            acc
        }
        Ast::Power(b, e) => normalize(b, alg)?.pow(*e),
        Ast::Rational(r) => QElem::constant(alg, ParamScalar::constant(t, r.clone())),
        Ast::Generator(Generator::X) => QElem::x(alg),
        Ast::Generator(Generator::Y) => QElem::y(alg),
        Ast::Symbol(name) => {
            let s = ParamScalar::symbol(t, name)
                .map_err(|_| ParseError::UnknownSymbol(name.clone()))?;
            QElem::constant(alg, s)
        }
    })
}

pub fn parse_elem(alg: &Arc<AlgebraSpec>, input: &str) -> Result<QElem, ParseError> {
    normalize(&parse(input)?, alg)
}

/// Parses a central scalar (no generators).
pub fn parse_scalar(table: &Arc<SymbolTable>, input: &str) -> Result<ParamScalar, ParseError> {
    fn go(ast: &Ast, t: &Arc<SymbolTable>, src: &str) -> Result<ParamScalar, ParseError> {
        Ok(match ast {
            Ast::Sum(parts) => {
                let mut acc = ParamScalar::zero(t);
                for (neg, a) in parts {
                    let v = go(a, t, src)?;
                    acc = if *neg { &acc - &v } else { &acc + &v };
                }
                acc
            }
            Ast::Product(fs) => {
                let mut acc = ParamScalar::one(t);
                for a in fs {
                    acc = &acc * &go(a, t, src)?;
                }
                acc
            }
            Ast::Power(b, e) => go(b, t, src)?.pow(*e),
            Ast::Rational(r) => ParamScalar::constant(t, r.clone()),
            Ast::Generator(_) => return Err(ParseError::NotScalar(src.to_string())),
            Ast::Symbol(name) => {
                ParamScalar::symbol(t, name).map_err(|_| ParseError::UnknownSymbol(name.clone()))?
            }
        })
    }
    go(&parse(input)?, table, input)
}
