//! Text syntax for chart expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'∧') factor | '/' INT)*
//! factor := INT ['/' INT] | NAME ['^' INT] | 'd'NAME | '∂'NAME | '(' expr ')' ['^' INT]
//! ```
//!
//! `NAME` is a chart coordinate. `dNAME` is its differential (only when
//! `dNAME` is not itself a coordinate) and `∂NAME` its coordinate field.
//! Parenthesised groups must be free of differentials and fields.

use num_bigint::BigInt;
use thiserror::Error;

use super::{Chart, Poly, PolyError, PolyForm, PolyVectorField, Result};
use crate::linalg::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    /// 1-based, counted in characters.
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Partial(String),
    Plus,
    Minus,
    Star,
    Wedge,
    Slash,
    Caret,
    Open,
    Close,
    End,
}

fn lex(text: &str) -> std::result::Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let name_char = |c: char| c.is_alphanumeric() || c == '_';
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("digits")), col));
            continue;
        }
        if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && name_char(chars[i]) {
                i += 1;
            }
            out.push((Tok::Name(chars[start..i].iter().collect()), col));
            continue;
        }
        if c == '∂' {
            i += 1;
            let start = i;
            while i < chars.len() && name_char(chars[i]) {
                i += 1;
            }
            if start == i {
                return Err(ParseError {
                    column: col,
                    message: "expected a coordinate after `∂`".into(),
                });
            }
            out.push((Tok::Partial(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '∧' => Tok::Wedge,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            other => {
                return Err(ParseError {
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

/// One summand: coefficient, differentials in order, and coordinate fields.
struct Term {
    coeff: Poly,
    diffs: Vec<usize>,
    partials: Vec<usize>,
    column: usize,
}

struct Parser<'a> {
    chart: &'a Chart,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> std::result::Result<T, ParseError> {
        Err(ParseError {
            column: self.column(),
            message: message.into(),
        })
    }

    fn n(&self) -> usize {
        self.chart.dim()
    }

    fn expr(&mut self) -> std::result::Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Tok::Plus => {
                self.bump();
                false
            }
            Tok::Minus => {
                self.bump();
                true
            }
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = t.coeff.neg();
            }
            terms.push(t);
            negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        Ok(terms)
    }

    fn term(&mut self) -> std::result::Result<Term, ParseError> {
        let mut t = Term {
            coeff: Poly::one(self.n()),
            diffs: vec![],
            partials: vec![],
            column: self.column(),
        };
        self.factor(&mut t)?;
        loop {
            match self.peek() {
                Tok::Star | Tok::Wedge => {
                    self.bump();
                    self.factor(&mut t)?;
                }
                Tok::Slash => {
                    let col = self.column();
                    self.bump();
                    match self.bump() {
                        Tok::Int(den) if den != BigInt::from(0) => {
                            t.coeff = t
                                .coeff
                                .scale(&(Rat::from_integer(1.into()) / Rat::from_integer(den)))
                        }
                        Tok::Int(_) => {
                            return Err(ParseError {
                                column: col,
                                message: "zero denominator".into(),
                            })
                        }
                        _ => return self.err("expected an integer denominator"),
                    }
                }
                _ => break,
            }
        }
        Ok(t)
    }

    fn exponent(&mut self) -> std::result::Result<u32, ParseError> {
        if *self.peek() != Tok::Caret {
            return Ok(1);
        }
        self.bump();
        match self.bump() {
            Tok::Int(k) => u32::try_from(k).or_else(|_| self.err("exponent too large")),
            _ => self.err("expected an integer exponent"),
        }
    }

    fn factor(&mut self, t: &mut Term) -> std::result::Result<(), ParseError> {
        let col = self.column();
        match self.bump() {
            Tok::Int(num) => {
                let mut value = Rat::from_integer(num);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        Tok::Int(den) if den != BigInt::from(0) => value /= Rat::from_integer(den),
                        Tok::Int(_) => {
                            return Err(ParseError {
                                column: col,
                                message: "zero denominator".into(),
                            })
                        }
                        _ => return self.err("expected a denominator"),
                    }
                }
                t.coeff = t.coeff.scale(&value);
            }
            Tok::Name(name) => {
                if let Some(i) = self.chart.index(&name) {
                    let k = self.exponent()?;
                    t.coeff = t.coeff.mul(&Poly::var(self.n(), i).pow(k));
                } else if let Some(i) = name
                    .strip_prefix('d')
                    .and_then(|rest| self.chart.index(rest))
                {
                    t.diffs.push(i);
                } else {
                    return Err(ParseError {
                        column: col,
                        message: format!("unknown coordinate `{name}`"),
                    });
                }
            }
            Tok::Partial(name) => match self.chart.index(&name) {
                Some(i) => t.partials.push(i),
                None => {
                    return Err(ParseError {
                        column: col,
                        message: format!("unknown coordinate `{name}`"),
                    })
                }
            },
            Tok::Open => {
                let inner = self.expr()?;
                if self.bump() != Tok::Close {
                    return Err(ParseError {
                        column: col,
                        message: "unclosed `(`".into(),
                    });
                }
                let mut sum = Poly::zero(self.n());
                for it in inner {
                    if !it.diffs.is_empty() || !it.partials.is_empty() {
                        return Err(ParseError {
                            column: it.column,
                            message: "differentials and fields are not allowed inside parentheses"
                                .into(),
                        });
                    }
                    sum = sum.add(&it.coeff);
                }
                let k = self.exponent()?;
                t.coeff = t.coeff.mul(&sum.pow(k));
            }
            Tok::End => {
                return Err(ParseError {
                    column: col,
                    message: "unexpected end of input".into(),
                })
            }
            other => {
                return Err(ParseError {
                    column: col,
                    message: format!("unexpected {other:?}"),
                })
            }
        }
        Ok(())
    }

    fn parse_all(chart: &'a Chart, text: &str) -> std::result::Result<Vec<Term>, ParseError> {
        let mut p = Parser {
            chart,
            toks: lex(text)?,
            pos: 0,
        };
        let terms = p.expr()?;
        if *p.peek() != Tok::End {
            return p.err("unexpected trailing input");
        }
        Ok(terms)
    }
}

pub fn parse_poly(chart: &Chart, text: &str) -> Result<Poly> {
    let terms = Parser::parse_all(chart, text)?;
    let mut sum = Poly::zero(chart.dim());
    for t in terms {
        if !t.diffs.is_empty() || !t.partials.is_empty() {
            return Err(ParseError {
                column: t.column,
                message: "expected a polynomial".into(),
            }
            .into());
        }
        sum = sum.add(&t.coeff);
    }
    Ok(sum)
}

/// Parses a form; every term must carry the same number of differentials.
pub fn parse_form(chart: &Chart, text: &str) -> Result<PolyForm> {
    let terms = Parser::parse_all(chart, text)?;
    let degree = terms[0].diffs.len();
    let mut out = Vec::new();
    for t in terms {
        if !t.partials.is_empty() {
            return Err(ParseError {
                column: t.column,
                message: "vector fields are not allowed in a form".into(),
            }
            .into());
        }
        if t.diffs.len() != degree {
            return Err(ParseError {
                column: t.column,
                message: format!(
                    "term of degree {} in a form of degree {degree}",
                    t.diffs.len()
                ),
            }
            .into());
        }
        out.push((t.diffs, t.coeff));
    }
    PolyForm::from_terms(chart, degree, out)
}

/// Parses `Σ f_i ∂x_i`; every term must carry exactly one field.
pub fn parse_vector_field(chart: &Chart, text: &str) -> Result<PolyVectorField> {
    let terms = Parser::parse_all(chart, text)?;
    let mut comps = vec![Poly::zero(chart.dim()); chart.dim()];
    for t in terms {
        if t.partials.len() != 1 || !t.diffs.is_empty() {
            return Err(PolyError::Parse(ParseError {
                column: t.column,
                message: "each term needs exactly one coordinate field ∂x".into(),
            }));
        }
        comps[t.partials[0]] = comps[t.partials[0]].add(&t.coeff);
    }
    PolyVectorField::new(chart, comps)
}
