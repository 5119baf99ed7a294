//! Textual format for field elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' integer)?
//! atom   := integer | name | 'g' | '(' expr ')'
//! ```
//!
//! Integers are read mod 2, `-` is the same as `+`, and `g` stands for γ.
//! Printing produces `u`, `u + v*g` or `v*g`, with rational coefficients written
//! `(p)/(q)`; printing then parsing is the identity.

use std::sync::Arc;

use super::poly::Poly;
use super::quadext::{QuadExtElem, Tower};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

pub const GAMMA: &str = "g";

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = cs[start..i].iter().collect();
            out.push(Tok::Int(text.parse().map_err(|_| Error::Parse(format!("bad integer {text}")))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
    tower: &'a Arc<Tower>,
    allow_gamma: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QuadExtElem> {
        let mut acc = self.term()?;
        while self.eat('+') || self.eat('-') {
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QuadExtElem> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat('/') {
                let d = self.factor()?;
                acc = acc.div(&d).ok_or(Error::DivisionByZero)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<QuadExtElem> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    let e = i64::try_from(e).map_err(|_| Error::Parse("exponent too large".into()))?;
                    base.pow(e).ok_or(Error::DivisionByZero)
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<QuadExtElem> {
        let tok = self.toks.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Int(n)) => Ok(if n % 2 == 0 {
                QuadExtElem::zero(self.tower)
            } else {
                QuadExtElem::one(self.tower)
            }),
            Some(Tok::Ident(name)) if name == GAMMA => {
                if self.allow_gamma {
                    Ok(QuadExtElem::gamma(self.tower))
                } else {
                    Err(Error::Parse("γ is not allowed in a base-field element".into()))
                }
            }
            Some(Tok::Ident(name)) => match self.names.iter().position(|n| *n == name) {
                Some(v) => Ok(QuadExtElem::from_base(RatFunc::var(v), self.tower)),
                None => Err(Error::Parse(format!("unknown indeterminate {name:?}"))),
            },
            Some(Tok::Op('(')) => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn run(s: &str, names: &[String], tower: &Arc<Tower>, allow_gamma: bool) -> Result<QuadExtElem> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, names, tower, allow_gamma };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

pub fn parse_elem(s: &str, names: &[String], tower: &Arc<Tower>) -> Result<QuadExtElem> {
    run(s, names, tower, true)
}

pub fn parse_base(s: &str, names: &[String]) -> Result<RatFunc> {
    let tower = Arc::new(Tower { delta: RatFunc::zero() });
    Ok(run(s, names, &tower, false)?.u().clone())
}

fn coefficient_of_gamma(v: &RatFunc, names: &[String]) -> String {
    if v.is_one() {
        return GAMMA.into();
    }
    let body = if v.is_poly() {
        let p: &Poly = v.num();
        if p.is_monomial() {
            p.fmt_with(names)
        } else {
            format!("({})", p.fmt_with(names))
        }
    } else {
        v.fmt_with(names)
    };
    format!("{body}*{GAMMA}")
}

pub fn format_elem(x: &QuadExtElem, names: &[String]) -> String {
    match (x.u().is_zero(), x.v().is_zero()) {
        (_, true) => x.u().fmt_with(names),
        (true, false) => coefficient_of_gamma(x.v(), names),
        (false, false) => format!("{} + {}", x.u().fmt_with(names), coefficient_of_gamma(x.v(), names)),
    }
}
