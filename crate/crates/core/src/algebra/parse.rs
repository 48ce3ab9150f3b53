//! Polynomial text grammar.
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*        -- "/" only by a nonzero constant
//! unary   := ("+" | "-") unary | power
//! power   := atom ("^" integer)?
//! atom    := integer | identifier | "(" expr ")"
//! ```
//!
//! Identifiers must be one of the declared variables; over an extension field
//! the generator `a` is also accepted when it is not a declared variable.

use num_bigint::BigInt;

use super::field::Field;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = vec![];
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
            if i < chars.len() && chars[i].1 == '.' {
                return Err(Error::Syntax { pos: chars[i].0, msg: "decimal literals are not supported".into() });
            }
            out.push((pos, Tok::Num(s.parse().unwrap())));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Ident(s)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    field: &'a Field,
    vars: &'a [&'a str],
    template: MultiPoly,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let pos = self.pos();
                self.at += 1;
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Syntax { pos, msg: "division only by a nonzero constant".into() });
                }
                let inv = self.field.inv(&d.constant_term()).ok_or(Error::Syntax {
                    pos,
                    msg: format!("division by zero in {}", self.field),
                })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            match self.toks.get(self.at).cloned() {
                Some((_, Tok::Num(n))) => {
                    self.at += 1;
                    if self.peek() == Some(&Tok::Sym('/')) {
                        return Err(Error::NonIntegerExponent(pos));
                    }
                    let e: u32 = n.try_into().map_err(|_| Error::NonIntegerExponent(pos))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::NonIntegerExponent(pos)),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let pos = self.pos();
        match self.toks.get(self.at).cloned() {
            Some((_, Tok::Num(n))) => {
                self.at += 1;
                Ok(self.template.constant_like(self.field.from_bigint(&n)))
            }
            Some((_, Tok::Ident(name))) => {
                self.at += 1;
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    return Ok(self.template.var_like(i));
                }
                match (name.as_str(), self.field.generator()) {
                    ("a", Some(g)) => Ok(self.template.constant_like(g)),
                    _ => Err(Error::UnknownVariable(name)),
                }
            }
            Some((_, Tok::Sym('('))) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Syntax { pos: self.pos(), msg: "expected `)`".into() });
                }
                Ok(e)
            }
            Some((_, t)) => Err(Error::Syntax { pos, msg: format!("unexpected token {t:?}") }),
            None => Err(Error::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }
}

/// Parses `text` into a canonical polynomial over `field` in `vars`.
pub fn parse_poly(text: &str, field: &Field, vars: &[&str]) -> Result<MultiPoly> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        field,
        vars,
        template: MultiPoly::zero(field, vars),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return Err(Error::Syntax { pos: p.pos(), msg: "trailing input".into() });
    }
    Ok(e)
}
