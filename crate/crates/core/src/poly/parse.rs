//! Text grammar for polynomial input:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! There is no implicit multiplication.

use super::{var_index, Polynomial, Vars};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            other => return Err(Error::Parse { position: start, message: format!("unexpected character `{other}`") }),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    vars: &'a Vars,
}

impl<F: Field> Polynomial<F> {
    pub fn parse(text: &str, vars: &Vars) -> Result<Self> {
        parse_polynomial(text, vars)
    }
}

pub fn parse_polynomial<F: Field>(text: &str, vars: &Vars) -> Result<Polynomial<F>> {
    let mut parser = Parser { tokens: tokenize(text)?, pos: 0, end: text.len(), vars };
    if parser.tokens.is_empty() {
        return Err(Error::Parse { position: 0, message: "empty expression".into() });
    }
    let p = parser.expr()?;
    if let Some((at, tok)) = parser.tokens.get(parser.pos) {
        return Err(Error::Parse { position: *at, message: format!("unexpected token {tok:?}") });
    }
    Ok(p)
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.position(), message: message.into() })
    }

    fn expr<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary<F: Field>(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Token::Int(digits)) => {
                let e: u32 = match digits.parse() {
                    Ok(e) => e,
                    Err(_) => return self.error("exponent too large"),
                };
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => self.error("expected a non-negative integer exponent"),
        }
    }

    fn atom<F: Field>(&mut self) -> Result<Polynomial<F>> {
        match self.peek().cloned() {
            Some(Token::Int(digits)) => {
                let c = match F::from_str_radix(&format!("{digits}/1"), 10) {
                    Ok(c) => c,
                    Err(_) => return self.error("integer literal out of range"),
                };
                self.pos += 1;
                Ok(Polynomial::constant(self.vars, c))
            }
            Some(Token::Ident(name)) => match var_index(self.vars, &name) {
                Ok(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(self.vars, i))
                }
                Err(_) => self.error(format!("undeclared variable `{name}`")),
            },
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => self.error(format!("unexpected token {t:?}")),
            None => self.error("unexpected end of input"),
        }
    }
}
