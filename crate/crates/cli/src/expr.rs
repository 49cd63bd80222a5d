//! Divisor expressions such as `-9/2*K - 1/2*psi`, `2B2 + B3` or `DA`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary  := '-' unary | atom
//! atom   := integer | symbol | '(' expr ')'
//! symbol := B<i> | B | K | psi | DA
//! ```

use std::fmt;

use m06_core::divisor::{canonical_divisor, canonical_polarization, psi_divisor, SymmetricDivisor};
use m06_core::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Divisor(SymmetricDivisor),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(q) => write!(f, "{q}"),
            Value::Divisor(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ExprError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' | '·' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((col, t));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((col, Tok::Int(chars[start..i].iter().collect())));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_alphabetic() {
                i += 1;
            }
            // a boundary index is glued to its letter: B2, B10
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((col, Tok::Ident(chars[start..i].iter().collect())));
        } else {
            return Err(ExprError { column: col, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    n: usize,
    end: usize,
}

pub fn parse(src: &str, n: usize) -> Result<Value, ExprError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, n, end: src.chars().count() + 1 };
    if p.toks.is_empty() {
        return Err(ExprError { column: 1, message: "empty expression".into() });
    }
    let v = p.expr()?;
    if let Some((col, t)) = p.toks.get(p.pos) {
        return Err(ExprError { column: *col, message: format!("unexpected {}", describe(t)) });
    }
    Ok(v)
}

#[cfg(test)]
/// Parses an expression that must denote a divisor class.
pub fn parse_divisor(src: &str, n: usize) -> Result<SymmetricDivisor, ExprError> {
    match parse(src, n)? {
        Value::Divisor(d) => Ok(d),
        Value::Scalar(q) => Err(ExprError {
            column: 1,
            message: format!("expression is the number {q}, not a divisor class"),
        }),
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(s) => format!("number `{s}`"),
        Tok::Ident(s) => format!("symbol `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn err<T>(&self, column: usize, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError { column, message: message.into() })
    }

    fn expr(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.term()?;
        while let Some(op @ (Tok::Plus | Tok::Minus)) = self.peek().cloned() {
            let col = self.column();
            self.pos += 1;
            let rhs = self.term()?;
            acc = match (acc, rhs, op) {
                (Value::Scalar(a), Value::Scalar(b), Tok::Plus) => Value::Scalar(a + b),
                (Value::Scalar(a), Value::Scalar(b), _) => Value::Scalar(a - b),
                (Value::Divisor(a), Value::Divisor(b), Tok::Plus) => Value::Divisor(&a + &b),
                (Value::Divisor(a), Value::Divisor(b), _) => Value::Divisor(&a - &b),
                _ => return self.err(col, "cannot add a number to a divisor class"),
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.unary()?;
        loop {
            let col = self.column();
            let divide = match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    true
                }
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen) => false,
                _ => break,
            };
            let rhs = self.unary()?;
            acc = match (acc, rhs, divide) {
                (Value::Scalar(a), Value::Scalar(b), false) => Value::Scalar(a * b),
                (Value::Scalar(a), Value::Divisor(d), false)
                | (Value::Divisor(d), Value::Scalar(a), false) => Value::Divisor(d.scale(&a)),
                (Value::Divisor(_), Value::Divisor(_), false) => {
                    return self.err(col, "product of two divisor classes is not a divisor class")
                }
                (_, Value::Scalar(b), true) if b.is_zero() => {
                    return self.err(col, "division by zero")
                }
                (Value::Scalar(a), Value::Scalar(b), true) => Value::Scalar(a / b),
                (Value::Divisor(d), Value::Scalar(b), true) => {
                    Value::Divisor(d.scale(&b.recip().expect("nonzero")))
                }
                (_, Value::Divisor(_), true) => return self.err(col, "cannot divide by a divisor class"),
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value, ExprError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(match self.unary()? {
                Value::Scalar(a) => Value::Scalar(-a),
                Value::Divisor(d) => Value::Divisor(-&d),
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Value, ExprError> {
        let col = self.column();
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return self.err(col, "expression ends unexpectedly");
        };
        self.pos += 1;
        match tok {
            Tok::Int(s) => match s.parse::<Rational>() {
                Ok(q) => Ok(Value::Scalar(q)),
                Err(_) => self.err(col, format!("bad number `{s}`")),
            },
            Tok::LParen => {
                let v = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err(self.column(), "expected `)`");
                }
                self.pos += 1;
                Ok(v)
            }
            Tok::Ident(name) => self.symbol(&name, col).map(Value::Divisor),
            other => self.err(col, format!("unexpected {}", describe(&other))),
        }
    }

    fn symbol(&self, name: &str, col: usize) -> Result<SymmetricDivisor, ExprError> {
        let n = self.n;
        let wrap = |r: m06_core::Result<SymmetricDivisor>| {
            r.map_err(|e| ExprError { column: col, message: e.to_string() })
        };
        match name {
            "K" => wrap(canonical_divisor(n)),
            "psi" | "ψ" => wrap(psi_divisor(n)),
            "B" => wrap(SymmetricDivisor::total_boundary(n)),
            "DA" if n == 6 => Ok(canonical_polarization()),
            "DA" => self.err(col, "DA is only defined for n = 6"),
            _ => match name.strip_prefix('B').map(str::parse::<usize>) {
                Some(Ok(i)) => wrap(SymmetricDivisor::boundary(n, i)),
                _ => self.err(col, format!("unknown symbol `{name}`")),
            },
        }
    }
}
