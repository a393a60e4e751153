//! Text form of polynomials.
//!
//! Output is canonical: `Z_q` polynomials print as `c*x^k` terms in
//! descending powers joined by `+` (coefficient omitted when 1, `x^1` written
//! `x`, constant plain, zero as `0`); `R` polynomials print as `<a>` or
//! `<a>+u*(<b>)`.
//!
//! Input is more lenient: any sum/difference of products of integers, `x`,
//! `u` and parenthesised subexpressions, with optional `*` and `^k` powers,
//! e.g. `ux-u`, `1+2x+x^2+3x^3`, `(2+u)*(x^2+x+1)`.

use crate::error::{Error, Result};
use crate::poly::{RPoly, ZqPoly};
use crate::ring::{RingElem, RingParams};

pub fn format_zq(f: &ZqPoly) -> String {
    format_zq_in(f, "x")
}

pub fn format_zq_in(f: &ZqPoly, var: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = f
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, c) => format!("{c}*{var}"),
            (k, 1) => format!("{var}^{k}"),
            (k, c) => format!("{c}*{var}^{k}"),
        })
        .collect();
    terms.join("+")
}

pub fn format_r(f: &RPoly) -> String {
    format_r_in(f, "x")
}

pub fn format_r_in(f: &RPoly, var: &str) -> String {
    let a = format_zq_in(&f.zq_part(), var);
    let b = f.u_part();
    if b.is_zero() {
        a
    } else {
        format!("{a}+u*({})", format_zq_in(&b, var))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Token {
    Int(u128),
    X,
    U,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: u128 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u128))
                        .ok_or_else(|| Error::Parse("integer literal too large".into()))?;
                    chars.next();
                }
                out.push(Token::Int(v));
            }
            _ => {
                chars.next();
                out.push(match c {
                    'x' | 'X' => Token::X,
                    'u' | 'U' => Token::U,
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    ')' => Token::Close,
                    other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: RingParams,
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RPoly> {
        let mut acc = RPoly::zero(self.ring);
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                -1
            }
            Some(Token::Plus) => {
                self.bump();
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Token::Plus) => sign = 1,
                Some(Token::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<RPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                }
                Some(Token::Int(_) | Token::X | Token::U | Token::Open) => {}
                _ => return Ok(acc),
            }
            let rhs = self.power()?;
            acc = &acc * &rhs;
        }
    }

    fn power(&mut self) -> Result<RPoly> {
        let base = self.atom()?;
        if self.peek() != Some(Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let Some(Token::Int(e)) = self.bump() else {
            return Err(Error::Parse("expected integer exponent after '^'".into()));
        };
        if e > 1 << 20 {
            return Err(Error::Parse("exponent too large".into()));
        }
        let mut acc = RPoly::one(self.ring);
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RPoly> {
        let r = self.ring;
        match self.bump() {
            Some(Token::Int(v)) => Ok(RPoly::constant(r, r.elem((v % r.q() as u128) as u64, 0))),
            Some(Token::X) => Ok(RPoly::x(r)),
            Some(Token::U) => Ok(RPoly::constant(r, RingElem::U)),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(Error::Parse("missing ')'".into())),
                }
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

pub fn parse_r(src: &str, ring: RingParams) -> Result<RPoly> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut parser = Parser { ring, tokens: &tokens, pos: 0 };
    let out = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input after position {}",
            parser.pos
        )));
    }
    Ok(out)
}

/// Parses a polynomial that must lie in `Z_q[x]`.
pub fn parse_zq(src: &str, ring: RingParams) -> Result<ZqPoly> {
    let f = parse_r(src, ring)?;
    if !f.u_part().is_zero() {
        return Err(Error::Parse(format!("{src:?} has a u-component")));
    }
    Ok(f.zq_part())
}
