//! Text form of character polynomials in the binomial basis, e.g.
//! `2*C(X1,3) + 3*C(X1,4) + C(X1,2)*X2 - C(X2,2) - X3 - X4`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CharPolynomial, Exponents};
use crate::error::{Error, Result};

pub(crate) fn render_coefficient(c: &BigRational) -> String {
    c.to_string()
}

/// Joins `(coefficient, basis name)` pairs; an empty name is the constant.
pub(crate) fn join_terms(terms: &[(BigRational, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, name)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if name.is_empty() {
            out.push_str(&render_coefficient(&abs));
        } else if abs.is_one() {
            out.push_str(name);
        } else {
            out.push_str(&render_coefficient(&abs));
            out.push('*');
            out.push_str(name);
        }
    }
    out
}

/// Colexicographic: compare the exponent of the highest variable first.
fn colex(a: &Exponents, b: &Exponents) -> Ordering {
    let len = a.len().max(b.len());
    for i in (0..len).rev() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn basis_name(key: &Exponents) -> String {
    key.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("X{}", i + 1)
            } else {
                format!("C(X{},{k})", i + 1)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for CharPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.to_binomial_basis();
        let mut keys: Vec<&Exponents> = basis.keys().filter(|k| !k.is_empty()).collect();
        keys.sort_by(|a, b| colex(a, b));
        let mut terms: Vec<(BigRational, String)> = keys
            .into_iter()
            .map(|k| (basis[k].clone(), basis_name(k)))
            .collect();
        if let Some(c) = basis.get(&Vec::new()) {
            terms.push((c.clone(), String::new()));
        }
        f.write_str(&join_terms(&terms))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Var(usize),
    Binom,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Comma,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let d = digits(&mut i);
                out.push(Token::Num(d.parse().expect("digits")));
            }
            'X' => {
                i += 1;
                let d = digits(&mut i);
                let idx: usize = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("variable needs an index in `{s}`")))?;
                if idx == 0 {
                    return Err(Error::Parse("variables are X1, X2, ...".into()));
                }
                out.push(Token::Var(idx));
            }
            'C' => {
                out.push(Token::Binom);
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | ',' | '(' | ')' => {
                out.push(match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '/' => Token::Slash,
                    '^' => Token::Caret,
                    ',' => Token::Comma,
                    '(' => Token::Open,
                    _ => Token::Close,
                });
                i += 1;
            }
            _ => return Err(Error::Parse(format!("unexpected `{c}` in `{s}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        match self.next() {
            Some(Token::Num(n)) => Ok(n),
            got => Err(Error::Parse(format!("expected a number, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<CharPolynomial> {
        let mut negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = CharPolynomial::zero();
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            negate = match self.peek() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<CharPolynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<CharPolynomial> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let k = self.number()?;
        let k: u32 = k
            .try_into()
            .map_err(|_| Error::Parse("exponent too large".into()))?;
        Ok((0..k).fold(CharPolynomial::one(), |acc, _| &acc * &base))
    }

    fn atom(&mut self) -> Result<CharPolynomial> {
        match self.next() {
            Some(Token::Num(p)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    let q = self.number()?;
                    if q.is_zero() {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    Ok(CharPolynomial::constant(BigRational::new(p, q)))
                } else {
                    Ok(CharPolynomial::constant(BigRational::from_integer(p)))
                }
            }
            Some(Token::Var(i)) => Ok(CharPolynomial::variable(i)),
            Some(Token::Binom) => {
                self.expect(Token::Open)?;
                let i = match self.next() {
                    Some(Token::Var(i)) => i,
                    got => {
                        return Err(Error::Parse(format!(
                            "C(...) takes a variable, found {got:?}"
                        )))
                    }
                };
                self.expect(Token::Comma)?;
                let k = self.number()?;
                let k: usize = k
                    .try_into()
                    .map_err(|_| Error::Parse("binomial index too large".into()))?;
                self.expect(Token::Close)?;
                Ok(CharPolynomial::binomial_variable(i, k))
            }
            Some(Token::Open) => {
                let inner = self.expr()?;
                self.expect(Token::Close)?;
                Ok(inner)
            }
            got => Err(Error::Parse(format!("unexpected {got:?}"))),
        }
    }
}

impl FromStr for CharPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        if tokens.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut parser = Parser { tokens, pos: 0 };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!(
                "trailing input after position {} in `{s}`",
                parser.pos
            )));
        }
        Ok(p)
    }
}
