//! Polynomial expressions and their text syntax.
//!
//! ```text
//! poly = term ("+" term)*
//! term = [coeff "*"] var ["^" exponent] ("*" var ["^" exponent])*
//!      | coeff
//! ```
//!
//! Coefficients are decimal integers read in the field, whitespace is
//! ignored, e.g. `x^2 + 2*x*y`. A bare coefficient is a constant term.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::Field;
use crate::{Error, Result};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

pub fn degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// Ascending monomial order used for algebra bases: total degree first,
/// then earlier variables before later ones (`1 < x < y < x^2 < x*y < ...`).
pub fn basis_order(a: &[u32], b: &[u32]) -> Ordering {
    degree(a).cmp(&degree(b)).then_with(|| b.cmp(a))
}

/// Term order used for leading terms and printing: higher degree first, then
/// lex with earlier variables larger (`x^2, x*y, y^2, x, y, 1`).
pub fn term_order(a: &[u32], b: &[u32]) -> Ordering {
    degree(b).cmp(&degree(a)).then_with(|| b.cmp(a))
}

/// All monomials in `nvars` variables of total degree `< bound`, in
/// ascending [`basis_order`].
pub fn monomials_below(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..bound {
        let mut layer = Vec::new();
        push_monomials_of_degree(nvars, d, &mut vec![0; nvars], 0, &mut layer);
        layer.sort_by(|a, b| basis_order(a, b));
        out.extend(layer);
    }
    out
}

fn push_monomials_of_degree(
    nvars: usize,
    remaining: u32,
    current: &mut Vec<u32>,
    idx: usize,
    out: &mut Vec<Monomial>,
) {
    if nvars == 0 {
        if remaining == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if idx == nvars - 1 {
        current[idx] = remaining;
        out.push(current.clone());
        current[idx] = 0;
        return;
    }
    for e in 0..=remaining {
        current[idx] = e;
        push_monomials_of_degree(nvars, remaining - e, current, idx + 1, out);
    }
    current[idx] = 0;
}

/// Renders a monomial, `1` for the empty product.
pub fn format_monomial(vars: &[String], m: &[u32]) -> String {
    let factors: Vec<String> = vars
        .iter()
        .zip(m)
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| if e == 1 { v.clone() } else { alloc::format!("{v}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// A polynomial with coefficients in `F` over named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyExpr<F: Field> {
    field: F,
    vars: Vec<String>,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> PolyExpr<F> {
    pub fn zero(field: F, vars: Vec<String>) -> Self {
        PolyExpr {
            field,
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(coefficient, exponents)` pairs, merging repeated
    /// monomials and dropping zero coefficients.
    pub fn from_terms(
        field: F,
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (F::Elem, Monomial)>,
    ) -> Result<Self> {
        let mut p = Self::zero(field, vars);
        for (c, m) in terms {
            if m.len() != p.vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: p.vars.len(),
                    found: m.len(),
                });
            }
            p.add_term(c, m);
        }
        Ok(p)
    }

    pub fn monomial(field: F, vars: Vec<String>, m: Monomial) -> Self {
        let one = field.one();
        let mut p = Self::zero(field, vars);
        p.add_term(one, m);
        p
    }

    fn add_term(&mut self, c: F::Elem, m: Monomial) {
        let f = &self.field;
        let entry = self.terms.entry(m).or_insert_with(|| f.zero());
        *entry = f.add(entry, &c);
        self.terms.retain(|_, c| !f.is_zero(c));
    }

    pub fn parse(field: F, vars: &[String], text: &str) -> Result<Self> {
        Parser::new(field, vars, text).parse()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> Vec<(F::Elem, Monomial)> {
        let mut out: Vec<(F::Elem, Monomial)> = self
            .terms
            .iter()
            .map(|(m, c)| (c.clone(), m.clone()))
            .collect();
        out.sort_by(|a, b| term_order(&a.1, &b.1));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| degree(m)).max().unwrap_or(0)
    }

    pub fn mul_monomial(&self, m: &[u32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        PolyExpr {
            field: self.field.clone(),
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn coefficient(&self, m: &[u32]) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }
}

impl<F: Field> core::fmt::Display for PolyExpr<F> {
    fn fmt(&self, out: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return out.write_str("0");
        }
        let rendered: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(c, m)| {
                let mono = format_monomial(&self.vars, &m);
                if degree(&m) == 0 {
                    self.field.format(&c)
                } else if self.field.is_one(&c) {
                    mono
                } else {
                    alloc::format!("{}*{}", self.field.format(&c), mono)
                }
            })
            .collect();
        out.write_str(&rendered.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(String),
    Ident(String),
    Plus,
    Star,
    Caret,
}

struct Parser<'a, F: Field> {
    field: F,
    vars: &'a [String],
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end_column: usize,
    lex_error: Option<Error>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn new(field: F, vars: &'a [String], text: &str) -> Self {
        let mut tokens = Vec::new();
        let mut lex_error = None;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push((Token::Number(chars[start..i].iter().collect()), column));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((Token::Ident(chars[start..i].iter().collect()), column));
            } else {
                let tok = match c {
                    '+' => Token::Plus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    other => {
                        lex_error.get_or_insert(Error::Parse {
                            column,
                            message: alloc::format!("unexpected character '{other}'"),
                        });
                        i += 1;
                        continue;
                    }
                };
                tokens.push((tok, column));
                i += 1;
            }
        }
        Parser {
            field,
            vars,
            tokens,
            pos: 0,
            end_column: chars.len() + 1,
            lex_error,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let column = self
            .tokens
            .get(self.pos)
            .map_or(self.end_column, |(_, c)| *c);
        Error::Parse {
            column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn parse(mut self) -> Result<PolyExpr<F>> {
        if let Some(e) = self.lex_error.take() {
            return Err(e);
        }
        let mut poly = PolyExpr::zero(self.field.clone(), self.vars.to_vec());
        loop {
            let (c, m) = self.term()?;
            poly.add_term(c, m);
            match self.peek() {
                None => return Ok(poly),
                Some(Token::Plus) => self.pos += 1,
                Some(_) => return Err(self.error("expected '+' or end of input")),
            }
        }
    }

    fn term(&mut self) -> Result<(F::Elem, Monomial)> {
        let mut coeff = self.field.one();
        let mut mono = vec![0u32; self.vars.len()];
        if let Some(Token::Number(digits)) = self.peek().cloned() {
            coeff = self.number(&digits);
            self.pos += 1;
            match self.peek() {
                Some(Token::Star) => self.pos += 1,
                _ => return Ok((coeff, mono)),
            }
        }
        loop {
            self.factor(&mut mono)?;
            match self.peek() {
                Some(Token::Star) => self.pos += 1,
                _ => return Ok((coeff, mono)),
            }
        }
    }

    fn factor(&mut self, mono: &mut [u32]) -> Result<()> {
        let Some(Token::Ident(name)) = self.peek().cloned() else {
            return Err(self.error("expected a variable"));
        };
        let Some(idx) = self.vars.iter().position(|v| *v == name) else {
            return Err(self.error(alloc::format!("unknown variable '{name}'")));
        };
        self.pos += 1;
        let mut exp = 1u32;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let Some(Token::Number(digits)) = self.peek().cloned() else {
                return Err(self.error("expected an exponent"));
            };
            exp = digits
                .parse()
                .map_err(|_| self.error("exponent out of range"))?;
            self.pos += 1;
        }
        mono[idx] += exp;
        Ok(())
    }

    fn number(&self, digits: &str) -> F::Elem {
        let f = &self.field;
        let ten = f.from_i64(10);
        digits.bytes().fold(f.zero(), |acc, d| {
            f.add(&f.mul(&acc, &ten), &f.from_i64((d - b'0') as i64))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use alloc::string::ToString;

    fn xy() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    #[test]
    fn parses_example_expression() {
        let p = PolyExpr::parse(Rationals, &xy(), "x^2 + 2*x*y").unwrap();
        let terms = p.terms();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].1, vec![2, 0]);
        assert_eq!(terms[1].1, vec![1, 1]);
        assert_eq!(terms[1].0, Rationals.from_i64(2));
        assert_eq!(p.to_string(), "x^2 + 2*x*y");
    }

    #[test]
    fn whitespace_is_ignored() {
        let a = PolyExpr::parse(Rationals, &xy(), " x ^ 2+2 * x*y ").unwrap();
        let b = PolyExpr::parse(Rationals, &xy(), "x^2+2*x*y").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn coefficients_reduce_in_the_field() {
        let f = PrimeField::new(2).unwrap();
        let p = PolyExpr::parse(f, &xy(), "x + x + y").unwrap();
        assert_eq!(p.to_string(), "y");
        let zero = PolyExpr::parse(f, &xy(), "2*x").unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn repeated_variables_multiply() {
        let p = PolyExpr::parse(Rationals, &xy(), "x*x^2*y").unwrap();
        assert_eq!(p.terms()[0].1, vec![3, 1]);
    }

    #[test]
    fn constants_are_accepted() {
        let p = PolyExpr::parse(Rationals, &xy(), "1 + x").unwrap();
        assert_eq!(p.to_string(), "x + 1");
    }

    #[test]
    fn unknown_variable_reports_column() {
        let err = PolyExpr::parse(Rationals, &xy(), "x + z").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                column: 5,
                message: "unknown variable 'z'".to_string()
            }
        );
    }

    #[test]
    fn malformed_inputs_fail() {
        for bad in ["", "x +", "x^", "2*", "x y", "x - y", "+x", "x^y"] {
            assert!(PolyExpr::parse(Rationals, &xy(), bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn monomials_below_are_ordered() {
        let ms = monomials_below(2, 3);
        let names: Vec<String> = ms.iter().map(|m| format_monomial(&xy(), m)).collect();
        assert_eq!(names, ["1", "x", "y", "x^2", "x*y", "y^2"]);
    }
}
