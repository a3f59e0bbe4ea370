//! A small expression language for ad-hoc q-series.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' int)?
//! atom   := int | 'q' ('^' int)? | '(' expr ')'
//!         | 'poch(' ['+' | '-'] 'q' ('^' int)? ',' int ',' (int | 'inf') ')'
//!         | 'jac(' int ',' int ')' | 'eta(' int ')'
//!         | 'lambert(' sint ',' sint ',' sint ',' sint ',' sint ')'
//! ```
//!
//! `eta(m)` is `(q^m; q^m)_∞` with no fractional prefactor, and
//! `lambert(a2, a1, a0, b1, b0)` is `Σ_n (-1)^n q^{a2 n² + a1 n + a0} / (1 - q^{b1 n + b0})`.
//! Parentheses only shape the tree; printing inserts the ones needed to parse back
//! to the same tree.

use std::fmt;

use sptcrank::qseries::{eta, jacprod, lambert_sum, poch_finite, poch_infinite, LambertSum, QMonomial, Quadratic};
use sptcrank::{Int, IntSeries};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at position {pos}: {msg}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    /// `q^e`
    QPow(u32),
    /// `(±q^a; q^m)_n`, infinite when `n` is `None`.
    Poch {
        negative: bool,
        a: u32,
        m: u32,
        n: Option<u32>,
    },
    Jac {
        a: u32,
        m: u32,
    },
    Eta(u32),
    Lambert {
        a2: i64,
        a1: i64,
        a0: i64,
        b1: i64,
        b0: i64,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    /// Expands the expression to a series truncated at `order`.
    pub fn eval(&self, order: usize) -> sptcrank::Result<IntSeries> {
        Ok(match self {
            Expr::Int(v) => IntSeries::monomial((), int(*v)?, 0, order),
            Expr::QPow(e) => IntSeries::monomial((), Int::from(1), *e as usize, order),
            Expr::Poch { negative, a, m, n } => {
                let base = QMonomial::new(if *negative { -1 } else { 1 }, *a as i64)?;
                match n {
                    Some(n) => poch_finite(base, *m as usize, *n as usize, order),
                    None => poch_infinite(base, *m as usize, order)?,
                }
            }
            Expr::Jac { a, m } => jacprod(*a as usize, *m as usize, order)?,
            Expr::Eta(m) => {
                if *m == 0 {
                    return Err(sptcrank::Error::OutOfRange("eta(0) is not a product".into()));
                }
                eta(*m as usize, order)?
            }
            Expr::Lambert { a2, a1, a0, b1, b0 } => lambert_sum(
                LambertSum { numerator: Quadratic::new(*a2, *a1, *a0), b1: *b1, b0: *b0, alternating: true },
                order,
            )?,
            Expr::Neg(x) => x.eval(order)?.neg(),
            Expr::Add(a, b) => a.eval(order)?.try_add(&b.eval(order)?)?,
            Expr::Sub(a, b) => a.eval(order)?.try_sub(&b.eval(order)?)?,
            Expr::Mul(a, b) => a.eval(order)?.try_mul(&b.eval(order)?)?,
            Expr::Div(a, b) => a.eval(order)?.try_div(&b.eval(order)?)?,
            Expr::Pow(x, e) => x.eval(order)?.pow(*e),
        })
    }
}

fn int(v: u64) -> sptcrank::Result<Int> {
    i64::try_from(v).map(Int::from).map_err(|_| sptcrank::Error::OutOfRange(format!("literal {v} is too large")))
}

fn child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::QPow(e) => write!(f, "q^{e}"),
            Expr::Poch { negative, a, m, n } => {
                let sign = if *negative { "-" } else { "" };
                match n {
                    Some(n) => write!(f, "poch({sign}q^{a},{m},{n})"),
                    None => write!(f, "poch({sign}q^{a},{m},inf)"),
                }
            }
            Expr::Jac { a, m } => write!(f, "jac({a},{m})"),
            Expr::Eta(m) => write!(f, "eta({m})"),
            Expr::Lambert { a2, a1, a0, b1, b0 } => write!(f, "lambert({a2},{a1},{a0},{b1},{b0})"),
            Expr::Neg(x) => {
                f.write_str("-")?;
                child(f, x, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let (op, p) = match self {
                    Expr::Add(..) => ('+', 1),
                    Expr::Sub(..) => ('-', 1),
                    Expr::Mul(..) => ('*', 2),
                    _ => ('/', 2),
                };
                child(f, a, p)?;
                write!(f, "{op}")?;
                // left-associative: an equal-precedence right operand needs parentheses
                child(f, b, p + 1)
            }
            Expr::Pow(x, e) => {
                child(f, x, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let mut base = self.atom()?;
        while self.eat(b'^') {
            base = Expr::Pow(Box::new(base), self.small()?);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.uint()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let word = self.word();
                match word.as_str() {
                    "q" => Ok(Expr::QPow(self.q_exponent()?)),
                    "poch" => self.poch(),
                    "jac" => {
                        self.expect(b'(')?;
                        let a = self.small()?;
                        self.expect(b',')?;
                        let m = self.small()?;
                        self.expect(b')')?;
                        Ok(Expr::Jac { a, m })
                    }
                    "eta" => {
                        self.expect(b'(')?;
                        let m = self.small()?;
                        self.expect(b')')?;
                        Ok(Expr::Eta(m))
                    }
                    "lambert" => {
                        self.expect(b'(')?;
                        let mut v = [0i64; 5];
                        for (i, slot) in v.iter_mut().enumerate() {
                            if i > 0 {
                                self.expect(b',')?;
                            }
                            *slot = self.sint()?;
                        }
                        self.expect(b')')?;
                        let [a2, a1, a0, b1, b0] = v;
                        Ok(Expr::Lambert { a2, a1, a0, b1, b0 })
                    }
                    _ => Err(ParseError { pos: start, msg: format!("unknown name '{word}'") }),
                }
            }
            Some(c) => Err(self.err(format!("unexpected '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn poch(&mut self) -> Result<Expr, ParseError> {
        self.expect(b'(')?;
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        if self.peek() != Some(b'q') || self.word() != "q" {
            return Err(self.err("expected a base q^a"));
        }
        let a = self.q_exponent()?;
        self.expect(b',')?;
        let m = self.small()?;
        self.expect(b',')?;
        let n = if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            let start = self.pos;
            if self.word() != "inf" {
                return Err(ParseError { pos: start, msg: "expected a length or 'inf'".into() });
            }
            None
        } else {
            Some(self.small()?)
        };
        self.expect(b')')?;
        Ok(Expr::Poch { negative, a, m, n })
    }

    /// The exponent after a `q`; a bare `q` is `q^1`.
    fn q_exponent(&mut self) -> Result<u32, ParseError> {
        if self.eat(b'^') {
            self.small()
        } else {
            Ok(1)
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| ParseError { pos: start, msg: "integer out of range".into() })
    }

    fn small(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let v = self.uint()?;
        u32::try_from(v).map_err(|_| ParseError { pos: start, msg: "integer out of range".into() })
    }

    fn sint(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat(b'-');
        let start = self.pos;
        let v = self.uint()?;
        let v = i64::try_from(v).map_err(|_| ParseError { pos: start, msg: "integer out of range".into() })?;
        Ok(if neg { -v } else { v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn coeffs(text: &str, order: usize) -> Vec<i64> {
        parse(text).unwrap().eval(order).unwrap().coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn eta_is_the_pentagonal_series() {
        assert_eq!(coeffs("eta(1)", 7), [1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn jacobi_products_combine() {
        // (q;q)_∞ / (q^5;q^5)_∞ = jac(1,5) * jac(2,5)
        assert_eq!(coeffs("jac(1,5)*jac(2,5)", 30), coeffs("eta(1)/eta(5)", 30));
        assert_eq!(coeffs("poch(q^1,1,inf)", 20), coeffs("eta(1)", 20));
        assert_eq!(coeffs("poch(-q,2,3)", 12), coeffs("(1+q)*(1+q^3)*(1+q^5)", 12));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(coeffs("1/(1-q)", 4), [1, 1, 1, 1, 1]);
        assert_eq!(coeffs("(1+q)^3 - 2*q", 4), [1, 1, 3, 1, 0]);
        assert_eq!(coeffs("-q^2 + 3", 3), [3, 0, -1, 0]);
        assert_eq!(coeffs("q^9", 3), [0, 0, 0, 0]);
        // n = 0, -1, 1, -2, 2 are the only terms below q^9
        let by_hand = "1/(1-q) + q^2/(1-q) - q/(1-q^3) - q^7/(1-q^3) + q^4/(1-q^5)";
        assert_eq!(coeffs("lambert(1,0,0,2,1)", 8), coeffs(by_hand, 8));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("1 + ").unwrap_err().pos, 4);
        assert_eq!(parse("eta(1").unwrap_err().pos, 5);
        assert_eq!(parse("foo(2)").unwrap_err().pos, 0);
        assert_eq!(parse("2 3").unwrap_err().pos, 2);
        assert!(parse("poch(q^1,1,forever)").is_err());
    }

    #[test]
    fn non_unit_division_fails() {
        let e = parse("1/(1-q^0)").unwrap();
        assert!(matches!(e.eval(5), Err(sptcrank::Error::NotAUnit(_))));
        assert!(parse("1/(2+q)").unwrap().eval(5).is_err());
        assert!(parse("1/(-1+q)").unwrap().eval(5).is_ok());
    }

    #[test]
    fn printing_inserts_needed_parentheses() {
        assert_eq!(parse("1-(2-3)").unwrap().to_string(), "1-(2-3)");
        assert_eq!(parse("(1-2)-3").unwrap().to_string(), "1-2-3");
        assert_eq!(parse("((1+q))*2").unwrap().to_string(), "(1+q^1)*2");
        assert_eq!(parse("(-q)^2").unwrap().to_string(), "(-q^1)^2");
        assert_eq!(parse("poch( - q ^ 2 , 3 , inf )").unwrap().to_string(), "poch(-q^2,3,inf)");
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0u64..1000).prop_map(Expr::Int),
            (0u32..20).prop_map(Expr::QPow),
            (any::<bool>(), 0u32..5, 1u32..5, proptest::option::of(0u32..6))
                .prop_map(|(negative, a, m, n)| Expr::Poch { negative, a, m, n }),
            (1u32..6, 6u32..9).prop_map(|(a, m)| Expr::Jac { a, m }),
            (1u32..9).prop_map(Expr::Eta),
            (1i64..3, -3i64..3, -3i64..3, -3i64..3, -3i64..3).prop_map(|(a2, a1, a0, b1, b0)| Expr::Lambert {
                a2,
                a1,
                a0,
                b1,
                b0
            }),
        ];
        leaf.prop_recursive(4, 32, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
                (inner, 0u32..4).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(e in arb_expr()) {
            let printed = e.to_string();
            let back = parse(&printed).unwrap();
            prop_assert_eq!(&back, &e);
            prop_assert_eq!(parse(&back.to_string()).unwrap(), back);
        }
    }
}
