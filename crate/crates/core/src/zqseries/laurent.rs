use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::{Coeff, Int};

/// A Laurent polynomial in `z` with integer coefficients.
///
/// Stored densely from the lowest exponent `lo`, with zeros trimmed from both
/// ends so that structural equality is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    lo: i64,
    c: Vec<Int>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { lo: 0, c: Vec::new() }
    }

    pub fn constant(v: Int) -> Self {
        Self::monomial(0, v)
    }

    /// `v · z^e`
    pub fn monomial(e: i64, v: Int) -> Self {
        if v.is_zero() {
            return Self::zero();
        }
        LaurentPoly { lo: e, c: vec![v] }
    }

    /// Sums the given `(exponent, coefficient)` terms; repeated exponents add.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Int)>) -> Self {
        let terms: Vec<(i64, Int)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut c = vec![Int::ZERO; (hi - lo + 1) as usize];
        for (e, v) in &terms {
            c[(e - lo) as usize] += v;
        }
        let mut p = LaurentPoly { lo, c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(Int::is_zero) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|v| v.is_zero()).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.lo += lead as i64;
        }
        if self.c.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Lowest and highest exponents with nonzero coefficient.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.c.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.c.len() as i64 - 1))
        }
    }

    pub fn coeff(&self, e: i64) -> Int {
        if e < self.lo {
            return Int::ZERO;
        }
        self.c.get((e - self.lo) as usize).cloned().unwrap_or(Int::ZERO)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Int)> + '_ {
        self.c.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(i, v)| (self.lo + i as i64, v))
    }

    pub fn eval_at_one(&self) -> Int {
        self.c.iter().sum()
    }

    /// `c(m) = c(-m)` for every `m`.
    pub fn is_palindromic(&self) -> bool {
        match self.support() {
            None => true,
            Some((lo, hi)) => lo == -hi && self.c.iter().eq(self.c.iter().rev()),
        }
    }

    /// `z^k · self`
    pub fn shift_z(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { lo: self.lo + k, c: self.c.clone() }
    }

    /// `self(z^{-1})`
    pub fn reflect(&self) -> Self {
        match self.support() {
            None => self.clone(),
            Some((_, hi)) => LaurentPoly { lo: -hi, c: self.c.iter().rev().cloned().collect() },
        }
    }

    /// `self += z^k · x`, or `self -= z^k · x` when `negate`.
    pub fn add_shifted(&mut self, k: i64, x: &LaurentPoly, negate: bool) {
        let Some((xlo, xhi)) = x.support() else { return };
        let (lo, hi) = (xlo + k, xhi + k);
        match self.support() {
            None => {
                self.lo = lo;
                self.c = if negate { x.c.iter().map(|v| -v).collect() } else { x.c.clone() };
                return;
            }
            Some((slo, shi)) => {
                if lo < slo {
                    let pad = (slo - lo) as usize;
                    self.c.splice(0..0, std::iter::repeat_n(Int::ZERO, pad));
                    self.lo = lo;
                }
                if hi > shi {
                    self.c.resize((hi - self.lo + 1) as usize, Int::ZERO);
                }
            }
        }
        let off = (lo - self.lo) as usize;
        for (dst, v) in self.c[off..].iter_mut().zip(&x.c) {
            if negate {
                *dst -= v;
            } else {
                *dst += v;
            }
        }
        self.trim();
    }

    fn convolve(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Int::ZERO; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j].add_mul_assign(a, b);
                }
            }
        }
        let mut p = LaurentPoly { lo: self.lo + o.lo, c };
        p.trim();
        p
    }
}

impl Coeff for LaurentPoly {
    type Ctx = ();

    fn zero(_: ()) -> Self {
        LaurentPoly::zero()
    }
    fn from_int(_: (), v: &Int) -> Self {
        LaurentPoly::constant(v.clone())
    }
    fn ctx(&self) {}
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add_assign_ref(&mut self, o: &Self) {
        self.add_shifted(0, o, false);
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        self.add_shifted(0, o, true);
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.convolve(o)
    }
    fn neg_ref(&self) -> Self {
        LaurentPoly { lo: self.lo, c: self.c.iter().map(|v| -v).collect() }
    }
    /// Only `±z^k` is invertible.
    fn unit_inverse(&self) -> Option<Self> {
        if self.c.len() != 1 {
            return None;
        }
        <Int as Coeff>::unit_inverse(&self.c[0]).map(|v| LaurentPoly::monomial(-self.lo, v))
    }
    fn scale_int(&self, k: &Int) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { lo: self.lo, c: self.c.iter().map(|v| v * k).collect() }
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.c.len() == 1 && a.c[0].is_one() {
            self.add_shifted(a.lo, b, false);
        } else if b.c.len() == 1 && b.c[0].is_one() {
            self.add_shifted(b.lo, a, false);
        } else {
            let t = a.convolve(b);
            self.add_shifted(0, &t, false);
        }
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.c.len() == 1 && a.c[0].is_one() {
            self.add_shifted(a.lo, b, true);
        } else if b.c.len() == 1 && b.c[0].is_one() {
            self.add_shifted(b.lo, a, true);
        } else {
            let t = a.convolve(b);
            self.add_shifted(0, &t, true);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: Self) -> LaurentPoly {
        let mut r = self.clone();
        r.add_shifted(0, o, false);
        r
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: Self) -> LaurentPoly {
        let mut r = self.clone();
        r.add_shifted(0, o, true);
        r
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: Self) -> LaurentPoly {
        self.convolve(o)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, v) in self.terms() {
            let neg = v.is_negative();
            let mag = v.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{e}")?,
                (_, false) => write!(f, "{mag}z^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().map(|&(e, c)| (e, Int::from(c))))
    }

    #[test]
    fn products() {
        let a = lp(&[(1, 1), (-1, 1)]);
        let b = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (-2, -1)]));
        assert!((&a * &LaurentPoly::zero()).is_zero());
        let f = &lp(&[(0, 1), (1, -1)]) * &lp(&[(0, 1), (-1, -1)]);
        assert_eq!(f, lp(&[(0, 2), (1, -1), (-1, -1)]));
        assert!(f.is_palindromic());
        assert_eq!(f.eval_at_one(), Int::ZERO);
    }

    #[test]
    fn canonical_form() {
        let a = lp(&[(3, 1), (5, 2)]);
        let b = lp(&[(5, 2), (3, 1), (9, 0)]);
        assert_eq!(a, b);
        assert_eq!(a.support(), Some((3, 5)));
        assert!((&a - &b).is_zero());
        assert_eq!((&a - &b).support(), None);
        let mut c = lp(&[(0, 1), (4, 1)]);
        c.add_shifted(0, &lp(&[(0, 1)]), true);
        assert_eq!(c.support(), Some((4, 4)));
        c.add_shifted(-6, &lp(&[(1, 3), (2, 1)]), false);
        assert_eq!(c, lp(&[(-5, 3), (-4, 1), (4, 1)]));
        assert_eq!(c.coeff(-5), Int::from(3));
        assert_eq!(c.coeff(100), Int::ZERO);
        assert_eq!(c.reflect(), lp(&[(5, 3), (4, 1), (-4, 1)]));
    }

    #[test]
    fn units() {
        let u = lp(&[(3, -1)]);
        assert_eq!(u.unit_inverse(), Some(lp(&[(-3, -1)])));
        assert_eq!(lp(&[(0, 2)]).unit_inverse(), None);
        assert_eq!(lp(&[(0, 1), (1, 1)]).unit_inverse(), None);
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(0, 2), (1, -1), (-1, -1)]).to_string(), "-z^-1 + 2 - z");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
