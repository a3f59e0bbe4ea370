//! Cyclotomic integers `Z[ζ_p]` for the primes 3, 5 and 7.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{p-2}`. Every operation
//! reduces through `ζ^{p-1} = -(1 + ζ + … + ζ^{p-2})`, so the representation is
//! canonical and an element is zero exactly when all stored coefficients are.

use std::fmt;

use super::int::Int;
use crate::error::{Error, Result};

pub const SUPPORTED_PRIMES: [u8; 3] = [3, 5, 7];
const MAX_DIM: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u8,
    c: [Int; MAX_DIM],
}

pub fn check_prime(p: u8) -> Result<()> {
    if SUPPORTED_PRIMES.contains(&p) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("root of unity order {p} (supported: 3, 5, 7)")))
    }
}

impl CycInt {
    pub fn zero(p: u8) -> CycInt {
        check_prime(p).expect("unsupported cyclotomic order");
        CycInt { p, c: Default::default() }
    }

    pub fn from_int(p: u8, v: Int) -> CycInt {
        let mut x = CycInt::zero(p);
        x.c[0] = v;
        x
    }

    pub fn one(p: u8) -> CycInt {
        CycInt::from_int(p, Int::ONE)
    }

    /// Builds `Σ coeffs[i] ζ^i`; any number of coefficients is accepted and
    /// reduced, so `[0, 0, 0, 0, 1]` at `p = 5` is `ζ^4 = -(1+ζ+ζ²+ζ³)`.
    pub fn new(p: u8, coeffs: &[Int]) -> Result<CycInt> {
        check_prime(p)?;
        let mut x = CycInt::zero(p);
        for (i, v) in coeffs.iter().enumerate() {
            x.add_at(i as i64, v);
        }
        Ok(x)
    }

    pub fn from_i64s(p: u8, coeffs: &[i64]) -> Result<CycInt> {
        let ints: Vec<Int> = coeffs.iter().map(|&v| Int::from(v)).collect();
        CycInt::new(p, &ints)
    }

    /// `ζ_p^k` for any integer `k`.
    pub fn zeta_pow(p: u8, k: i64) -> CycInt {
        let mut x = CycInt::zero(p);
        x.add_at(k, &Int::ONE);
        x
    }

    pub fn zeta(p: u8) -> CycInt {
        CycInt::zeta_pow(p, 1)
    }

    pub fn order(&self) -> u8 {
        self.p
    }

    fn dim(&self) -> usize {
        self.p as usize - 1
    }

    /// Coefficients `c_0..c_{p-2}` in the power basis.
    pub fn coeffs(&self) -> &[Int] {
        &self.c[..self.dim()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(Int::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs()[1..].iter().all(Int::is_zero)
    }

    /// Adds `v·ζ^k` in place.
    pub fn add_at(&mut self, k: i64, v: &Int) {
        if v.is_zero() {
            return;
        }
        let p = self.p as i64;
        let k = k.rem_euclid(p) as usize;
        if k < self.dim() {
            self.c[k] += v;
        } else {
            for i in 0..self.dim() {
                self.c[i] -= v;
            }
        }
    }

    fn check_same(&self, o: &CycInt) -> Result<()> {
        if self.p == o.p {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("Z[ζ_{}] vs Z[ζ_{}]", self.p, o.p)))
        }
    }

    pub fn checked_add(&self, o: &CycInt) -> Result<CycInt> {
        self.check_same(o)?;
        let mut r = self.clone();
        for i in 0..self.dim() {
            r.c[i] += &o.c[i];
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &CycInt) -> Result<CycInt> {
        self.check_same(o)?;
        let mut r = self.clone();
        for i in 0..self.dim() {
            r.c[i] -= &o.c[i];
        }
        Ok(r)
    }

    pub fn checked_mul(&self, o: &CycInt) -> Result<CycInt> {
        self.check_same(o)?;
        let p = self.p as usize;
        // Multiply in Z[x]/(x^p - 1), then fold the x^{p-1} coefficient back.
        let mut cyc: [Int; MAX_DIM + 1] = Default::default();
        for (i, a) in self.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                cyc[(i + j) % p] += &(a * b);
            }
        }
        let top = cyc[p - 1].clone();
        let mut r = CycInt::zero(self.p);
        for i in 0..p - 1 {
            r.c[i] = &cyc[i] - &top;
        }
        Ok(r)
    }

    pub fn neg(&self) -> CycInt {
        let mut r = self.clone();
        for i in 0..self.dim() {
            r.c[i] = -&r.c[i];
        }
        r
    }

    pub fn scale(&self, k: &Int) -> CycInt {
        let mut r = self.clone();
        for i in 0..self.dim() {
            r.c[i] = &r.c[i] * k;
        }
        r
    }

    /// Multiplication by `ζ^k`: a rotation in `Z[x]/(x^p-1)` plus one fold.
    pub fn mul_zeta_pow(&self, k: i64) -> CycInt {
        let mut r = CycInt::zero(self.p);
        for (i, v) in self.coeffs().iter().enumerate() {
            r.add_at(i as i64 + k, v);
        }
        r
    }

    /// The image under `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> CycInt {
        let mut r = CycInt::zero(self.p);
        for (i, v) in self.coeffs().iter().enumerate() {
            r.add_at(-(i as i64), v);
        }
        r
    }

    /// Multiplication matrix of `self` acting on the power basis: column `j`
    /// holds the coordinates of `self · ζ^j`.
    fn mult_matrix(&self) -> Vec<Vec<Int>> {
        let d = self.dim();
        let mut m = vec![vec![Int::ZERO; d]; d];
        for j in 0..d {
            let col = self.mul_zeta_pow(j as i64);
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = col.c[i].clone();
            }
        }
        m
    }

    /// Field norm down to `Z`.
    pub fn norm(&self) -> Int {
        determinant(self.mult_matrix())
    }

    /// The inverse in `Z[ζ_p]` if `self` is a unit.
    ///
    /// Solves `self · x = 1` as an integer linear system by Cramer's rule; a
    /// solution with integral coordinates exists exactly for units.
    pub fn unit_inverse(&self) -> Option<CycInt> {
        let m = self.mult_matrix();
        let det = determinant(m.clone());
        if det.is_zero() {
            return None;
        }
        let d = self.dim();
        let mut x = CycInt::zero(self.p);
        for j in 0..d {
            let mut mj = m.clone();
            for (i, row) in mj.iter_mut().enumerate() {
                row[j] = if i == 0 { Int::ONE } else { Int::ZERO };
            }
            x.c[j] = determinant(mj).div_exact(&det)?;
        }
        debug_assert!(self.checked_mul(&x).map(|v| v == CycInt::one(self.p)).unwrap_or(false));
        Some(x)
    }
}

/// Fraction-free (Bareiss) determinant.
fn determinant(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    let mut sign = Int::ONE;
    let mut prev = Int::ONE;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -&sign;
                }
                None => return Int::ZERO,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss step is exact");
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        Int::ONE
    } else {
        &sign * &m[n - 1][n - 1]
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, v) in self.coeffs().iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{v}")?,
                1 => write!(f, "({v})z{}", self.p)?,
                _ => write!(f, "({v})z{}^{i}", self.p)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt<{}>{:?}", self.p, self.coeffs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: u8, v: &[i64]) -> CycInt {
        CycInt::from_i64s(p, v).unwrap()
    }

    #[test]
    fn additive_inverse_and_root_sums() {
        assert!(c(5, &[1, 0, 0, 0]).checked_add(&c(5, &[-1, 0, 0, 0])).unwrap().is_zero());
        let s = CycInt::zeta(3).checked_add(&CycInt::zeta_pow(3, 2)).unwrap();
        assert_eq!(s.coeffs(), &[Int::from(-1), Int::ZERO]);
        let s = CycInt::zeta_pow(5, 2).checked_add(&CycInt::zeta_pow(5, 3)).unwrap();
        assert_eq!(s, c(5, &[0, 0, 1, 1]));
    }

    #[test]
    fn multiplication_reduces() {
        assert_eq!(CycInt::zeta(5).checked_mul(&CycInt::zeta_pow(5, 4)).unwrap(), CycInt::one(5));
        assert_eq!(CycInt::zeta(3).checked_mul(&CycInt::zeta(3)).unwrap(), c(3, &[-1, -1]));
        let a = CycInt::one(3).checked_sub(&CycInt::zeta(3)).unwrap();
        let b = CycInt::one(3).checked_sub(&CycInt::zeta_pow(3, 2)).unwrap();
        assert_eq!(a.checked_mul(&b).unwrap(), c(3, &[3, 0]));
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let e = CycInt::one(3).checked_add(&CycInt::one(5)).unwrap_err();
        assert!(matches!(e, Error::RingMismatch(_)));
        assert!(CycInt::one(3).checked_mul(&CycInt::one(7)).is_err());
        assert!(CycInt::new(11, &[]).is_err());
    }

    #[test]
    fn norms_and_units() {
        for p in SUPPORTED_PRIMES {
            let one_minus = CycInt::one(p).checked_sub(&CycInt::zeta(p)).unwrap();
            assert_eq!(one_minus.norm(), Int::from(p as i64));
            assert!(one_minus.unit_inverse().is_none());
            // 1 + ζ is a cyclotomic unit for odd p.
            let one_plus = CycInt::one(p).checked_add(&CycInt::zeta(p)).unwrap();
            let inv = one_plus.unit_inverse().unwrap();
            assert_eq!(one_plus.checked_mul(&inv).unwrap(), CycInt::one(p));
            assert_eq!(CycInt::from_int(p, Int::from(2)).unit_inverse(), None);
            assert_eq!(CycInt::from_int(p, Int::from(-1)).unit_inverse(), Some(CycInt::from_int(p, Int::from(-1))));
        }
    }

    #[test]
    fn conjugate_and_rotation() {
        let z = CycInt::zeta(7);
        assert_eq!(z.conjugate(), CycInt::zeta_pow(7, 6));
        assert_eq!(z.mul_zeta_pow(6), CycInt::one(7));
        let x = c(7, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(x.mul_zeta_pow(3), x.checked_mul(&CycInt::zeta_pow(7, 3)).unwrap());
    }
}
