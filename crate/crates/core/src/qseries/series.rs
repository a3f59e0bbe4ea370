use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{Coeff, CycInt, Int};

/// A power series in `q` known exactly through `q^order`.
///
/// Dense storage: `coeffs[i]` is the coefficient of `q^i` and there are always
/// `order + 1` of them. Binary operations truncate to the smaller order, so the
/// stored order never claims more than was actually computed.
#[derive(Clone, PartialEq)]
pub struct QSeries<R: Coeff> {
    ctx: R::Ctx,
    coeffs: Vec<R>,
}

pub type IntSeries = QSeries<Int>;
pub type CycSeries = QSeries<CycInt>;

impl<R: Coeff> QSeries<R> {
    pub fn zero(ctx: R::Ctx, order: usize) -> Self {
        QSeries { ctx, coeffs: vec![R::zero(ctx); order + 1] }
    }

    pub fn one(ctx: R::Ctx, order: usize) -> Self {
        Self::monomial(ctx, R::one(ctx), 0, order)
    }

    /// `c · q^e`; the zero series when `e > order`.
    pub fn monomial(ctx: R::Ctx, c: R, e: usize, order: usize) -> Self {
        let mut s = Self::zero(ctx, order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Builds a series from its first coefficients; `coeffs.len()` must be
    /// `order + 1`.
    pub fn from_coeffs(ctx: R::Ctx, coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        QSeries { ctx, coeffs }
    }

    pub fn ctx(&self) -> R::Ctx {
        self.ctx
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [R] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&R> {
        self.coeffs.get(n).ok_or(Error::BeyondOrder { requested: n, order: self.order() })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Drops everything past `q^order` (no-op if already that short).
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    pub fn truncated(&self, order: usize) -> Self {
        let n = (order + 1).min(self.coeffs.len());
        QSeries { ctx: self.ctx, coeffs: self.coeffs[..n].to_vec() }
    }

    fn check_ctx(&self, o: &Self) -> Result<()> {
        if self.ctx == o.ctx {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ctx, o.ctx)))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_ctx(o)?;
        let n = self.order().min(o.order());
        let mut r = self.truncated(n);
        for (a, b) in r.coeffs.iter_mut().zip(&o.coeffs) {
            a.add_assign_ref(b);
        }
        Ok(r)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check_ctx(o)?;
        let n = self.order().min(o.order());
        let mut r = self.truncated(n);
        for (a, b) in r.coeffs.iter_mut().zip(&o.coeffs) {
            a.sub_assign_ref(b);
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check_ctx(o)?;
        let n = self.order().min(o.order());
        let mut r = Self::zero(self.ctx, n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    r.coeffs[i + j].add_mul_assign(a, b);
                }
            }
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        QSeries { ctx: self.ctx, coeffs: self.coeffs.iter().map(R::neg_ref).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        QSeries { ctx: self.ctx, coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect() }
    }

    pub fn scale_int(&self, k: &Int) -> Self {
        QSeries { ctx: self.ctx, coeffs: self.coeffs.iter().map(|a| a.scale_int(k)).collect() }
    }

    /// Multiplies by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut r = Self::zero(self.ctx, n);
        for i in k..=n {
            r.coeffs[i] = self.coeffs[i - k].clone();
        }
        r
    }

    /// Multiplicative inverse by forward substitution.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or_else(|| Error::NotAUnit(format!("{:?}", self.coeffs[0])))?;
        let n = self.order();
        let mut b = Self::zero(self.ctx, n);
        b.coeffs[0] = inv0.clone();
        let neg_inv0 = inv0.neg_ref();
        for i in 1..=n {
            let mut acc = R::zero(self.ctx);
            for j in 1..=i {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc.add_mul_assign(a, &b.coeffs[i - j]);
                }
            }
            b.coeffs[i] = acc.mul_ref(&neg_inv0);
        }
        Ok(b)
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.invert()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ctx, self.order());
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// `q ↦ q^k`; the order is kept, so only the first `order / k + 1`
    /// coefficients of `self` are used.
    pub fn substitute_power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange("substitution power must be at least 1".into()));
        }
        let n = self.order();
        let mut r = Self::zero(self.ctx, n);
        for j in 0..=n / k {
            r.coeffs[j * k] = self.coeffs[j].clone();
        }
        Ok(r)
    }

    /// `q ↦ q^k` keeping every coefficient that is known: a series exact
    /// through `q^N` becomes exact through `q^{kN+k-1}`.
    pub fn dilate(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange("substitution power must be at least 1".into()));
        }
        let n = k * self.order() + k - 1;
        let mut r = Self::zero(self.ctx, n);
        for (j, c) in self.coeffs.iter().enumerate() {
            r.coeffs[j * k] = c.clone();
        }
        Ok(r)
    }

    /// In place `self ← self · (1 - c q^k)`.
    pub fn mul_binomial(&mut self, c: &R, k: usize) {
        if k == 0 {
            for a in self.coeffs.iter_mut() {
                let t = a.mul_ref(c);
                a.sub_assign_ref(&t);
            }
            return;
        }
        let n = self.order();
        for i in (k..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if !lo[i - k].is_zero() {
                hi[0].sub_mul_assign(c, &lo[i - k]);
            }
        }
    }

    /// In place `self ← self / (1 - c q^k)` for `k ≥ 1`.
    pub fn div_binomial(&mut self, c: &R, k: usize) {
        assert!(k >= 1, "1 - c is not invertible in general");
        let n = self.order();
        for i in k..=n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if !lo[i - k].is_zero() {
                hi[0].add_mul_assign(c, &lo[i - k]);
            }
        }
    }

    /// In place `self ← self · (1 - sign · q^k)` with `sign = ±1`, `k ≥ 1`.
    pub fn mul_unit_binomial(&mut self, sign: i8, k: usize) {
        assert!(k >= 1);
        let n = self.order();
        for i in (k..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if sign > 0 {
                hi[0].sub_assign_ref(&lo[i - k]);
            } else {
                hi[0].add_assign_ref(&lo[i - k]);
            }
        }
    }

    /// In place `self ← self / (1 - sign · q^k)` with `sign = ±1`, `k ≥ 1`.
    pub fn div_unit_binomial(&mut self, sign: i8, k: usize) {
        assert!(k >= 1);
        let n = self.order();
        for i in k..=n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if sign > 0 {
                hi[0].add_assign_ref(&lo[i - k]);
            } else {
                hi[0].sub_assign_ref(&lo[i - k]);
            }
        }
    }

    /// Adds `c · q^e` in place; exponents past the order are ignored.
    pub fn add_term(&mut self, e: usize, c: &R) {
        if let Some(a) = self.coeffs.get_mut(e) {
            a.add_assign_ref(c);
        }
    }

    /// Adds `c · q^shift · other` in place, truncating to `self`'s order.
    pub fn add_scaled_shifted(&mut self, c: &R, shift: usize, other: &Self) {
        let n = self.order();
        if shift > n {
            return;
        }
        for (j, b) in other.coeffs.iter().enumerate().take(n - shift + 1) {
            if !b.is_zero() {
                self.coeffs[j + shift].add_mul_assign(c, b);
            }
        }
    }

    pub fn map<S: Coeff>(&self, ctx: S::Ctx, f: impl Fn(&R) -> S) -> QSeries<S> {
        QSeries { ctx, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Smallest exponent at which the two series differ (compared through the
    /// smaller order), or `None` when they agree.
    pub fn first_mismatch(&self, o: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&o.coeffs).position(|(a, b)| a != b)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl IntSeries {
    pub fn int_zero(order: usize) -> Self {
        Self::zero((), order)
    }

    pub fn int_one(order: usize) -> Self {
        Self::one((), order)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs((), coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    /// The same series viewed over another coefficient ring.
    pub fn lift<R: Coeff>(&self, ctx: R::Ctx) -> QSeries<R> {
        self.map(ctx, |c| R::from_int(ctx, c))
    }
}

impl<R: Coeff> fmt::Debug for QSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries(order {}) {:?}", self.order(), self.coeffs)
    }
}

impl<R: Coeff + fmt::Display> fmt::Display for QSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

// Operator forms panic on a ring mismatch; use the `try_*` methods when the
// operands' rings are not known to agree.
impl<R: Coeff> Add for &QSeries<R> {
    type Output = QSeries<R>;
    fn add(self, o: Self) -> QSeries<R> {
        self.try_add(o).expect("series over different rings")
    }
}

impl<R: Coeff> Sub for &QSeries<R> {
    type Output = QSeries<R>;
    fn sub(self, o: Self) -> QSeries<R> {
        self.try_sub(o).expect("series over different rings")
    }
}

impl<R: Coeff> Mul for &QSeries<R> {
    type Output = QSeries<R>;
    fn mul(self, o: Self) -> QSeries<R> {
        self.try_mul(o).expect("series over different rings")
    }
}

impl<R: Coeff> Neg for &QSeries<R> {
    type Output = QSeries<R>;
    fn neg(self) -> QSeries<R> {
        QSeries::neg(self)
    }
}
