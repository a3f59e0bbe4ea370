//! Two-variable series: q-series whose coefficients are Laurent polynomials
//! in `z`, and the same constructions evaluated at `z = 1` or `z = ζ_p`.
//!
//! [`ZRing`] is a coefficient ring with a distinguished unit `z`. The three
//! instances are [`LaurentPoly`] (symbolic `z`), [`CycInt`] (`z = ζ_p`) and
//! [`Int`] (`z = 1`), so one product routine serves every specialization.

mod laurent;

pub use laurent::LaurentPoly;

use crate::error::{Error, Result};
use crate::qseries::{CycSeries, IntSeries, QSeries};
use crate::ring::{check_prime, embed_laurent_at_root, Coeff, CycInt, Int};

pub type ZQSeries = QSeries<LaurentPoly>;

pub trait ZRing: Coeff {
    /// `z^k` in this ring.
    fn z_pow(ctx: Self::Ctx, k: i64) -> Self;

    /// `self += z^k · x`, or `self -= z^k · x` when `negate`.
    fn add_z_shifted(&mut self, k: i64, x: &Self, negate: bool);
}

impl ZRing for LaurentPoly {
    fn z_pow(_: (), k: i64) -> Self {
        LaurentPoly::monomial(k, Int::ONE)
    }
    fn add_z_shifted(&mut self, k: i64, x: &Self, negate: bool) {
        self.add_shifted(k, x, negate);
    }
}

impl ZRing for CycInt {
    fn z_pow(p: u8, k: i64) -> Self {
        CycInt::zeta_pow(p, k)
    }
    fn add_z_shifted(&mut self, k: i64, x: &Self, negate: bool) {
        for (i, v) in x.coeffs().iter().enumerate() {
            if negate {
                self.add_at(i as i64 + k, &-v);
            } else {
                self.add_at(i as i64 + k, v);
            }
        }
    }
}

impl ZRing for Int {
    fn z_pow(_: (), _: i64) -> Self {
        Int::ONE
    }
    fn add_z_shifted(&mut self, _: i64, x: &Self, negate: bool) {
        if negate {
            *self -= x;
        } else {
            *self += x;
        }
    }
}

/// A run of factors `(1 - sign·z^zpow·q^qexp)(1 - sign·z^zpow·q^{qexp+step})…`,
/// `count` of them or infinitely many.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZFactor {
    pub sign: i8,
    pub zpow: i64,
    pub qexp: usize,
    pub step: usize,
    pub count: Option<usize>,
}

impl ZFactor {
    /// `(sign·z^zpow·q^qexp; q^step)_∞`
    pub fn inf(sign: i8, zpow: i64, qexp: usize, step: usize) -> Self {
        ZFactor { sign, zpow, qexp, step, count: None }
    }

    /// `(sign·z^zpow·q^qexp; q^step)_n`
    pub fn finite(sign: i8, zpow: i64, qexp: usize, step: usize, n: usize) -> Self {
        ZFactor { sign, zpow, qexp, step, count: Some(n) }
    }

    /// `(q^qexp; q^step)_∞`
    pub fn q(qexp: usize, step: usize) -> Self {
        Self::inf(1, 0, qexp, step)
    }

    /// `(-q^qexp; q^step)_∞`
    pub fn neg_q(qexp: usize, step: usize) -> Self {
        Self::inf(-1, 0, qexp, step)
    }

    /// Exponents of the factors that can matter below `order`.
    fn exponents(self, order: usize) -> impl Iterator<Item = usize> {
        let ZFactor { qexp, step, count, .. } = self;
        let n = count.unwrap_or(usize::MAX);
        (0..n).map(move |j| qexp + j * step).take_while(move |&e| e <= order)
    }
}

impl<R: ZRing> QSeries<R> {
    /// In place `self ← self · (1 - sign·z^zpow·q^e)`.
    pub fn mul_z_binomial(&mut self, sign: i8, zpow: i64, e: usize) {
        let negate = sign > 0;
        let n = self.order();
        let c = self.coeffs_mut();
        if e == 0 {
            for a in c.iter_mut() {
                let t = a.clone();
                a.add_z_shifted(zpow, &t, negate);
            }
            return;
        }
        for i in (e..=n).rev() {
            let (lo, hi) = c.split_at_mut(i);
            if !lo[i - e].is_zero() {
                hi[0].add_z_shifted(zpow, &lo[i - e], negate);
            }
        }
    }

    /// In place `self ← self / (1 - sign·z^zpow·q^e)`, `e ≥ 1`.
    pub fn div_z_binomial(&mut self, sign: i8, zpow: i64, e: usize) -> Result<()> {
        if e == 0 {
            return Err(Error::NegativeExponent("1/(1 - c) with no q factor is not expandable here".into()));
        }
        let negate = sign < 0;
        let n = self.order();
        let c = self.coeffs_mut();
        for i in e..=n {
            let (lo, hi) = c.split_at_mut(i);
            if !lo[i - e].is_zero() {
                hi[0].add_z_shifted(zpow, &lo[i - e], negate);
            }
        }
        Ok(())
    }

    /// Multiplies in every factor of `f` whose q-exponent is at most the order;
    /// the rest are `1` modulo `q^{order+1}`.
    pub fn mul_factor(&mut self, f: ZFactor) {
        let order = self.order();
        if f.step == 0 {
            for _ in 0..f.count.expect("a constant infinite product is not defined") {
                self.mul_z_binomial(f.sign, f.zpow, f.qexp);
            }
            return;
        }
        for e in f.exponents(order) {
            self.mul_z_binomial(f.sign, f.zpow, e);
        }
    }

    pub fn div_factor(&mut self, f: ZFactor) -> Result<()> {
        let order = self.order();
        if f.step == 0 {
            for _ in 0..f.count.expect("a constant infinite product is not defined") {
                self.div_z_binomial(f.sign, f.zpow, f.qexp)?;
            }
            return Ok(());
        }
        for e in f.exponents(order) {
            self.div_z_binomial(f.sign, f.zpow, e)?;
        }
        Ok(())
    }

    /// `self · ∏ num / ∏ den`
    pub fn with_factors(mut self, num: &[ZFactor], den: &[ZFactor]) -> Result<Self> {
        for &f in num {
            self.mul_factor(f);
        }
        for &f in den {
            self.div_factor(f)?;
        }
        Ok(self)
    }

    /// `∏ num / ∏ den` as a series.
    pub fn product(ctx: R::Ctx, order: usize, num: &[ZFactor], den: &[ZFactor]) -> Result<Self> {
        Self::one(ctx, order).with_factors(num, den)
    }

    /// `self · z^k`
    pub fn times_z_pow(&self, k: i64) -> Self {
        let ctx = self.ctx();
        self.map(ctx, |a| {
            let mut r = R::zero(ctx);
            r.add_z_shifted(k, a, false);
            r
        })
    }

    /// `self ← self + sign · z^k · q^e · other`, truncated to `self`'s order.
    pub fn add_z_q_shifted(&mut self, sign: i8, k: i64, e: usize, other: &Self) {
        let n = self.order();
        if e > n {
            return;
        }
        let c = self.coeffs_mut();
        for (j, b) in other.coeffs().iter().enumerate().take(n - e + 1) {
            if !b.is_zero() {
                c[j + e].add_z_shifted(k, b, sign < 0);
            }
        }
    }
}

impl<R: Coeff> QSeries<R> {
    /// Product with an integer series (the integer side is lifted implicitly).
    pub fn mul_int_series(&self, b: &IntSeries) -> Self {
        let n = self.order().min(b.order());
        let mut r = Self::zero(self.ctx(), n);
        let bc = b.coeffs();
        for (i, a) in self.coeffs().iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, k) in bc[..=n - i].iter().enumerate() {
                if !k.is_zero() {
                    let t = a.scale_int(k);
                    r.coeffs_mut()[i + j].add_assign_ref(&t);
                }
            }
        }
        r
    }
}

/// `1/(1 - z^c q^e) = Σ_k z^{ck} q^{ek}` for `c = ±1`, `e ≥ 1`.
pub fn geometric_factor_inverse(c: i64, e: usize, order: usize) -> Result<ZQSeries> {
    if c != 1 && c != -1 {
        return Err(Error::Invalid(format!("z-exponent must be ±1, got {c}")));
    }
    if e == 0 {
        return Err(Error::NegativeExponent("1/(1 - z^c) has no q factor".into()));
    }
    let mut s = ZQSeries::zero((), order);
    for (k, q) in (0..=order).step_by(e).enumerate() {
        s.coeffs_mut()[q] = LaurentPoly::monomial(c * k as i64, Int::ONE);
    }
    Ok(s)
}

/// `z = 1`: every Laurent coefficient summed.
pub fn zq_eval_z1(a: &ZQSeries) -> IntSeries {
    a.map((), LaurentPoly::eval_at_one)
}

/// `z = ζ_p` applied coefficientwise.
pub fn zq_eval_root(a: &ZQSeries, p: u8) -> Result<CycSeries> {
    check_prime(p)?;
    Ok(a.map(p, |c| embed_laurent_at_root(c, p).expect("prime checked")))
}

/// The `z^m q^n` coefficient.
pub fn extract_m(a: &ZQSeries, m: i64, n: usize) -> Result<Int> {
    Ok(a.coeff(n)?.coeff(m))
}

/// Every q-coefficient is invariant under `z ↦ z^{-1}`.
pub fn is_palindromic(a: &ZQSeries) -> bool {
    a.coeffs().iter().all(LaurentPoly::is_palindromic)
}

/// Every q^n coefficient has z-support inside `[-n-bound, n+bound]`.
pub fn support_within(a: &ZQSeries, bound: i64) -> bool {
    a.coeffs().iter().enumerate().all(|(n, c)| match c.support() {
        None => true,
        Some((lo, hi)) => lo >= -(n as i64) - bound && hi <= n as i64 + bound,
    })
}

/// Lifts an integer constant into a ring with context.
pub fn int_const<R: Coeff>(ctx: R::Ctx, v: i64) -> R {
    R::from_int(ctx, &Int::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::eta;
    use proptest::prelude::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().map(|&(e, c)| (e, Int::from(c))))
    }

    #[test]
    fn geometric_inverse_examples() {
        let s = geometric_factor_inverse(1, 2, 5).unwrap();
        assert_eq!(s.coeffs(), &[lp(&[(0, 1)]), lp(&[]), lp(&[(1, 1)]), lp(&[]), lp(&[(2, 1)]), lp(&[])]);
        let t = geometric_factor_inverse(-1, 1, 3).unwrap();
        assert_eq!(t.coeff(3).unwrap(), &lp(&[(-3, 1)]));
        assert!(geometric_factor_inverse(1, 0, 3).is_err());
        // 1/((1-zq)(1-z^{-1}q)) at q²: z² + 1 + z^{-2}
        let u = &geometric_factor_inverse(1, 1, 2).unwrap() * &t.truncated(2);
        assert_eq!(u.coeff(2).unwrap(), &lp(&[(2, 1), (0, 1), (-2, 1)]));
    }

    #[test]
    fn factor_runs_match_geometric_products() {
        let n = 12;
        let direct =
            ZQSeries::product((), n, &[], &[ZFactor::finite(1, 1, 1, 0, 1), ZFactor::finite(1, -1, 1, 0, 1)]).unwrap();
        let geo = &geometric_factor_inverse(1, 1, n).unwrap() * &geometric_factor_inverse(-1, 1, n).unwrap();
        assert_eq!(direct, geo);
        let mut back = direct.clone();
        back.mul_z_binomial(1, 1, 1);
        back.mul_z_binomial(1, -1, 1);
        assert_eq!(back, ZQSeries::one((), n));
    }

    #[test]
    fn evaluations() {
        let s = ZQSeries::from_coeffs((), vec![lp(&[(1, 1), (0, -2), (-1, 1)]), lp(&[(0, 7)])]);
        assert_eq!(zq_eval_z1(&s), IntSeries::from_i64s(&[0, 7]));
        let t = ZQSeries::from_coeffs((), vec![lp(&[(0, 1), (1, 1), (2, 1)])]);
        assert!(zq_eval_root(&t, 3).unwrap().is_zero());
        let u = ZQSeries::from_coeffs((), vec![lp(&[(1, 1), (-1, 1)])]);
        assert!(!zq_eval_root(&u, 5).unwrap().is_zero());
        assert!(zq_eval_root(&u, 11).is_err());
        let v = ZQSeries::from_coeffs((), vec![LaurentPoly::zero(), lp(&[(0, 2), (1, -1), (-1, -1)])]);
        assert_eq!(extract_m(&v, 0, 1).unwrap(), Int::from(2));
        assert_eq!(extract_m(&v, 5, 1).unwrap(), Int::ZERO);
        assert!(extract_m(&v, 0, 2).is_err());
        assert!(is_palindromic(&v));
        assert!(support_within(&v, 0));
    }

    #[test]
    fn crank_product_at_z1_is_partition_series() {
        let n = 30;
        let c = ZQSeries::product((), n, &[ZFactor::q(1, 1)], &[ZFactor::inf(1, 1, 1, 1), ZFactor::inf(1, -1, 1, 1)])
            .unwrap();
        let p = eta(1, n).unwrap().invert().unwrap();
        assert_eq!(zq_eval_z1(&c), p);
        assert!(is_palindromic(&c));
        // The same construction run directly at z = 1 and at z = ζ_5.
        let at1 =
            IntSeries::product((), n, &[ZFactor::q(1, 1)], &[ZFactor::inf(1, 1, 1, 1), ZFactor::inf(1, -1, 1, 1)])
                .unwrap();
        assert_eq!(at1, p);
        let at5 = CycSeries::product(5, n, &[ZFactor::q(1, 1)], &[ZFactor::inf(1, 1, 1, 1), ZFactor::inf(1, -1, 1, 1)])
            .unwrap();
        assert_eq!(at5, zq_eval_root(&c, 5).unwrap());
    }

    fn arb_zq() -> impl Strategy<Value = ZQSeries> {
        prop::collection::vec(prop::collection::vec((-4i64..5, -9i64..10), 0..4), 4..8)
            .prop_map(|cs| ZQSeries::from_coeffs((), cs.iter().map(|t| lp(t)).collect()))
    }

    proptest! {
        #[test]
        fn evaluations_are_morphisms(a in arb_zq(), b in arb_zq(), p in prop::sample::select(vec![3u8, 5, 7])) {
            prop_assert_eq!(zq_eval_z1(&(&a * &b)), &zq_eval_z1(&a) * &zq_eval_z1(&b));
            prop_assert_eq!(zq_eval_z1(&(&a + &b)), &zq_eval_z1(&a) + &zq_eval_z1(&b));
            let ra = zq_eval_root(&a, p).unwrap();
            let rb = zq_eval_root(&b, p).unwrap();
            prop_assert_eq!(zq_eval_root(&(&a * &b), p).unwrap(), &ra * &rb);
            prop_assert_eq!(zq_eval_root(&(&a + &b), p).unwrap(), &ra + &rb);
        }

        #[test]
        fn extraction_sums_to_z1(a in arb_zq()) {
            let z1 = zq_eval_z1(&a);
            for (n, c) in a.coeffs().iter().enumerate() {
                let total: Int = match c.support() {
                    None => Int::ZERO,
                    Some((lo, hi)) => (lo..=hi).map(|m| extract_m(&a, m, n).unwrap()).sum(),
                };
                prop_assert_eq!(&total, z1.coeff(n).unwrap());
            }
        }
    }
}
