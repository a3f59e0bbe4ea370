//! Exact coefficient rings.
//!
//! [`Coeff`] is the small ring interface the series code is generic over. It
//! carries a context value (`Ctx`) so that rings whose elements need extra
//! data to build a zero, like the order of a cyclotomic ring, can still hand
//! out constants.

mod cyclotomic;
mod int;

pub use cyclotomic::{check_prime, CycInt, SUPPORTED_PRIMES};
pub use int::Int;

use std::fmt;

use crate::error::Result;
use crate::zqseries::LaurentPoly;

pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Ctx: Copy + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    fn zero(ctx: Self::Ctx) -> Self;
    fn from_int(ctx: Self::Ctx, v: &Int) -> Self;
    fn ctx(&self) -> Self::Ctx;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, o: &Self);
    fn sub_assign_ref(&mut self, o: &Self);
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn unit_inverse(&self) -> Option<Self>;

    fn one(ctx: Self::Ctx) -> Self {
        Self::from_int(ctx, &Int::ONE)
    }

    fn scale_int(&self, k: &Int) -> Self {
        self.mul_ref(&Self::from_int(self.ctx(), k))
    }

    /// `self += a · b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let t = a.mul_ref(b);
        self.add_assign_ref(&t);
    }

    /// `self -= a · b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let t = a.mul_ref(b);
        self.sub_assign_ref(&t);
    }
}

impl Coeff for Int {
    type Ctx = ();

    fn zero(_: ()) -> Self {
        Int::ZERO
    }
    fn from_int(_: (), v: &Int) -> Self {
        v.clone()
    }
    fn ctx(&self) {}
    #[inline]
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    #[inline]
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    #[inline]
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.to_i64() {
            Some(1) => Some(Int::ONE),
            Some(-1) => Some(Int::from(-1)),
            _ => None,
        }
    }
    fn scale_int(&self, k: &Int) -> Self {
        self * k
    }
    #[inline]
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_one() {
            *self += b;
        } else if b.is_one() {
            *self += a;
        } else {
            *self += &(a * b);
        }
    }
    #[inline]
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_one() {
            *self -= b;
        } else if b.is_one() {
            *self -= a;
        } else {
            *self -= &(a * b);
        }
    }
}

// The series layer guarantees operands share a context before reaching these
// methods, so a mismatch here is a programming error.
impl Coeff for CycInt {
    type Ctx = u8;

    fn zero(p: u8) -> Self {
        CycInt::zero(p)
    }
    fn from_int(p: u8, v: &Int) -> Self {
        CycInt::from_int(p, v.clone())
    }
    fn ctx(&self) -> u8 {
        self.order()
    }
    fn is_zero(&self) -> bool {
        CycInt::is_zero(self)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self = self.checked_add(o).expect("cyclotomic order mismatch");
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self = self.checked_sub(o).expect("cyclotomic order mismatch");
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.checked_mul(o).expect("cyclotomic order mismatch")
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn unit_inverse(&self) -> Option<Self> {
        CycInt::unit_inverse(self)
    }
    fn scale_int(&self, k: &Int) -> Self {
        self.scale(k)
    }
}

/// Substitutes `z = ζ_p` into a Laurent polynomial; `z^{-1}` maps to `ζ^{p-1}`.
pub fn embed_laurent_at_root(poly: &LaurentPoly, p: u8) -> Result<CycInt> {
    check_prime(p)?;
    let mut acc = CycInt::zero(p);
    for (e, c) in poly.terms() {
        acc.add_at(e, c);
    }
    Ok(acc)
}

pub fn cyc_add(a: &CycInt, b: &CycInt) -> Result<CycInt> {
    a.checked_add(b)
}

pub fn cyc_mul(a: &CycInt, b: &CycInt) -> Result<CycInt> {
    a.checked_mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Int::from(c))))
    }

    #[test]
    fn embedding_examples() {
        let z5 = embed_laurent_at_root(&lp(&[(1, 1), (-1, 1)]), 5).unwrap();
        assert_eq!(z5, CycInt::zeta(5).checked_add(&CycInt::zeta_pow(5, 4)).unwrap());
        assert!(embed_laurent_at_root(&lp(&[(0, 1), (1, 1), (2, 1)]), 3).unwrap().is_zero());
        let pref = embed_laurent_at_root(&lp(&[(0, 2), (1, -1), (-1, -1)]), 5).unwrap();
        let expect = CycInt::from_int(5, Int::from(2))
            .checked_sub(&CycInt::zeta(5))
            .unwrap()
            .checked_sub(&CycInt::zeta_pow(5, 4))
            .unwrap();
        assert_eq!(pref, expect);
        assert!(embed_laurent_at_root(&lp(&[(0, 1)]), 2).is_err());
    }

    fn arb_cyc(p: u8) -> impl Strategy<Value = CycInt> {
        prop::collection::vec(-50i64..50, (p - 1) as usize).prop_map(move |v| CycInt::from_i64s(p, &v).unwrap())
    }

    fn arb_prime() -> impl Strategy<Value = u8> {
        prop::sample::select(SUPPORTED_PRIMES.to_vec())
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -20i64..20), 0..6).prop_map(|t| lp(&t))
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in arb_prime().prop_flat_map(|p| (arb_cyc(p), arb_cyc(p), arb_cyc(p)))) {
            let ab_c = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
            let a_bc = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let lhs = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
            let rhs = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
        }

        #[test]
        fn cyclotomic_polynomial_annihilates(p in arb_prime(), f in arb_laurent()) {
            let phi = LaurentPoly::from_terms((0..p as i64).map(|e| (e, Int::ONE)));
            let prod = &phi * &f;
            prop_assert!(embed_laurent_at_root(&prod, p).unwrap().is_zero());
        }

        #[test]
        fn embedding_is_a_ring_morphism(p in arb_prime(), f in arb_laurent(), g in arb_laurent()) {
            let lhs = embed_laurent_at_root(&(&f * &g), p).unwrap();
            let rhs = embed_laurent_at_root(&f, p).unwrap().checked_mul(&embed_laurent_at_root(&g, p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = embed_laurent_at_root(&(&f + &g), p).unwrap();
            let rhs = embed_laurent_at_root(&f, p).unwrap().checked_add(&embed_laurent_at_root(&g, p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
