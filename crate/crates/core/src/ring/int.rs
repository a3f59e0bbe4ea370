//! Arbitrary-precision integers with an inline machine-word fast path.
//!
//! Almost every coefficient met while expanding products to a few hundred
//! terms fits in an `i64`; only the long congruence scans push past it. The
//! value lives inline until an operation overflows and is promoted to a heap
//! `BigInt`. Values are kept normalized (a `Big` never holds something that
//! fits in `i64`), so derived equality and hashing are structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64),
    Big(Box<BigInt>),
}

/// Exact signed integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Int(Repr);

impl Int {
    pub const ZERO: Int = Int(Repr::Small(0));
    pub const ONE: Int = Int(Repr::Small(1));

    pub fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int(Repr::Small(v)),
            None => Int(Repr::Big(Box::new(b))),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match &self.0 {
            Repr::Small(v) => BigInt::from(*v),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(v) => Some(*v),
            Repr::Big(_) => None,
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Least nonnegative residue modulo `m` (`m > 0`).
    pub fn rem_euclid(&self, m: u64) -> u64 {
        assert!(m > 0, "modulus must be positive");
        match &self.0 {
            Repr::Small(v) => (*v as i128).rem_euclid(m as i128) as u64,
            Repr::Big(b) => b.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits"),
        }
    }

    /// Exact division; `None` when `d` does not divide `self` or `d == 0`.
    pub fn div_exact(&self, d: &Int) -> Option<Int> {
        if d.is_zero() {
            return None;
        }
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &d.0) {
            if let Some(q) = a.checked_div(*b) {
                return (q.wrapping_mul(*b) == *a).then_some(Int(Repr::Small(q)));
            }
        }
        let (q, r) = self.to_big().div_rem(&d.to_big());
        r.is_zero().then(|| Int::from_big(q))
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn add_ref(&self, o: &Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &o.0) {
            if let Some(s) = a.checked_add(*b) {
                return Int(Repr::Small(s));
            }
        }
        Int::from_big(self.to_big() + o.to_big())
    }

    fn sub_ref(&self, o: &Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &o.0) {
            if let Some(s) = a.checked_sub(*b) {
                return Int(Repr::Small(s));
            }
        }
        Int::from_big(self.to_big() - o.to_big())
    }

    fn mul_ref(&self, o: &Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &o.0) {
            if let Some(s) = a.checked_mul(*b) {
                return Int(Repr::Small(s));
            }
        }
        Int::from_big(self.to_big() * o.to_big())
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int(Repr::Small(v))
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int(Repr::Small(v as i64))
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => write!(f, "{v}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match &self.0 {
            Repr::Small(v) => match v.checked_neg() {
                Some(n) => Int(Repr::Small(n)),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Repr::Big(b) => Int::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Int> for &Int {
            type Output = Int;
            #[inline]
            fn $method(self, o: &Int) -> Int {
                self.$imp(o)
            }
        }
        impl $trait<Int> for Int {
            type Output = Int;
            #[inline]
            fn $method(self, o: Int) -> Int {
                self.$imp(&o)
            }
        }
        impl $trait<&Int> for Int {
            type Output = Int;
            #[inline]
            fn $method(self, o: &Int) -> Int {
                self.$imp(o)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl AddAssign<&Int> for Int {
    #[inline]
    fn add_assign(&mut self, o: &Int) {
        if let (Repr::Small(a), Repr::Small(b)) = (&mut self.0, &o.0) {
            if let Some(s) = a.checked_add(*b) {
                *a = s;
                return;
            }
        }
        *self = self.add_ref(o);
    }
}

impl SubAssign<&Int> for Int {
    #[inline]
    fn sub_assign(&mut self, o: &Int) {
        if let (Repr::Small(a), Repr::Small(b)) = (&mut self.0, &o.0) {
            if let Some(s) = a.checked_sub(*b) {
                *a = s;
                return;
            }
        }
        *self = self.sub_ref(o);
    }
}

impl MulAssign<&Int> for Int {
    fn mul_assign(&mut self, o: &Int) {
        *self = self.mul_ref(o);
    }
}

impl std::iter::Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        let mut acc = Int::ZERO;
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl<'a> std::iter::Sum<&'a Int> for Int {
    fn sum<I: Iterator<Item = &'a Int>>(iter: I) -> Int {
        let mut acc = Int::ZERO;
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl serde::Serialize for Int {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            Repr::Small(v) => s.serialize_i64(*v),
            Repr::Big(b) => s.serialize_str(&b.to_string()),
        }
    }
}
