//! Constructors for Pochhammer products, Jacobi products, theta series and
//! Lambert-type sums.
//!
//! An infinite product is expanded with exactly the factors whose q-exponent
//! is at most the order: a factor `1 - c q^e` with `e > N` is `1` modulo
//! `q^{N+1}`, so dropping it cannot change a trusted coefficient.

use crate::error::{Error, Result};
use crate::ring::Int;

use super::series::IntSeries;

/// `±q^e`, the base argument of a Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QMonomial {
    pub sign: i8,
    pub exponent: i64,
}

impl QMonomial {
    pub fn new(sign: i8, exponent: i64) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Invalid(format!("monomial sign must be ±1, got {sign}")));
        }
        if exponent < 0 {
            return Err(Error::NegativeExponent(format!("q^{exponent}")));
        }
        Ok(QMonomial { sign, exponent })
    }

    /// `q^e`
    pub fn q(e: i64) -> Self {
        QMonomial::new(1, e).expect("nonnegative exponent")
    }

    /// `-q^e`
    pub fn neg_q(e: i64) -> Self {
        QMonomial::new(-1, e).expect("nonnegative exponent")
    }

    pub fn times_q(self, k: i64) -> Result<Self> {
        QMonomial::new(self.sign, self.exponent + k)
    }

    pub fn pow(self, n: i64) -> Self {
        let sign = if self.sign < 0 && n % 2 != 0 { -1 } else { 1 };
        QMonomial { sign, exponent: self.exponent * n }
    }

    /// As a series truncated to `order`.
    pub fn to_series(self, order: usize) -> IntSeries {
        IntSeries::monomial((), Int::from(self.sign as i64), self.exponent as usize, order)
    }
}

/// `(a; q^m)_n = ∏_{j<n} (1 - a q^{jm})`.
pub fn poch_finite(a: QMonomial, m: usize, n: usize, order: usize) -> IntSeries {
    let mut s = IntSeries::int_one(order);
    for j in 0..n {
        let e = a.exponent as usize + j * m;
        if e == 0 {
            // 1 - (±1): either the zero series or the constant 2.
            if a.sign > 0 {
                return IntSeries::int_zero(order);
            }
            s = s.scale_int(&Int::from(2));
        } else if e <= order {
            s.mul_unit_binomial(a.sign, e);
        }
    }
    s
}

/// `(a; q^m)_∞`.
pub fn poch_infinite(a: QMonomial, m: usize, order: usize) -> Result<IntSeries> {
    if m == 0 {
        return Err(Error::OutOfRange("Pochhammer step must be positive".into()));
    }
    if a.exponent == 0 && a.sign > 0 {
        return Err(Error::ZeroFactor);
    }
    let mut s = IntSeries::int_one(order);
    let mut e = a.exponent as usize;
    if e == 0 {
        s = s.scale_int(&Int::from(2));
        e += m;
    }
    while e <= order {
        s.mul_unit_binomial(a.sign, e);
        e += m;
    }
    Ok(s)
}

/// `1 / (a; q^m)_∞`, expanded directly by repeated geometric division.
pub fn poch_infinite_inverse(a: QMonomial, m: usize, order: usize) -> Result<IntSeries> {
    if m == 0 {
        return Err(Error::OutOfRange("Pochhammer step must be positive".into()));
    }
    if a.exponent == 0 {
        return Err(Error::NotAUnit(format!("(1 - ({})) factor", a.sign)));
    }
    let mut s = IntSeries::int_one(order);
    let mut e = a.exponent as usize;
    while e <= order {
        s.div_unit_binomial(a.sign, e);
        e += m;
    }
    Ok(s)
}

/// `(q^m; q^m)_∞`, without the `q^{m/24}` prefactor of the Dedekind eta.
pub fn eta(m: usize, order: usize) -> Result<IntSeries> {
    poch_infinite(QMonomial::q(m as i64), m, order)
}

/// `[q^a; q^m] = (q^a, q^{m-a}; q^m)_∞` for `0 < a < m`.
pub fn jacprod(a: usize, m: usize, order: usize) -> Result<IntSeries> {
    if a == 0 || a >= m {
        return Err(Error::OutOfRange(format!("jacprod needs 0 < a < m, got a={a}, m={m}")));
    }
    let mut s = poch_infinite(QMonomial::q(a as i64), m, order)?;
    let mut e = m - a;
    while e <= order {
        s.mul_unit_binomial(1, e);
        e += m;
    }
    Ok(s)
}

/// The two Jacobi triple product specializations used throughout, plus
/// Euler's pentagonal series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaForm {
    /// `(zq, z^{-1}q, q²; q²)_∞ = Σ (-1)^n z^n q^{n²}`
    OddSquares { z: ZArg },
    /// `(z, z^{-1}q, q; q)_∞ = Σ (-1)^n z^n q^{n(n-1)/2}`
    Triangular { z: ZArg },
    /// `(q; q)_∞ = Σ (-1)^n q^{n(3n-1)/2}`
    Pentagonal,
}

/// `z = sign · q^power`; the power may be negative as long as every exponent
/// that appears stays nonnegative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZArg {
    pub sign: i8,
    pub power: i64,
}

impl ZArg {
    pub const ONE: ZArg = ZArg { sign: 1, power: 0 };
}

fn theta_exponent(form: ThetaForm, n: i64) -> i64 {
    match form {
        ThetaForm::OddSquares { z } => n * n + z.power * n,
        ThetaForm::Triangular { z } => n * (n - 1) / 2 + z.power * n,
        ThetaForm::Pentagonal => n * (3 * n - 1) / 2,
    }
}

/// The sum side of a theta identity, summed over every `n` whose exponent is
/// at most the order.
pub fn theta_jtp(form: ThetaForm, order: usize) -> Result<IntSeries> {
    let z = match form {
        ThetaForm::OddSquares { z } | ThetaForm::Triangular { z } => z,
        ThetaForm::Pentagonal => ZArg::ONE,
    };
    let mut s = IntSeries::int_zero(order);
    // Every exponent is a convex quadratic in n whose vertex is at |n| ≤ |power|+1.
    let reach = z.power.abs() + 1;
    let mut n: i64 = 0;
    loop {
        let mut any = false;
        for m in [n, -n] {
            if n == 0 && m != 0 {
                continue;
            }
            if m == -n && n == 0 && any {
                continue;
            }
            let e = theta_exponent(form, m);
            if e < 0 {
                return Err(Error::NegativeExponent(format!("theta term q^{e} at n={m}")));
            }
            if e as usize <= order {
                any = true;
                let mut c: i64 = if m.rem_euclid(2) == 0 { 1 } else { -1 };
                if z.sign < 0 && m.rem_euclid(2) == 1 {
                    c = -c;
                }
                s.add_term(e as usize, &Int::from(c));
            }
            if n == 0 {
                break;
            }
        }
        if !any && n > reach {
            break;
        }
        n += 1;
    }
    Ok(s)
}

/// The product side of a [`ThetaForm`]; a factor `(1 - 1)` makes it zero.
pub fn theta_product(form: ThetaForm, order: usize) -> Result<IntSeries> {
    let factors: Vec<(QMonomial, usize)> = match form {
        ThetaForm::OddSquares { z } => {
            vec![(monomial_arg(z.sign, z.power + 1)?, 2), (monomial_arg(z.sign, 1 - z.power)?, 2), (QMonomial::q(2), 2)]
        }
        ThetaForm::Triangular { z } => {
            vec![(monomial_arg(z.sign, z.power)?, 1), (monomial_arg(z.sign, 1 - z.power)?, 1), (QMonomial::q(1), 1)]
        }
        ThetaForm::Pentagonal => vec![(QMonomial::q(1), 1)],
    };
    let mut s = IntSeries::int_one(order);
    for (a, m) in factors {
        match poch_infinite(a, m, order) {
            Ok(p) => s = &s * &p,
            Err(Error::ZeroFactor) => return Ok(IntSeries::int_zero(order)),
            Err(e) => return Err(e),
        }
    }
    Ok(s)
}

fn monomial_arg(sign: i8, e: i64) -> Result<QMonomial> {
    QMonomial::new(sign, e)
}

/// An integer-valued quadratic `(a2 n² + a1 n + a0) / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quadratic {
    pub a2: i64,
    pub a1: i64,
    pub a0: i64,
    pub den: i64,
}

impl Quadratic {
    pub fn new(a2: i64, a1: i64, a0: i64) -> Self {
        Quadratic { a2, a1, a0, den: 1 }
    }

    pub fn with_den(a2: i64, a1: i64, a0: i64, den: i64) -> Self {
        Quadratic { a2, a1, a0, den }
    }

    pub fn eval(&self, n: i64) -> Result<i64> {
        let num = self.a2 * n * n + self.a1 * n + self.a0;
        if num % self.den != 0 {
            return Err(Error::Invalid(format!("quadratic exponent not integral at n={n}")));
        }
        Ok(num / self.den)
    }
}

/// `Σ_n s(n) q^{A(n)} / (1 - q^{B(n)})` with `s(n) = (-1)^n` or `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambertSum {
    pub numerator: Quadratic,
    /// `B(n) = b1·n + b0`
    pub b1: i64,
    pub b0: i64,
    pub alternating: bool,
}

/// Expands a [`LambertSum`].
///
/// A term with `B(n) < 0` is first rewritten through
/// `1/(1 - q^{-m}) = -q^m/(1 - q^m)`; summation covers every `n` whose
/// rewritten leading exponent is at most the order.
pub fn lambert_sum(spec: LambertSum, order: usize) -> Result<IntSeries> {
    let quad = spec.numerator;
    if quad.a2 * quad.den <= 0 {
        return Err(Error::Invalid("numerator exponent must grow in both directions".into()));
    }
    let mut s = IntSeries::int_zero(order);
    // Past the vertex A is increasing, and the leading exponent is at least A.
    let vertex = (quad.a1.abs() / (2 * quad.a2.abs())) + 1;
    for dir in [1i64, -1] {
        let mut k: i64 = if dir == 1 { 0 } else { 1 };
        loop {
            let n = dir * k;
            let a = quad.eval(n)?;
            let b = spec.b1 * n + spec.b0;
            if b == 0 {
                return Err(Error::Invalid(format!("denominator 1 - q^0 at n={n}")));
            }
            let (lead, sign, step) = if b > 0 { (a, 1i64, b) } else { (a - b, -1i64, -b) };
            if lead < 0 {
                return Err(Error::NegativeExponent(format!("Lambert term q^{lead} at n={n}")));
            }
            if lead as usize <= order {
                let mut c = sign;
                if spec.alternating && n.rem_euclid(2) == 1 {
                    c = -c;
                }
                let c = Int::from(c);
                let mut e = lead as usize;
                while e <= order {
                    s.add_term(e, &c);
                    e += step as usize;
                }
            } else if k > vertex {
                break;
            }
            k += 1;
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::QSeries;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn finite_pochhammer() {
        assert_eq!(ints(&poch_finite(QMonomial::q(1), 1, 0, 5)), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(ints(&poch_finite(QMonomial::q(1), 1, 2, 5)), vec![1, -1, -1, 1, 0, 0]);
        assert_eq!(ints(&poch_finite(QMonomial::neg_q(1), 1, 2, 5)), vec![1, 1, 1, 1, 0, 0]);
        assert!(poch_finite(QMonomial::q(0), 1, 3, 5).is_zero());
        assert_eq!(ints(&poch_finite(QMonomial::q(0), 1, 0, 2)), vec![1, 0, 0]);
    }

    #[test]
    fn infinite_pochhammer() {
        assert_eq!(ints(&eta(1, 8).unwrap()), vec![1, -1, -1, 0, 0, 1, 0, 1, 0]);
        assert_eq!(ints(&poch_infinite(QMonomial::q(1), 2, 4).unwrap()), vec![1, -1, 0, -1, 1]);
        assert_eq!(poch_infinite(QMonomial::q(0), 1, 4), Err(Error::ZeroFactor));
        // (-1; q)_∞ = 2 (-q; q)_∞
        let lhs = poch_infinite(QMonomial::neg_q(0), 1, 10).unwrap();
        let rhs = poch_infinite(QMonomial::neg_q(1), 1, 10).unwrap().scale_int(&Int::from(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_splitting() {
        // (-q;q)_∞ (q;q²)_∞ = 1 and (-q;q)_∞ (q;q)_∞ = (q²;q²)_∞
        let n = 60;
        let a = poch_infinite(QMonomial::neg_q(1), 1, n).unwrap();
        let b = poch_infinite(QMonomial::q(1), 2, n).unwrap();
        assert_eq!(&a * &b, IntSeries::int_one(n));
        let lhs = (&a * &eta(1, n).unwrap()).try_div(&eta(2, n).unwrap()).unwrap();
        assert_eq!(lhs, IntSeries::int_one(n));
        let unit = (&eta(1, n).unwrap() * &eta(1, n).unwrap().invert().unwrap()).truncate(n);
        assert_eq!(unit, IntSeries::int_one(n));
    }

    #[test]
    fn inverse_product_matches_inversion() {
        let n = 40;
        let direct = poch_infinite_inverse(QMonomial::q(1), 1, n).unwrap();
        assert_eq!(direct, eta(1, n).unwrap().invert().unwrap());
        assert_eq!(direct.coeff(4).unwrap(), &Int::from(5));
        assert!(poch_infinite_inverse(QMonomial::q(0), 1, n).is_err());
    }

    #[test]
    fn jacobi_products() {
        let j = jacprod(1, 2, 3).unwrap();
        let sq = poch_infinite(QMonomial::q(1), 2, 3).unwrap().pow(2);
        assert_eq!(j, sq);
        assert_eq!(ints(&j), vec![1, -2, 1, -2]);
        for (a, m) in [(1, 5), (2, 5), (5, 25), (10, 50), (49, 147)] {
            assert_eq!(jacprod(a, m, 200).unwrap(), jacprod(m - a, m, 200).unwrap());
        }
        assert!(jacprod(5, 5, 10).is_err());
        assert!(jacprod(0, 5, 10).is_err());
    }

    #[test]
    fn theta_forms() {
        let s = theta_jtp(ThetaForm::OddSquares { z: ZArg::ONE }, 10).unwrap();
        assert_eq!(ints(&s), vec![1, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0]);
        let gauss = &poch_infinite(QMonomial::q(1), 2, 10).unwrap() * &eta(1, 10).unwrap();
        assert_eq!(s, gauss);
        assert!(theta_jtp(ThetaForm::Triangular { z: ZArg::ONE }, 20).unwrap().is_zero());
        assert!(theta_product(ThetaForm::Triangular { z: ZArg::ONE }, 20).unwrap().is_zero());
        let pent = theta_jtp(ThetaForm::Pentagonal, 100).unwrap();
        assert_eq!(pent, eta(1, 100).unwrap());
        assert!(theta_jtp(ThetaForm::OddSquares { z: ZArg { sign: 1, power: 2 } }, 10).is_err());
    }

    #[test]
    fn theta_products_agree_for_all_admissible_arguments() {
        let n = 120;
        for sign in [1i8, -1] {
            for power in -1..=1 {
                let f = ThetaForm::OddSquares { z: ZArg { sign, power } };
                assert_eq!(theta_jtp(f, n).unwrap(), theta_product(f, n).unwrap(), "{f:?}");
            }
            for power in 0..=1 {
                let f = ThetaForm::Triangular { z: ZArg { sign, power } };
                assert_eq!(theta_jtp(f, n).unwrap(), theta_product(f, n).unwrap(), "{f:?}");
            }
        }
    }

    #[test]
    fn lambert_examples() {
        let spec = LambertSum { numerator: Quadratic::new(75, 75, 0), b1: 50, b0: 10, alternating: true };
        assert_eq!(lambert_sum(spec, 9).unwrap(), IntSeries::int_one(9));
        // n = 0 gives 1/(1 - q^{10}); n = -1 has A = 0 and B = -40, so it is
        // (-1)·(-q^{40}/(1 - q^{40})); n = 1 contributes -q^{150} + O(q^{210}).
        let s = lambert_sum(spec, 160).unwrap();
        let mut expect = IntSeries::int_zero(160);
        for e in (0..=160).step_by(10) {
            expect.add_term(e, &Int::ONE);
        }
        for e in (40..=160).step_by(40) {
            expect.add_term(e, &Int::ONE);
        }
        expect.add_term(150, &Int::from(-1));
        assert_eq!(s, expect);
    }

    #[test]
    fn lambert_canonicalizes_negative_denominators() {
        // n = -1 of q^{9n²+9n}/(1 - q^{9n+3}): q^0/(1 - q^{-6}) = -q^6/(1 - q^6).
        let spec = LambertSum { numerator: Quadratic::new(9, 9, 0), b1: 9, b0: 3, alternating: true };
        let s = lambert_sum(spec, 20).unwrap();
        // Independent expansion of the n = 0 and n = -1 terms by hand; n = 1
        // starts at q^18 with ratio q^12, n = -2 starts at q^18 + 15.
        let mut expect = IntSeries::int_zero(20);
        for e in (0..=20).step_by(3) {
            expect.add_term(e, &Int::ONE);
        }
        for e in (6..=20).step_by(6) {
            expect.add_term(e, &Int::from(1)); // (-1)^{-1} · (-1)
        }
        expect.add_term(18, &Int::from(-1));
        assert_eq!(s, expect);
    }

    #[test]
    fn lambert_rejects_zero_denominator() {
        let spec = LambertSum { numerator: Quadratic::new(1, 0, 0), b1: 1, b0: 0, alternating: false };
        assert!(lambert_sum(spec, 10).is_err());
        let half = LambertSum { numerator: Quadratic::with_den(1, 0, 0, 2), b1: 2, b0: 1, alternating: false };
        assert!(lambert_sum(half, 10).is_err());
    }

    #[test]
    fn lambert_padding_is_inert() {
        let spec = LambertSum { numerator: Quadratic::with_den(75, 75, 0, 2), b1: 25, b0: 5, alternating: true };
        let full = lambert_sum(spec, 400).unwrap();
        for n in [10usize, 37, 150, 299] {
            assert_eq!(lambert_sum(spec, n).unwrap(), full.truncated(n));
        }
        let _: &QSeries<Int> = &full;
    }
}
