//! Bailey pairs and the transforms built from them.
//!
//! A pair relative to `(a, q)` with `a = q^e` is given by generators: `α_n` is
//! a short polynomial in `q` (a list of signed monomials) and `β_n` is an
//! exact truncated series. [`verify_pair`] checks the defining relation
//! `β_n = Σ_k α_k / ((q;q)_{n-k} (aq;q)_{n+k})`, [`bailey_limit`] evaluates both
//! sides of the seven limiting forms of Bailey's lemma, and
//! [`bailey_lemma_zz`] the two-variable form with `ρ1 = z`, `ρ2 = z^{-1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::qseries::{IntSeries, QSeries};
use crate::ring::Int;
use crate::zqseries::{ZFactor, ZRing};

/// `α_n` as `Σ c · q^e`.
pub type AlphaPoly = Vec<(i64, usize)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    A1,
    A3,
    A5,
    A7,
    C1,
    C5,
    E2,
    E4,
    /// `β_n = 1/(aq, q; q)_n`, `α_0 = 1`, `α_n = 0` otherwise.
    First,
    /// `β_n = 1/(aq², q; q)_n`, `α_0 = 1`, `α_1 = -aq`, `α_n = 0` otherwise.
    Second,
}

impl PairKind {
    pub const ALL: [PairKind; 10] = [
        PairKind::A1,
        PairKind::A3,
        PairKind::A5,
        PairKind::A7,
        PairKind::C1,
        PairKind::C5,
        PairKind::E2,
        PairKind::E4,
        PairKind::First,
        PairKind::Second,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PairKind::A1 => "A1",
            PairKind::A3 => "A3",
            PairKind::A5 => "A5",
            PairKind::A7 => "A7",
            PairKind::C1 => "C1",
            PairKind::C5 => "C5",
            PairKind::E2 => "E2",
            PairKind::E4 => "E4",
            PairKind::First => "first",
            PairKind::Second => "second",
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Anything that can hand out `α_n`, `β_n` and the exponent of `a`.
pub trait PairSource {
    /// `a = q^{a_exp}`
    fn a_exp(&self) -> usize;
    fn alpha(&self, n: usize) -> AlphaPoly;
    /// `β_0, …, β_{n_max}`, each truncated to `order`.
    fn betas(&self, n_max: usize, order: usize) -> Vec<IntSeries>;
}

/// A registered pair with its parameter `a = q^a_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BaileyPair {
    pub kind: PairKind,
    pub a_exp: usize,
}

impl BaileyPair {
    /// The eight named pairs are relative to `(1, q)`; the two generic pairs
    /// accept any `a = q^e`.
    pub fn new(kind: PairKind, a_exp: usize) -> Result<Self> {
        let generic = matches!(kind, PairKind::First | PairKind::Second);
        if !generic && a_exp != 0 {
            return Err(Error::Invalid(format!("pair {kind} is relative to (1,q)")));
        }
        Ok(BaileyPair { kind, a_exp })
    }

    /// Variants of [`bailey_limit`] this pair can feed.
    pub fn applicable_variants(&self) -> Vec<u8> {
        let odd = self.a_exp % 2 == 1;
        (1..=7).filter(|&v| !matches!(v, 2 | 7) || odd).collect()
    }

    fn beta_shape(&self, n: usize) -> (i8, usize) {
        let n = n as i64;
        let (sign, e) = match self.kind {
            PairKind::A1 | PairKind::C1 | PairKind::First | PairKind::Second => (1, 0),
            PairKind::A3 | PairKind::E4 => (1, n),
            PairKind::A5 => (1, n * n),
            PairKind::A7 => (1, n * n - n),
            PairKind::C5 => (1, (n * n - n) / 2),
            PairKind::E2 => (if n % 2 == 0 { 1 } else { -1 }, 0),
        };
        (sign, e as usize)
    }

    /// Binomials `(1 - q^e)` dividing `β_{n+1}` relative to `β_n`.
    fn beta_step(&self, n: usize) -> Vec<usize> {
        let e = self.a_exp;
        match self.kind {
            PairKind::A1 | PairKind::A3 | PairKind::A5 | PairKind::A7 => vec![2 * n + 1, 2 * n + 2],
            PairKind::C1 | PairKind::C5 => vec![2 * n + 1, n + 1],
            PairKind::E2 | PairKind::E4 => vec![2 * n + 2],
            PairKind::First => vec![e + n + 1, n + 1],
            PairKind::Second => vec![e + n + 2, n + 1],
        }
    }
}

fn sgn(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl PairSource for BaileyPair {
    fn a_exp(&self) -> usize {
        self.a_exp
    }

    fn alpha(&self, n: usize) -> AlphaPoly {
        if n == 0 {
            return vec![(1, 0)];
        }
        let ni = n as i64;
        let mono = |c: i64, e: i64| (c, e as usize);
        match self.kind {
            PairKind::A1 | PairKind::A3 | PairKind::A5 | PairKind::A7 => {
                // n = 3k, 3k+1 or 3k-1
                let r = ni.rem_euclid(3);
                let k = if r == 2 { (ni + 1) / 3 } else { ni / 3 };
                let k2 = k * k;
                match (self.kind, r) {
                    (PairKind::A1, 0) => vec![mono(1, 6 * k2 - k), mono(1, 6 * k2 + k)],
                    (PairKind::A1, 1) => vec![mono(-1, 6 * k2 + 5 * k + 1)],
                    (PairKind::A1, _) => vec![mono(-1, 6 * k2 - 5 * k + 1)],
                    (PairKind::A3, 0) => vec![mono(1, 6 * k2 - 2 * k), mono(1, 6 * k2 + 2 * k)],
                    (PairKind::A3, 1) => vec![mono(-1, 6 * k2 + 2 * k)],
                    (PairKind::A3, _) => vec![mono(-1, 6 * k2 - 2 * k)],
                    (PairKind::A5, 0) => vec![mono(1, 3 * k2 - k), mono(1, 3 * k2 + k)],
                    (PairKind::A5, 1) => vec![mono(-1, 3 * k2 + k)],
                    (PairKind::A5, _) => vec![mono(-1, 3 * k2 - k)],
                    (PairKind::A7, 0) => vec![mono(1, 3 * k2 - 2 * k), mono(1, 3 * k2 + 2 * k)],
                    (PairKind::A7, 1) => vec![mono(-1, 3 * k2 + 4 * k + 1)],
                    (_, _) => vec![mono(-1, 3 * k2 - 4 * k + 1)],
                }
            }
            PairKind::C1 | PairKind::C5 => {
                if n % 2 == 1 {
                    return vec![];
                }
                let k = ni / 2;
                let s = sgn(k);
                let base = if self.kind == PairKind::C1 { 3 * k * k - k } else { k * k - k };
                vec![mono(s, base), mono(s, base + 2 * k)]
            }
            PairKind::E2 => vec![(2 * sgn(ni), 0)],
            PairKind::E4 => {
                let s = sgn(ni);
                vec![mono(s, ni * ni - ni), mono(s, ni * ni + ni)]
            }
            PairKind::First => vec![],
            PairKind::Second => {
                if n == 1 {
                    vec![(-1, self.a_exp + 1)]
                } else {
                    vec![]
                }
            }
        }
    }

    fn betas(&self, n_max: usize, order: usize) -> Vec<IntSeries> {
        let mut g = IntSeries::int_one(order);
        let mut out = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let (sign, e) = self.beta_shape(n);
            let mut b = g.shift(e.min(order + 1));
            if sign < 0 {
                b = b.neg();
            }
            out.push(b);
            for k in self.beta_step(n) {
                g.div_unit_binomial(1, k);
            }
        }
        out
    }
}

/// Looks a pair up by name. The generic pairs are returned with `a = q`.
pub fn registry_lookup(name: &str) -> Result<BaileyPair> {
    let kind = PairKind::ALL
        .into_iter()
        .find(|k| k.name().eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::Unknown { kind: "Bailey pair", name: name.to_string() })?;
    let a = if matches!(kind, PairKind::First | PairKind::Second) { 1 } else { 0 };
    BaileyPair::new(kind, a)
}

/// The ten registered pairs.
pub fn registry() -> Vec<BaileyPair> {
    PairKind::ALL.iter().map(|k| registry_lookup(k.name()).expect("registered")).collect()
}

fn alpha_series(alpha: &AlphaPoly, order: usize) -> IntSeries {
    let mut s = IntSeries::int_zero(order);
    for &(c, e) in alpha {
        s.add_term(e, &Int::from(c));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PairReport {
    pub n_max: usize,
    pub order: usize,
    /// `passed[n]` for `n = 0..=n_max`.
    pub passed: Vec<bool>,
}

impl PairReport {
    pub fn pass(&self) -> bool {
        self.passed.iter().all(|&p| p)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.passed.iter().position(|&p| !p)
    }
}

/// Checks the defining relation for every `n ≤ n_max` to `order`.
pub fn verify_pair<P: PairSource + ?Sized>(pair: &P, n_max: usize, order: usize) -> PairReport {
    let betas = pair.betas(n_max, order);
    let a = pair.a_exp();
    // inv_q[m] = 1/(q;q)_m, inv_aq[m] = 1/(aq;q)_m
    let mut inv_q = vec![IntSeries::int_one(order)];
    let mut inv_aq = vec![IntSeries::int_one(order)];
    for m in 0..2 * n_max {
        let mut t = inv_q[m].clone();
        t.div_unit_binomial(1, m + 1);
        inv_q.push(t);
        let mut t = inv_aq[m].clone();
        let e = a + m + 1;
        if e <= order {
            t.div_unit_binomial(1, e);
        }
        inv_aq.push(t);
    }
    let alphas: Vec<IntSeries> = (0..=n_max).map(|k| alpha_series(&pair.alpha(k), order)).collect();
    let passed = (0..=n_max)
        .map(|n| {
            let mut rhs = IntSeries::int_zero(order);
            for k in 0..=n {
                if alphas[k].is_zero() {
                    continue;
                }
                let t = &(&alphas[k] * &inv_q[n - k]) * &inv_aq[n + k];
                rhs = &rhs + &t;
            }
            rhs == betas[n]
        })
        .collect();
    PairReport { n_max, order, passed }
}

fn sign_int(neg: bool) -> Int {
    Int::from(if neg { -1 } else { 1 })
}

/// `Σ_n w_n β_n` where `w_n` is `±q^{e(n)}` times an optional finite product;
/// stops once `e(n) > order`.
fn weighted_beta_sum(
    betas: &[IntSeries],
    order: usize,
    weight: impl Fn(usize) -> Option<(bool, usize, Vec<(i8, usize)>)>,
) -> IntSeries {
    let mut acc = IntSeries::int_zero(order);
    for (n, b) in betas.iter().enumerate() {
        let Some((neg, e, prod)) = weight(n) else { break };
        if e > order {
            break;
        }
        let mut t = b.truncated(order - e);
        for (s, k) in prod {
            if k == 0 {
                if s > 0 {
                    t = IntSeries::int_zero(order - e);
                } else {
                    t = t.scale_int(&Int::from(2));
                }
            } else {
                t.mul_unit_binomial(s, k);
            }
        }
        acc.add_scaled_shifted(&sign_int(neg), e, &t);
    }
    acc
}

/// Both sides of the `variant`-th limiting form of Bailey's lemma.
///
/// 1. `Σ a^n q^{n²} β_n = 1/(aq)_∞ · Σ a^n q^{n²} α_n`
/// 2. `Σ (-√(aq))_n a^{n/2} q^{n²/2} β_n = (-√(aq))_∞/(aq)_∞ · Σ a^{n/2} q^{n²/2} α_n`, `a = q^{odd}`
/// 3. `Σ (a;q²)_n (-1)^n q^n β_n = (aq²;q²)_∞/(aq,-q)_∞ · Σ (1-a)/(1-aq^{2n}) (-1)^n q^n α_n`
/// 4. `Σ q^n β_n = 1/(aq,q)_∞ · Σ_{n,r} (-a)^n q^{n(n+1)/2+2nr+r} α_r`
/// 5. `Σ q^{2n} β_n = 1/(aq,q)_∞ · (Σ q^{2r} α_r + Σ_{n≥1,r} (-1)^n a^{n-1} q^{n(n+1)/2+2nr}(1+aq^{2r}) α_r)`
/// 6. `Σ (aq;q²)_n q^{2n} β_n = 1/((q)_∞(aq²;q²)_∞(1+q)) · Σ_{n,r} (-a)^n q^{n²+n+2nr+2r}(1-q^{2n+2}) α_r`
/// 7. for a pair relative to `(b²q, q)` with `b = q^f`:
///    `Σ (-bq)_n q^n β_n = (-bq)_∞/(q,b²q²)_∞ · Σ_{n,r} b^{3n} q^{n(3n+5)/2+3nr+r}(1-bq^{n+r+1}) α_r`
pub fn bailey_limit<P: PairSource + ?Sized>(pair: &P, variant: u8, order: usize) -> Result<(IntSeries, IntSeries)> {
    let a = pair.a_exp();
    let n_order = order;
    if matches!(variant, 2 | 7) && a.is_multiple_of(2) {
        return Err(Error::Invalid(format!(
            "variant {variant} needs a = q^e with e odd so every exponent is integral; got e = {a}"
        )));
    }
    if !(1..=7).contains(&variant) {
        return Err(Error::OutOfRange(format!("variant {variant} not in 1..=7")));
    }
    let betas = pair.betas(order, order);
    let alphas: Vec<AlphaPoly> = (0..=order).map(|r| pair.alpha(r)).collect();
    let mut rhs = IntSeries::int_zero(order);
    let mut add = |neg: bool, e: usize, alpha: &AlphaPoly, extra: &[(i64, usize)]| {
        for &(c, ae) in alpha {
            for &(x, xe) in extra {
                let k = c * x * if neg { -1 } else { 1 };
                rhs.add_term(e + ae + xe, &Int::from(k));
            }
        }
    };
    let one = [(1i64, 0usize)];
    let lhs;
    let mut den: Vec<ZFactor> = Vec::new();
    let mut num: Vec<ZFactor> = Vec::new();
    match variant {
        1 => {
            lhs = weighted_beta_sum(&betas, order, |n| Some((false, a * n + n * n, vec![])));
            for (n, al) in alphas.iter().enumerate() {
                let e = a * n + n * n;
                if e > order {
                    break;
                }
                add(false, e, al, &one);
            }
            den.push(ZFactor::q(a + 1, 1));
        }
        2 => {
            let h = a.div_ceil(2);
            let e_of = |n: usize| (a * n + n * n) / 2;
            lhs = weighted_beta_sum(&betas, order, |n| Some((false, e_of(n), (0..n).map(|j| (-1i8, h + j)).collect())));
            for (n, al) in alphas.iter().enumerate() {
                if e_of(n) > order {
                    break;
                }
                add(false, e_of(n), al, &one);
            }
            num.push(ZFactor::neg_q(h, 1));
            den.push(ZFactor::q(a + 1, 1));
        }
        3 => {
            lhs =
                weighted_beta_sum(&betas, order, |n| Some((n % 2 == 1, n, (0..n).map(|j| (1i8, a + 2 * j)).collect())));
            for (n, al) in alphas.iter().enumerate() {
                if n > order {
                    break;
                }
                if a == 0 {
                    // (1-a)/(1-aq^{2n}) → [n = 0]
                    if n == 0 {
                        add(false, 0, al, &one);
                    }
                    continue;
                }
                // (1 - q^a) / (1 - q^{a+2n}) = Σ_j q^{j(a+2n)} - q^{a + j(a+2n)}
                let step = a + 2 * n;
                let mut extra = Vec::new();
                let mut j = 0;
                while n + j * step <= order {
                    extra.push((1, j * step));
                    extra.push((-1, a + j * step));
                    j += 1;
                }
                add(n % 2 == 1, n, al, &extra);
            }
            num.push(ZFactor::q(a + 2, 2));
            den.push(ZFactor::q(a + 1, 1));
            den.push(ZFactor::neg_q(1, 1));
        }
        4 => {
            lhs = weighted_beta_sum(&betas, order, |n| Some((false, n, vec![])));
            let mut n = 0;
            while a * n + n * (n + 1) / 2 <= order {
                let mut r = 0;
                loop {
                    let e = a * n + n * (n + 1) / 2 + 2 * n * r + r;
                    if e > order {
                        break;
                    }
                    add(n % 2 == 1, e, &alphas[r], &one);
                    r += 1;
                }
                n += 1;
            }
            den.push(ZFactor::q(a + 1, 1));
            den.push(ZFactor::q(1, 1));
        }
        5 => {
            lhs = weighted_beta_sum(&betas, order, |n| Some((false, 2 * n, vec![])));
            for r in 0..=order / 2 {
                add(false, 2 * r, &alphas[r], &one);
            }
            let mut n = 1;
            while a * (n - 1) + n * (n + 1) / 2 <= order {
                let mut r = 0;
                loop {
                    let e = a * (n - 1) + n * (n + 1) / 2 + 2 * n * r;
                    if e > order {
                        break;
                    }
                    add(n % 2 == 1, e, &alphas[r], &[(1, 0), (1, a + 2 * r)]);
                    r += 1;
                }
                n += 1;
            }
            den.push(ZFactor::q(a + 1, 1));
            den.push(ZFactor::q(1, 1));
        }
        6 => {
            lhs = weighted_beta_sum(&betas, order, |n| {
                Some((false, 2 * n, (0..n).map(|j| (1i8, a + 1 + 2 * j)).collect()))
            });
            let mut n = 0;
            while a * n + n * n + n <= order {
                let mut r = 0;
                loop {
                    let e = a * n + n * n + n + 2 * n * r + 2 * r;
                    if e > order {
                        break;
                    }
                    add(n % 2 == 1, e, &alphas[r], &[(1, 0), (-1, 2 * n + 2)]);
                    r += 1;
                }
                n += 1;
            }
            den.push(ZFactor::q(1, 1));
            den.push(ZFactor::q(a + 2, 2));
            den.push(ZFactor::finite(-1, 0, 1, 1, 1));
        }
        _ => {
            let f = (a - 1) / 2;
            lhs = weighted_beta_sum(&betas, order, |n| Some((false, n, (0..n).map(|j| (-1i8, f + 1 + j)).collect())));
            let mut n = 0;
            while 3 * f * n + n * (3 * n + 5) / 2 <= order {
                let mut r = 0;
                loop {
                    let e = 3 * f * n + n * (3 * n + 5) / 2 + 3 * n * r + r;
                    if e > order {
                        break;
                    }
                    add(false, e, &alphas[r], &[(1, 0), (-1, f + n + r + 1)]);
                    r += 1;
                }
                n += 1;
            }
            num.push(ZFactor::neg_q(f + 1, 1));
            den.push(ZFactor::q(1, 1));
            den.push(ZFactor::q(2 * f + 2, 1));
        }
    }
    let rhs = rhs.with_factors(&num, &den)?;
    Ok((lhs.truncate(n_order), rhs))
}

/// `Σ_{n ≥ start} (z, z^{-1}; q)_n q^n β_n` over any [`ZRing`].
pub fn zz_beta_sum<R: ZRing, P: PairSource + ?Sized>(pair: &P, ctx: R::Ctx, start: usize, order: usize) -> QSeries<R> {
    let betas = pair.betas(order, order);
    let mut acc = QSeries::<R>::zero(ctx, order);
    let mut poch = QSeries::<R>::one(ctx, order);
    for (n, b) in betas.iter().enumerate() {
        if n > order {
            break;
        }
        if n >= start {
            let t = poch.truncated(order - n).mul_int_series(&b.truncated(order - n));
            acc.add_scaled_shifted(&R::one(ctx), n, &t);
        }
        poch.mul_z_binomial(1, 1, n);
        poch.mul_z_binomial(1, -1, n);
    }
    acc
}

/// `V_j = (1-z)(1-z^{-1}) Σ_{i=0}^{j} z^{j-2i}` for `j = 0..=jmax`, so that
/// `(1-z)(1-z^{-1}) / ((1-zq^n)(1-z^{-1}q^n)) = Σ_j V_j q^{nj}`.
pub fn kernel_coefficients<R: ZRing>(ctx: R::Ctx, jmax: usize) -> Vec<R> {
    let mut out = Vec::with_capacity(jmax + 1);
    let mut u = R::one(ctx);
    for j in 0..=jmax {
        if j > 0 {
            let mut next = R::z_pow(ctx, -(j as i64));
            next.add_z_shifted(1, &u, false);
            u = next;
        }
        let mut v = u.clone();
        v.add_assign_ref(&u);
        v.add_z_shifted(1, &u, true);
        v.add_z_shifted(-1, &u, true);
        out.push(v);
    }
    out
}

/// Adds `c · q^a · (1-z)(1-z^{-1}) / ((1-zq^n)(1-z^{-1}q^n))` for every
/// `(c, a)` in `numer`.
pub fn add_kernel_terms<R: ZRing>(acc: &mut QSeries<R>, kernel: &[R], n: usize, numer: &[(i64, usize)]) {
    let order = acc.order();
    let ctx = acc.ctx();
    for &(c, a) in numer {
        if a > order || c == 0 {
            continue;
        }
        let cr = R::from_int(ctx, &Int::from(c));
        let mut j = 0;
        while a + n * j <= order {
            let dst = &mut acc.coeffs_mut()[a + n * j];
            if c.abs() <= 3 {
                for _ in 0..c.abs() {
                    dst.add_z_shifted(0, &kernel[j], c < 0);
                }
            } else {
                dst.add_mul_assign(&cr, &kernel[j]);
            }
            j += 1;
        }
    }
}

/// Both sides of Bailey's lemma with `ρ1 = z`, `ρ2 = z^{-1}` for a pair
/// relative to `(1, q)`:
/// `Σ (z,z^{-1})_n q^n β_n = (zq,z^{-1}q)_∞/(q)_∞² · (α_0 + Σ_{n≥1} (1-z)(1-z^{-1}) q^n α_n / ((1-zq^n)(1-z^{-1}q^n)))`.
pub fn bailey_lemma_zz<R: ZRing, P: PairSource + ?Sized>(
    pair: &P,
    ctx: R::Ctx,
    order: usize,
) -> Result<(QSeries<R>, QSeries<R>)> {
    if pair.a_exp() != 0 {
        return Err(Error::Invalid("the two-variable lemma needs a pair relative to (1,q)".into()));
    }
    let lhs = zz_beta_sum::<R, P>(pair, ctx, 0, order);
    let kernel = kernel_coefficients::<R>(ctx, order);
    let mut rhs = QSeries::<R>::zero(ctx, order);
    for &(c, e) in &pair.alpha(0) {
        rhs.add_term(e, &R::from_int(ctx, &Int::from(c)));
    }
    for n in 1..=order {
        let numer: Vec<(i64, usize)> = pair.alpha(n).into_iter().map(|(c, e)| (c, e + n)).collect();
        add_kernel_terms(&mut rhs, &kernel, n, &numer);
    }
    let rhs = rhs
        .with_factors(&[ZFactor::inf(1, 1, 1, 1), ZFactor::inf(1, -1, 1, 1)], &[ZFactor::q(1, 1), ZFactor::q(1, 1)])?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::IntSeries;
    use crate::zqseries::{zq_eval_z1, ZQSeries};

    fn poly(p: &AlphaPoly) -> Vec<(i64, usize)> {
        let mut v = p.clone();
        v.sort_by_key(|t| t.1);
        v
    }

    #[test]
    fn alpha_table_examples() {
        let a1 = registry_lookup("A1").unwrap();
        assert_eq!(poly(&a1.alpha(3)), vec![(1, 5), (1, 7)]);
        let c1 = registry_lookup("C1").unwrap();
        assert!(c1.alpha(1).is_empty());
        assert_eq!(poly(&c1.alpha(2)), vec![(-1, 2), (-1, 4)]);
        let e2 = registry_lookup("e2").unwrap();
        assert_eq!(e2.alpha(0), vec![(1, 0)]);
        for n in 1..6 {
            assert_eq!(e2.alpha(n), vec![(2 * sgn(n as i64), 0)]);
        }
        assert!(registry_lookup("Z9").is_err());
        assert!(BaileyPair::new(PairKind::A1, 1).is_err());
    }

    #[test]
    fn c_group_alpha_vanishes_at_odd_index() {
        for k in [PairKind::C1, PairKind::C5] {
            let p = BaileyPair::new(k, 0).unwrap();
            for n in (1..60).step_by(2) {
                assert!(p.alpha(n).is_empty());
            }
        }
    }

    #[test]
    fn beta_examples() {
        let a1 = registry_lookup("A1").unwrap();
        let b = a1.betas(2, 6);
        // 1/(q;q)_4 = 1 + q + 2q² + 3q³ + 5q⁴ + 6q⁵ + 9q⁶
        assert_eq!(b[2], IntSeries::from_i64s(&[1, 1, 2, 3, 5, 6, 9]));
        let e2 = registry_lookup("E2").unwrap();
        // -1/(1-q²)
        assert_eq!(e2.betas(1, 4)[1], IntSeries::from_i64s(&[-1, 0, -1, 0, -1]));
    }

    #[test]
    fn trivial_index_zero() {
        let r = verify_pair(&registry_lookup("A1").unwrap(), 0, 10);
        assert!(r.pass());
    }

    #[test]
    fn all_pairs_satisfy_the_definition() {
        for p in registry() {
            let r = verify_pair(&p, 12, 60);
            assert!(r.pass(), "{} fails at {:?}", p.kind, r.first_failure());
        }
        for e in 0..4 {
            for k in [PairKind::First, PairKind::Second] {
                assert!(verify_pair(&BaileyPair::new(k, e).unwrap(), 8, 40).pass());
            }
        }
    }

    struct Corrupt(BaileyPair, usize);

    impl PairSource for Corrupt {
        fn a_exp(&self) -> usize {
            self.0.a_exp()
        }
        fn alpha(&self, n: usize) -> AlphaPoly {
            let mut a = self.0.alpha(n);
            if n == self.1 {
                a.push((1, 3));
            }
            a
        }
        fn betas(&self, n_max: usize, order: usize) -> Vec<IntSeries> {
            self.0.betas(n_max, order)
        }
    }

    #[test]
    fn corrupted_alpha_is_caught_at_its_index() {
        let c = Corrupt(registry_lookup("A5").unwrap(), 4);
        let r = verify_pair(&c, 10, 60);
        assert_eq!(r.first_failure(), Some(4));
    }

    #[test]
    fn limits_agree() {
        for p in registry() {
            for v in p.applicable_variants() {
                let (l, r) = bailey_limit(&p, v, 60).unwrap();
                assert_eq!(l.first_mismatch(&r), None, "{} variant {v}", p.kind);
            }
        }
        for e in 0..5 {
            for k in [PairKind::First, PairKind::Second] {
                let p = BaileyPair::new(k, e).unwrap();
                for v in p.applicable_variants() {
                    let (l, r) = bailey_limit(&p, v, 50).unwrap();
                    assert_eq!(l.first_mismatch(&r), None, "{k} a=q^{e} variant {v}");
                }
            }
        }
    }

    #[test]
    fn half_power_variants_need_odd_exponent() {
        let p = registry_lookup("A1").unwrap();
        assert!(bailey_limit(&p, 2, 20).is_err());
        assert!(bailey_limit(&p, 7, 20).is_err());
        assert!(bailey_limit(&p, 8, 20).is_err());
        assert_eq!(p.applicable_variants(), vec![1, 3, 4, 5, 6]);
    }

    #[test]
    fn corrupted_pair_breaks_a_limit() {
        let c = Corrupt(registry_lookup("A1").unwrap(), 2);
        let (l, r) = bailey_limit(&c, 4, 40).unwrap();
        assert!(l.first_mismatch(&r).is_some());
    }

    #[test]
    fn two_variable_lemma() {
        for p in registry().into_iter().filter(|p| p.a_exp == 0) {
            let (l, r) = bailey_lemma_zz::<crate::zqseries::LaurentPoly, _>(&p, (), 40).unwrap();
            assert_eq!(l.first_mismatch(&r), None, "{}", p.kind);
            let (l1, r1) = bailey_lemma_zz::<Int, _>(&p, (), 40).unwrap();
            assert_eq!(zq_eval_z1(&l), l1);
            assert_eq!(l1, r1);
        }
        let p = registry_lookup("first").unwrap();
        assert!(bailey_lemma_zz::<Int, _>(&p, (), 10).is_err());
    }

    #[test]
    fn kernel_expansion() {
        // (1-z)(1-z^{-1}) / ((1-zq)(1-z^{-1}q)) · (1-zq)(1-z^{-1}q) = (1-z)(1-z^{-1})
        let k = kernel_coefficients::<crate::zqseries::LaurentPoly>((), 20);
        let mut s = ZQSeries::zero((), 20);
        add_kernel_terms(&mut s, &k, 1, &[(1, 0)]);
        s.mul_z_binomial(1, 1, 1);
        s.mul_z_binomial(1, -1, 1);
        let mut expect = ZQSeries::zero((), 20);
        expect.add_term(0, &k[0]);
        assert_eq!(s, expect);
    }
}
