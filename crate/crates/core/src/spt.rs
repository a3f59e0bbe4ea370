//! spt-crank-type series, their `z = 1` specializations, and the rank and
//! crank generating functions they are compared against.
//!
//! Every two-variable series here is a sum of the shape
//! `Σ_{n≥1} ± q^{e(n)} P_n(q) / (zq^{bn}, z^{-1}q^{bn}; q^b)_∞`
//! where `P_{n+1}/P_n` is a product of reciprocal binomials. The summand is
//! carried from `n` to `n+1` in place, so one builder serves all of them and
//! works over any [`ZRing`]: symbolic `z`, `z = ζ_p`, or `z = 1`.
//!
//! The one-variable spt series are built separately from their own displayed
//! forms, so agreement with the `z = 1` evaluation is a real check.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::bailey::{add_kernel_terms, kernel_coefficients, BaileyPair, PairKind};
use crate::cache::SeriesCache;
use crate::error::{Error, Result};
use crate::qseries::{CycSeries, IntSeries, QSeries};
use crate::ring::{check_prime, CycInt, Int};
use crate::zqseries::{LaurentPoly, ZFactor, ZQSeries, ZRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SptFamily {
    A1,
    A3,
    A5,
    A7,
    C1,
    C5,
    E2,
    E4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Group {
    A,
    C,
    E,
}

impl SptFamily {
    pub const ALL: [SptFamily; 8] = [
        SptFamily::A1,
        SptFamily::A3,
        SptFamily::A5,
        SptFamily::A7,
        SptFamily::C1,
        SptFamily::C5,
        SptFamily::E2,
        SptFamily::E4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SptFamily::A1 => "A1",
            SptFamily::A3 => "A3",
            SptFamily::A5 => "A5",
            SptFamily::A7 => "A7",
            SptFamily::C1 => "C1",
            SptFamily::C5 => "C5",
            SptFamily::E2 => "E2",
            SptFamily::E4 => "E4",
        }
    }

    fn group(self) -> Group {
        match self {
            SptFamily::A1 | SptFamily::A3 | SptFamily::A5 | SptFamily::A7 => Group::A,
            SptFamily::C1 | SptFamily::C5 => Group::C,
            SptFamily::E2 | SptFamily::E4 => Group::E,
        }
    }

    /// Lowest q-exponent of the `n`-th summand.
    pub fn min_exponent(self, n: usize) -> usize {
        match self {
            SptFamily::A1 | SptFamily::C1 | SptFamily::E2 => n,
            SptFamily::A3 | SptFamily::E4 => 2 * n,
            SptFamily::A5 => n * n + n,
            SptFamily::A7 => n * n,
            SptFamily::C5 => (n * n + n) / 2,
        }
    }

    /// The Bailey pair whose `β_n` appears in the first form.
    pub fn pair(self) -> BaileyPair {
        let kind = match self {
            SptFamily::A1 => PairKind::A1,
            SptFamily::A3 => PairKind::A3,
            SptFamily::A5 => PairKind::A5,
            SptFamily::A7 => PairKind::A7,
            SptFamily::C1 => PairKind::C1,
            SptFamily::C5 => PairKind::C5,
            SptFamily::E2 => PairKind::E2,
            SptFamily::E4 => PairKind::E4,
        };
        BaileyPair::new(kind, 0).expect("relative to (1,q)")
    }

    /// `P_X(q)`: `(q)_∞`, `(q;q²)_∞(q)_∞` or `(q²;q²)_∞`.
    pub fn prefactor(self) -> Vec<ZFactor> {
        match self.group() {
            Group::A => vec![ZFactor::q(1, 1)],
            Group::C => vec![ZFactor::q(1, 2), ZFactor::q(1, 1)],
            Group::E => vec![ZFactor::q(2, 2)],
        }
    }
}

impl fmt::Display for SptFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SptFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SptFamily::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown { kind: "family", name: s.to_string() })
    }
}

/// The two-variable series this module can build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrankForm {
    Family(SptFamily),
    /// `S(z,q) = Σ q^n (q^{n+1})_∞ / (zq^n, z^{-1}q^n)_∞`
    Plain,
    /// `Σ q^n (-q^{n+1}, q^{n+1})_∞ / (zq^n, z^{-1}q^n)_∞`
    Bar,
    /// `Σ q^{2n} (-q^{2n+1}, q^{2n+2}; q²)_∞ / (zq^{2n}, z^{-1}q^{2n}; q²)_∞`
    M2,
}

struct Shape {
    base: usize,
    exponent: fn(usize) -> usize,
    negative: fn(usize) -> bool,
    /// `P_1`
    first: Vec<ZFactor>,
    /// `P_{n+1} = P_n / Π (1 - s q^k)` over the returned `(s, k)`
    step: fn(usize) -> Vec<(i8, usize)>,
}

fn no(_: usize) -> bool {
    false
}

/// `n ↦ [(s, k)]`, the binomials `1 - s q^k` added at step `n`.
type StepFn = fn(usize) -> Vec<(i8, usize)>;
type FlatStepFn = fn(usize) -> (Vec<(i8, usize)>, Vec<(i8, usize)>);

impl CrankForm {
    fn shape(self) -> Shape {
        let fam = |f: SptFamily| -> Shape {
            let (first, step): (Vec<ZFactor>, StepFn) = match f.group() {
                Group::A => (vec![ZFactor::q(3, 1)], |n| vec![(1, 2 * n + 1), (1, 2 * n + 2)]),
                Group::C => (vec![ZFactor::q(3, 2), ZFactor::q(2, 1)], |n| vec![(1, 2 * n + 1), (1, n + 1)]),
                Group::E => (vec![ZFactor::q(4, 2)], |n| vec![(1, 2 * n + 2)]),
            };
            let exponent: fn(usize) -> usize = match f {
                SptFamily::A1 | SptFamily::C1 | SptFamily::E2 => |n| n,
                SptFamily::A3 | SptFamily::E4 => |n| 2 * n,
                SptFamily::A5 => |n| n * n + n,
                SptFamily::A7 => |n| n * n,
                SptFamily::C5 => |n| (n * n + n) / 2,
            };
            let negative: fn(usize) -> bool = if f == SptFamily::E2 { |n| n % 2 == 1 } else { no };
            Shape { base: 1, exponent, negative, first, step }
        };
        match self {
            CrankForm::Family(f) => fam(f),
            CrankForm::Plain => Shape {
                base: 1,
                exponent: |n| n,
                negative: no,
                first: vec![ZFactor::q(2, 1)],
                step: |n| vec![(1, n + 1)],
            },
            CrankForm::Bar => Shape {
                base: 1,
                exponent: |n| n,
                negative: no,
                first: vec![ZFactor::neg_q(2, 1), ZFactor::q(2, 1)],
                step: |n| vec![(-1, n + 1), (1, n + 1)],
            },
            CrankForm::M2 => Shape {
                base: 2,
                exponent: |n| 2 * n,
                negative: no,
                first: vec![ZFactor::neg_q(3, 2), ZFactor::q(4, 2)],
                step: |n| vec![(-1, 2 * n + 1), (1, 2 * n + 2)],
            },
        }
    }
}

/// Builds a [`CrankForm`] over any [`ZRing`] to `order`.
pub fn crank_form_series<R: ZRing>(form: CrankForm, ctx: R::Ctx, order: usize) -> Result<QSeries<R>> {
    let sh = form.shape();
    let mut acc = QSeries::<R>::zero(ctx, order);
    let e1 = (sh.exponent)(1);
    if e1 > order {
        return Ok(acc);
    }
    let b = sh.base;
    let mut f =
        QSeries::<R>::product(ctx, order - e1, &sh.first, &[ZFactor::inf(1, 1, b, b), ZFactor::inf(1, -1, b, b)])?;
    let one = R::one(ctx);
    let minus = one.neg_ref();
    let mut n = 1;
    loop {
        let e = (sh.exponent)(n);
        acc.add_scaled_shifted(if (sh.negative)(n) { &minus } else { &one }, e, &f);
        let next = (sh.exponent)(n + 1);
        if next > order {
            break;
        }
        f = f.truncate(order - next);
        f.mul_z_binomial(1, 1, b * n);
        f.mul_z_binomial(1, -1, b * n);
        for (s, k) in (sh.step)(n) {
            f.div_unit_binomial(s, k);
        }
        n += 1;
    }
    Ok(acc)
}

/// One-variable `z = 1` forms `Σ ± q^{e(n)} G_n / (1 - q^{bn})²`.
struct FlatShape {
    base: usize,
    exponent: fn(usize) -> usize,
    negative: fn(usize) -> bool,
    first_num: Vec<ZFactor>,
    first_den: Vec<ZFactor>,
    /// `G_{n+1} = G_n · Π(1 - s q^k) / Π(1 - s q^k)`
    step: FlatStepFn,
}

fn flat_shape(form: CrankForm) -> FlatShape {
    let one_minus_q2 = ZFactor::finite(1, 0, 2, 1, 1);
    match form {
        CrankForm::Family(f) => {
            let full = CrankForm::Family(f).shape();
            let (first_num, first_den, step): (Vec<ZFactor>, Vec<ZFactor>, fn(usize) -> _) = match f.group() {
                // 1/((q^{n+1})_∞ (q^{n+1})_n)
                Group::A => (vec![], vec![ZFactor::q(2, 1), one_minus_q2], |n| {
                    (vec![(1, n + 1), (1, n + 1)], vec![(1, 2 * n + 1), (1, 2 * n + 2)])
                }),
                // 1/((q^{n+1})_n (q^{2n+2};q²)_∞)
                Group::C => {
                    (vec![], vec![one_minus_q2, ZFactor::q(4, 2)], |n| (vec![(1, n + 1)], vec![(1, 2 * n + 1)]))
                }
                // (-q^{n+1})_∞ / (q^{n+1})_∞
                Group::E => {
                    (vec![ZFactor::neg_q(2, 1)], vec![ZFactor::q(2, 1)], |n| (vec![(1, n + 1)], vec![(-1, n + 1)]))
                }
            };
            FlatShape { base: 1, exponent: full.exponent, negative: full.negative, first_num, first_den, step }
        }
        CrankForm::Plain => FlatShape {
            base: 1,
            exponent: |n| n,
            negative: no,
            first_num: vec![],
            first_den: vec![ZFactor::q(2, 1)],
            step: |n| (vec![(1, n + 1)], vec![]),
        },
        CrankForm::Bar => FlatShape {
            base: 1,
            exponent: |n| n,
            negative: no,
            first_num: vec![ZFactor::neg_q(2, 1)],
            first_den: vec![ZFactor::q(2, 1)],
            step: |n| (vec![(1, n + 1)], vec![(-1, n + 1)]),
        },
        CrankForm::M2 => FlatShape {
            base: 2,
            exponent: |n| 2 * n,
            negative: no,
            first_num: vec![ZFactor::neg_q(3, 2)],
            first_den: vec![ZFactor::q(4, 2)],
            step: |n| (vec![(1, 2 * n + 2)], vec![(-1, 2 * n + 1)]),
        },
    }
}

fn flat_series(form: CrankForm, order: usize) -> Result<IntSeries> {
    let sh = flat_shape(form);
    let mut acc = IntSeries::int_zero(order);
    let e1 = (sh.exponent)(1);
    if e1 > order {
        return Ok(acc);
    }
    let mut g = IntSeries::product((), order - e1, &sh.first_num, &sh.first_den)?;
    let mut n = 1;
    loop {
        let e = (sh.exponent)(n);
        let mut t = g.truncated(order - e);
        t.div_unit_binomial(1, sh.base * n);
        t.div_unit_binomial(1, sh.base * n);
        let c = Int::from(if (sh.negative)(n) { -1 } else { 1 });
        acc.add_scaled_shifted(&c, e, &t);
        let next = (sh.exponent)(n + 1);
        if next > order {
            break;
        }
        g = g.truncate(order - next);
        let (mul, div) = (sh.step)(n);
        for (s, k) in mul {
            g.mul_unit_binomial(s, k);
        }
        for (s, k) in div {
            g.div_unit_binomial(s, k);
        }
        n += 1;
    }
    Ok(acc)
}

fn zq_cache() -> &'static SeriesCache<CrankForm, LaurentPoly> {
    static C: OnceLock<SeriesCache<CrankForm, LaurentPoly>> = OnceLock::new();
    C.get_or_init(SeriesCache::new)
}

fn cyc_cache() -> &'static SeriesCache<(CrankForm, u8), CycInt> {
    static C: OnceLock<SeriesCache<(CrankForm, u8), CycInt>> = OnceLock::new();
    C.get_or_init(SeriesCache::new)
}

fn int_cache() -> &'static SeriesCache<CrankForm, Int> {
    static C: OnceLock<SeriesCache<CrankForm, Int>> = OnceLock::new();
    C.get_or_init(SeriesCache::new)
}

/// Cached two-variable series, possibly of order larger than requested.
pub fn cached_crank_form(form: CrankForm, order: usize) -> Result<Arc<ZQSeries>> {
    zq_cache().get_or_build(form, order, || crank_form_series::<LaurentPoly>(form, (), order))
}

/// Cached evaluation at `z = ζ_p`, possibly of order larger than requested.
pub fn cached_crank_form_at_root(form: CrankForm, p: u8, order: usize) -> Result<Arc<CycSeries>> {
    check_prime(p)?;
    cyc_cache().get_or_build((form, p), order, || crank_form_series::<CycInt>(form, p, order))
}

/// Cached one-variable `z = 1` form, possibly of order larger than requested.
pub fn cached_flat(form: CrankForm, order: usize) -> Result<Arc<IntSeries>> {
    int_cache().get_or_build(form, order, || flat_series(form, order))
}

/// `S_X(z, q)` to `order`.
pub fn spt_crank_series(x: SptFamily, order: usize) -> Result<ZQSeries> {
    Ok(cached_crank_form(CrankForm::Family(x), order)?.truncated(order))
}

/// `S_X(ζ_p, q)` to `order`, built directly over `Z[ζ_p]`.
pub fn spt_crank_at_root(x: SptFamily, p: u8, order: usize) -> Result<CycSeries> {
    Ok(cached_crank_form_at_root(CrankForm::Family(x), p, order)?.truncated(order))
}

/// `S_X(q) = Σ spt_X(n) q^n` from its own `z = 1` form.
pub fn spt_series(x: SptFamily, order: usize) -> Result<IntSeries> {
    Ok(cached_flat(CrankForm::Family(x), order)?.truncated(order))
}

/// `S(q) = Σ spt(n) q^n`
pub fn spt_plain_series(order: usize) -> Result<IntSeries> {
    Ok(cached_flat(CrankForm::Plain, order)?.truncated(order))
}

/// `Σ sptbar(n) q^n`
pub fn sptbar_series(order: usize) -> Result<IntSeries> {
    Ok(cached_flat(CrankForm::Bar, order)?.truncated(order))
}

/// `Σ M2spt(n) q^n`
pub fn m2spt_series(order: usize) -> Result<IntSeries> {
    Ok(cached_flat(CrankForm::M2, order)?.truncated(order))
}

/// `M_X(m, n)`, the coefficient of `z^m q^n` in `S_X(z, q)`.
pub fn m_coeff(x: SptFamily, m: i64, n: usize) -> Result<Int> {
    let s = cached_crank_form(CrankForm::Family(x), n)?;
    Ok(s.coeff(n)?.coeff(m))
}

/// `M_X(k, t, n) = Σ_{m ≡ k (mod t)} M_X(m, n)`.
pub fn m_residue(x: SptFamily, k: i64, t: i64, n: usize) -> Result<Int> {
    if t <= 0 {
        return Err(Error::OutOfRange(format!("modulus {t} must be positive")));
    }
    let s = cached_crank_form(CrankForm::Family(x), n)?;
    Ok(s.coeff(n)?.terms().filter(|(m, _)| (m - k).rem_euclid(t) == 0).map(|(_, c)| c.clone()).sum())
}

/// The ten congruences `spt_X(tn + r) ≡ 0 (mod t)`.
pub const CONGRUENCES: [(SptFamily, u8, u8); 10] = [
    (SptFamily::A1, 3, 0),
    (SptFamily::A3, 3, 1),
    (SptFamily::A3, 5, 1),
    (SptFamily::A5, 5, 4),
    (SptFamily::A5, 7, 1),
    (SptFamily::A7, 5, 4),
    (SptFamily::C1, 5, 3),
    (SptFamily::C5, 5, 3),
    (SptFamily::E2, 3, 0),
    (SptFamily::E4, 3, 1),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub family: SptFamily,
    pub modulus: u8,
    pub residue: u8,
    pub n_max: usize,
    /// How many `n ≡ r (mod t)` with `n ≤ n_max` were examined.
    pub checked: usize,
    /// `n` with `spt_X(n) ≢ 0 (mod t)`.
    pub spt_failures: Vec<usize>,
    /// `n` whose coefficient in `S_X(ζ_t, q)` is nonzero; `None` when `t` is
    /// not a supported prime and the check was skipped.
    pub root_failures: Option<Vec<usize>>,
}

impl CongruenceReport {
    pub fn pass(&self) -> bool {
        self.spt_failures.is_empty() && self.root_failures.as_ref().is_none_or(Vec::is_empty)
    }

    /// Smallest failing `n` across both verdicts.
    pub fn witness(&self) -> Option<usize> {
        let a = self.spt_failures.first().copied();
        let b = self.root_failures.as_ref().and_then(|v| v.first().copied());
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        }
    }
}

/// Checks `spt_X(n) ≡ 0 (mod t)` and the vanishing of the `q^n` coefficient of
/// `S_X(ζ_t, q)` for every `n ≡ r (mod t)` up to `n_max`.
pub fn congruence_check(x: SptFamily, t: u8, r: u8, n_max: usize) -> Result<CongruenceReport> {
    if t < 2 {
        return Err(Error::OutOfRange(format!("modulus {t} must be at least 2")));
    }
    let r = r % t;
    let ns: Vec<usize> = (r as usize..=n_max).step_by(t as usize).collect();
    let s = cached_flat(CrankForm::Family(x), n_max)?;
    let spt_failures = ns.iter().copied().filter(|&n| s.coeffs()[n].rem_euclid(t as u64) != 0).collect();
    let root_failures = if check_prime(t).is_ok() {
        let c = cached_crank_form_at_root(CrankForm::Family(x), t, n_max)?;
        Some(ns.iter().copied().filter(|&n| !c.coeffs()[n].is_zero()).collect())
    } else {
        None
    };
    Ok(CongruenceReport { family: x, modulus: t, residue: r, n_max, checked: ns.len(), spt_failures, root_failures })
}

/// Every `(m, n, M_X(m, n))` with a negative value and `n ≤ n_max`.
pub fn negative_coefficients(x: SptFamily, n_max: usize) -> Result<Vec<(i64, usize, Int)>> {
    let s = cached_crank_form(CrankForm::Family(x), n_max)?;
    let mut out = Vec::new();
    for (n, c) in s.coeffs().iter().enumerate().take(n_max + 1) {
        for (m, v) in c.terms() {
            if v.is_negative() {
                out.push((m, n, v.clone()));
            }
        }
    }
    Ok(out)
}

/// Rank-type series `prefactor · (1 + Σ_{n≥1} (1-z)(1-z^{-1}) N_n(q) / ((1-zq^n)(1-z^{-1}q^n)))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankKind {
    /// Dyson's rank, `N_n = (-1)^n q^{n(3n+1)/2}(1+q^n)`, prefactor `1/(q)_∞`.
    Rank,
    /// The crank in the same shape, `N_n = (-1)^n q^{n(n+1)/2}(1+q^n)`.
    CrankSum,
    /// `N_n = 2(-1)^n q^n`, prefactor `(-q)_∞/(q)_∞`.
    R1,
    /// `N_n = (-1)^n q^{n²}(1+q^{2n})`, prefactor `(-q)_∞/(q)_∞`.
    R2,
    /// Overpartition rank, `N_n = 2(-1)^n q^{n²+n}`, prefactor `(-q)_∞/(q)_∞`.
    OverlineRank,
}

impl RankKind {
    fn numer(self, n: usize) -> Vec<(i64, usize)> {
        let s = if n.is_multiple_of(2) { 1 } else { -1 };
        match self {
            RankKind::Rank => {
                let e = n * (3 * n + 1) / 2;
                vec![(s, e), (s, e + n)]
            }
            RankKind::CrankSum => {
                let e = n * (n + 1) / 2;
                vec![(s, e), (s, e + n)]
            }
            RankKind::R1 => vec![(2 * s, n)],
            RankKind::R2 => vec![(s, n * n), (s, n * n + 2 * n)],
            RankKind::OverlineRank => vec![(2 * s, n * n + n)],
        }
    }

    fn prefactor(self) -> (Vec<ZFactor>, Vec<ZFactor>) {
        match self {
            RankKind::Rank | RankKind::CrankSum => (vec![], vec![ZFactor::q(1, 1)]),
            _ => (vec![ZFactor::neg_q(1, 1)], vec![ZFactor::q(1, 1)]),
        }
    }
}

/// Builds a [`RankKind`] series over any [`ZRing`].
pub fn rank_like<R: ZRing>(kind: RankKind, ctx: R::Ctx, order: usize) -> Result<QSeries<R>> {
    let kernel = kernel_coefficients::<R>(ctx, order);
    let mut acc = QSeries::<R>::one(ctx, order);
    for n in 1..=order {
        let numer = kind.numer(n);
        if numer.iter().all(|&(_, a)| a > order) {
            break;
        }
        add_kernel_terms(&mut acc, &kernel, n, &numer);
    }
    let (num, den) = kind.prefactor();
    acc.with_factors(&num, &den)
}

/// `R(z, q) = Σ N(m, n) z^m q^n`
pub fn rank_series(order: usize) -> Result<ZQSeries> {
    rank_like::<LaurentPoly>(RankKind::Rank, (), order)
}

/// `C(z, q) = (q)_∞ / (zq, z^{-1}q)_∞`
pub fn crank_product<R: ZRing>(ctx: R::Ctx, order: usize) -> Result<QSeries<R>> {
    QSeries::<R>::product(ctx, order, &[ZFactor::q(1, 1)], &[ZFactor::inf(1, 1, 1, 1), ZFactor::inf(1, -1, 1, 1)])
}

pub fn crank_series(order: usize) -> Result<ZQSeries> {
    crank_product::<LaurentPoly>((), order)
}

pub fn r1_series(order: usize) -> Result<ZQSeries> {
    rank_like::<LaurentPoly>(RankKind::R1, (), order)
}

pub fn r2_series(order: usize) -> Result<ZQSeries> {
    rank_like::<LaurentPoly>(RankKind::R2, (), order)
}

pub fn overline_rank_series(order: usize) -> Result<ZQSeries> {
    rank_like::<LaurentPoly>(RankKind::OverlineRank, (), order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidualKind {
    /// `(-q;q)_∞ C(z, q)`
    Overpartition,
    /// `(q;q²)_∞ C(z, q)`
    Odd,
}

pub fn residual_crank<R: ZRing>(kind: ResidualKind, ctx: R::Ctx, order: usize) -> Result<QSeries<R>> {
    let extra = match kind {
        ResidualKind::Overpartition => ZFactor::neg_q(1, 1),
        ResidualKind::Odd => ZFactor::q(1, 2),
    };
    QSeries::<R>::product(
        ctx,
        order,
        &[ZFactor::q(1, 1), extra],
        &[ZFactor::inf(1, 1, 1, 1), ZFactor::inf(1, -1, 1, 1)],
    )
}

pub fn residual_crank_series(kind: ResidualKind, order: usize) -> Result<ZQSeries> {
    residual_crank::<LaurentPoly>(kind, (), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bailey::zz_beta_sum;
    use crate::qseries::poch_infinite;
    use crate::qseries::QMonomial;
    use crate::zqseries::{is_palindromic, zq_eval_root, zq_eval_z1};
    use proptest::prelude::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().map(|&(e, c)| (e, Int::from(c))))
    }

    #[test]
    fn first_coefficients() {
        let s = spt_crank_series(SptFamily::A1, 4).unwrap();
        assert!(s.coeffs()[0].is_zero());
        assert_eq!(s.coeffs()[1], lp(&[(0, 1)]));
        let t = spt_series(SptFamily::A1, 4).unwrap();
        assert_eq!(t.coeffs()[1], Int::from(1));
        assert_eq!(t.coeffs()[2], Int::from(3));
        assert_eq!(spt_plain_series(10).unwrap().coeffs()[4], Int::from(10));
        assert_eq!(sptbar_series(10).unwrap().coeffs()[3], Int::from(6));
        assert_eq!(m2spt_series(10).unwrap().coeffs()[6], Int::from(5));
    }

    #[test]
    fn z1_forms_agree_with_two_variable_forms() {
        for x in SptFamily::ALL {
            let s = spt_crank_series(x, 80).unwrap();
            assert_eq!(zq_eval_z1(&s), spt_series(x, 80).unwrap(), "{x}");
            assert!(is_palindromic(&s), "{x}");
        }
        for f in [CrankForm::Plain, CrankForm::Bar, CrankForm::M2] {
            let s = crank_form_series::<LaurentPoly>(f, (), 80).unwrap();
            assert_eq!(zq_eval_z1(&s), flat_series(f, 80).unwrap(), "{f:?}");
            assert!(is_palindromic(&s));
        }
    }

    #[test]
    fn root_builds_agree_with_embedding() {
        for x in [SptFamily::A3, SptFamily::C1, SptFamily::E2] {
            let s = spt_crank_series(x, 60).unwrap();
            for p in [3, 5, 7] {
                assert_eq!(zq_eval_root(&s, p).unwrap(), spt_crank_at_root(x, p, 60).unwrap());
            }
        }
    }

    #[test]
    fn first_form_matches_second_form() {
        for x in SptFamily::ALL {
            let n = 50;
            let s = spt_crank_series(x, n).unwrap();
            let lhs = s.with_factors(&[ZFactor::inf(1, 1, 0, 1), ZFactor::inf(1, -1, 0, 1)], &[]).unwrap();
            let sum = zz_beta_sum::<LaurentPoly, _>(&x.pair(), (), 1, n);
            let rhs = sum.with_factors(&x.prefactor(), &[]).unwrap();
            assert_eq!(lhs, rhs, "{x}");
        }
    }

    #[test]
    fn residues_sum_to_spt() {
        let spt = spt_series(SptFamily::A1, 30).unwrap();
        for n in [3, 6, 9, 12, 27] {
            let parts: Vec<Int> = (0..3).map(|k| m_residue(SptFamily::A1, k, 3, n).unwrap()).collect();
            assert_eq!(parts.iter().sum::<Int>(), spt.coeffs()[n]);
            assert_eq!(parts[0], parts[1]);
            assert_eq!(parts[1], parts[2]);
        }
        for x in SptFamily::ALL {
            let spt = spt_series(x, 25).unwrap();
            for n in 0..=25 {
                let total: Int = (0..5).map(|k| m_residue(x, k, 5, n).unwrap()).sum();
                assert_eq!(total, spt.coeffs()[n]);
            }
        }
    }

    #[test]
    fn coefficient_support() {
        for x in SptFamily::ALL {
            for n in 1..30usize {
                let n_i = n as i64;
                assert!(m_coeff(x, n_i + 2, n).unwrap().is_zero());
                assert!(m_coeff(x, -n_i - 2, n).unwrap().is_zero());
            }
        }
        assert!(m_residue(SptFamily::A1, 0, 0, 3).is_err());
    }

    #[test]
    fn small_congruences() {
        for (x, t, r) in CONGRUENCES {
            let rep = congruence_check(x, t, r, 120).unwrap();
            assert!(rep.pass(), "{x} {t} {r}: {rep:?}");
            assert!(rep.checked > 0);
        }
        let bad = congruence_check(SptFamily::A1, 3, 1, 60).unwrap();
        assert!(!bad.pass());
        assert!(bad.witness().is_some());
        let skip = congruence_check(SptFamily::A1, 4, 0, 20).unwrap();
        assert!(skip.root_failures.is_none());
    }

    #[test]
    fn crank_forms() {
        let c = crank_series(60).unwrap();
        assert_eq!(c, rank_like::<LaurentPoly>(RankKind::CrankSum, (), 60).unwrap());
        assert_eq!(zq_eval_z1(&c).coeffs()[4], Int::from(5));
        let r = rank_series(10).unwrap();
        assert_eq!(r.coeffs()[1], lp(&[(0, 1)]));
        assert_eq!(r.coeffs()[0], lp(&[(0, 1)]));
        // the crank of the partition 1 is taken as -1 + z + z^{-1} by the product
        assert_eq!(c.coeffs()[1], lp(&[(-1, 1), (0, -1), (1, 1)]));
        let rc = residual_crank_series(ResidualKind::Overpartition, 10).unwrap();
        assert_eq!(rc.coeffs()[0], lp(&[(0, 1)]));
        assert_eq!(zq_eval_z1(&rc).coeffs()[3], Int::from(8));
    }

    #[test]
    fn plain_difference() {
        let n = 60;
        let s = crank_form_series::<LaurentPoly>(CrankForm::Plain, (), n).unwrap();
        let lhs = s.with_factors(&[ZFactor::finite(1, 1, 0, 1, 1), ZFactor::finite(1, -1, 0, 1, 1)], &[]).unwrap();
        let rhs = &rank_series(n).unwrap() - &crank_series(n).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn r2_relation() {
        let n = 60;
        let rbar = overline_rank_series(n).unwrap();
        let pref = lp(&[(0, 2), (1, -1), (-1, -1)]);
        let zz = lp(&[(1, 1), (-1, 1)]);
        let mut lhs = rbar.scale(&zz);
        lhs.add_term(0, &pref);
        assert_eq!(lhs, r2_series(n).unwrap().scale_int(&Int::from(2)));
    }

    #[test]
    fn overpartition_count() {
        let s = poch_infinite(QMonomial::neg_q(1), 1, 8).unwrap();
        let t = crate::qseries::poch_infinite_inverse(QMonomial::q(1), 1, 8).unwrap();
        let pbar = &s * &t;
        assert_eq!(pbar.coeffs()[3], Int::from(8));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn prefix_stability(i in 0usize..8, a in 5usize..40, b in 5usize..40) {
            let x = SptFamily::ALL[i];
            let (lo, hi) = (a.min(b), a.max(b));
            let s = crank_form_series::<LaurentPoly>(CrankForm::Family(x), (), hi).unwrap();
            let t = crank_form_series::<LaurentPoly>(CrankForm::Family(x), (), lo).unwrap();
            prop_assert_eq!(s.truncated(lo), t);
        }

        #[test]
        fn residue_partition(i in 0usize..8, n in 1usize..40, t in 1i64..9) {
            let x = SptFamily::ALL[i];
            let total: Int = (0..t).map(|k| m_residue(x, k, t, n).unwrap()).sum();
            prop_assert_eq!(total, spt_series(x, 40).unwrap().coeffs()[n].clone());
        }
    }
}
