//! Brute-force enumeration of partitions and overpartitions, and the weighted
//! smallest-part counts that the spt-type generating functions count.
//!
//! Everything here is deliberately naive: it is the independent side of the
//! series-versus-enumeration checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qseries::IntSeries;
use crate::ring::Int;
use crate::spt::{m2spt_series, spt_plain_series, spt_series, sptbar_series, SptFamily};

/// Parts in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Multiplicity of the smallest part, `0` for the empty partition.
    pub fn smallest_multiplicity(&self) -> usize {
        self.smallest().map_or(0, |s| self.multiplicity(s))
    }

    /// Largest part minus number of parts.
    pub fn rank(&self) -> i64 {
        self.largest().unwrap_or(0) as i64 - self.len() as i64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join("+"))
    }
}

/// A partition where the first occurrence of a part size may be overlined.
/// Overlines are recorded by part size, which fixes them on first occurrences.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    partition: Partition,
    /// Overlined part sizes, decreasing.
    overlined: Vec<u32>,
}

impl Overpartition {
    pub fn new(partition: Partition, mut overlined: Vec<u32>) -> Result<Self> {
        overlined.sort_unstable_by(|a, b| b.cmp(a));
        overlined.dedup();
        if overlined.iter().any(|o| !partition.parts.contains(o)) {
            return Err(Error::Invalid("overlined size is not a part".into()));
        }
        Ok(Overpartition { partition, overlined })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn is_overlined(&self, part: u32) -> bool {
        self.overlined.contains(&part)
    }

    pub fn size(&self) -> u32 {
        self.partition.size()
    }

    /// Largest part minus number of parts.
    pub fn rank(&self) -> i64 {
        self.partition.rank()
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.partition.is_empty() {
            return write!(f, "()");
        }
        let mut seen = Vec::new();
        let s: Vec<String> = self
            .partition
            .parts
            .iter()
            .map(|&p| {
                let first = !seen.contains(&p);
                seen.push(p);
                if first && self.is_overlined(p) {
                    format!("~{p}")
                } else {
                    p.to_string()
                }
            })
            .collect();
        write!(f, "{}", s.join("+"))
    }
}

/// Calls `f` on every partition of `n` into parts from `[lo, hi]`, parts
/// passed in non-increasing order.
fn each_partition(n: u32, lo: u32, hi: u32, f: &mut impl FnMut(&[u32])) {
    fn go(rem: u32, lo: u32, hi: u32, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if rem == 0 {
            f(cur);
            return;
        }
        let top = hi.min(rem);
        let mut p = top;
        while p >= lo && p >= 1 {
            cur.push(p);
            go(rem - p, lo, p, cur, f);
            cur.pop();
            p -= 1;
        }
    }
    go(n, lo.max(1), hi, &mut Vec::new(), f);
}

pub fn enum_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    each_partition(n, 1, n, &mut |p| out.push(Partition { parts: p.to_vec() }));
    out
}

pub fn enum_overpartitions(n: u32) -> Vec<Overpartition> {
    let mut out = Vec::new();
    for p in enum_partitions(n) {
        let mut sizes = p.parts.clone();
        sizes.dedup();
        for mask in 0u64..(1u64 << sizes.len()) {
            let overlined = sizes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s).collect();
            out.push(Overpartition { partition: p.clone(), overlined });
        }
    }
    out
}

fn count_partitions_in(n: u32, lo: u32, hi: u32) -> u64 {
    let mut c = 0;
    each_partition(n, lo, hi, &mut |_| c += 1);
    c
}

/// The weighted smallest-part counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SptKind {
    /// `spt(n)`
    Plain,
    /// `sptbar(n)`: overpartitions whose smallest part is not overlined.
    Bar,
    /// `M2spt(n)`: no repeated odd parts, smallest part even.
    M2,
    Family(SptFamily),
}

impl SptKind {
    pub const ALL: [SptKind; 11] = [
        SptKind::Plain,
        SptKind::Bar,
        SptKind::M2,
        SptKind::Family(SptFamily::A1),
        SptKind::Family(SptFamily::A3),
        SptKind::Family(SptFamily::A5),
        SptKind::Family(SptFamily::A7),
        SptKind::Family(SptFamily::C1),
        SptKind::Family(SptFamily::C5),
        SptKind::Family(SptFamily::E2),
        SptKind::Family(SptFamily::E4),
    ];

    pub fn name(self) -> &'static str {
        match self {
            SptKind::Plain => "plain",
            SptKind::Bar => "bar",
            SptKind::M2 => "M2",
            SptKind::Family(f) => f.name(),
        }
    }

    /// Kinds counted over partition pairs.
    pub fn uses_pairs(self) -> bool {
        matches!(self, SptKind::Family(SptFamily::A1 | SptFamily::A3 | SptFamily::A5 | SptFamily::A7))
    }

    /// Largest `n` accepted without an explicit guard.
    pub fn default_guard(self) -> u32 {
        if self.uses_pairs() {
            32
        } else {
            40
        }
    }
}

impl fmt::Display for SptKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SptKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SptKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown { kind: "spt kind", name: s.to_string() })
    }
}

/// The generating function of `kind`, from the series side.
pub fn generating_series(kind: SptKind, order: usize) -> Result<IntSeries> {
    match kind {
        SptKind::Plain => spt_plain_series(order),
        SptKind::Bar => sptbar_series(order),
        SptKind::M2 => m2spt_series(order),
        SptKind::Family(f) => spt_series(f, order),
    }
}

/// Weighted count of `kind` at `n`, refusing `n` above the kind's default guard.
pub fn oracle_spt(kind: SptKind, n: u32) -> Result<Int> {
    oracle_spt_guarded(kind, n, kind.default_guard())
}

pub fn oracle_spt_guarded(kind: SptKind, n: u32, guard: u32) -> Result<Int> {
    if n > guard {
        return Err(Error::OutOfRange(format!("n = {n} exceeds the enumeration guard {guard} for {kind}")));
    }
    let total: i64 = match kind {
        SptKind::Plain => enum_partitions(n).iter().map(|p| p.smallest_multiplicity() as i64).sum(),
        SptKind::M2 => enum_partitions(n)
            .iter()
            .filter(|p| p.smallest().is_some_and(|s| s % 2 == 0))
            .filter(|p| p.parts.iter().all(|&x| x % 2 == 0 || p.multiplicity(x) == 1))
            .map(|p| p.smallest_multiplicity() as i64)
            .sum(),
        SptKind::Bar | SptKind::Family(SptFamily::E2 | SptFamily::E4) => enum_overpartitions(n)
            .iter()
            .filter_map(|o| {
                let s = o.partition.smallest()?;
                if o.is_overlined(s) {
                    return None;
                }
                let m = o.partition.smallest_multiplicity() as i64;
                Some(match kind {
                    SptKind::Bar => m,
                    SptKind::Family(SptFamily::E2) => {
                        if s % 2 == 0 {
                            m
                        } else {
                            -m
                        }
                    }
                    _ => m - 1,
                })
            })
            .sum(),
        SptKind::Family(SptFamily::C1) => c1_count(n),
        SptKind::Family(SptFamily::C5) => {
            let half = if n.is_multiple_of(2) { oracle_spt_guarded(SptKind::Plain, n / 2, guard)? } else { Int::ZERO };
            return Ok(&Int::from(c1_count(n)) - &half);
        }
        SptKind::Family(f) => pair_count(f, n),
    };
    Ok(Int::from(total))
}

/// Partitions whose odd parts are all below twice the smallest part,
/// weighted by the multiplicity of the smallest part.
fn c1_count(n: u32) -> i64 {
    enum_partitions(n)
        .iter()
        .filter_map(|p| {
            let s = p.smallest()?;
            p.parts.iter().all(|&x| x % 2 == 0 || x < 2 * s).then(|| p.smallest_multiplicity() as i64)
        })
        .sum()
}

/// Pairs `(π1, π2)` with `π1` nonempty and every part of `π2` in
/// `(s, 2s]`, `s` the smallest part of `π1`, weighted by the family's rule on
/// the multiplicity `m` of `s` in `π1`.
fn pair_count(f: SptFamily, n: u32) -> i64 {
    let mut total = 0i64;
    for k in 1..=n {
        for p in enum_partitions(k) {
            let s = p.smallest().expect("nonempty");
            let m = p.smallest_multiplicity() as i64;
            let si = s as i64;
            let w = match f {
                SptFamily::A1 => m,
                SptFamily::A3 => m - 1,
                SptFamily::A5 => (m - si).max(0),
                _ => (m - si + 1).max(0),
            };
            if w == 0 {
                continue;
            }
            total += w * count_partitions_in(n - k, s + 1, 2 * s) as i64;
        }
    }
    total
}

/// `N(m, n)`: partitions of `n` by rank.
pub fn oracle_rank_counts(n: u32) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for p in enum_partitions(n) {
        *out.entry(p.rank()).or_insert(0) += 1;
    }
    out
}

/// Overpartitions of `n` by rank.
pub fn oracle_overline_rank(n: u32) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for o in enum_overpartitions(n) {
        *out.entry(o.rank()).or_insert(0) += 1;
    }
    out
}

/// Partitions of `n` without repeated odd parts, by M2-rank
/// `⌈ℓ/2⌉ - #parts`.
pub fn oracle_m2rank(n: u32) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for p in enum_partitions(n) {
        if p.parts.iter().any(|&x| x % 2 == 1 && p.multiplicity(x) > 1) {
            continue;
        }
        let l = p.largest().unwrap_or(0) as i64;
        *out.entry((l + 1) / 2 - p.len() as i64).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{poch_infinite, poch_infinite_inverse, QMonomial};
    use crate::spt::{crank_form_series, crank_product, overline_rank_series, rank_series, CrankForm};
    use crate::zqseries::{LaurentPoly, ZFactor, ZQSeries};
    use std::collections::HashSet;

    fn poly(m: &BTreeMap<i64, u64>) -> LaurentPoly {
        LaurentPoly::from_terms(m.iter().map(|(&e, &c)| (e, Int::from(c as i64))))
    }

    #[test]
    fn partition_examples() {
        let p4: Vec<String> = enum_partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]);
        let p0 = enum_partitions(0);
        assert_eq!(p0.len(), 1);
        assert!(p0[0].is_empty());
        assert_eq!(enum_partitions(10).len(), 42);
        let pinv = poch_infinite_inverse(QMonomial::q(1), 1, 20).unwrap();
        for n in 0..=20 {
            assert_eq!(Int::from(enum_partitions(n).len() as i64), pinv.coeffs()[n as usize]);
        }
        assert!(Partition::new(vec![1, 0]).is_err());
        assert_eq!(Partition::new(vec![1, 3, 2]).unwrap().parts(), &[3, 2, 1]);
    }

    #[test]
    fn overpartition_examples() {
        assert_eq!(enum_overpartitions(3).len(), 8);
        assert_eq!(enum_overpartitions(0).len(), 1);
        let pbar = &poch_infinite(QMonomial::neg_q(1), 1, 12).unwrap()
            * &poch_infinite_inverse(QMonomial::q(1), 1, 12).unwrap();
        for n in 0..=12u32 {
            let all = enum_overpartitions(n);
            let set: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            assert_eq!(Int::from(all.len() as i64), pbar.coeffs()[n as usize]);
        }
        let p = Partition::new(vec![2, 1, 1]).unwrap();
        assert!(Overpartition::new(p.clone(), vec![3]).is_err());
        assert_eq!(Overpartition::new(p, vec![1]).unwrap().to_string(), "2+~1+1");
    }

    #[test]
    fn spot_values() {
        assert_eq!(oracle_spt(SptKind::Plain, 4).unwrap(), Int::from(10));
        assert_eq!(oracle_spt(SptKind::Bar, 3).unwrap(), Int::from(6));
        assert_eq!(oracle_spt(SptKind::M2, 6).unwrap(), Int::from(5));
        assert_eq!(oracle_spt(SptKind::Family(SptFamily::A1), 2).unwrap(), Int::from(3));
        assert_eq!(oracle_spt(SptKind::Family(SptFamily::A1), 1).unwrap(), Int::from(1));
        assert!(oracle_spt(SptKind::Family(SptFamily::A1), 33).is_err());
        assert!("nope".parse::<SptKind>().is_err());
        assert_eq!("m2".parse::<SptKind>().unwrap(), SptKind::M2);
    }

    #[test]
    fn oracles_match_series() {
        let n = 14;
        for kind in SptKind::ALL {
            let s = generating_series(kind, n).unwrap();
            for k in 0..=n {
                assert_eq!(oracle_spt(kind, k as u32).unwrap(), s.coeffs()[k], "{kind} at {k}");
            }
        }
    }

    #[test]
    fn rank_counts() {
        assert_eq!(oracle_rank_counts(0), BTreeMap::from([(0, 1)]));
        let r = rank_series(16).unwrap();
        for n in 0..=16u32 {
            let m = oracle_rank_counts(n);
            assert_eq!(m.values().sum::<u64>() as usize, enum_partitions(n).len());
            assert_eq!(poly(&m), r.coeffs()[n as usize], "n = {n}");
        }
    }

    #[test]
    fn overline_rank_counts() {
        let r = overline_rank_series(12).unwrap();
        for n in 0..=12u32 {
            assert_eq!(poly(&oracle_overline_rank(n)), r.coeffs()[n as usize], "n = {n}");
        }
    }

    #[test]
    fn m2_rank_counts() {
        // (1-z)(1-z^{-1}) S2(z,q) + (-q;q²)_∞ C(z,q²)
        let n = 16;
        let s2 = crank_form_series::<LaurentPoly>(CrankForm::M2, (), n).unwrap();
        let lhs = s2.with_factors(&[ZFactor::finite(1, 1, 0, 1, 1), ZFactor::finite(1, -1, 0, 1, 1)], &[]).unwrap();
        let c2: ZQSeries = crank_product::<LaurentPoly>((), n / 2).unwrap().dilate(2).unwrap().truncate(n);
        let c2 = c2.with_factors(&[ZFactor::neg_q(1, 2)], &[]).unwrap();
        let gen = &lhs + &c2;
        for k in 0..=n as u32 {
            assert_eq!(poly(&oracle_m2rank(k)), gen.coeffs()[k as usize], "n = {k}");
        }
    }
}
