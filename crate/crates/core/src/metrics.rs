//! Weights, the `phi` and Gray maps for `Z4 + uZ4`, and exact minimum
//! distance by enumeration.
//!
//! `phi(a + bu) = (b, a + b)` sends `R^n` to `Z4^{2n}`, coordinates
//! interleaved as `(b_0, a_0 + b_0, b_1, a_1 + b_1, ...)`. The Gray map sends
//! `0, 1, 2, 3` to `00, 01, 11, 10`, so Hamming weight of the image equals
//! Lee weight.
//!
//! The search walks the code's Howell basis with a mixed-radix odometer,
//! updating the current word by one row addition per step, and splits the
//! index range across threads.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::{vector_to_word, CyclicCode};
use crate::error::{Error, Result};
use crate::poly::RPoly;
use crate::ring::{RingElem, RingParams};
use crate::span::Submodule;

/// Default word budget, overridden by the `ZQU_BUDGET` environment variable.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

pub fn hamming_weight(w: &[RingElem]) -> usize {
    w.iter().filter(|c| !c.is_zero()).count()
}

pub fn hamming_distance(x: &[RingElem], y: &[RingElem]) -> usize {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

fn require_z4(ring: RingParams, what: &'static str) -> Result<()> {
    if ring.q() == 4 {
        Ok(())
    } else {
        Err(Error::UnsupportedMetric(what))
    }
}

/// `phi(a + bu) = (b, a + b)` over `Z4`.
pub fn phi_symbol(ring: RingParams, x: RingElem) -> Result<[u64; 2]> {
    require_z4(ring, "phi")?;
    Ok([x.b % 4, (x.a + x.b) % 4])
}

pub fn phi_map(ring: RingParams, w: &[RingElem]) -> Result<Vec<u64>> {
    require_z4(ring, "phi")?;
    Ok(w.iter()
        .flat_map(|&x| [x.b % 4, (x.a + x.b) % 4])
        .collect())
}

pub fn lee_weight_z4(v: &[u64]) -> u64 {
    v.iter().map(|&c| [0, 1, 2, 1][(c % 4) as usize]).sum()
}

pub fn gray_map(v: &[u64]) -> Vec<u8> {
    v.iter()
        .flat_map(|&c| match c % 4 {
            0 => [0, 0],
            1 => [0, 1],
            2 => [1, 1],
            _ => [1, 0],
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    /// Hamming weight over `R`.
    Hamming,
    /// Lee weight of `phi(c)` over `Z4`.
    Lee,
    /// Hamming weight of `gray(phi(c))` over `F_2`.
    GrayHamming,
    /// Hamming weight of `phi(c)` over `Z4`.
    PhiHamming,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Hamming => "hamming",
            Metric::Lee => "lee",
            Metric::GrayHamming => "gray-hamming",
            Metric::PhiHamming => "phi-hamming",
        }
    }

    /// Weight of each symbol `a + bu`, indexed by `a q + b`.
    pub fn symbol_table(self, ring: RingParams) -> Result<Vec<u32>> {
        if self != Metric::Hamming {
            require_z4(ring, self.name())?;
        }
        let q = ring.q();
        let mut table = Vec::with_capacity((q * q) as usize);
        for a in 0..q {
            for b in 0..q {
                let x = RingElem { a, b };
                let w = match self {
                    Metric::Hamming => usize::from(!x.is_zero()),
                    Metric::Lee => lee_weight_z4(&phi_map(ring, &[x])?) as usize,
                    Metric::GrayHamming => gray_map(&phi_map(ring, &[x])?)
                        .iter()
                        .filter(|&&bit| bit == 1)
                        .count(),
                    Metric::PhiHamming => phi_map(ring, &[x])?.iter().filter(|&&c| c != 0).count(),
                };
                table.push(w as u32);
            }
        }
        Ok(table)
    }

    pub fn weight(self, ring: RingParams, w: &[RingElem]) -> Result<u64> {
        let table = self.symbol_table(ring)?;
        let q = ring.q();
        Ok(w.iter().map(|x| table[(x.a * q + x.b) as usize] as u64).sum())
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamming" => Ok(Metric::Hamming),
            "lee" => Ok(Metric::Lee),
            "gray-hamming" | "gray" => Ok(Metric::GrayHamming),
            "phi-hamming" => Ok(Metric::PhiHamming),
            other => Err(Error::Parse(format!("unknown metric {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest number of codewords to enumerate. Codes up to this size are
    /// searched exhaustively; larger ones give an upper bound.
    pub budget: u64,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        let budget = std::env::var("ZQU_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
        SearchOptions { budget, threads }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub metric: Metric,
    pub value: u64,
    pub witness: Vec<RingElem>,
    /// `value` is the true minimum over all nonzero codewords.
    pub exhaustive: bool,
    pub words_scanned: u64,
}

impl DistanceReport {
    pub fn witness_poly(&self, ring: RingParams) -> RPoly {
        RPoly::from_word(ring, &self.witness)
    }
}

/// Odometer over `sum_i d_i row_i` with `0 <= d_i < radix_i`.
struct Walker<'a> {
    rows: &'a [Vec<u64>],
    wraps: Vec<Vec<u64>>,
    radices: Vec<u64>,
    digits: Vec<u64>,
    current: Vec<u64>,
    q: u64,
}

impl<'a> Walker<'a> {
    fn new(module: &'a Submodule, start: u64) -> Self {
        let ring = module.ring();
        let q = ring.q();
        let radices = module.radices();
        let rows = module.rows();
        let wraps = rows
            .iter()
            .zip(&radices)
            .map(|(row, &r)| row.iter().map(|&c| ring.zq_neg(ring.zq_mul(c, r - 1))).collect())
            .collect();
        let mut idx = start;
        let digits: Vec<u64> = radices
            .iter()
            .map(|&r| {
                let d = idx % r;
                idx /= r;
                d
            })
            .collect();
        let current = module.combine(&digits);
        Walker {
            rows,
            wraps,
            radices,
            digits,
            current,
            q,
        }
    }

    fn add(current: &mut [u64], v: &[u64], q: u64) {
        for (c, &x) in current.iter_mut().zip(v) {
            *c += x;
            if *c >= q {
                *c -= q;
            }
        }
    }

    fn advance(&mut self) {
        for i in 0..self.digits.len() {
            if self.digits[i] + 1 < self.radices[i] {
                self.digits[i] += 1;
                Self::add(&mut self.current, &self.rows[i], self.q);
                return;
            }
            self.digits[i] = 0;
            Self::add(&mut self.current, &self.wraps[i], self.q);
        }
    }
}

/// Weight of a `Z_q^{2n}` vector, abandoned once it reaches `cutoff`.
#[inline]
fn weight_below(v: &[u64], table: &[u32], q: u64, cutoff: u64) -> Option<u64> {
    let n = v.len() / 2;
    let mut w = 0u64;
    for i in 0..n {
        w += table[(v[i] * q + v[n + i]) as usize] as u64;
        if w >= cutoff {
            return None;
        }
    }
    Some(w)
}

/// Minimum weight over enumeration indices `[lo, hi)`, as `(weight, index, vector)`.
fn scan_range(module: &Submodule, table: &[u32], lo: u64, hi: u64) -> Option<(u64, u64, Vec<u64>)> {
    if lo >= hi {
        return None;
    }
    let q = module.ring().q();
    let mut walker = Walker::new(module, lo);
    let mut best: Option<(u64, u64, Vec<u64>)> = None;
    let mut cutoff = u64::MAX;
    for idx in lo..hi {
        if let Some(w) = weight_below(&walker.current, table, q, cutoff) {
            cutoff = w;
            best = Some((w, idx, walker.current.clone()));
        }
        if idx + 1 < hi {
            walker.advance();
        }
    }
    best
}

fn scan_parallel(
    module: &Submodule,
    table: &[u32],
    lo: u64,
    hi: u64,
    threads: usize,
) -> Option<(u64, u64, Vec<u64>)> {
    let span = hi.saturating_sub(lo);
    let threads = (threads.max(1) as u64).min(span.max(1) / 4096 + 1);
    if threads <= 1 {
        return scan_range(module, table, lo, hi);
    }
    let chunk = span.div_ceil(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let a = lo + t * chunk;
                let b = (a + chunk).min(hi);
                scope.spawn(move || scan_range(module, table, a, b))
            })
            .collect();
        handles
            .into_iter()
            .filter_map(|h| h.join().expect("search thread panicked"))
            .min_by_key(|(w, idx, _)| (*w, *idx))
    })
}

/// Words worth trying before enumeration: `c x^j g` for every generator `g`
/// and `c` in `{p^k, u p^k}`, kept when they lie in the code, then the
/// Howell rows.
fn candidate_words(code: &CyclicCode) -> Vec<Vec<u64>> {
    let ring = code.ring();
    let n = code.n();
    let space = code.space();
    let mut out = Vec::new();
    let scalars: Vec<RingElem> = (0..ring.s())
        .flat_map(|k| [ring.elem(ring.p_pow(k), 0), ring.elem(0, ring.p_pow(k))])
        .collect();
    for g in code.generators() {
        for &c in &scalars {
            let base = g.scale(c);
            if base.is_zero() {
                continue;
            }
            let mut h = base;
            for _ in 0..n {
                let v = space.to_vector(&h);
                if code.module().contains(&v) {
                    out.push(v);
                }
                h = h.shift(1).fold_cyclic(n);
            }
        }
    }
    out.extend(code.module().rows().iter().cloned());
    out
}

/// Minimum nonzero weight of `code` under `metric`.
pub fn min_distance(code: &CyclicCode, metric: Metric, opts: &SearchOptions) -> Result<DistanceReport> {
    let ring = code.ring();
    let table = metric.symbol_table(ring)?;
    let module = code.module();
    if module.is_zero() {
        return Err(Error::ZeroCode);
    }
    let total = module.size();
    let (best, exhaustive, scanned) = match total {
        Some(total) if total - 1 <= opts.budget => {
            let best = scan_parallel(module, &table, 1, total, opts.threads);
            (best.map(|(w, _, v)| (w, v)), true, total - 1)
        }
        _ => {
            let q = ring.q();
            let candidates = candidate_words(code);
            let mut best: Option<(u64, Vec<u64>)> = None;
            for v in &candidates {
                let cutoff = best.as_ref().map_or(u64::MAX, |b| b.0);
                if v.iter().any(|&c| c != 0) {
                    if let Some(w) = weight_below(v, &table, q, cutoff) {
                        best = Some((w, v.clone()));
                    }
                }
            }
            let limit = total.map_or(opts.budget, |t| opts.budget.min(t - 1));
            if let Some((w, _, v)) = scan_parallel(module, &table, 1, limit + 1, opts.threads) {
                if best.as_ref().is_none_or(|b| w < b.0) {
                    best = Some((w, v));
                }
            }
            (best, false, candidates.len() as u64 + limit)
        }
    };
    let (value, vector) = best.expect("a nonzero code has a nonzero word");
    Ok(DistanceReport {
        metric,
        value,
        witness: vector_to_word(ring, &vector),
        exhaustive,
        words_scanned: scanned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{ClosureMode, CodeSpace};
    use crate::poly::ZqPoly;
    use proptest::prelude::*;

    fn z4() -> RingParams {
        RingParams::new(2, 2).unwrap()
    }

    fn opts(budget: u64, threads: usize) -> SearchOptions {
        SearchOptions { budget, threads }
    }

    #[test]
    fn symbol_maps() {
        let r = z4();
        assert_eq!(phi_symbol(r, r.elem(2, 3)).unwrap(), [3, 1]);
        assert_eq!(phi_symbol(r, RingElem::ZERO).unwrap(), [0, 0]);
        assert_eq!(lee_weight_z4(&[2]), 2);
        assert_eq!(gray_map(&[2]), vec![1, 1]);
        assert_eq!(lee_weight_z4(&[1, 3]), 2);
        assert_eq!(gray_map(&[1, 3]), vec![0, 1, 1, 0]);
        let r8 = RingParams::new(2, 3).unwrap();
        assert_eq!(phi_map(r8, &[RingElem::ONE]), Err(Error::UnsupportedMetric("phi")));
        assert_eq!(Metric::Lee.symbol_table(r8), Err(Error::UnsupportedMetric("lee")));
    }

    #[test]
    fn per_symbol_identities() {
        let r = z4();
        let lee = Metric::Lee.symbol_table(r).unwrap();
        let gray = Metric::GrayHamming.symbol_table(r).unwrap();
        assert_eq!(lee, gray);
        for x in r.elements() {
            for y in r.elements() {
                let lhs = phi_map(r, &[r.add(x, y)]).unwrap();
                let px = phi_map(r, &[x]).unwrap();
                let py = phi_map(r, &[y]).unwrap();
                let rhs: Vec<u64> = px.iter().zip(&py).map(|(a, b)| (a + b) % 4).collect();
                assert_eq!(lhs, rhs);
            }
        }
        for v in 0..4 {
            let g = gray_map(&[v]);
            assert_eq!(g.iter().map(|&b| b as u64).sum::<u64>(), lee_weight_z4(&[v]));
        }
    }

    proptest! {
        #[test]
        fn gray_weight_is_lee_weight(v in prop::collection::vec(0u64..4, 14)) {
            let g = gray_map(&v);
            prop_assert_eq!(g.iter().map(|&b| b as u64).sum::<u64>(), lee_weight_z4(&v));
        }

        #[test]
        fn distance_is_shift_invariant(shift in 0usize..7, threads in 1usize..4) {
            let space = CodeSpace::new(7, z4()).unwrap();
            let g = RPoly::from_zq(&ZqPoly::new(z4(), vec![3, 2, 3, 1]));
            let a = space.code(vec![g.clone()], ClosureMode::Ideal);
            let b = space.code(vec![g.shift(shift).fold_cyclic(7)], ClosureMode::Ideal);
            let ra = min_distance(&a, Metric::Hamming, &opts(1 << 20, 1)).unwrap();
            let rb = min_distance(&b, Metric::Hamming, &opts(1 << 20, threads)).unwrap();
            prop_assert_eq!(ra.value, rb.value);
            prop_assert!(ra.exhaustive && rb.exhaustive);
        }
    }

    #[test]
    fn hamming_examples() {
        let r8 = RingParams::new(2, 3).unwrap();
        let g = ZqPoly::new(r8, vec![1, 5, 7, 4, 7, 3, 0, 6, 1, 6, 1]);
        let four_g = RPoly::from_zq(&g.scale(4)).to_word(15);
        assert_eq!(hamming_weight(&four_g), 7);
        assert_eq!(hamming_weight(&[RingElem::ZERO; 5]), 0);
        assert_eq!(hamming_weight(&[RingElem::ONE; 5]), 5);
    }

    /// Oracle: weight of every element of the span, by brute force.
    fn brute_min(code: &CyclicCode, metric: Metric) -> u64 {
        code.module()
            .elements()
            .filter(|v| v.iter().any(|&c| c != 0))
            .map(|v| metric.weight(code.ring(), &vector_to_word(code.ring(), &v)).unwrap())
            .min()
            .unwrap()
    }

    #[test]
    fn exhaustive_matches_brute_force() {
        let space = CodeSpace::new(3, z4()).unwrap();
        for code in space.enumerate(100).unwrap().filter(|c| !c.is_zero()) {
            for metric in [Metric::Hamming, Metric::Lee, Metric::GrayHamming, Metric::PhiHamming] {
                let report = min_distance(&code, metric, &opts(1 << 20, 2)).unwrap();
                assert!(report.exhaustive);
                assert_eq!(report.value, brute_min(&code, metric));
                assert_eq!(metric.weight(code.ring(), &report.witness).unwrap(), report.value);
                assert!(code.contains(&report.witness_poly(code.ring())));
                assert_eq!(report.words_scanned + 1, code.cardinality().value().unwrap() as u64);
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_the_witness() {
        let space = CodeSpace::new(7, z4()).unwrap();
        let code = space
            .parse_code(&["1+2x+x^2+3x^3", "ux-u"], ClosureMode::ModuleSpan)
            .unwrap();
        let one = min_distance(&code, Metric::Lee, &opts(1 << 22, 1)).unwrap();
        let many = min_distance(&code, Metric::Lee, &opts(1 << 22, 7)).unwrap();
        assert_eq!(one, many);
        assert_eq!(one.value, 4);
        assert_eq!(one.words_scanned, (1 << 20) - 1);
    }

    #[test]
    fn budgeted_search_reports_an_upper_bound() {
        let r8 = RingParams::new(2, 3).unwrap();
        let g = RPoly::from_zq(&ZqPoly::new(r8, vec![1, 5, 7, 4, 7, 3, 0, 6, 1, 6, 1]));
        let code = CodeSpace::new(15, r8).unwrap().code(vec![g], ClosureMode::Ideal);
        let report = min_distance(&code, Metric::Hamming, &opts(1 << 12, 2)).unwrap();
        assert!(!report.exhaustive);
        assert_eq!(report.value, 7);
        assert!(code.contains(&report.witness_poly(r8)));
    }

    #[test]
    fn zero_code_has_no_distance() {
        let code = CodeSpace::new(3, z4()).unwrap().code(vec![], ClosureMode::Ideal);
        assert_eq!(min_distance(&code, Metric::Hamming, &opts(10, 1)), Err(Error::ZeroCode));
    }
}
