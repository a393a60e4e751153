//! Structure of a cyclic code: canonical generators `(f0 + u f1, u g1)`,
//! cardinality, minimum generating set, freeness and the BCH-type bound.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::{ClosureMode, CyclicCode};
use crate::error::{Error, Result};
use crate::galois::nth_root_of_unity;
use crate::poly::{RPoly, ZqPoly};
use crate::ring::{RingElem, RingParams};

/// `|C| = base^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cardinality {
    pub base: u64,
    pub exponent: u64,
}

impl Cardinality {
    pub fn value(&self) -> Option<u128> {
        u32::try_from(self.exponent)
            .ok()
            .and_then(|e| (self.base as u128).checked_pow(e))
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.base, self.exponent)
    }
}

/// Generators `C = (f0 + u f1, u g1)`.
///
/// `f0` generates the projection `psi(C) = {a : a + ub in C}` and `g1` the
/// kernel `{h : uh in C}`, both in `Z_q[x]/(x^n - 1)`. Per CRT component the
/// two ideals are `(p^{i_l})` and `(p^{k_l})`; with `F_i` the product of the
/// factors where the exponent equals `i`, the generator is
/// `sum_{i < s} p^i (x^n - 1)/F_i`, or `x^n - 1` when every exponent is `s`.
/// It is monic exactly when every exponent is `0` or `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalGenerators {
    pub f0: ZqPoly,
    pub f1: ZqPoly,
    pub g1: ZqPoly,
    pub k0: usize,
    pub k1: usize,
    pub f0_monic: bool,
    pub g1_monic: bool,
    /// `f0 | x^n - 1` (false unless monic).
    pub f0_divides: bool,
    /// `g1 | x^n - 1` (false unless monic).
    pub g1_divides: bool,
    /// `g1 | f0` (false unless `g1` is monic).
    pub g1_divides_f0: bool,
}

impl CanonicalGenerators {
    /// Whether the minimum generating set and `|C| = q^{2n - k0 - k1}` apply:
    /// `f0` and `g1` monic divisors of `x^n - 1`.
    pub fn formula_applies(&self) -> bool {
        self.f0_monic && self.g1_monic && self.f0_divides && self.g1_divides
    }

    /// `s (2n - k0 - k1)`, the exponent of `p` in the cardinality formula.
    pub fn formula_exponent(&self, n: usize, ring: RingParams) -> Option<u64> {
        let total = (2 * n).checked_sub(self.k0 + self.k1)?;
        Some(ring.s() as u64 * total as u64)
    }
}

/// Consecutive roots `zeta^b, ..., zeta^{b + delta - 2}` of a generator at a
/// primitive `n`-th root of unity `zeta` in `GR(R, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BchCertificate {
    pub b: usize,
    pub delta: usize,
    /// The exponents of the run, reduced mod `n`.
    pub roots: Vec<usize>,
    /// Every exponent `e < n` with `g(zeta^e) = 0`.
    pub all_roots: Vec<usize>,
    /// Degree and modulus of the extension holding `zeta`.
    pub m: usize,
    pub modulus: ZqPoly,
}

/// The longest cyclic run of roots of `g` among `zeta^0, ..., zeta^{n-1}`,
/// ties going to the smallest start.
pub fn bch_certificate(g: &RPoly, n: usize) -> Result<BchCertificate> {
    let (ctx, zeta) = nth_root_of_unity(n, g.ring())?;
    let mut is_root = Vec::with_capacity(n);
    let mut z = ctx.one();
    for _ in 0..n {
        is_root.push(ctx.eval_at(g, &z).is_zero());
        z = ctx.mul(&z, &zeta);
    }
    let all_roots: Vec<usize> = (0..n).filter(|&e| is_root[e]).collect();
    let (b, run) = if all_roots.len() == n {
        (0, n)
    } else {
        let mut best = (0, 0);
        for start in 0..n {
            if !is_root[start] || is_root[(start + n - 1) % n] {
                continue;
            }
            let len = (0..n).take_while(|&d| is_root[(start + d) % n]).count();
            if len > best.1 {
                best = (start, len);
            }
        }
        best
    };
    Ok(BchCertificate {
        b,
        delta: run + 1,
        roots: (0..run).map(|d| (b + d) % n).collect(),
        all_roots,
        m: ctx.degree(),
        modulus: ctx.modulus().zq_part(),
    })
}

/// `sum_{i < s, F_i != 1} p^i (x^n - 1)/F_i` for per-factor exponents.
fn assemble(exponents: &[u32], factors: &[ZqPoly], n: usize, ring: RingParams) -> ZqPoly {
    let s = ring.s();
    if exponents.iter().all(|&e| e == s) {
        return ZqPoly::x_n_minus_1(ring, n);
    }
    let mut acc = ZqPoly::zero(ring);
    for i in 0..s {
        if !exponents.contains(&i) {
            continue;
        }
        let cofactor = exponents
            .iter()
            .zip(factors)
            .filter(|(&e, _)| e != i)
            .fold(ZqPoly::one(ring), |acc, (_, f)| &acc * f);
        acc = &acc + &cofactor.scale(ring.p_pow(i));
    }
    acc
}

fn divides(d: &ZqPoly, f: &ZqPoly) -> bool {
    d.is_monic() && d.divides(f).unwrap_or(false)
}

impl CyclicCode {
    pub fn canonical_form(&self) -> Result<CanonicalGenerators> {
        let exps = self.component_exponents()?;
        let n = self.n();
        let ring = self.ring();
        let factors = self.space().crt().factorization().zq_factors();
        let is: Vec<u32> = exps.iter().map(|e| e.0).collect();
        let ks: Vec<u32> = exps.iter().map(|e| e.1).collect();
        let f0 = assemble(&is, factors, n, ring);
        let g1 = assemble(&ks, factors, n, ring);

        // Clear f0 against the code; what remains in the u-block is -f1.
        let reduced = self.module().reduce(&self.space().to_vector(&RPoly::from_zq(&f0)));
        debug_assert!(reduced[..n].iter().all(|&c| c == 0), "f0 outside psi(C)");
        let mut f1 = ZqPoly::new(ring, reduced[n..].iter().map(|&c| ring.zq_neg(c)).collect());
        if g1.is_monic() {
            f1 = f1.rem(&g1)?;
        }

        let xn1 = ZqPoly::x_n_minus_1(ring, n);
        Ok(CanonicalGenerators {
            k0: f0.degree().unwrap_or(0),
            k1: g1.degree().unwrap_or(0),
            f0_monic: f0.is_monic(),
            g1_monic: g1.is_monic(),
            f0_divides: divides(&f0, &xn1),
            g1_divides: divides(&g1, &xn1),
            g1_divides_f0: divides(&g1, &f0),
            f0,
            f1,
            g1,
        })
    }

    /// `|C|` from the Howell form of the code.
    pub fn cardinality(&self) -> Cardinality {
        Cardinality {
            base: self.ring().p(),
            exponent: self.module().log_size(),
        }
    }

    /// `{x^i (f0 + u f1) : i < n - k0} + {x^j u g1 : j < k0 - k1}`.
    pub fn minimum_generating_set(&self) -> Result<Vec<RPoly>> {
        let canon = self.canonical_form()?;
        if !canon.formula_applies() {
            return Err(Error::Hypothesis(
                "f0 and g1 must be monic divisors of x^n - 1".into(),
            ));
        }
        let head = RPoly::from_parts(&canon.f0, &canon.f1);
        let tail = RPoly::from_zq(&canon.g1).scale(RingElem::U);
        let n = self.n();
        let mut out: Vec<RPoly> = (0..n - canon.k0).map(|i| head.shift(i)).collect();
        out.extend((0..canon.k0.saturating_sub(canon.k1)).map(|j| tail.shift(j)));
        Ok(out)
    }

    /// The monic `g | x^n - 1` with `C = (g)`, if any. A module span is free
    /// only when it already equals its ideal closure.
    pub fn is_free(&self) -> Option<RPoly> {
        if self.mode() == ClosureMode::ModuleSpan {
            let ideal = self.with_mode(ClosureMode::Ideal);
            return if ideal.module() == self.module() {
                ideal.is_free()
            } else {
                None
            };
        }
        let s = self.ring().s();
        let exps = self.component_exponents().expect("ideal mode");
        if !exps.iter().all(|&(i, k)| (i, k) == (0, 0) || (i, k) == (s, s)) {
            return None;
        }
        let ring = self.ring();
        let g = if exps.iter().all(|&(i, _)| i == s) {
            RPoly::x_n_minus_1(ring, self.n())
        } else {
            let crt = self.space().crt();
            exps.iter()
                .enumerate()
                .filter(|(_, &(i, _))| i == s)
                .fold(RPoly::one(ring), |acc, (l, _)| &acc * &crt.factor(l))
        };
        debug_assert!(self.space().code(vec![g.clone()], ClosureMode::Ideal) == *self);
        Some(g)
    }

    /// The BCH-type bound for a free code.
    pub fn bch_bound(&self) -> Result<BchCertificate> {
        let g = self
            .is_free()
            .ok_or_else(|| Error::Hypothesis("code is not free".into()))?;
        bch_certificate(&g, self.n())
    }
}
