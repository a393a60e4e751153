//! The base ring `R = Z_q + uZ_q` with `q = p^s` and `u^2 = 0`.
//!
//! Elements are pairs `(a, b)` standing for `a + bu`, always stored as least
//! nonnegative residues modulo `q`. All arithmetic goes through
//! [`RingParams`], which owns `p`, `s` and `q`; elements carry no parameters.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Parameters of `R = Z_{p^s} + uZ_{p^s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingParams {
    p: u64,
    s: u32,
    q: u64,
}

/// An element `a + bu` of `R`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingElem {
    pub a: u64,
    pub b: u64,
}

impl RingElem {
    pub const ZERO: RingElem = RingElem { a: 0, b: 0 };
    pub const ONE: RingElem = RingElem { a: 1, b: 0 };
    pub const U: RingElem = RingElem { a: 0, b: 1 };

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}u"),
            (a, b) => write!(f, "{a}+{b}u"),
        }
    }
}

/// The four ideal families of `R` (and of its Galois extensions).
///
/// `A` is the type of the unit `alpha` in the mixed family: a residue mod
/// `p` for the base ring, a residue-field polynomial for extensions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdealFamily<A> {
    /// `(p^i)`, `0 <= i <= s`.
    PPower(u32),
    /// `(p^k u)`, `0 <= k <= s-1`.
    UPPower(u32),
    /// `(p^j + alpha u)`, `1 <= j <= s-1`, `alpha != 0`.
    Mixed(u32, A),
    /// `(p^j, u)`, `1 <= j <= s-1`.
    TwoGen(u32),
}

impl<A> IdealFamily<A> {
    pub fn family_name(&self) -> &'static str {
        match self {
            IdealFamily::PPower(_) => "p-power",
            IdealFamily::UPPower(_) => "u-p-power",
            IdealFamily::Mixed(..) => "mixed",
            IdealFamily::TwoGen(_) => "two-generator",
        }
    }

    pub fn index(&self) -> u32 {
        match self {
            IdealFamily::PPower(i)
            | IdealFamily::UPPower(i)
            | IdealFamily::Mixed(i, _)
            | IdealFamily::TwoGen(i) => *i,
        }
    }
}

pub type IdealDescriptor = IdealFamily<u64>;

/// Size limits for the brute-force oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest `q` for which element sets of `R` are enumerated.
    pub max_q: u64,
    /// Largest `|GR(R, m)|` for exhaustive Galois-ring censuses.
    pub max_gr_size: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_q: 1 << 10,
            max_gr_size: 1 << 16,
        }
    }
}

impl RingParams {
    pub fn new(p: u64, s: u32) -> Result<Self> {
        if !(2..1 << 16).contains(&p) || !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::ZeroExponent);
        }
        let q = arith::checked_pow(p, s).ok_or(Error::Overflow { p, s })?;
        q.checked_mul(q).ok_or(Error::Overflow { p, s })?;
        Ok(RingParams { p, s, q })
    }

    /// The prime field `F_p` viewed as `Z_{p^1}`.
    pub fn residue_field(&self) -> RingParams {
        RingParams {
            p: self.p,
            s: 1,
            q: self.p,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_field(&self) -> bool {
        self.s == 1
    }

    /// `|R| = q^2`.
    pub fn size(&self) -> u64 {
        self.q * self.q
    }

    /// `p^k` for `k <= s`.
    pub fn p_pow(&self, k: u32) -> u64 {
        debug_assert!(k <= self.s);
        self.p.pow(k)
    }

    // ---- Z_q ----

    pub fn zq(&self, v: i64) -> u64 {
        v.rem_euclid(self.q as i64) as u64
    }

    pub fn zq_add(&self, x: u64, y: u64) -> u64 {
        (x + y) % self.q
    }

    pub fn zq_sub(&self, x: u64, y: u64) -> u64 {
        (x + self.q - y) % self.q
    }

    pub fn zq_neg(&self, x: u64) -> u64 {
        (self.q - x) % self.q
    }

    pub fn zq_mul(&self, x: u64, y: u64) -> u64 {
        x * y % self.q
    }

    pub fn zq_pow(&self, x: u64, e: u64) -> u64 {
        arith::pow_mod(x, e, self.q)
    }

    pub fn zq_inv(&self, x: u64) -> Option<u64> {
        if x.is_multiple_of(self.p) {
            return None;
        }
        arith::inv_mod(x, self.q)
    }

    /// p-adic valuation of a residue; `s` for zero.
    pub fn zq_valuation(&self, x: u64) -> u32 {
        if x.is_multiple_of(self.q) {
            self.s
        } else {
            arith::valuation(x, self.p)
        }
    }

    /// Teichmüller representative of `a`: the fixed point of `a -> a^p`.
    pub fn teichmuller(&self, a: u64) -> u64 {
        let mut x = a % self.q;
        loop {
            let y = self.zq_pow(x, self.p);
            if y == x {
                return x;
            }
            x = y;
        }
    }

    /// Digits `(a_0, ..., a_{s-1})` over the Teichmüller set with `a = sum a_i p^i`.
    pub fn p_adic_digits(&self, a: u64) -> Vec<u64> {
        let mut rest = a % self.q;
        let mut digits = Vec::with_capacity(self.s as usize);
        for _ in 0..self.s {
            let d = self.teichmuller(rest % self.p);
            digits.push(d);
            rest = self.zq_sub(rest, d) / self.p;
        }
        digits
    }

    // ---- R ----

    pub fn elem(&self, a: u64, b: u64) -> RingElem {
        RingElem {
            a: a % self.q,
            b: b % self.q,
        }
    }

    pub fn elem_signed(&self, a: i64, b: i64) -> RingElem {
        RingElem {
            a: self.zq(a),
            b: self.zq(b),
        }
    }

    pub fn contains(&self, x: RingElem) -> bool {
        x.a < self.q && x.b < self.q
    }

    pub fn add(&self, x: RingElem, y: RingElem) -> RingElem {
        RingElem {
            a: self.zq_add(x.a, y.a),
            b: self.zq_add(x.b, y.b),
        }
    }

    pub fn sub(&self, x: RingElem, y: RingElem) -> RingElem {
        RingElem {
            a: self.zq_sub(x.a, y.a),
            b: self.zq_sub(x.b, y.b),
        }
    }

    pub fn neg(&self, x: RingElem) -> RingElem {
        RingElem {
            a: self.zq_neg(x.a),
            b: self.zq_neg(x.b),
        }
    }

    /// `(a + bu)(c + du) = ac + (ad + bc)u`.
    pub fn mul(&self, x: RingElem, y: RingElem) -> RingElem {
        RingElem {
            a: x.a * y.a % self.q,
            b: (x.a * y.b % self.q + x.b * y.a % self.q) % self.q,
        }
    }

    /// [`RingParams::mul`] with both operands validated against this ring.
    pub fn try_mul(&self, x: RingElem, y: RingElem) -> Result<RingElem> {
        if !self.contains(x) || !self.contains(y) {
            return Err(Error::MismatchedParams { q: self.q });
        }
        Ok(self.mul(x, y))
    }

    pub fn scale(&self, c: u64, x: RingElem) -> RingElem {
        RingElem {
            a: c % self.q * x.a % self.q,
            b: c % self.q * x.b % self.q,
        }
    }

    pub fn pow(&self, x: RingElem, mut e: u64) -> RingElem {
        let mut acc = RingElem::ONE;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The residue map `a + bu -> a mod p`.
    pub fn residue(&self, x: RingElem) -> u64 {
        x.a % self.p
    }

    pub fn is_unit(&self, x: RingElem) -> bool {
        self.residue(x) != 0
    }

    /// `(a + bu)^{-1} = a^{-1} - b a^{-2} u`.
    pub fn inv(&self, x: RingElem) -> Option<RingElem> {
        let ai = self.zq_inv(x.a)?;
        let b = self.zq_neg(self.zq_mul(x.b, self.zq_mul(ai, ai)));
        Some(RingElem { a: ai, b })
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElem> + '_ {
        (0..self.q).flat_map(move |a| (0..self.q).map(move |b| RingElem { a, b }))
    }

    // ---- ideals ----

    /// The ideal census of `R`: families (i)-(iv), `(s-1)(p-1) + 3s` entries.
    pub fn enumerate_ideals(&self) -> Vec<IdealDescriptor> {
        let s = self.s;
        let mut out: Vec<IdealDescriptor> = (0..=s).map(IdealFamily::PPower).collect();
        out.extend((0..s).map(IdealFamily::UPPower));
        for j in 1..s {
            out.extend((1..self.p).map(|alpha| IdealFamily::Mixed(j, alpha)));
        }
        out.extend((1..s).map(IdealFamily::TwoGen));
        out
    }

    pub fn ideal_generators(&self, desc: &IdealDescriptor) -> Vec<RingElem> {
        match *desc {
            IdealFamily::PPower(i) => vec![self.elem(self.p_pow(i), 0)],
            IdealFamily::UPPower(k) => vec![self.elem(0, self.p_pow(k))],
            IdealFamily::Mixed(j, alpha) => vec![self.elem(self.p_pow(j), alpha)],
            IdealFamily::TwoGen(j) => vec![self.elem(self.p_pow(j), 0), RingElem::U],
        }
    }

    pub fn ideal_elements(&self, desc: &IdealDescriptor) -> Result<BTreeSet<RingElem>> {
        self.ideal_elements_with(desc, &Guards::default())
    }

    pub fn ideal_elements_with(
        &self,
        desc: &IdealDescriptor,
        guards: &Guards,
    ) -> Result<BTreeSet<RingElem>> {
        self.ideal_closure_with(&self.ideal_generators(desc), guards)
    }

    /// Brute-force ideal closure `{sum r_i g_i}` of a generator list.
    pub fn ideal_closure_with(&self, gens: &[RingElem], guards: &Guards) -> Result<BTreeSet<RingElem>> {
        if self.q > guards.max_q {
            return Err(Error::GuardExceeded {
                what: "q",
                value: self.q,
                limit: guards.max_q,
            });
        }
        // As an additive group the ideal is generated by g and u*g.
        let steps: Vec<RingElem> = gens
            .iter()
            .flat_map(|&g| [g, self.mul(RingElem::U, g)])
            .filter(|g| !g.is_zero())
            .collect();
        let mut set = BTreeSet::from([RingElem::ZERO]);
        let mut frontier = vec![RingElem::ZERO];
        while let Some(x) = frontier.pop() {
            for &g in &steps {
                let y = self.add(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(set)
    }
}
