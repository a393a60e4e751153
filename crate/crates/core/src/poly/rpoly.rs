use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::ZqPoly;
use crate::ring::{RingElem, RingParams};

/// A polynomial over `R = Z_q + uZ_q`, little-endian, trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RPoly {
    ring: RingParams,
    coeffs: Vec<RingElem>,
}

impl RPoly {
    pub fn new(ring: RingParams, coeffs: Vec<RingElem>) -> Self {
        let mut p = RPoly {
            ring,
            coeffs: coeffs.into_iter().map(|c| ring.elem(c.a, c.b)).collect(),
        };
        p.strip();
        p
    }

    pub fn zero(ring: RingParams) -> Self {
        RPoly { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: RingParams) -> Self {
        RPoly::constant(ring, RingElem::ONE)
    }

    pub fn constant(ring: RingParams, c: RingElem) -> Self {
        RPoly::new(ring, vec![c])
    }

    pub fn x(ring: RingParams) -> Self {
        RPoly::new(ring, vec![RingElem::ZERO, RingElem::ONE])
    }

    pub fn x_n_minus_1(ring: RingParams, n: usize) -> Self {
        RPoly::from_zq(&ZqPoly::x_n_minus_1(ring, n))
    }

    /// `a(x) + u b(x)`.
    pub fn from_parts(a: &ZqPoly, b: &ZqPoly) -> Self {
        assert_eq!(a.ring(), b.ring());
        let n = a.coeffs().len().max(b.coeffs().len());
        RPoly::new(
            a.ring(),
            (0..n).map(|i| RingElem { a: a.coeff(i), b: b.coeff(i) }).collect(),
        )
    }

    pub fn from_zq(a: &ZqPoly) -> Self {
        RPoly::from_parts(a, &ZqPoly::zero(a.ring()))
    }

    /// `u * b(x)`.
    pub fn from_u_part(b: &ZqPoly) -> Self {
        RPoly::from_parts(&ZqPoly::zero(b.ring()), b)
    }

    fn strip(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RingElem {
        self.coeffs.get(i).copied().unwrap_or(RingElem::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [RingElem::ONE]
    }

    pub fn lc(&self) -> RingElem {
        self.coeffs.last().copied().unwrap_or(RingElem::ZERO)
    }

    /// Leading coefficient exactly `1 + 0u`.
    pub fn is_monic(&self) -> bool {
        self.lc() == RingElem::ONE
    }

    /// The `Z_q` part `a(x)` of `a(x) + u b(x)`.
    pub fn zq_part(&self) -> ZqPoly {
        ZqPoly::new(self.ring, self.coeffs.iter().map(|c| c.a).collect())
    }

    /// The `u`-coefficient `b(x)` of `a(x) + u b(x)`.
    pub fn u_part(&self) -> ZqPoly {
        ZqPoly::new(self.ring, self.coeffs.iter().map(|c| c.b).collect())
    }

    /// Image under the residue map to `F_p[x]`.
    pub fn residue(&self) -> ZqPoly {
        self.zq_part().residue()
    }

    pub fn scale(&self, c: RingElem) -> Self {
        let r = self.ring;
        RPoly::new(r, self.coeffs.iter().map(|&a| r.mul(a, c)).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![RingElem::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        RPoly { ring: self.ring, coeffs }
    }

    /// Division by a monic divisor (leading coefficient `1 + 0u`).
    pub fn divmod_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_ring(divisor);
        let r = self.ring;
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        if !divisor.is_monic() {
            return Err(Error::NotMonic);
        }
        if self.coeffs.len() <= dd {
            return Ok((RPoly::zero(r), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RingElem::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = r.sub(rem[i + j], r.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((RPoly::new(r, quot), RPoly::new(r, rem)))
    }

    pub fn rem_monic(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod_monic(divisor)?.1)
    }

    /// Reduction modulo `x^n - 1`.
    pub fn fold_cyclic(&self, n: usize) -> Self {
        let r = self.ring;
        let mut out = vec![RingElem::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = r.add(out[i % n], c);
        }
        RPoly::new(r, out)
    }

    /// Product in `R[x]/(x^n - 1)`.
    pub fn mul_cyclic(&self, other: &Self, n: usize) -> Self {
        (self * other).fold_cyclic(n)
    }

    /// Coefficient vector of length `n` (the codeword of a reduced polynomial).
    pub fn to_word(&self, n: usize) -> Vec<RingElem> {
        let folded = self.fold_cyclic(n);
        (0..n).map(|i| folded.coeff(i)).collect()
    }

    pub fn from_word(ring: RingParams, word: &[RingElem]) -> Self {
        RPoly::new(ring, word.to_vec())
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "polynomials over different rings");
    }
}

impl Add for &RPoly {
    type Output = RPoly;
    fn add(self, rhs: &RPoly) -> RPoly {
        self.check_ring(rhs);
        let r = self.ring;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RPoly::new(r, (0..n).map(|i| r.add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Sub for &RPoly {
    type Output = RPoly;
    fn sub(self, rhs: &RPoly) -> RPoly {
        self.check_ring(rhs);
        let r = self.ring;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RPoly::new(r, (0..n).map(|i| r.sub(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Neg for &RPoly {
    type Output = RPoly;
    fn neg(self) -> RPoly {
        let r = self.ring;
        RPoly::new(r, self.coeffs.iter().map(|&c| r.neg(c)).collect())
    }
}

impl Mul for &RPoly {
    type Output = RPoly;
    fn mul(self, rhs: &RPoly) -> RPoly {
        self.check_ring(rhs);
        let r = self.ring;
        if self.is_zero() || rhs.is_zero() {
            return RPoly::zero(r);
        }
        let mut out = vec![RingElem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = r.add(out[i + j], r.mul(a, b));
            }
        }
        RPoly::new(r, out)
    }
}
