use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::RingParams;

/// A polynomial over `Z_q`, coefficients little-endian, trailing zeros stripped.
///
/// With `s = 1` this is a polynomial over the prime field `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZqPoly {
    ring: RingParams,
    coeffs: Vec<u64>,
}

impl ZqPoly {
    pub fn new(ring: RingParams, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= ring.q();
        }
        let mut p = ZqPoly { ring, coeffs };
        p.strip();
        p
    }

    pub fn from_signed(ring: RingParams, coeffs: &[i64]) -> Self {
        ZqPoly::new(ring, coeffs.iter().map(|&c| ring.zq(c)).collect())
    }

    pub fn zero(ring: RingParams) -> Self {
        ZqPoly { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: RingParams) -> Self {
        ZqPoly::constant(ring, 1)
    }

    pub fn constant(ring: RingParams, c: u64) -> Self {
        ZqPoly::new(ring, vec![c])
    }

    pub fn x(ring: RingParams) -> Self {
        ZqPoly::monomial(ring, 1, 1)
    }

    pub fn monomial(ring: RingParams, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        ZqPoly::new(ring, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_1(ring: RingParams, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = ring.q() - 1;
        coeffs[n] = 1;
        ZqPoly::new(ring, coeffs)
    }

    fn strip(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    /// Order used for canonical listings: degree first, then coefficients
    /// from the leading term down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    pub fn scale(&self, c: u64) -> Self {
        let r = self.ring;
        ZqPoly::new(r, self.coeffs.iter().map(|&a| r.zq_mul(a, c % r.q())).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        ZqPoly { ring: self.ring, coeffs }
    }

    /// Reinterpret coefficients modulo another power of `p` (reduction when
    /// the target is smaller, lifting of least residues when larger).
    pub fn with_ring(&self, ring: RingParams) -> Self {
        debug_assert_eq!(ring.p(), self.ring.p());
        ZqPoly::new(ring, self.coeffs.clone())
    }

    /// Image over the residue field `F_p`.
    pub fn residue(&self) -> Self {
        self.with_ring(self.ring.residue_field())
    }

    /// Euclidean division by a divisor whose leading coefficient is a unit.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_ring(divisor);
        let r = self.ring;
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let inv = r.zq_inv(divisor.lc()).ok_or(Error::NotMonic)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((ZqPoly::zero(r), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = r.zq_mul(rem[i + dd], inv);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = r.zq_sub(rem[i + j], r.zq_mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((ZqPoly::new(r, quot), ZqPoly::new(r, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn mulmod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        (self * other).rem(modulus)
    }

    pub fn powmod(&self, mut e: u64, modulus: &Self) -> Result<Self> {
        let mut acc = ZqPoly::one(self.ring).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, modulus)?;
            }
            base = base.mulmod(&base, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Reduction modulo `x^n - 1`.
    pub fn fold_cyclic(&self, n: usize) -> Self {
        let r = self.ring;
        let mut out = vec![0u64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = r.zq_add(out[i % n], c);
        }
        ZqPoly::new(r, out)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let r = self.ring;
        self.coeffs.iter().rev().fold(0, |acc, &c| r.zq_add(r.zq_mul(acc, x), c))
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "polynomials over different rings");
    }
}

impl Add for &ZqPoly {
    type Output = ZqPoly;
    fn add(self, rhs: &ZqPoly) -> ZqPoly {
        self.check_ring(rhs);
        let r = self.ring;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZqPoly::new(r, (0..n).map(|i| r.zq_add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Sub for &ZqPoly {
    type Output = ZqPoly;
    fn sub(self, rhs: &ZqPoly) -> ZqPoly {
        self.check_ring(rhs);
        let r = self.ring;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZqPoly::new(r, (0..n).map(|i| r.zq_sub(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Neg for &ZqPoly {
    type Output = ZqPoly;
    fn neg(self) -> ZqPoly {
        let r = self.ring;
        ZqPoly::new(r, self.coeffs.iter().map(|&c| r.zq_neg(c)).collect())
    }
}

impl Mul for &ZqPoly {
    type Output = ZqPoly;
    fn mul(self, rhs: &ZqPoly) -> ZqPoly {
        self.check_ring(rhs);
        let r = self.ring;
        if self.is_zero() || rhs.is_zero() {
            return ZqPoly::zero(r);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % r.q();
            }
        }
        ZqPoly::new(r, out)
    }
}
