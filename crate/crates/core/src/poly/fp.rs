//! Polynomials over the prime field `F_p`: extended Euclid, irreducibility,
//! root orders and primitive polynomials.

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::ZqPoly;
use crate::ring::RingParams;

fn assert_field(f: &ZqPoly) {
    assert!(f.ring().is_field(), "F_p routine called over Z_{}", f.ring().q());
}

/// Monic associate; zero stays zero.
pub fn make_monic(f: &ZqPoly) -> ZqPoly {
    assert_field(f);
    if f.is_zero() {
        return f.clone();
    }
    let inv = f.ring().zq_inv(f.lc()).expect("nonzero in a field");
    f.scale(inv)
}

/// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)` and `g` monic (or zero).
pub fn xgcd(a: &ZqPoly, b: &ZqPoly) -> (ZqPoly, ZqPoly, ZqPoly) {
    assert_field(a);
    let r = a.ring();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (ZqPoly::one(r), ZqPoly::zero(r));
    let (mut t0, mut t1) = (ZqPoly::zero(r), ZqPoly::one(r));
    while !r1.is_zero() {
        let (qt, rem) = r0.divmod(&r1).expect("nonzero divisor over a field");
        r0 = std::mem::replace(&mut r1, rem);
        let s2 = &s0 - &(&qt * &s1);
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = &t0 - &(&qt * &t1);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = r.zq_inv(r0.lc()).expect("nonzero in a field");
    (r0.scale(inv), s0.scale(inv), t0.scale(inv))
}

pub fn gcd(a: &ZqPoly, b: &ZqPoly) -> ZqPoly {
    xgcd(a, b).0
}

/// `x^{p^k} mod f`.
fn frobenius_power(f: &ZqPoly, k: usize) -> ZqPoly {
    let r = f.ring();
    let mut y = ZqPoly::x(r).rem(f).expect("monic modulus");
    for _ in 0..k {
        y = y.powmod(r.p(), f).expect("monic modulus");
    }
    y
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &ZqPoly) -> bool {
    assert_field(f);
    let m = match f.degree() {
        None | Some(0) => return false,
        Some(m) => m,
    };
    let f = make_monic(f);
    let x = ZqPoly::x(f.ring());
    if frobenius_power(&f, m) != x.rem(&f).expect("monic") {
        return false;
    }
    arith::prime_factors(m as u64).into_iter().all(|r| {
        let h = &frobenius_power(&f, m / r as usize) - &x;
        gcd(&h, &f).is_one()
    })
}

/// Multiplicative order of `x` modulo an irreducible `f` with `f(0) != 0`.
pub fn root_order(f: &ZqPoly) -> Result<u64> {
    assert_field(f);
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    if f.coeff(0) == 0 {
        return Err(Error::DivisibleByX);
    }
    if !is_irreducible(f) {
        return Err(Error::Reducible { p: f.ring().p() });
    }
    let f = make_monic(f);
    let r = f.ring();
    let full = r
        .p()
        .checked_pow(m as u32)
        .ok_or(Error::Overflow { p: r.p(), s: m as u32 })?
        - 1;
    let x = ZqPoly::x(r);
    let mut order = full;
    for prime in arith::prime_factors(full) {
        while order % prime == 0 && x.powmod(order / prime, &f)?.is_one() {
            order /= prime;
        }
    }
    Ok(order)
}

pub fn is_primitive(f: &ZqPoly) -> bool {
    let Some(m) = f.degree() else { return false };
    match root_order(f) {
        Ok(order) => f.ring().p().checked_pow(m as u32).map(|pm| pm - 1) == Some(order),
        Err(_) => false,
    }
}

/// Monic polynomial of degree `m` whose base-`p` digit string is `code`.
fn monic_from_code(field: RingParams, m: usize, mut code: u64) -> ZqPoly {
    let mut coeffs = Vec::with_capacity(m + 1);
    for _ in 0..m {
        coeffs.push(code % field.p());
        code /= field.p();
    }
    coeffs.push(1);
    ZqPoly::new(field, coeffs)
}

/// The smallest primitive polynomial of degree `m` over `F_p`, comparing
/// coefficients from `x^{m-1}` down to the constant term.
pub fn primitive_poly(field: RingParams, m: usize) -> Result<ZqPoly> {
    assert!(field.is_field());
    let p = field.p();
    let count = p
        .checked_pow(m as u32)
        .filter(|c| c.checked_mul(p).is_some())
        .ok_or(Error::Overflow { p, s: m as u32 })?;
    // The most significant digit of `code` is the coefficient of x^{m-1}.
    for code in 0..count {
        let f = monic_from_code(field, m, code);
        if is_primitive(&f) {
            return Ok(f);
        }
    }
    Err(Error::NoPrimitive { p, m })
}

/// Arithmetic in `F_{p^m} = F_p[x]/(modulus)`.
#[derive(Clone, Debug)]
pub struct FpExt {
    modulus: ZqPoly,
}

impl FpExt {
    pub fn new(modulus: ZqPoly) -> Result<Self> {
        if !is_irreducible(&modulus) {
            return Err(Error::Reducible { p: modulus.ring().p() });
        }
        Ok(FpExt { modulus: make_monic(&modulus) })
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn modulus(&self) -> &ZqPoly {
        &self.modulus
    }

    pub fn generator(&self) -> ZqPoly {
        ZqPoly::x(self.modulus.ring()).rem(&self.modulus).expect("monic")
    }

    pub fn mul(&self, a: &ZqPoly, b: &ZqPoly) -> ZqPoly {
        a.mulmod(b, &self.modulus).expect("monic")
    }

    pub fn pow(&self, a: &ZqPoly, e: u64) -> ZqPoly {
        a.powmod(e, &self.modulus).expect("monic")
    }
}
