//! Factorization of `x^n - 1` over `R` into pairwise coprime basic
//! irreducible polynomials.
//!
//! Over `F_p` the factors are the minimal polynomials of the cyclotomic
//! cosets of `p` modulo `n`, computed in `F_{p^m}` with `m = ord_n(p)`. Each
//! factor is then Hensel-lifted against `x^n - 1` to `Z_q`, which embeds in
//! `R` unchanged.

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::fp::{self, FpExt};
use crate::poly::hensel::lift_factor;
use crate::poly::{RPoly, ZqPoly};
use crate::ring::RingParams;

/// `x^n - 1 = f_1 ... f_t` over `R`, factors monic and in canonical order
/// (ascending degree, then coefficients from the leading term down).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: usize,
    ring: RingParams,
    factors: Vec<ZqPoly>,
}

impl Factorization {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factors as polynomials over `Z_q`.
    pub fn zq_factors(&self) -> &[ZqPoly] {
        &self.factors
    }

    /// The factors as polynomials over `R`.
    pub fn factors(&self) -> Vec<RPoly> {
        self.factors.iter().map(RPoly::from_zq).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.degree().unwrap_or(0)).collect()
    }

    pub fn product(&self) -> ZqPoly {
        self.factors
            .iter()
            .fold(ZqPoly::one(self.ring), |acc, f| &acc * f)
    }
}

pub fn check_length(n: usize, ring: RingParams) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if arith::gcd(n as u64, ring.p()) != 1 {
        return Err(Error::LengthNotCoprime { n: n as u64, p: ring.p() });
    }
    Ok(())
}

/// Cyclotomic cosets `{a p^k mod n}` of `p` modulo `n`, each sorted, listed by
/// smallest representative.
pub fn cyclotomic_cosets(n: u64, p: u64) -> Vec<Vec<u64>> {
    let mut seen = vec![false; n as usize];
    let mut cosets = Vec::new();
    for a in 0..n {
        if seen[a as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = a;
        while !seen[x as usize] {
            seen[x as usize] = true;
            coset.push(x);
            x = arith::mul_mod(x, p, n);
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    cosets
}

/// Minimal polynomials over `F_p` of the `n`-th roots of unity, one per coset.
pub fn minimal_polynomials(n: usize, field: RingParams) -> Result<Vec<ZqPoly>> {
    let p = field.p();
    let m = arith::mult_order(p, n as u64) as usize;
    let ext = FpExt::new(fp::primitive_poly(field, m)?)?;
    let pm = p.pow(m as u32);
    let beta = ext.pow(&ext.generator(), (pm - 1) / n as u64);
    let mut out = Vec::new();
    for coset in cyclotomic_cosets(n as u64, p) {
        // coefficients over F_{p^m}, little-endian in y
        let mut poly = vec![ZqPoly::one(field)];
        for &j in &coset {
            let root = ext.pow(&beta, j);
            let mut next = vec![ZqPoly::zero(field); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] - &ext.mul(c, &root);
            }
            poly = next;
        }
        let coeffs = poly
            .iter()
            .map(|c| {
                debug_assert!(c.degree().unwrap_or(0) == 0, "minimal polynomial not over F_p");
                c.coeff(0)
            })
            .collect();
        out.push(ZqPoly::new(field, coeffs));
    }
    Ok(out)
}

pub fn factor_xn_minus_1(n: usize, ring: RingParams) -> Result<Factorization> {
    check_length(n, ring)?;
    let target = ZqPoly::x_n_minus_1(ring, n);
    let mut factors = minimal_polynomials(n, ring.residue_field())?
        .iter()
        .map(|g| lift_factor(&target, g))
        .collect::<Result<Vec<_>>>()?;
    factors.sort_by(|a, b| a.canonical_cmp(b));
    Ok(Factorization { n, ring, factors })
}

/// Monic with irreducible residue over `F_p`.
pub fn is_basic_irreducible(f: &RPoly) -> bool {
    f.is_monic() && fp::is_irreducible(&f.residue())
}

/// Monic with primitive residue over `F_p`.
pub fn is_basic_primitive(f: &RPoly) -> bool {
    f.is_monic() && fp::is_primitive(&f.residue())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_of_two_mod_fifteen() {
        let cosets = cyclotomic_cosets(15, 2);
        let sizes: Vec<usize> = cosets.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 4, 4, 2, 4]);
        assert_eq!(cosets[1], vec![1, 2, 4, 8]);
    }

    #[test]
    fn small_factorizations() {
        let z4 = RingParams::new(2, 2).unwrap();
        let f = factor_xn_minus_1(3, z4).unwrap();
        assert_eq!(
            f.zq_factors(),
            &[ZqPoly::new(z4, vec![3, 1]), ZqPoly::new(z4, vec![1, 1, 1])]
        );
        let one = factor_xn_minus_1(1, z4).unwrap();
        assert_eq!(one.zq_factors(), &[ZqPoly::new(z4, vec![3, 1])]);
        assert_eq!(
            factor_xn_minus_1(6, z4),
            Err(Error::LengthNotCoprime { n: 6, p: 2 })
        );
        assert_eq!(factor_xn_minus_1(0, z4), Err(Error::ZeroLength));
    }

    #[test]
    fn basic_irreducibility_flags() {
        let z4 = RingParams::new(2, 2).unwrap();
        let quad = RPoly::from_zq(&ZqPoly::new(z4, vec![1, 1, 1]));
        assert!(is_basic_irreducible(&quad) && is_basic_primitive(&quad));
        let cubic = RPoly::x_n_minus_1(z4, 3);
        assert!(!is_basic_irreducible(&cubic));
        let z8 = RingParams::new(2, 3).unwrap();
        let quartic = RPoly::from_zq(&ZqPoly::new(z8, vec![1, 3, 6, 4, 1]));
        assert!(is_basic_primitive(&quartic));
    }
}
