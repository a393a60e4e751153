//! Galois extensions `GR(R, m) = R[x]/(f)` for a monic basic irreducible `f`
//! of degree `m`.
//!
//! Elements are coordinate vectors `r_0 + r_1 alpha + ... + r_{m-1} alpha^{m-1}`
//! over `R`, where `alpha` is the class of `x`. Writing each `r_i = a_i + b_i u`
//! identifies `GR(R, m)` with `GR(q, m) + u GR(q, m)` and, additively, with
//! `Z_q^{2m}`; [`GaloisRingCtx::ideal_module`] uses that identification
//! (the `m` a-coordinates first, then the `m` b-coordinates).

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::fp;
use crate::poly::text::format_r_in;
use crate::poly::{hensel_lift, is_basic_irreducible, is_basic_primitive, RPoly, ZqPoly};
use crate::ring::{Guards, IdealFamily, RingElem, RingParams};
use crate::span::Submodule;

/// Ideal descriptor of `GR(R, m)`. The unit in the mixed family is a nonzero
/// residue-field element given by its `F_p` coordinates in the basis
/// `1, alpha, ..., alpha^{m-1}`.
pub type GrIdealDescriptor = IdealFamily<Vec<u64>>;

/// An element of `GR(R, m)`: exactly `m` coordinates over `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrElem {
    coords: Vec<RingElem>,
}

impl GrElem {
    pub fn coords(&self) -> &[RingElem] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The representative polynomial of degree `< m`.
    pub fn to_rpoly(&self, ring: RingParams) -> RPoly {
        RPoly::new(ring, self.coords.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisRingCtx {
    params: RingParams,
    modulus: RPoly,
    m: usize,
    xi: Option<GrElem>,
}

impl GaloisRingCtx {
    /// `R[x]/(f)`; `xi` is set to the class of `x` when `f` is basic primitive.
    pub fn new(f: &RPoly) -> Result<Self> {
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let params = f.ring();
        if !is_basic_irreducible(f) {
            return Err(Error::Reducible { p: params.p() });
        }
        let m = f.degree().expect("monic polynomial is nonzero");
        let mut ctx = GaloisRingCtx {
            params,
            modulus: f.clone(),
            m,
            xi: None,
        };
        if is_basic_primitive(f) {
            ctx.xi = Some(ctx.alpha());
        }
        Ok(ctx)
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn modulus(&self) -> &RPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    /// The basic primitive element, when the modulus is basic primitive.
    pub fn xi(&self) -> Option<&GrElem> {
        self.xi.as_ref()
    }

    /// `|GR(R, m)| = q^{2m}` if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        u32::try_from(2 * self.m)
            .ok()
            .and_then(|e| self.params.q().checked_pow(e))
    }

    /// `p^m`, the size of the residue field.
    pub fn residue_field_size(&self) -> u64 {
        self.params.p().pow(self.m as u32)
    }

    // ---- construction ----

    pub fn zero(&self) -> GrElem {
        GrElem {
            coords: vec![RingElem::ZERO; self.m],
        }
    }

    pub fn one(&self) -> GrElem {
        self.from_ring(RingElem::ONE)
    }

    /// The class of `x`.
    pub fn alpha(&self) -> GrElem {
        self.from_rpoly(&RPoly::x(self.params))
    }

    pub fn from_ring(&self, c: RingElem) -> GrElem {
        let mut coords = vec![RingElem::ZERO; self.m];
        coords[0] = self.params.elem(c.a, c.b);
        GrElem { coords }
    }

    /// The class of an arbitrary polynomial modulo `f`.
    pub fn from_rpoly(&self, g: &RPoly) -> GrElem {
        assert_eq!(g.ring(), self.params, "polynomial over a different ring");
        let r = g.rem_monic(&self.modulus).expect("modulus is monic");
        let mut coords = r.coeffs().to_vec();
        coords.resize(self.m, RingElem::ZERO);
        GrElem { coords }
    }

    /// `sum_i digits[i] alpha^i` over `F_p`, lifted digitwise.
    pub fn from_residue_digits(&self, digits: &[u64]) -> GrElem {
        let mut coords = vec![RingElem::ZERO; self.m];
        for (c, &d) in coords.iter_mut().zip(digits) {
            *c = self.params.elem(d % self.params.p(), 0);
        }
        GrElem { coords }
    }

    // ---- arithmetic ----

    pub fn add(&self, x: &GrElem, y: &GrElem) -> GrElem {
        GrElem {
            coords: x
                .coords
                .iter()
                .zip(&y.coords)
                .map(|(&a, &b)| self.params.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, x: &GrElem, y: &GrElem) -> GrElem {
        GrElem {
            coords: x
                .coords
                .iter()
                .zip(&y.coords)
                .map(|(&a, &b)| self.params.sub(a, b))
                .collect(),
        }
    }

    pub fn neg(&self, x: &GrElem) -> GrElem {
        GrElem {
            coords: x.coords.iter().map(|&a| self.params.neg(a)).collect(),
        }
    }

    pub fn scale(&self, c: RingElem, x: &GrElem) -> GrElem {
        GrElem {
            coords: x.coords.iter().map(|&a| self.params.mul(c, a)).collect(),
        }
    }

    pub fn mul(&self, x: &GrElem, y: &GrElem) -> GrElem {
        let r = self.params;
        let m = self.m;
        let mut prod = vec![RingElem::ZERO; 2 * m - 1];
        for (i, &a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.coords.iter().enumerate() {
                prod[i + j] = r.add(prod[i + j], r.mul(a, b));
            }
        }
        let f = self.modulus.coeffs();
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c.is_zero() {
                continue;
            }
            for i in 0..m {
                prod[k - m + i] = r.sub(prod[k - m + i], r.mul(c, f[i]));
            }
        }
        prod.truncate(m);
        GrElem { coords: prod }
    }

    pub fn pow(&self, x: &GrElem, mut e: u64) -> GrElem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Image in `F_{p^m} = F_p[x]/(f mod p)`.
    pub fn residue(&self, x: &GrElem) -> ZqPoly {
        let field = self.params.residue_field();
        ZqPoly::new(field, x.coords.iter().map(|c| c.a % field.p()).collect())
    }

    pub fn is_unit(&self, x: &GrElem) -> bool {
        !self.residue(x).is_zero()
    }

    /// Inverse of a unit: invert the residue by `y = x^{p^m - 2}`, then refine
    /// with Newton steps `y <- y(2 - xy)`, each of which squares the error.
    pub fn inv(&self, x: &GrElem) -> Option<GrElem> {
        if !self.is_unit(x) {
            return None;
        }
        let mut y = self.pow(x, self.residue_field_size() - 2);
        let two = self.from_ring(self.params.elem(2, 0));
        // the error lies in (p, u), whose (s+1)-th power vanishes
        let mut precision = 1u32;
        while precision < self.params.s() + 1 {
            y = self.mul(&y, &self.sub(&two, &self.mul(x, &y)));
            precision *= 2;
        }
        debug_assert_eq!(self.mul(x, &y), self.one());
        Some(y)
    }

    /// Order of the unit group: `(p^m - 1) p^{(2s-1)m}`.
    pub fn unit_group_order(&self) -> u128 {
        let p = self.params.p() as u128;
        let m = self.m as u32;
        (p.pow(m) - 1) * p.pow((2 * self.params.s() - 1) * m)
    }

    /// The Teichmuller representative with the same residue: the fixed point
    /// of `z -> z^{p^m}` reached from `x`.
    pub fn teichmuller(&self, x: &GrElem) -> GrElem {
        let pm = self.residue_field_size();
        let mut z = x.clone();
        loop {
            let next = self.pow(&z, pm);
            if next == z {
                return z;
            }
            z = next;
        }
    }

    /// `{0}` together with the `(p^m - 1)`-th roots of unity, in the order
    /// `0, 1, t, t^2, ...` for the Teichmuller lift `t` of a generator of
    /// `F_{p^m}^*`.
    pub fn teichmuller_set(&self) -> Result<Vec<GrElem>> {
        let order = self.residue_field_size() - 1;
        let generator = match &self.xi {
            Some(xi) => xi.clone(),
            None => self.residue_generator()?,
        };
        let t = self.teichmuller(&generator);
        let mut out = vec![self.zero()];
        let mut acc = self.one();
        for _ in 0..order {
            out.push(acc.clone());
            acc = self.mul(&acc, &t);
        }
        Ok(out)
    }

    /// Some element whose residue generates `F_{p^m}^*`.
    fn residue_generator(&self) -> Result<GrElem> {
        let p = self.params.p();
        let order = self.residue_field_size() - 1;
        let field_mod = self.modulus.residue();
        let field = field_mod.ring();
        let primes = arith::prime_factors(order);
        for code in 1..=order {
            let digits = digits_of(code, p, self.m);
            let g = ZqPoly::new(field, digits.clone());
            let generates = primes.iter().all(|&r| {
                !g.powmod(order / r, &field_mod)
                    .expect("monic modulus")
                    .is_one()
            });
            if generates {
                return Ok(self.from_residue_digits(&digits));
            }
        }
        Err(Error::NoPrimitive { p, m: self.m })
    }

    // ---- ideals ----

    /// The ideal census: `3s + (s-1)(p^m - 1)` descriptors, families in the
    /// order `(p^i)`, `(p^k u)`, `(p^j + alpha u)`, `(p^j, u)`, indices
    /// ascending and `alpha` by its base-`p` code (highest coordinate most
    /// significant).
    pub fn ideals(&self) -> Vec<GrIdealDescriptor> {
        let s = self.params.s();
        let mut out: Vec<GrIdealDescriptor> = (0..=s).map(IdealFamily::PPower).collect();
        out.extend((0..s).map(IdealFamily::UPPower));
        let pm = self.residue_field_size();
        for j in 1..s {
            for code in 1..pm {
                out.push(IdealFamily::Mixed(j, digits_of(code, self.params.p(), self.m)));
            }
        }
        out.extend((1..s).map(IdealFamily::TwoGen));
        out
    }

    /// Number of ideals, `3s + (s-1)(p^m - 1)`.
    pub fn ideal_count(&self) -> u64 {
        let s = self.params.s() as u64;
        3 * s + (s - 1) * (self.residue_field_size() - 1)
    }

    pub fn ideal_generators(&self, desc: &GrIdealDescriptor) -> Vec<GrElem> {
        let r = self.params;
        match desc {
            IdealFamily::PPower(i) => vec![self.from_ring(r.elem(r.p_pow(*i), 0))],
            IdealFamily::UPPower(k) => vec![self.from_ring(r.elem(0, r.p_pow(*k)))],
            IdealFamily::Mixed(j, alpha) => {
                let ua = self.scale(RingElem::U, &self.from_residue_digits(alpha));
                vec![self.add(&self.from_ring(r.elem(r.p_pow(*j), 0)), &ua)]
            }
            IdealFamily::TwoGen(j) => vec![
                self.from_ring(r.elem(r.p_pow(*j), 0)),
                self.from_ring(RingElem::U),
            ],
        }
    }

    /// The maximal ideal `(p, u)` (just `(u)` when `s = 1`).
    pub fn maximal_ideal(&self) -> GrIdealDescriptor {
        if self.params.s() == 1 {
            IdealFamily::UPPower(0)
        } else {
            IdealFamily::TwoGen(1)
        }
    }

    /// `Z_q`-coordinates of `x` in `Z_q^{2m}`: a-parts, then b-parts.
    pub fn to_zq_vector(&self, x: &GrElem) -> Vec<u64> {
        x.coords
            .iter()
            .map(|c| c.a)
            .chain(x.coords.iter().map(|c| c.b))
            .collect()
    }

    pub fn from_zq_vector(&self, v: &[u64]) -> GrElem {
        assert_eq!(v.len(), 2 * self.m);
        GrElem {
            coords: (0..self.m)
                .map(|i| self.params.elem(v[i], v[self.m + i]))
                .collect(),
        }
    }

    /// The ideal generated by `gens`, as a submodule of `Z_q^{2m}`.
    pub fn ideal_module(&self, gens: &[GrElem]) -> Submodule {
        let mut vectors = Vec::new();
        for g in gens {
            let mut h = g.clone();
            for _ in 0..self.m {
                vectors.push(self.to_zq_vector(&h));
                vectors.push(self.to_zq_vector(&self.scale(RingElem::U, &h)));
                h = self.mul(&h, &self.alpha());
            }
        }
        Submodule::span(self.params, 2 * self.m, vectors)
    }

    pub fn descriptor_module(&self, desc: &GrIdealDescriptor) -> Submodule {
        self.ideal_module(&self.ideal_generators(desc))
    }

    /// Every element, for contexts within the census guard.
    pub fn elements_with(&self, guards: &Guards) -> Result<impl Iterator<Item = GrElem> + '_> {
        let size = self.size().filter(|&n| n <= guards.max_gr_size).ok_or(
            Error::GuardExceeded {
                what: "|GR(R, m)|",
                value: self.size().unwrap_or(u64::MAX),
                limit: guards.max_gr_size,
            },
        )?;
        let q = self.params.q();
        Ok((0..size).map(move |mut idx| {
            let v: Vec<u64> = (0..2 * self.m)
                .map(|_| {
                    let d = idx % q;
                    idx /= q;
                    d
                })
                .collect();
            self.from_zq_vector(&v)
        }))
    }

    // ---- evaluation ----

    /// `g(e)` by Horner's rule.
    pub fn eval_at(&self, g: &RPoly, e: &GrElem) -> GrElem {
        g.coeffs().iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, e), &self.from_ring(c))
        })
    }

    /// Text form in the variable `α`.
    pub fn format(&self, x: &GrElem) -> String {
        format_r_in(&x.to_rpoly(self.params), "α")
    }
}

impl fmt::Display for GaloisRingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GR(Z_{}+uZ_{}, {}) mod {}",
            self.params.q(),
            self.params.q(),
            self.m,
            crate::poly::text::format_r(&self.modulus)
        )
    }
}

/// Little-endian base-`p` digits of `code`, `len` of them.
fn digits_of(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

/// The context on the lift of the smallest primitive polynomial of degree
/// `m = ord_n(p)`, and `zeta = xi^{(p^m - 1)/n}`, a primitive `n`-th root of
/// unity.
pub fn nth_root_of_unity(n: usize, params: RingParams) -> Result<(GaloisRingCtx, GrElem)> {
    crate::poly::factor::check_length(n, params)?;
    let m = arith::mult_order(params.p(), n as u64) as usize;
    let prim = fp::primitive_poly(params.residue_field(), m)?;
    let f = hensel_lift(&prim, params)?;
    let ctx = GaloisRingCtx::new(&RPoly::from_zq(&f))?;
    let xi = ctx.xi().expect("modulus is basic primitive").clone();
    let zeta = ctx.pow(&xi, (ctx.residue_field_size() - 1) / n as u64);
    Ok((ctx, zeta))
}
