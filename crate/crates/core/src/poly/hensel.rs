//! Coprimality over `R` with explicit Bezout witnesses, and Hensel lifting
//! of factors of `x^N - 1` from `F_p` to `Z_q`.

use crate::error::{Error, Result};
use crate::poly::{fp, RPoly, ZqPoly};
use crate::ring::RingParams;

/// Witnesses `(a, b)` with `a*f + b*g = 1` exactly over `R`, present iff the
/// residues of `f` and `g` are coprime over `F_p`.
///
/// Starting from Euclid over `F_p`, the lifted combination is
/// `a f + b g = 1 + p r + u t`; multiplying by
/// `kappa = lambda * tau`, `lambda = sum_{i<s} (-p r)^i`, `tau = 1 - u t lambda`
/// restores an exact identity.
pub fn coprime_with_witness(f: &RPoly, g: &RPoly) -> Option<(RPoly, RPoly)> {
    let ring = f.ring();
    let (gcd, s_bar, t_bar) = fp::xgcd(&f.residue(), &g.residue());
    if !gcd.is_one() {
        return None;
    }
    let a = RPoly::from_zq(&s_bar.with_ring(ring));
    let b = RPoly::from_zq(&t_bar.with_ring(ring));
    let combo = &(&a * f) + &(&b * g);
    // combo - 1 = p r(x) + u t(x)
    let excess = &combo - &RPoly::one(ring);
    let p_r = RPoly::from_zq(&excess.zq_part());
    let u_t = RPoly::from_u_part(&excess.u_part());

    let minus_pr = -&p_r;
    let mut lambda = RPoly::one(ring);
    let mut power = RPoly::one(ring);
    for _ in 1..ring.s() {
        power = &power * &minus_pr;
        lambda = &lambda + &power;
    }
    let tau = &RPoly::one(ring) - &(&u_t * &lambda);
    let kappa = &lambda * &tau;

    let mut a = &kappa * &a;
    let mut b = &kappa * &b;
    // Keep witnesses small: a = q g + r  =>  r f + (b + q f) g = 1.
    if g.is_monic() {
        let (qt, rem) = a.divmod_monic(g).expect("monic");
        a = rem;
        b = &b + &(&qt * f);
    }
    debug_assert!((&(&a * f) + &(&b * g)).is_one());
    Some((a, b))
}

/// Lifts a coprime monic factorization `target = g * h (mod p)` to `Z_q` by
/// quadratic Hensel steps. Returns the lift of `g`.
pub fn lift_factor(target: &ZqPoly, gbar: &ZqPoly) -> Result<ZqPoly> {
    let ring = target.ring();
    let field = ring.residue_field();
    let gbar = fp::make_monic(gbar);
    let (hbar, rem) = target.residue().divmod(&gbar)?;
    if !rem.is_zero() {
        return Err(Error::Hypothesis(
            "factor does not divide the target modulo p".into(),
        ));
    }
    let (gcd, s_bar, t_bar) = fp::xgcd(&gbar, &hbar);
    if !gcd.is_one() {
        return Err(Error::Hypothesis("repeated factor modulo p".into()));
    }
    debug_assert_eq!(field, gbar.ring());

    let mut g = gbar.with_ring(ring);
    let mut h = hbar.with_ring(ring);
    let mut s = s_bar.with_ring(ring);
    let mut t = t_bar.with_ring(ring);
    let mut k = 1u32;
    while k < ring.s() {
        k = (2 * k).min(ring.s());
        let modk = RingParams::new(ring.p(), k).expect("sub-ring of a valid ring");
        let f = target.with_ring(modk);
        let (g0, h0, s0, t0) = (g.with_ring(modk), h.with_ring(modk), s.with_ring(modk), t.with_ring(modk));

        let e = &f - &(&g0 * &h0);
        let (qt, r) = (&s0 * &e).divmod(&h0)?;
        let g1 = &(&g0 + &(&t0 * &e)) + &(&qt * &g0);
        let h1 = &h0 + &r;

        let b = &(&(&s0 * &g1) + &(&t0 * &h1)) - &ZqPoly::one(modk);
        let (c, d) = (&s0 * &b).divmod(&h1)?;
        let s1 = &s0 - &d;
        let t1 = &(&t0 - &(&t0 * &b)) - &(&c * &g1);

        (g, h, s, t) = (g1.with_ring(ring), h1.with_ring(ring), s1.with_ring(ring), t1.with_ring(ring));
    }
    debug_assert!(g.is_monic());
    Ok(g)
}

/// The unique monic lift to `Z_q` of an irreducible `gbar` over `F_p` that
/// divides `x^N - 1`, where `N` is the order of a root of `gbar`.
pub fn hensel_lift(gbar: &ZqPoly, ring: RingParams) -> Result<ZqPoly> {
    if gbar.ring() != ring.residue_field() {
        return Err(Error::MismatchedParams { q: ring.p() });
    }
    let order = fp::root_order(gbar)?;
    let target = ZqPoly::x_n_minus_1(ring, order as usize);
    lift_factor(&target, gbar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingElem;

    #[test]
    fn witness_examples() {
        let r = RingParams::new(2, 2).unwrap();
        let f = RPoly::from_zq(&ZqPoly::new(r, vec![3, 1]));
        let g = RPoly::from_zq(&ZqPoly::new(r, vec![1, 1, 1]));
        let (a, b) = coprime_with_witness(&f, &g).unwrap();
        assert!((&(&a * &f) + &(&b * &g)).is_one());
        assert!(coprime_with_witness(&f, &f).is_none());
        let (a, b) = coprime_with_witness(&RPoly::one(r), &g).unwrap();
        assert!(a.is_one() && b.is_zero());
    }

    #[test]
    fn witness_with_u_parts() {
        let r = RingParams::new(3, 2).unwrap();
        let f = RPoly::new(r, vec![r.elem(2, 4), r.elem(1, 1), RingElem::ONE]);
        let g = RPoly::new(r, vec![r.elem(1, 3), RingElem::ONE]);
        if let Some((a, b)) = coprime_with_witness(&f, &g) {
            assert!((&(&a * &f) + &(&b * &g)).is_one());
        } else {
            panic!("residues x^2+x+2 and x+1 are coprime over F_3");
        }
    }

    #[test]
    fn lift_examples() {
        let f2 = RingParams::new(2, 1).unwrap();
        let z8 = RingParams::new(2, 3).unwrap();
        let quartic = hensel_lift(&ZqPoly::new(f2, vec![1, 1, 0, 0, 1]), z8).unwrap();
        assert_eq!(quartic, ZqPoly::new(z8, vec![1, 3, 6, 4, 1]));
        let z4 = RingParams::new(2, 2).unwrap();
        let quad = hensel_lift(&ZqPoly::new(f2, vec![1, 1, 1]), z4).unwrap();
        assert_eq!(quad, ZqPoly::new(z4, vec![1, 1, 1]));
        let z9 = RingParams::new(3, 2).unwrap();
        let lin = hensel_lift(&ZqPoly::new(RingParams::new(3, 1).unwrap(), vec![2, 1]), z9).unwrap();
        assert_eq!(lin, ZqPoly::new(z9, vec![8, 1]));
    }

    #[test]
    fn lift_rejects_bad_input() {
        let f2 = RingParams::new(2, 1).unwrap();
        let z4 = RingParams::new(2, 2).unwrap();
        assert!(matches!(
            hensel_lift(&ZqPoly::new(f2, vec![1, 0, 1]), z4),
            Err(Error::Reducible { .. })
        ));
        assert_eq!(hensel_lift(&ZqPoly::new(f2, vec![0, 1]), z4), Err(Error::DivisibleByX));
    }
}
