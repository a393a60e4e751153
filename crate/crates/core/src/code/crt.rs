//! The CRT splitting `R[x]/(x^n - 1) = R[x]/(f_1) + ... + R[x]/(f_t)`.

use crate::error::Result;
use crate::poly::{coprime_with_witness, factor_xn_minus_1, Factorization, RPoly};
use crate::ring::RingParams;

/// Factorization of `x^n - 1` with cofactors `f^_l = (x^n - 1)/f_l`, Bezout
/// pairs `a_l f_l + b_l f^_l = 1` and idempotents `e_l = b_l f^_l mod (x^n - 1)`.
#[derive(Clone, Debug)]
pub struct CrtSystem {
    factorization: Factorization,
    cofactors: Vec<RPoly>,
    bezout: Vec<(RPoly, RPoly)>,
    idempotents: Vec<RPoly>,
}

impl CrtSystem {
    pub fn new(n: usize, ring: RingParams) -> Result<Self> {
        let factorization = factor_xn_minus_1(n, ring)?;
        let xn1 = RPoly::x_n_minus_1(ring, n);
        let mut cofactors = Vec::new();
        let mut bezout = Vec::new();
        let mut idempotents = Vec::new();
        for f in factorization.factors() {
            let (cofactor, rem) = xn1.divmod_monic(&f)?;
            debug_assert!(rem.is_zero());
            let (a, b) = coprime_with_witness(&f, &cofactor)
                .expect("factors of x^n - 1 are pairwise coprime when gcd(n, p) = 1");
            idempotents.push(b.mul_cyclic(&cofactor, n));
            cofactors.push(cofactor);
            bezout.push((a, b));
        }
        Ok(CrtSystem {
            factorization,
            cofactors,
            bezout,
            idempotents,
        })
    }

    pub fn n(&self) -> usize {
        self.factorization.n()
    }

    pub fn ring(&self) -> RingParams {
        self.factorization.ring()
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn len(&self) -> usize {
        self.cofactors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cofactors.is_empty()
    }

    pub fn factor(&self, l: usize) -> RPoly {
        RPoly::from_zq(&self.factorization.zq_factors()[l])
    }

    pub fn cofactor(&self, l: usize) -> &RPoly {
        &self.cofactors[l]
    }

    /// `(a_l, b_l)` with `a_l f_l + b_l f^_l = 1`.
    pub fn bezout(&self, l: usize) -> &(RPoly, RPoly) {
        &self.bezout[l]
    }

    pub fn idempotent(&self, l: usize) -> &RPoly {
        &self.idempotents[l]
    }

    pub fn idempotents(&self) -> &[RPoly] {
        &self.idempotents
    }
}
