//! Cyclic codes of length `n` over `R`, as ideals of `R[x]/(x^n - 1)` or as
//! shift-closed `Z_q`-spans of given generators.
//!
//! Every code is stored by its generators and, lazily, by the Howell form of
//! its underlying `Z_q`-module in `Z_q^{2n}`: the `n` a-coordinates followed
//! by the `n` u-coordinates. That form is the code's exact fingerprint, and
//! it drives membership, cardinality and distance enumeration.
//!
//! In ideal mode the code also splits over the CRT components
//! `R[x]/(f_l) = GR(R, deg f_l)`, where it is described by one ideal per
//! component.

mod analysis;
mod crt;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{GaloisRingCtx, GrIdealDescriptor};
use crate::poly::text::parse_r;
use crate::poly::RPoly;
use crate::ring::{RingElem, RingParams};
use crate::span::Submodule;

pub use analysis::{BchCertificate, CanonicalGenerators, Cardinality};
pub use crt::CrtSystem;

/// How the generators of a code are closed up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureMode {
    /// The ideal of `R[x]/(x^n - 1)` generated by the generators.
    Ideal,
    /// The `Z_q`-span of all cyclic shifts (no closure under `u`).
    ModuleSpan,
}

impl fmt::Display for ClosureMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureMode::Ideal => "ideal",
            ClosureMode::ModuleSpan => "module-span",
        })
    }
}

impl FromStr for ClosureMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ideal" => Ok(ClosureMode::Ideal),
            "module" | "module-span" => Ok(ClosureMode::ModuleSpan),
            other => Err(Error::Parse(format!("unknown closure mode {other:?}"))),
        }
    }
}

/// The ideal of a code in CRT component `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentIdeal {
    pub l: usize,
    pub descriptor: GrIdealDescriptor,
}

struct ComponentCensus {
    ideals: Vec<(GrIdealDescriptor, Submodule)>,
    index: HashMap<Submodule, usize>,
}

/// Everything shared by the codes of one length over one ring: the CRT
/// system, a Galois-ring context per factor, and the per-factor ideal census.
pub struct CodeSpace {
    n: usize,
    ring: RingParams,
    crt: CrtSystem,
    contexts: Vec<GaloisRingCtx>,
    census: OnceLock<Vec<ComponentCensus>>,
}

impl fmt::Debug for CodeSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CodeSpace")
            .field("n", &self.n)
            .field("ring", &self.ring)
            .field("factors", &self.crt.factorization().degrees())
            .finish()
    }
}

impl CodeSpace {
    pub fn new(n: usize, ring: RingParams) -> Result<Arc<Self>> {
        let crt = CrtSystem::new(n, ring)?;
        let contexts = (0..crt.len())
            .map(|l| GaloisRingCtx::new(&crt.factor(l)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(CodeSpace {
            n,
            ring,
            crt,
            contexts,
            census: OnceLock::new(),
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn crt(&self) -> &CrtSystem {
        &self.crt
    }

    pub fn context(&self, l: usize) -> &GaloisRingCtx {
        &self.contexts[l]
    }

    pub fn factor_count(&self) -> usize {
        self.contexts.len()
    }

    /// `prod_l (3s + (s-1)(p^{e_l} - 1))`, or `None` on overflow.
    pub fn count_codes(&self) -> Option<u128> {
        let s = self.ring.s() as u128;
        let p = self.ring.p() as u128;
        self.contexts.iter().try_fold(1u128, |acc, ctx| {
            let pe = p.checked_pow(ctx.degree() as u32)?;
            acc.checked_mul(3 * s + (s - 1) * (pe - 1))
        })
    }

    fn census(&self) -> &[ComponentCensus] {
        self.census.get_or_init(|| {
            self.contexts
                .iter()
                .map(|ctx| {
                    let ideals: Vec<(GrIdealDescriptor, Submodule)> = ctx
                        .ideals()
                        .into_iter()
                        .map(|d| {
                            let m = ctx.descriptor_module(&d);
                            (d, m)
                        })
                        .collect();
                    let index = ideals
                        .iter()
                        .enumerate()
                        .map(|(i, (_, m))| (m.clone(), i))
                        .collect();
                    ComponentCensus { ideals, index }
                })
                .collect()
        })
    }

    /// The ideal census of component `l`, in enumeration order.
    pub fn component_ideals(&self, l: usize) -> Vec<GrIdealDescriptor> {
        self.census()[l].ideals.iter().map(|(d, _)| d.clone()).collect()
    }

    pub fn code(self: &Arc<Self>, generators: Vec<RPoly>, mode: ClosureMode) -> CyclicCode {
        let generators = generators
            .into_iter()
            .map(|g| {
                assert_eq!(g.ring(), self.ring, "generator over a different ring");
                g.fold_cyclic(self.n)
            })
            .collect();
        CyclicCode {
            space: Arc::clone(self),
            generators,
            mode,
            module: OnceLock::new(),
            components: OnceLock::new(),
        }
    }

    /// A code from generator strings in the polynomial text grammar.
    pub fn parse_code<S: AsRef<str>>(self: &Arc<Self>, generators: &[S], mode: ClosureMode) -> Result<CyclicCode> {
        let gens = generators
            .iter()
            .map(|g| parse_r(g.as_ref(), self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.code(gens, mode))
    }

    /// The code whose component `l` is `descriptors[l]`, generated by
    /// `gamma * f^_l` for the generators `gamma` of each component ideal.
    pub fn code_from_components(self: &Arc<Self>, descriptors: &[GrIdealDescriptor]) -> Result<CyclicCode> {
        if descriptors.len() != self.factor_count() {
            return Err(Error::Hypothesis(format!(
                "expected {} component ideals, got {}",
                self.factor_count(),
                descriptors.len()
            )));
        }
        let mut gens = Vec::new();
        for (l, desc) in descriptors.iter().enumerate() {
            let ctx = &self.contexts[l];
            for gamma in ctx.ideal_generators(desc) {
                if gamma.is_zero() {
                    continue;
                }
                let g = gamma
                    .to_rpoly(self.ring)
                    .mul_cyclic(self.crt.cofactor(l), self.n);
                gens.push(g);
            }
        }
        Ok(self.code(gens, ClosureMode::Ideal))
    }

    /// All cyclic codes, one per tuple of component ideals, the first
    /// factor varying slowest.
    pub fn enumerate(self: &Arc<Self>, budget: u64) -> Result<impl Iterator<Item = CyclicCode>> {
        let count = self.count_codes().unwrap_or(u128::MAX);
        if count > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: u64::try_from(count).unwrap_or(u64::MAX),
                budget,
            });
        }
        let radices: Vec<usize> = self.census().iter().map(|c| c.ideals.len()).collect();
        let space = Arc::clone(self);
        Ok((0..count as u64).map(move |mut idx| {
            let mut digits = vec![0usize; radices.len()];
            for l in (0..radices.len()).rev() {
                digits[l] = (idx % radices[l] as u64) as usize;
                idx /= radices[l] as u64;
            }
            let descs: Vec<GrIdealDescriptor> = digits
                .iter()
                .enumerate()
                .map(|(l, &d)| space.census()[l].ideals[d].0.clone())
                .collect();
            space
                .code_from_components(&descs)
                .expect("one descriptor per factor")
        }))
    }

    /// Coordinates of a polynomial (reduced mod `x^n - 1`) in `Z_q^{2n}`.
    pub fn to_vector(&self, w: &RPoly) -> Vec<u64> {
        let word = w.to_word(self.n);
        word.iter()
            .map(|c| c.a)
            .chain(word.iter().map(|c| c.b))
            .collect()
    }

    pub fn from_vector(&self, v: &[u64]) -> RPoly {
        RPoly::from_word(self.ring, &vector_to_word(self.ring, v))
    }
}

/// `Z_q^{2n}` coordinates (a-parts, then u-parts) to a word of `R^n`.
pub fn vector_to_word(ring: RingParams, v: &[u64]) -> Vec<RingElem> {
    let n = v.len() / 2;
    (0..n).map(|i| ring.elem(v[i], v[n + i])).collect()
}

pub fn count_cyclic_codes(n: usize, ring: RingParams) -> Result<u128> {
    CodeSpace::new(n, ring)?
        .count_codes()
        .ok_or(Error::Overflow { p: ring.p(), s: ring.s() })
}

pub fn enumerate_cyclic_codes(n: usize, ring: RingParams, budget: u64) -> Result<Vec<CyclicCode>> {
    Ok(CodeSpace::new(n, ring)?.enumerate(budget)?.collect())
}

/// Component data: the ideal as a `Z_q`-module and the exponents of its
/// projection `(p^i)` and kernel `(p^k)`.
#[derive(Clone, Debug)]
struct Component {
    module: Submodule,
    i: u32,
    k: u32,
}

#[derive(Clone)]
pub struct CyclicCode {
    space: Arc<CodeSpace>,
    generators: Vec<RPoly>,
    mode: ClosureMode,
    module: OnceLock<Submodule>,
    components: OnceLock<Vec<Component>>,
}

impl fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CyclicCode")
            .field("n", &self.space.n)
            .field("ring", &self.space.ring)
            .field("mode", &self.mode)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Codes are equal when they have the same element set.
impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.ring() == other.ring() && self.module() == other.module()
    }
}

impl Eq for CyclicCode {}

impl CyclicCode {
    pub fn n(&self) -> usize {
        self.space.n
    }

    pub fn ring(&self) -> RingParams {
        self.space.ring
    }

    pub fn space(&self) -> &Arc<CodeSpace> {
        &self.space
    }

    pub fn generators(&self) -> &[RPoly] {
        &self.generators
    }

    pub fn mode(&self) -> ClosureMode {
        self.mode
    }

    /// The same generators under another closure.
    pub fn with_mode(&self, mode: ClosureMode) -> CyclicCode {
        self.space.code(self.generators.clone(), mode)
    }

    /// The code as a `Z_q`-submodule of `Z_q^{2n}` in Howell form.
    pub fn module(&self) -> &Submodule {
        self.module.get_or_init(|| {
            let n = self.n();
            let mut vectors = Vec::new();
            for g in &self.generators {
                let mut h = g.clone();
                for _ in 0..n {
                    vectors.push(self.space.to_vector(&h));
                    if self.mode == ClosureMode::Ideal {
                        vectors.push(self.space.to_vector(&h.scale(RingElem::U)));
                    }
                    h = h.shift(1).fold_cyclic(n);
                }
            }
            Submodule::span(self.ring(), 2 * n, vectors)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.module().is_zero()
    }

    pub fn contains(&self, word: &RPoly) -> bool {
        self.module().contains(&self.space.to_vector(word))
    }

    fn component_data(&self) -> Result<&[Component]> {
        if self.mode != ClosureMode::Ideal {
            return Err(Error::ModuleSpanMode);
        }
        Ok(self.components.get_or_init(|| {
            let s = self.ring().s();
            self.space
                .contexts
                .iter()
                .map(|ctx| {
                    let proj: Vec<_> = self.generators.iter().map(|g| ctx.from_rpoly(g)).collect();
                    let module = ctx.ideal_module(&proj);
                    let e = ctx.degree();
                    let a_log = module.log_size_pivots_in(0..e) as usize;
                    let b_log = module.log_size_pivots_in(e..2 * e) as usize;
                    debug_assert!(a_log.is_multiple_of(e) && b_log.is_multiple_of(e));
                    Component {
                        module,
                        i: s - (a_log / e) as u32,
                        k: s - (b_log / e) as u32,
                    }
                })
                .collect()
        }))
    }

    /// Per component `l`, the exponents `(i_l, k_l)` with projection
    /// `psi(C_l) = (p^{i_l})` and kernel `{h : uh in C_l} = (p^{k_l})`.
    pub fn component_exponents(&self) -> Result<Vec<(u32, u32)>> {
        Ok(self.component_data()?.iter().map(|c| (c.i, c.k)).collect())
    }

    /// The component ideals, identified in the per-factor census.
    pub fn components(&self) -> Result<Vec<ComponentIdeal>> {
        let data = self.component_data()?;
        let census = self.space.census();
        data.iter()
            .enumerate()
            .map(|(l, c)| {
                let idx = census[l]
                    .index
                    .get(&c.module)
                    .ok_or(Error::IdealNotInCensus { l })?;
                Ok(ComponentIdeal {
                    l,
                    descriptor: census[l].ideals[*idx].0.clone(),
                })
            })
            .collect()
    }

    /// `log_p` of the code size summed over components (ideal mode).
    pub fn component_log_size(&self) -> Result<u64> {
        Ok(self.component_data()?.iter().map(|c| c.module.log_size()).sum())
    }
}
