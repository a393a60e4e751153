//! Serializable reports: factor listings, code descriptors, analyses and
//! distance results.
//!
//! Polynomials appear in two forms: the text grammar of
//! [`crate::poly::text`], and JSON arrays of `[a, b]` coefficient pairs
//! indexed by degree.

use serde::{Deserialize, Serialize};

use crate::code::{Cardinality, ClosureMode, CyclicCode};
use crate::error::Result;
use crate::metrics::DistanceReport;
use crate::poly::text::{format_r, format_zq};
use crate::poly::{is_basic_primitive, Factorization, RPoly, ZqPoly};
use crate::ring::{IdealFamily, RingParams};

pub type PolyJson = Vec<[u64; 2]>;

pub fn poly_json(f: &RPoly) -> PolyJson {
    f.coeffs().iter().map(|c| [c.a, c.b]).collect()
}

pub fn zq_json(f: &ZqPoly) -> PolyJson {
    f.coeffs().iter().map(|&c| [c, 0]).collect()
}

pub fn poly_from_json(ring: RingParams, coeffs: &[[u64; 2]]) -> RPoly {
    RPoly::new(ring, coeffs.iter().map(|&[a, b]| ring.elem(a, b)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub poly: String,
    pub coeffs: PolyJson,
    pub degree: usize,
    pub basic_primitive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorListing {
    pub n: usize,
    pub p: u64,
    pub s: u32,
    pub factors: Vec<FactorEntry>,
}

impl FactorListing {
    pub fn new(f: &Factorization) -> Self {
        let ring = f.ring();
        FactorListing {
            n: f.n(),
            p: ring.p(),
            s: ring.s(),
            factors: f
                .factors()
                .iter()
                .map(|g| FactorEntry {
                    poly: format_r(g),
                    coeffs: poly_json(g),
                    degree: g.degree().unwrap_or(0),
                    basic_primitive: is_basic_primitive(g),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalJson {
    pub f0: PolyJson,
    pub f1: PolyJson,
    pub g1: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub l: usize,
    pub family: String,
    pub i_or_j_or_k: u32,
    /// Residue-field coordinates of `alpha` (mixed family only).
    pub alpha: Option<Vec<u64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchJson {
    pub b: usize,
    pub delta: usize,
}

/// The machine-readable description of one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub n: usize,
    pub p: u64,
    pub s: u32,
    pub closure_mode: ClosureMode,
    pub generators: Vec<PolyJson>,
    pub canonical: Option<CanonicalJson>,
    pub components: Option<Vec<ComponentJson>>,
    pub cardinality: Cardinality,
    pub free: bool,
    pub bch: Option<BchJson>,
}

impl CodeDescriptor {
    pub fn new(code: &CyclicCode) -> Result<Self> {
        let ring = code.ring();
        let canonical = match code.mode() {
            ClosureMode::Ideal => {
                let c = code.canonical_form()?;
                Some(CanonicalJson {
                    f0: zq_json(&c.f0),
                    f1: zq_json(&c.f1),
                    g1: zq_json(&c.g1),
                })
            }
            ClosureMode::ModuleSpan => None,
        };
        let components = match code.mode() {
            ClosureMode::Ideal => code.components().ok().map(|list| {
                list.into_iter()
                    .map(|c| ComponentJson {
                        l: c.l,
                        family: c.descriptor.family_name().to_string(),
                        i_or_j_or_k: c.descriptor.index(),
                        alpha: match c.descriptor {
                            IdealFamily::Mixed(_, alpha) => Some(alpha),
                            _ => None,
                        },
                    })
                    .collect()
            }),
            ClosureMode::ModuleSpan => None,
        };
        let free = code.is_free();
        let bch = match &free {
            Some(_) => {
                let cert = code.bch_bound()?;
                Some(BchJson {
                    b: cert.b,
                    delta: cert.delta,
                })
            }
            None => None,
        };
        Ok(CodeDescriptor {
            n: code.n(),
            p: ring.p(),
            s: ring.s(),
            closure_mode: code.mode(),
            generators: code.generators().iter().map(poly_json).collect(),
            canonical,
            components,
            cardinality: code.cardinality(),
            free: free.is_some(),
            bch,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalText {
    pub f0: String,
    pub f1: String,
    pub g1: String,
    pub k0: usize,
    pub k1: usize,
    pub f0_monic: bool,
    pub g1_monic: bool,
    pub g1_divides_f0: bool,
    pub formula_applies: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchDetail {
    pub b: usize,
    pub delta: usize,
    pub roots: Vec<usize>,
    pub extension_degree: usize,
    pub modulus: String,
}

/// Everything `analyze` reports about a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub code: CodeDescriptor,
    pub generators_text: Vec<String>,
    pub canonical_text: Option<CanonicalText>,
    pub free_generator: Option<String>,
    pub bch_certificate: Option<BchDetail>,
    pub minimum_generating_set: Option<Vec<String>>,
    /// Cardinality of the ideal generated by the same generators, reported
    /// for module spans.
    pub ideal_closure_cardinality: Option<Cardinality>,
    pub warnings: Vec<String>,
}

impl Analysis {
    pub fn new(code: &CyclicCode) -> Result<Self> {
        let descriptor = CodeDescriptor::new(code)?;
        let mut warnings = Vec::new();
        let n = code.n();
        let ring = code.ring();

        let mut canonical_text = None;
        let mut minimum_generating_set = None;
        if code.mode() == ClosureMode::Ideal {
            let c = code.canonical_form()?;
            canonical_text = Some(CanonicalText {
                f0: format_zq(&c.f0),
                f1: format_zq(&c.f1),
                g1: format_zq(&c.g1),
                k0: c.k0,
                k1: c.k1,
                f0_monic: c.f0_monic,
                g1_monic: c.g1_monic,
                g1_divides_f0: c.g1_divides_f0,
                formula_applies: c.formula_applies(),
            });
            if c.formula_applies() {
                minimum_generating_set =
                    Some(code.minimum_generating_set()?.iter().map(format_r).collect());
                let formula = c.formula_exponent(n, ring);
                if formula != Some(descriptor.cardinality.exponent) {
                    warnings.push(format!(
                        "cardinality formula gives p^{formula:?}, enumeration gives p^{}",
                        descriptor.cardinality.exponent
                    ));
                }
            } else {
                warnings.push(
                    "f0 and g1 are not both monic divisors of x^n-1: no minimum generating set or cardinality formula"
                        .into(),
                );
            }
            if descriptor.components.is_none() {
                warnings.push("a component ideal lies outside the (i)-(iv) census".into());
            }
        }

        let ideal_closure_cardinality = match code.mode() {
            ClosureMode::ModuleSpan => {
                let ideal = code.with_mode(ClosureMode::Ideal).cardinality();
                if ideal != descriptor.cardinality {
                    warnings.push(format!(
                        "closure discrepancy: module span has {} elements, ideal closure has {}",
                        descriptor.cardinality, ideal
                    ));
                }
                Some(ideal)
            }
            ClosureMode::Ideal => None,
        };

        let free = code.is_free();
        let bch_certificate = match &free {
            Some(_) => {
                let cert = code.bch_bound()?;
                Some(BchDetail {
                    b: cert.b,
                    delta: cert.delta,
                    roots: cert.roots,
                    extension_degree: cert.m,
                    modulus: format_zq(&cert.modulus),
                })
            }
            None => None,
        };

        Ok(Analysis {
            generators_text: code.generators().iter().map(format_r).collect(),
            canonical_text,
            free_generator: free.as_ref().map(format_r),
            bch_certificate,
            minimum_generating_set,
            ideal_closure_cardinality,
            warnings,
            code: descriptor,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceJson {
    pub metric: String,
    pub value: u64,
    pub witness: String,
    pub witness_coeffs: PolyJson,
    pub exhaustive: bool,
    pub words_scanned: u64,
}

impl DistanceJson {
    pub fn new(report: &DistanceReport, ring: RingParams) -> Self {
        let w = report.witness_poly(ring);
        DistanceJson {
            metric: report.metric.name().to_string(),
            value: report.value,
            witness: format_r(&w),
            witness_coeffs: report
                .witness
                .iter()
                .map(|c| [c.a, c.b])
                .collect(),
            exhaustive: report.exhaustive,
            words_scanned: report.words_scanned,
        }
    }
}
