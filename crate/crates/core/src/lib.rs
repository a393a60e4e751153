//! Exact algebra for cyclic codes over `R = Z_q + uZ_q`, `q = p^s`, `u^2 = 0`.
//!
//! The crate factors `x^n - 1` over `R` by Hensel lifting, splits
//! `R[x]/(x^n - 1)` into Galois-ring components with CRT idempotents,
//! enumerates and analyzes cyclic codes (canonical generators, cardinality,
//! freeness, BCH-type bounds), and computes exact Hamming, Lee and Gray-image
//! minimum distances for desk-scale codes.

pub mod arith;
pub mod code;
pub mod error;
pub mod galois;
pub mod metrics;
pub mod poly;
pub mod report;
pub mod ring;
pub mod span;
pub mod verify;

pub use code::{ClosureMode, CodeSpace, CyclicCode};
pub use error::{Error, Result};
pub use galois::{GaloisRingCtx, GrElem};
pub use metrics::{DistanceReport, Metric, SearchOptions};
pub use poly::{RPoly, ZqPoly};
pub use ring::{RingElem, RingParams};
