//! Univariate polynomials over `F_p`, `Z_q` and `R`.

pub mod factor;
pub mod fp;
pub mod hensel;
mod rpoly;
pub mod text;
mod zq;

pub use factor::{factor_xn_minus_1, is_basic_irreducible, is_basic_primitive, Factorization};
pub use hensel::{coprime_with_witness, hensel_lift};
pub use rpoly::RPoly;
pub use zq::ZqPoly;
