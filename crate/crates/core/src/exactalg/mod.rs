//! Exact arithmetic substrate: `ℚ(i)`, polynomials and rational functions in
//! `z`, and integer lattice algebra. No floating point is used anywhere.

mod gaussian;
mod lattice;
mod poly;
mod ratfunc;
mod refine;

pub use gaussian::{GaussianRational, ParseGaussianError};
pub use lattice::{hnf, in_lattice, lattice_hnf, rank, zkernel, zkernel_i64, IntMatrix};
pub use poly::Poly;
pub(crate) use poly::write_term;
pub use ratfunc::{gaussian_det, ratfunc_det, RatFunc};
pub use refine::{factor_refine, Refinement};

pub type Rational = num_rational::BigRational;

/// Monic gcd of two polynomials.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    Poly::gcd(a, b)
}
