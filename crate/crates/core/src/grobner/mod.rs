//! Polynomial ideals over `ℚ(i)`: Gröbner bases, normal forms,
//! elimination, saturation and ideal equality.

mod binomial;
mod buchberger;
mod ideal;
mod mpoly;
mod order;
mod parse;

pub use binomial::{binomial_groebner, lattice_ideal, normal_form_monomial, Binomial, BinomialOrder};
pub use buchberger::{buchberger, buchberger_cancellable, is_groebner_basis, normal_form_poly};
pub use ideal::{eliminate, ideal_equal, saturate, IdealBasis};
pub use mpoly::{MPoly, MPolyDisplay, Monomial};
pub use order::MonomialOrder;
pub use parse::parse_mpoly;
