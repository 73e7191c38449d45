//! Exact arithmetic: rationals, polynomials and rational functions in the
//! spectral parameter, dual numbers and formal radical monomials.

mod dual;
mod gmp;
mod field;
mod matrix;
mod poly;
mod radical;
mod rat;
mod ratfun;

pub use dual::{dual_jacobian, rank, DualRat};
pub use field::Field;
pub use gmp::GmpRat;
pub use matrix::Mat2;
pub use poly::Poly;
pub use radical::RadicalMonomial;
pub use rat::{fmt_rat, int, parse_rat, rat, serde_rat, serde_rat_vec, Rat};
pub use ratfun::{clear_known_denominator, ratfun_reduce, RatFun};
