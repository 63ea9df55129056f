//! Exact algebra: rationals, dense polynomials in `s`, rational functions and
//! determinants of small square matrices over either ring.

mod matrix;
mod polynomial;
mod ratfunc;
mod rational;

pub use matrix::{ExactRing, Matrix, PolyMatrix, RationalMatrix};
pub use polynomial::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::{int, is_normalized, parse_rational, rat, Rational};
