//! Exact arithmetic substrate: reduced big rationals and univariate
//! polynomials over them. Nothing here ever rounds.

mod poly;
mod rational;

pub use poly::{binomial_polynomial, RationalPolynomial};
pub use rational::{rational_arith, ArithOp, ExactRational};
