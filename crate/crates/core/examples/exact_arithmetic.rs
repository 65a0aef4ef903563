//! Exact rationals and Hilbert-style binomial polynomials.

use prymcalc::exact::{binomial_polynomial, rational_arith, ArithOp, ExactRational};

fn main() -> prymcalc::Result<()> {
    let beta: ExactRational = "667/680394".parse()?;
    let gamma: ExactRational = "4/113399".parse()?;
    let pair = rational_arith(&(&beta * ExactRational::from(924)), &(&gamma * ExactRational::from(31020)), ArithOp::Add)?;
    println!("924β + 31020γ = {pair}");
    println!("1/0 -> {:?}", rational_arith(&ExactRational::one(), &ExactRational::zero(), ArithOp::Div));
    let p = binomial_polynomial(5, 5)?;
    println!("binom(t+5, 5) = {p}; at t=2: {}", p.eval_int(2));
    Ok(())
}
