//! The bigness certificate in genus 15, then a tampered copy rejected.

use prymcalc::certificate::{d15_2_class, verify_certificate, verify_general_type};
use prymcalc::porteous::virtual_divisor_class;
use prymcalc::ExactRational;

fn main() -> prymcalc::Result<()> {
    let d2 = virtual_divisor_class()?.numeric_part;
    let cert = verify_general_type(15, &d15_2_class(), &d2)?;
    println!("β = {}, γ = {}", cert.beta, cert.gamma);
    println!("ε = {} (13 - ε = {}), big: {}", cert.epsilon, cert.residual_lambda, cert.verdict);
    println!("{}", serde_json::to_string_pretty(&cert)?);

    let mut forged = cert.clone();
    forged.gamma = ExactRational::frac(1, 31020);
    let outcome = verify_certificate(&forged);
    println!("forged accepted: {}", outcome.accepted());
    for p in outcome.problems {
        println!("  {p}");
    }
    Ok(())
}
