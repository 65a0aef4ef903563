//! Brill–Noether numbers and series counts around the genus-15 case.

use prymcalc::brill_noether::{mult_map_dimension_balance, rho, series_count, serre_dual, BNParams};

fn main() -> prymcalc::Result<()> {
    for (g, r, d) in [(15, 4, 16), (15, 5, 16), (15, 4, 15), (6, 2, 6)] {
        let p = BNParams::new(g, r, d)?;
        let n = series_count(&p).map_or_else(|e| format!("({e})"), |n| n.to_string());
        println!("g={g} r={r} d={d}: rho = {}, count = {n}", rho(&p));
    }
    let dual = serre_dual(&BNParams::new(15, 4, 16)?)?;
    println!("dual of g^4_16: g^{}_{}", dual.r, dual.d);
    for twist in [2, 4] {
        let b = mult_map_dimension_balance(15, 4, 16, twist)?;
        println!("h0(L⊗η) = {twist}: {} vs {} (surplus {})", b.lhs, b.rhs, b.surplus());
    }
    Ok(())
}
