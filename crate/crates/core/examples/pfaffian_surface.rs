//! Invariants of the Pfaffian surface in P^5 from its free resolution.

use prymcalc::hilbert::{
    adjunction_curve, hilbert_polynomial_of_quotient, ideal_section_count, quotient_section_count,
    surface_invariants, GradedFreeResolution,
};

fn main() -> prymcalc::Result<()> {
    let res = GradedFreeResolution::pfaffian_14_6();
    println!("P_S(t) = {}", hilbert_polynomial_of_quotient(&res)?);
    let inv = surface_invariants(&res)?;
    println!(
        "degree {}, χ {}, p_g {:?}, q {:?}, K^2 {:?}",
        inv.degree, inv.chi_o, inv.p_g, inv.q, inv.k_squared
    );
    for t in 1..=3 {
        println!(
            "t={t}: h0(I_S(t)) = {}, h0(O_S(t)) = {}",
            ideal_section_count(&res, t)?,
            quotient_section_count(&res, t)?
        );
    }
    let c = adjunction_curve(inv.k_squared.unwrap_or(inv.degree))?;
    println!("hyperplane section: genus {}, degree {}", c.curve_genus, c.embedding_degree);
    Ok(())
}
