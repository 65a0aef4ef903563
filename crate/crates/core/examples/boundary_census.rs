//! Prym structures over a one-nodal curve, and the π pullback/pushforward.

use prymcalc::picard::{boundary_fiber_census, degree_of_pi, pullback_pi, pushforward_pi, ModuliDivisorClass};

fn main() -> prymcalc::Result<()> {
    for g in [2, 3, 15] {
        let c = boundary_fiber_census(g)?;
        println!(
            "g={g}: δ0' {} δ0'' {} δ0ram {}; distinct {}, sheets {}, deg π {}",
            c.count_d0p,
            c.count_d0pp,
            c.count_d0ram,
            c.distinct_total(),
            c.sheet_total(),
            degree_of_pi(g)
        );
    }
    let delta0 = ModuliDivisorClass::delta_class(15, 0)?;
    let up = pullback_pi(&delta0);
    println!("π*(δ0) = {up}");
    println!("π_*(π*(δ0)) = {}*δ0", pushforward_pi(&up)?.delta(0));
    Ok(())
}
