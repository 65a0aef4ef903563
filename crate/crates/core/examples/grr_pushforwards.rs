//! First Chern classes of the pushforward bundles from the truncated
//! Grothendieck–Riemann–Roch engine.

use prymcalc::grr::{c1_pushforward_bundle, chern_character_line, todd_factor, FiberClassExpr, PushforwardBundle};
use prymcalc::ExactRational;

fn main() -> prymcalc::Result<()> {
    println!("td = {}", todd_factor());
    let twice_l = FiberClassExpr::c_l().scaled(&ExactRational::from(2));
    println!("ch(L^2) = {}", chern_character_line(&twice_l)?);
    for kind in [
        PushforwardBundle::LPlain,
        PushforwardBundle::LSquared,
        PushforwardBundle::LTwisted,
    ] {
        println!("c1 {kind:?} = {}", c1_pushforward_bundle(kind)?);
    }
    Ok(())
}
