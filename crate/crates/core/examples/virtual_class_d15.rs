//! Porteous class of the genus-15 degeneracy divisor, with the optional
//! δ0'' excess correction.

use prymcalc::picard::PrymBasis;
use prymcalc::porteous::{
    degeneration_correction, virtual_divisor_class, z1_class, CorrectionStage, FactoredClass,
    SigmaPushforwardTable,
};

fn main() -> prymcalc::Result<()> {
    println!("Z1 = {}", z1_class()?);
    let v = virtual_divisor_class()?;
    println!("σ_*(Z1) = {v}");
    println!("        = {}", FactoredClass::from_virtual(&v)?);
    let table = SigmaPushforwardTable::genus15()?;
    for stage in [CorrectionStage::BeforePushforward, CorrectionStage::AfterPushforward] {
        let c = degeneration_correction(&v, PrymBasis::D0DoublePrime, 3, stage, &table)?;
        println!("order-3 correction ({stage:?}): δ0'' -> {}", c.numeric_part.d0pp());
    }
    Ok(())
}
