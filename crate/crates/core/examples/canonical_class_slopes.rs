//! Canonical class of the Prym moduli space and the slope tests for the
//! two effective divisors used in genus 15.

use prymcalc::certificate::d15_2_class;
use prymcalc::picard::{canonical_class_prym, slope_inequalities};
use prymcalc::porteous::virtual_divisor_class;

fn main() -> prymcalc::Result<()> {
    println!("K = {}", canonical_class_prym(15)?);
    let d2 = virtual_divisor_class()?.numeric_part;
    for (name, class) in [("D15:2", d15_2_class()), ("D15", d2)] {
        println!("{name} = {class}");
        for c in slope_inequalities(&class).checks {
            let ratio = c.ratio.map_or("-".to_string(), |r| r.to_string());
            println!("  λ/{} = {ratio} against {}: {:?}", c.coefficient, c.bound, c.verdict);
        }
    }
    Ok(())
}
