//! Bigness certificates: write the canonical class as a positive
//! combination of two effective classes plus a positive multiple of λ.
//!
//! Up to genus 23 only λ, δ0', δ0'', δ0ram need to be matched. Given
//! effective `d1`, `d2`, the solver finds exact `β, γ` with
//! `β·d1 + γ·d2 = ε·λ - 2(δ0' + δ0'') - 3δ0ram`; when `β, γ > 0` and
//! `ε < 13`, the canonical class equals that sum plus `(13 - ε)λ` and is big.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::picard::{canonical_class_prym, PrymBasis, PrymDivisorClass};

/// λ-coefficient of the canonical class.
pub const CANONICAL_LAMBDA: i64 = 13;
/// Largest genus where the four named coefficients are enough.
pub const MAX_FOUR_TERM_GENUS: u32 = 23;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BignessCertificate {
    pub beta: ExactRational,
    pub gamma: ExactRational,
    pub epsilon: ExactRational,
    pub residual_lambda: ExactRational,
    pub genus: u32,
    pub verdict: bool,
    /// Target `(δ0' = δ0'', δ0ram)` coefficients of the combination.
    pub target: (ExactRational, ExactRational),
    pub d1: PrymDivisorClass,
    pub d2: PrymDivisorClass,
    #[serde(default)]
    pub reasons: Vec<String>,
}

fn det(a: &ExactRational, b: &ExactRational, c: &ExactRational, d: &ExactRational) -> ExactRational {
    a * d - b * c
}

/// Solves `β·d1 + γ·d2 ≡ target` on δ0', δ0'', δ0ram.
///
/// With `d0p = d0pp` in both inputs this is the 2×2 system on
/// (δ0' + δ0'', δ0ram). Otherwise all three equations must hold exactly;
/// an inconsistent system is reported as [`Error::Infeasible`].
pub fn solve_combination(
    d1: &PrymDivisorClass,
    d2: &PrymDivisorClass,
    target: (ExactRational, ExactRational),
) -> Result<BignessCertificate> {
    if d1.genus() != d2.genus() {
        return Err(Error::GenusMismatch {
            left: d1.genus(),
            right: d2.genus(),
        });
    }
    let (t_pair, t_ram) = &target;
    let rows = [
        (PrymBasis::D0Prime, t_pair),
        (PrymBasis::D0DoublePrime, t_pair),
        (PrymBasis::D0Ram, t_ram),
    ];
    let eq = |i: usize| (d1.coeff(rows[i].0), d2.coeff(rows[i].0), rows[i].1.clone());

    let mut solution = None;
    for (i, j) in [(0, 2), (1, 2), (0, 1)] {
        let (a, b, e) = eq(i);
        let (c, d, f) = eq(j);
        let dt = det(&a, &b, &c, &d);
        if dt.is_zero() {
            continue;
        }
        let beta = det(&e, &b, &f, &d).checked_div(&dt)?;
        let gamma = det(&a, &e, &c, &f).checked_div(&dt)?;
        solution = Some((beta, gamma));
        break;
    }
    let (beta, gamma) = solution.ok_or(Error::DegeneratePair)?;

    for (i, row) in rows.iter().enumerate() {
        let (a, b, e) = eq(i);
        let got = &beta * &a + &gamma * &b;
        if got != e {
            return Err(Error::Infeasible(format!(
                "β = {beta}, γ = {gamma} gives {got} on {}, target {e}",
                row.0
            )));
        }
    }

    let epsilon = &beta * d1.lambda() + &gamma * d2.lambda();
    let residual_lambda = ExactRational::from(CANONICAL_LAMBDA) - &epsilon;
    let genus = d1.genus();
    let reasons = verdict_reasons(genus, &beta, &gamma, &epsilon);
    Ok(BignessCertificate {
        verdict: reasons.is_empty(),
        beta,
        gamma,
        epsilon,
        residual_lambda,
        genus,
        target,
        d1: d1.clone(),
        d2: d2.clone(),
        reasons,
    })
}

fn verdict_reasons(genus: u32, beta: &ExactRational, gamma: &ExactRational, epsilon: &ExactRational) -> Vec<String> {
    let mut reasons = Vec::new();
    if !beta.is_positive() {
        reasons.push(format!("β = {beta} is not positive"));
    }
    if !gamma.is_positive() {
        reasons.push(format!("γ = {gamma} is not positive"));
    }
    if *epsilon >= ExactRational::from(CANONICAL_LAMBDA) {
        reasons.push(format!("ε = {epsilon} is not below {CANONICAL_LAMBDA}"));
    }
    if genus > MAX_FOUR_TERM_GENUS {
        reasons.push(format!("genus {genus} exceeds {MAX_FOUR_TERM_GENUS}"));
    }
    reasons
}

/// Certifies bigness of the canonical class in genus `g <= 23` from two
/// effective classes supported on λ, δ0', δ0'', δ0ram.
pub fn verify_general_type(g: u32, d1: &PrymDivisorClass, d2: &PrymDivisorClass) -> Result<BignessCertificate> {
    if g > MAX_FOUR_TERM_GENUS {
        return Err(Error::GenusAboveFourTermRange(g));
    }
    for d in [d1, d2] {
        if d.genus() != g {
            return Err(Error::GenusMismatch {
                left: g,
                right: d.genus(),
            });
        }
        if !d.is_four_term() {
            return Err(Error::UnsupportedSupport(d.to_string()));
        }
    }
    let k = canonical_class_prym(g)?;
    debug_assert_eq!(k.d0p(), k.d0pp());
    solve_combination(d1, d2, (k.d0p().clone(), k.d0ram().clone()))
}

/// Result of re-checking a stored certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    /// Every stored field agrees with what the stored inputs imply.
    pub consistent: bool,
    /// The verdict recomputed from the stored fields.
    pub verdict: bool,
    pub problems: Vec<String>,
}

impl VerificationOutcome {
    pub fn accepted(&self) -> bool {
        self.consistent && self.verdict
    }
}

/// Re-checks a certificate from its own fields, without solving anything.
pub fn verify_certificate(cert: &BignessCertificate) -> VerificationOutcome {
    let mut problems = Vec::new();
    let (t_pair, t_ram) = &cert.target;
    let combo = cert
        .d1
        .scaled(&cert.beta)
        .try_add(&cert.d2.scaled(&cert.gamma));
    let mut reconstructs = false;
    match combo {
        Err(e) => problems.push(e.to_string()),
        Ok(c) => {
            reconstructs = true;
            for (e, want) in [
                (PrymBasis::D0Prime, t_pair),
                (PrymBasis::D0DoublePrime, t_pair),
                (PrymBasis::D0Ram, t_ram),
            ] {
                if &c.coeff(e) != want {
                    reconstructs = false;
                    problems.push(format!("β·d1 + γ·d2 has {} on {e}, target {want}", c.coeff(e)));
                }
            }
            if c.lambda() != &cert.epsilon {
                problems.push(format!("stored ε = {} but β·d1 + γ·d2 has λ-coefficient {}", cert.epsilon, c.lambda()));
            }
        }
    }
    if cert.d1.genus() != cert.genus {
        problems.push(format!("d1 has genus {}, certificate says {}", cert.d1.genus(), cert.genus));
    }
    let residual = ExactRational::from(CANONICAL_LAMBDA) - &cert.epsilon;
    if residual != cert.residual_lambda {
        problems.push(format!(
            "stored residual {} differs from 13 - ε = {residual}",
            cert.residual_lambda
        ));
    }
    let verdict = reconstructs && verdict_reasons(cert.genus, &cert.beta, &cert.gamma, &cert.epsilon).is_empty();
    if verdict != cert.verdict {
        problems.push(format!("stored verdict {} but fields imply {verdict}", cert.verdict));
    }
    VerificationOutcome {
        consistent: problems.is_empty(),
        verdict,
        problems,
    }
}

/// `[D15:2] = 5808λ - 924(δ0' + δ0'') - 990δ0ram`
pub fn d15_2_class() -> PrymDivisorClass {
    PrymDivisorClass::four_term(
        15,
        ExactRational::from(5808),
        ExactRational::from(-924),
        ExactRational::from(-924),
        ExactRational::from(-990),
    )
    .expect("genus 15 is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::porteous::virtual_divisor_class;
    use proptest::prelude::*;

    fn q(n: i64) -> ExactRational {
        ExactRational::from(n)
    }

    fn d15() -> PrymDivisorClass {
        virtual_divisor_class().unwrap().numeric_part
    }

    fn canonical_target() -> (ExactRational, ExactRational) {
        (q(-2), q(-3))
    }

    #[test]
    fn genus15_combination() {
        let c = solve_combination(&d15_2_class(), &d15(), canonical_target()).unwrap();
        assert_eq!(c.beta, ExactRational::frac(667, 680394));
        assert_eq!(c.gamma, ExactRational::frac(4, 113399));
        assert_eq!(c.epsilon, ExactRational::frac(10288, 793));
        assert_eq!(c.residual_lambda, ExactRational::frac(21, 793));
        assert!(c.verdict);
        assert!(c.reasons.is_empty());
    }

    #[test]
    fn reconstruction_identities() {
        let (b, g) = (ExactRational::frac(667, 680394), ExactRational::frac(4, 113399));
        assert_eq!(q(924) * &b + q(31020) * &g, q(2));
        assert_eq!(q(990) * &b + ExactRational::frac(115071, 2) * &g, q(3));
    }

    #[test]
    fn proportional_pair_is_degenerate() {
        let d = d15_2_class();
        assert_eq!(solve_combination(&d, &d, canonical_target()), Err(Error::DegeneratePair));
        assert_eq!(
            solve_combination(&d, &d.scaled(&q(3)), canonical_target()),
            Err(Error::DegeneratePair)
        );
    }

    #[test]
    fn nonpositive_coefficients_fail_the_verdict() {
        // Swapping the roles of the targets forces a negative coefficient.
        let c = solve_combination(&d15_2_class(), &d15(), (q(-3), q(-2))).unwrap();
        assert!(!c.verdict);
        assert!(!c.gamma.is_positive());
    }

    #[test]
    fn general_type_in_genus_15() {
        let c = verify_general_type(15, &d15_2_class(), &d15()).unwrap();
        assert!(c.verdict);
        assert_eq!(c.epsilon, ExactRational::frac(10288, 793));
    }

    #[test]
    fn genus_above_23_is_refused() {
        let d = PrymDivisorClass::four_term(24, q(1), q(-1), q(-1), q(-1)).unwrap();
        assert_eq!(verify_general_type(24, &d, &d), Err(Error::GenusAboveFourTermRange(24)));
    }

    #[test]
    fn corrected_class_has_no_exact_combination() {
        // δ0'' corrected upstairs: coefficient -31020 - 3·6006.
        let mut corrected = d15();
        corrected.set(PrymBasis::D0DoublePrime, q(-49038)).unwrap();
        let r = verify_general_type(15, &d15_2_class(), &corrected);
        assert!(matches!(r, Err(Error::Infeasible(_))), "{r:?}");
    }

    #[test]
    fn stored_certificate_verifies() {
        let c = verify_general_type(15, &d15_2_class(), &d15()).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        let back: BignessCertificate = serde_json::from_str(&json).unwrap();
        let outcome = verify_certificate(&back);
        assert!(outcome.consistent, "{:?}", outcome.problems);
        assert!(outcome.verdict);

        let mut tampered = back.clone();
        tampered.epsilon = q(12);
        assert!(!verify_certificate(&tampered).consistent);

        let mut tampered = back;
        tampered.beta = ExactRational::frac(1, 680394);
        let o = verify_certificate(&tampered);
        assert!(!o.consistent);
        assert!(!o.verdict);
    }

    #[test]
    fn certificate_json_fields() {
        let c = verify_general_type(15, &d15_2_class(), &d15()).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["beta"], "667/680394");
        assert_eq!(v["gamma"], "4/113399");
        assert_eq!(v["epsilon"], "10288/793");
        assert_eq!(v["residual_lambda"], "21/793");
        assert_eq!(v["genus"], 15);
        assert_eq!(v["verdict"], true);
    }

    proptest! {
        #[test]
        fn verdict_is_scale_invariant(n in 1i64..1000, m in 1i64..1000) {
            let s = ExactRational::frac(n, m);
            let base = solve_combination(&d15_2_class(), &d15(), canonical_target()).unwrap();
            let scaled = solve_combination(&d15_2_class().scaled(&s), &d15(), canonical_target()).unwrap();
            prop_assert_eq!(&scaled.beta, &(&base.beta / &s));
            prop_assert_eq!(&scaled.epsilon, &base.epsilon);
            prop_assert_eq!(scaled.verdict, base.verdict);
        }

        #[test]
        fn epsilon_monotone_in_d2_lambda(extra in 0i64..100000) {
            let base = solve_combination(&d15_2_class(), &d15(), canonical_target()).unwrap();
            let mut worse = d15();
            worse.add_to(PrymBasis::Lambda, &q(extra)).unwrap();
            let c = solve_combination(&d15_2_class(), &worse, canonical_target()).unwrap();
            prop_assert!(c.epsilon >= base.epsilon);
        }
    }
}
