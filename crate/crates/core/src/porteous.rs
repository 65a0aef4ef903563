//! The first degeneracy class of the multiplication map over the space of
//! g^4_16 on Prym curves of genus 15, and its pushforward to the Prym
//! moduli space.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::brill_noether::{mult_map_dimension_balance, riemann_roch_h0, series_count, BNParams};
use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::grr::{c1_pushforward_bundle, BaseClassExpr, BaseGenerator, PushforwardBundle};
use crate::picard::{write_linear_combination, PrymBasis, PrymDivisorClass};

pub const GENUS: u32 = 15;
pub const SERIES: (i64, i64, i64) = (15, 4, 16);
/// `h⁰(L⊗η)` for a general point of the space of linear series.
pub const TWISTED_H0: i64 = 2;

/// `c₁(Sym²𝒢) = (rk 𝒢 + 1)·c₁(𝒢)`
pub fn sym2_c1(c1: &BaseClassExpr, rank: i64) -> Result<BaseClassExpr> {
    if rank < 0 {
        return Err(Error::NegativeRank(rank));
    }
    Ok(c1.scaled(&ExactRational::from(rank + 1)))
}

/// `c₁(χ_*𝓛⊗²) - c₁(Sym²χ_*𝓛) - c₁(Sym²χ_*(𝓛⊗𝓟))` for bundles of the given
/// ranks; Porteous needs `Sym²` of both sources to match the target rank.
pub fn z1_class_with_ranks(plain_rank: i64, twisted_rank: i64, target_rank: i64) -> Result<BaseClassExpr> {
    let sym2_rank = |n: i64| n * (n + 1) / 2;
    let source_rank = sym2_rank(plain_rank) + sym2_rank(twisted_rank);
    if source_rank != target_rank {
        return Err(Error::RankImbalance {
            source_rank,
            target_rank,
        });
    }
    let target = c1_pushforward_bundle(PushforwardBundle::LSquared)?;
    let plain = sym2_c1(&c1_pushforward_bundle(PushforwardBundle::LPlain)?, plain_rank)?;
    let twisted = sym2_c1(&c1_pushforward_bundle(PushforwardBundle::LTwisted)?, twisted_rank)?;
    Ok(&(&target - &plain) - &twisted)
}

/// Z₁(φ) on the space of g^4_16, before pushing forward:
/// `-2λ + a/2 + b/2 - 6c + 3/4·δ0ram - 3d`.
pub fn z1_class() -> Result<BaseClassExpr> {
    let (g, r, d) = SERIES;
    let balance = mult_map_dimension_balance(g, r, d, TWISTED_H0)?;
    let plain_rank = riemann_roch_h0(g, d, BNParams::new(g, r, d)?.h1())?;
    z1_class_with_ranks(plain_rank, TWISTED_H0, balance.rhs)
}

/// Images under σ of the generators on the space of linear series.
/// The class `d` has no row; it is carried along symbolically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPushforwardTable {
    pub genus: u32,
    pub degree: BigInt,
    pub rows: BTreeMap<BaseGenerator, PrymDivisorClass>,
}

impl SigmaPushforwardTable {
    /// The table for g^4_16 in genus 15; σ has degree 6006.
    ///
    /// The `b` and `c` rows are printed in the source without a λ after the
    /// leading constant; it is read as a λ coefficient, the only reading
    /// that reproduces the virtual class.
    pub fn genus15() -> Result<Self> {
        let (g, r, d) = SERIES;
        let n = series_count(&BNParams::new(g, r, d)?)?;
        let row = |l: i64, p: i64, ram: i64| {
            PrymDivisorClass::four_term(GENUS, l.into(), p.into(), p.into(), ram.into())
        };
        let nq = ExactRational::integer(n.clone());
        let mut rows = BTreeMap::new();
        rows.insert(BaseGenerator::A, row(-146784, 20856, 41712)?);
        rows.insert(BaseGenerator::B, row(4224, 264, 528)?);
        rows.insert(BaseGenerator::C, row(-48279, 6930, 13860)?);
        for (gen, e) in [
            (BaseGenerator::Lambda, PrymBasis::Lambda),
            (BaseGenerator::D0Prime, PrymBasis::D0Prime),
            (BaseGenerator::D0DoublePrime, PrymBasis::D0DoublePrime),
            (BaseGenerator::D0Ram, PrymBasis::D0Ram),
        ] {
            rows.insert(gen, PrymDivisorClass::basis(GENUS, e)?.scaled(&nq));
        }
        Ok(Self {
            genus: GENUS,
            degree: n,
            rows,
        })
    }
}

/// A pushed-forward degeneracy class: an explicit part plus a multiple of
/// the unexpanded `σ_*(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualDivisorClass {
    pub numeric_part: PrymDivisorClass,
    pub d_multiple: ExactRational,
}

impl fmt::Display for VirtualDivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.numeric_part)?;
        write_sigma_d(f, &self.d_multiple)
    }
}

fn write_sigma_d(f: &mut fmt::Formatter<'_>, m: &ExactRational) -> fmt::Result {
    if m.is_zero() {
        return Ok(());
    }
    let sign = if m.is_negative() { " - " } else { " + " };
    let mag = m.abs();
    if mag == ExactRational::one() {
        write!(f, "{sign}σ*(d)")
    } else {
        write!(f, "{sign}{mag}*σ*(d)")
    }
}

/// Linear substitution of every generator by its table row.
pub fn sigma_pushforward(x: &BaseClassExpr, table: &SigmaPushforwardTable) -> Result<VirtualDivisorClass> {
    let mut numeric = PrymDivisorClass::zero(table.genus)?;
    let mut d_multiple = ExactRational::zero();
    for (gen, c) in x.terms() {
        if gen == BaseGenerator::D {
            d_multiple += c;
            continue;
        }
        let row = table
            .rows
            .get(&gen)
            .ok_or_else(|| Error::MissingGenerator(gen.to_string()))?;
        numeric = numeric.try_add(&row.scaled(c))?;
    }
    Ok(VirtualDivisorClass {
        numeric_part: numeric,
        d_multiple,
    })
}

/// `scale·(λ·lambda + δ0'·d0p + δ0''·d0pp + δ0ram·d0ram) + d_multiple·σ_*(d)`,
/// normalised so that `d0p = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredClass {
    pub scale: ExactRational,
    pub lambda: ExactRational,
    pub d0p: ExactRational,
    pub d0pp: ExactRational,
    pub d0ram: ExactRational,
    pub d_multiple: ExactRational,
}

impl FactoredClass {
    /// Factors out `-coeff(δ0')`; the class must be four-term with `δ0' != 0`.
    pub fn from_virtual(v: &VirtualDivisorClass) -> Result<Self> {
        let c = &v.numeric_part;
        if !c.is_four_term() {
            return Err(Error::UnsupportedSupport(c.to_string()));
        }
        let scale = -c.d0p().clone();
        let div = |x: &ExactRational| x.checked_div(&scale);
        Ok(Self {
            lambda: div(c.lambda())?,
            d0p: div(c.d0p())?,
            d0pp: div(c.d0pp())?,
            d0ram: div(c.d0ram())?,
            d_multiple: v.d_multiple.clone(),
            scale,
        })
    }

    pub fn expand(&self) -> Result<VirtualDivisorClass> {
        let s = &self.scale;
        Ok(VirtualDivisorClass {
            numeric_part: PrymDivisorClass::four_term(
                GENUS,
                &self.lambda * s,
                &self.d0p * s,
                &self.d0pp * s,
                &self.d0ram * s,
            )?,
            d_multiple: self.d_multiple.clone(),
        })
    }
}

impl fmt::Display for FactoredClass {
    /// `31020*(3127/470*λ - (δ0' + δ0'') - 3487/1880*δ0ram) - 3*σ*(d)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*(", self.scale)?;
        let mut terms = vec![("λ".to_string(), self.lambda.clone())];
        if self.d0p == self.d0pp {
            terms.push(("(δ0' + δ0'')".to_string(), self.d0p.clone()));
        } else {
            terms.push(("δ0'".to_string(), self.d0p.clone()));
            terms.push(("δ0''".to_string(), self.d0pp.clone()));
        }
        terms.push(("δ0ram".to_string(), self.d0ram.clone()));
        write_linear_combination(f, &terms)?;
        write!(f, ")")?;
        write_sigma_d(f, &self.d_multiple)
    }
}

/// Reference factored form of the virtual class.
pub fn stated_factored_class() -> FactoredClass {
    FactoredClass {
        scale: ExactRational::from(31020),
        lambda: ExactRational::frac(3127, 470),
        d0p: ExactRational::from(-1),
        d0pp: ExactRational::from(-1),
        d0ram: ExactRational::frac(-3487, 1880),
        d_multiple: ExactRational::from(-3),
    }
}

/// `206382λ - 31020(δ0' + δ0'') - 115071/2·δ0ram - 3σ_*(d)`.
pub fn stated_expanded_class() -> VirtualDivisorClass {
    VirtualDivisorClass {
        numeric_part: PrymDivisorClass::four_term(
            GENUS,
            ExactRational::from(206382),
            ExactRational::from(-31020),
            ExactRational::from(-31020),
            ExactRational::frac(-115071, 2),
        )
        .expect("genus 15 is valid"),
        d_multiple: ExactRational::from(-3),
    }
}

/// σ_*(Z₁(φ)), checked against both stated renderings.
pub fn virtual_divisor_class() -> Result<VirtualDivisorClass> {
    let table = SigmaPushforwardTable::genus15()?;
    let computed = sigma_pushforward(&z1_class()?, &table)?;
    let factored = stated_factored_class().expand()?;
    if computed != factored {
        return Err(Error::InternalMismatch(format!(
            "pipeline gives {computed}, factored form expands to {factored}"
        )));
    }
    let expanded = stated_expanded_class();
    if computed != expanded {
        return Err(Error::InternalMismatch(format!(
            "pipeline gives {computed}, expanded form is {expanded}"
        )));
    }
    Ok(computed)
}

/// Where the δ0'' correction is subtracted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CorrectionStage {
    /// Subtract `order·δ0''` from Z₁(φ) on the space of linear series, then
    /// push forward: the correction becomes `order·N·δ0''`.
    #[default]
    BeforePushforward,
    /// Subtract `order·δ0''` from the pushed-forward class.
    AfterPushforward,
}

/// Removes the excess contribution of a component along which φ degenerates
/// to the given order. Only δ0'' is supported.
pub fn degeneration_correction(
    v: &VirtualDivisorClass,
    component: PrymBasis,
    order: i64,
    stage: CorrectionStage,
    table: &SigmaPushforwardTable,
) -> Result<VirtualDivisorClass> {
    if component != PrymBasis::D0DoublePrime {
        return Err(Error::UnknownComponent(component.to_string()));
    }
    if order < 0 {
        return Err(Error::InvalidParams(format!("order must be >= 0, got {order}")));
    }
    let mut amount = ExactRational::from(order);
    if stage == CorrectionStage::BeforePushforward {
        amount = amount * ExactRational::integer(table.degree.clone());
    }
    let mut out = v.clone();
    out.numeric_part.add_to(component, &-amount)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use BaseGenerator::*;

    fn q(n: i64) -> ExactRational {
        ExactRational::from(n)
    }

    #[test]
    fn sym2_rule() {
        let c = BaseClassExpr::generator(C);
        assert_eq!(sym2_c1(&c, 5).unwrap(), c.scaled(&q(6)));
        let tw = c1_pushforward_bundle(PushforwardBundle::LTwisted).unwrap();
        assert_eq!(sym2_c1(&tw, 2).unwrap(), tw.scaled(&q(3)));
        assert_eq!(sym2_c1(&tw, 1).unwrap(), tw.scaled(&q(2)));
        assert_eq!(sym2_c1(&c, -1), Err(Error::NegativeRank(-1)));
    }

    #[test]
    fn z1_coefficients() {
        let z = z1_class().unwrap();
        assert_eq!(z.coeff(Lambda), q(-2));
        assert_eq!(z.coeff(D0Ram), ExactRational::frac(3, 4));
        assert_eq!(z.coeff(C), q(-6));
        assert_eq!(z.coeff(D), q(-3));
        assert_eq!(z.coeff(A), ExactRational::frac(1, 2));
        assert_eq!(z.coeff(B), ExactRational::frac(1, 2));
        assert_eq!(z.coeff(D0Prime), q(0));
    }

    #[test]
    fn z1_needs_equal_ranks() {
        assert_eq!(
            z1_class_with_ranks(5, 4, 18),
            Err(Error::RankImbalance {
                source_rank: 25,
                target_rank: 18
            })
        );
    }

    #[test]
    fn table_rows() {
        let t = SigmaPushforwardTable::genus15().unwrap();
        assert_eq!(t.degree, BigInt::from(6006));
        let a = sigma_pushforward(&BaseClassExpr::generator(A), &t).unwrap();
        assert_eq!(
            a.numeric_part,
            PrymDivisorClass::four_term(15, q(-146784), q(20856), q(20856), q(41712)).unwrap()
        );
        let l = sigma_pushforward(&BaseClassExpr::generator(Lambda), &t).unwrap();
        assert_eq!(l.numeric_part, PrymDivisorClass::basis(15, PrymBasis::Lambda).unwrap().scaled(&q(6006)));
    }

    #[test]
    fn table_lambda_arithmetic() {
        let t = SigmaPushforwardTable::genus15().unwrap();
        let half = ExactRational::frac(1, 2);
        let x = BaseClassExpr::zero().plus(A, half.clone()).plus(B, half).plus(C, q(-6));
        let v = sigma_pushforward(&x, &t).unwrap();
        assert_eq!(v.numeric_part.lambda(), &q(218394));
    }

    #[test]
    fn missing_row() {
        let mut t = SigmaPushforwardTable::genus15().unwrap();
        t.rows.remove(&B);
        assert_eq!(
            sigma_pushforward(&BaseClassExpr::generator(B), &t),
            Err(Error::MissingGenerator("b".into()))
        );
    }

    #[test]
    fn virtual_class() {
        let v = virtual_divisor_class().unwrap();
        assert_eq!(v.numeric_part.lambda(), &q(206382));
        assert_eq!(v.numeric_part.d0p(), &q(-31020));
        assert_eq!(v.numeric_part.d0pp(), &q(-31020));
        assert_eq!(v.numeric_part.d0ram(), &ExactRational::frac(-115071, 2));
        assert_eq!(v.d_multiple, q(-3));
        assert_eq!(q(31020) * ExactRational::frac(3127, 470), q(206382));
        assert_eq!(q(31020) * ExactRational::frac(3487, 1880), ExactRational::frac(115071, 2));
        assert_eq!(FactoredClass::from_virtual(&v).unwrap(), stated_factored_class());
    }

    #[test]
    fn renderings() {
        let v = virtual_divisor_class().unwrap();
        assert_eq!(
            v.to_string(),
            "206382*λ - 31020*δ0' - 31020*δ0'' - 115071/2*δ0ram - 3*σ*(d)"
        );
        assert_eq!(
            FactoredClass::from_virtual(&v).unwrap().to_string(),
            "31020*(3127/470*λ - (δ0' + δ0'') - 3487/1880*δ0ram) - 3*σ*(d)"
        );
    }

    #[test]
    fn corrections() {
        let t = SigmaPushforwardTable::genus15().unwrap();
        let v = virtual_divisor_class().unwrap();
        let same = degeneration_correction(&v, PrymBasis::D0DoublePrime, 0, CorrectionStage::default(), &t).unwrap();
        assert_eq!(same, v);
        let up = degeneration_correction(&v, PrymBasis::D0DoublePrime, 3, CorrectionStage::default(), &t).unwrap();
        assert_eq!(up.numeric_part.d0pp(), &q(-49038));
        assert_eq!(up.numeric_part.lambda(), v.numeric_part.lambda());
        assert_eq!(up.numeric_part.d0p(), v.numeric_part.d0p());
        let down =
            degeneration_correction(&v, PrymBasis::D0DoublePrime, 3, CorrectionStage::AfterPushforward, &t).unwrap();
        assert_eq!(down.numeric_part.d0pp(), &q(-31023));
        assert!(matches!(
            degeneration_correction(&v, PrymBasis::D0Ram, 3, CorrectionStage::default(), &t),
            Err(Error::UnknownComponent(_))
        ));
    }

    #[test]
    fn corrections_only_lower_boundary() {
        let t = SigmaPushforwardTable::genus15().unwrap();
        let v = virtual_divisor_class().unwrap();
        // dropping -3σ*(d) and subtracting along δ0''
        let mut w = v.clone();
        w.d_multiple = q(0);
        for order in 0..6 {
            for stage in [CorrectionStage::BeforePushforward, CorrectionStage::AfterPushforward] {
                let c = degeneration_correction(&w, PrymBasis::D0DoublePrime, order, stage, &t).unwrap();
                assert!(c.numeric_part.lambda() >= v.numeric_part.lambda());
                for e in [PrymBasis::D0Prime, PrymBasis::D0DoublePrime, PrymBasis::D0Ram] {
                    assert!(c.numeric_part.coeff(e) <= v.numeric_part.coeff(e));
                }
            }
        }
    }

    fn arb_base() -> impl Strategy<Value = BaseClassExpr> {
        proptest::collection::vec(-100i64..100, 8).prop_map(|cs| {
            BaseGenerator::ALL
                .iter()
                .zip(cs)
                .fold(BaseClassExpr::zero(), |acc, (g, c)| acc.plus(*g, q(c)))
        })
    }

    proptest! {
        #[test]
        fn sigma_is_linear(x in arb_base(), y in arb_base(), a in -20i64..20, b in -20i64..20) {
            let t = SigmaPushforwardTable::genus15().unwrap();
            let (a, b) = (q(a), q(b));
            let lhs = sigma_pushforward(&(&x.scaled(&a) + &y.scaled(&b)), &t).unwrap();
            let sx = sigma_pushforward(&x, &t).unwrap();
            let sy = sigma_pushforward(&y, &t).unwrap();
            let numeric = sx.numeric_part.scaled(&a).try_add(&sy.numeric_part.scaled(&b)).unwrap();
            prop_assert_eq!(lhs.numeric_part, numeric);
            prop_assert_eq!(lhs.d_multiple, &sx.d_multiple * &a + &sy.d_multiple * &b);
        }
    }
}
