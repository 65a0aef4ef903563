//! A truncated Grothendieck-Riemann-Roch engine for the universal curve
//! `χ: C → G` over the space of linear series.
//!
//! Fiber classes live in the degree-≤2 ring generated by `cL = c₁(𝓛)`,
//! `cP = c₁(𝓟)`, `cω = c₁(ω_χ)` and `c2Ω = c₂(Ω_χ)`. Integration along the
//! fibers lowers degree by one, so only the degree-2 part of an integrand
//! contributes to first Chern classes on the base.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::picard::write_linear_combination;

/// Monomials of total degree at most two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiberMonomial {
    One,
    L,
    P,
    Omega,
    LL,
    LP,
    LOmega,
    PP,
    POmega,
    OmegaOmega,
    C2Omega,
}

impl FiberMonomial {
    pub fn degree(self) -> usize {
        use FiberMonomial::*;
        match self {
            One => 0,
            L | P | Omega => 1,
            _ => 2,
        }
    }

    /// Product in the truncated ring; `None` when the degree exceeds two.
    pub fn times(self, other: FiberMonomial) -> Option<FiberMonomial> {
        use FiberMonomial::*;
        match (self, other) {
            (One, m) | (m, One) => Some(m),
            (a, b) if a.degree() + b.degree() > 2 => None,
            (L, L) => Some(LL),
            (L, P) | (P, L) => Some(LP),
            (L, Omega) | (Omega, L) => Some(LOmega),
            (P, P) => Some(PP),
            (P, Omega) | (Omega, P) => Some(POmega),
            (Omega, Omega) => Some(OmegaOmega),
            _ => unreachable!("degree-1 generators cover all remaining cases"),
        }
    }

    fn symbol(self) -> &'static str {
        use FiberMonomial::*;
        match self {
            One => "1",
            L => "cL",
            P => "cP",
            Omega => "cω",
            LL => "cL^2",
            LP => "cL*cP",
            LOmega => "cL*cω",
            PP => "cP^2",
            POmega => "cP*cω",
            OmegaOmega => "cω^2",
            C2Omega => "c2Ω",
        }
    }
}

/// An element of the truncated fiber ring.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FiberClassExpr {
    terms: BTreeMap<FiberMonomial, ExactRational>,
}

impl FiberClassExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(FiberMonomial::One, ExactRational::one())
    }

    pub fn monomial(m: FiberMonomial, c: ExactRational) -> Self {
        let mut e = Self::zero();
        e.add_term(m, &c);
        e
    }

    pub fn c_l() -> Self {
        Self::monomial(FiberMonomial::L, ExactRational::one())
    }

    pub fn c_p() -> Self {
        Self::monomial(FiberMonomial::P, ExactRational::one())
    }

    pub fn c_omega() -> Self {
        Self::monomial(FiberMonomial::Omega, ExactRational::one())
    }

    pub fn c2_omega() -> Self {
        Self::monomial(FiberMonomial::C2Omega, ExactRational::one())
    }

    fn add_term(&mut self, m: FiberMonomial, c: &ExactRational) {
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coeff(&self, m: FiberMonomial) -> ExactRational {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (FiberMonomial, &ExactRational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn scaled(&self, s: &ExactRational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &(c * s));
        }
        out
    }

    /// The part of total degree `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }
}

/// Product in the truncated ring.
pub fn fiber_mul(x: &FiberClassExpr, y: &FiberClassExpr) -> FiberClassExpr {
    let mut out = FiberClassExpr::zero();
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            if let Some(m) = a.times(*b) {
                out.add_term(m, &(ca * cb));
            }
        }
    }
    out
}

impl Add for &FiberClassExpr {
    type Output = FiberClassExpr;
    fn add(self, rhs: &FiberClassExpr) -> FiberClassExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Neg for &FiberClassExpr {
    type Output = FiberClassExpr;
    fn neg(self) -> FiberClassExpr {
        self.scaled(&-ExactRational::one())
    }
}

impl Sub for &FiberClassExpr {
    type Output = FiberClassExpr;
    fn sub(self, rhs: &FiberClassExpr) -> FiberClassExpr {
        self + &(-rhs)
    }
}

impl Mul for &FiberClassExpr {
    type Output = FiberClassExpr;
    fn mul(self, rhs: &FiberClassExpr) -> FiberClassExpr {
        fiber_mul(self, rhs)
    }
}

impl fmt::Display for FiberClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.symbol().to_string(), c.clone()))
            .collect();
        write_linear_combination(f, &terms)
    }
}

impl fmt::Debug for FiberClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ch = 1 + c₁ + c₁²/2` of a line bundle with first Chern class `c1`.
pub fn chern_character_line(c1: &FiberClassExpr) -> Result<FiberClassExpr> {
    if !c1.is_homogeneous_of_degree(1) {
        return Err(Error::NotHomogeneousDegreeOne(c1.to_string()));
    }
    let sq = fiber_mul(c1, c1).scaled(&ExactRational::frac(1, 2));
    Ok(&(&FiberClassExpr::one() + c1) + &sq)
}

/// Relative Todd class `1 - cω/2 + (cω² + c2Ω)/12`.
pub fn todd_factor() -> FiberClassExpr {
    let twelfth = ExactRational::frac(1, 12);
    let mut t = FiberClassExpr::one();
    t.add_term(FiberMonomial::Omega, &ExactRational::frac(-1, 2));
    t.add_term(FiberMonomial::OmegaOmega, &twelfth);
    t.add_term(FiberMonomial::C2Omega, &twelfth);
    t
}

/// Generators of the divisor classes on the space of linear series.
///
/// `A = χ_*(cL²)`, `B = χ_*(cL·cω)`, `C = c₁(χ_*𝓛)` and
/// `D = c₁(R¹χ_*(𝓛⊗𝓟))` are kept opaque.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseGenerator {
    Lambda,
    A,
    B,
    C,
    D,
    D0Prime,
    D0DoublePrime,
    D0Ram,
}

impl BaseGenerator {
    pub const ALL: [BaseGenerator; 8] = [
        BaseGenerator::Lambda,
        BaseGenerator::A,
        BaseGenerator::B,
        BaseGenerator::C,
        BaseGenerator::D,
        BaseGenerator::D0Prime,
        BaseGenerator::D0DoublePrime,
        BaseGenerator::D0Ram,
    ];
}

impl fmt::Display for BaseGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BaseGenerator::Lambda => "λ",
            BaseGenerator::A => "a",
            BaseGenerator::B => "b",
            BaseGenerator::C => "c",
            BaseGenerator::D => "d",
            BaseGenerator::D0Prime => "δ0'",
            BaseGenerator::D0DoublePrime => "δ0''",
            BaseGenerator::D0Ram => "δ0ram",
        };
        f.write_str(s)
    }
}

/// A formal linear combination of [`BaseGenerator`]s.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BaseClassExpr {
    coeffs: BTreeMap<BaseGenerator, ExactRational>,
}

impl BaseClassExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: BaseGenerator) -> Self {
        Self::zero().plus(g, ExactRational::one())
    }

    /// Builder: adds `c·g`.
    pub fn plus(mut self, g: BaseGenerator, c: ExactRational) -> Self {
        let entry = self.coeffs.entry(g).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.coeffs.remove(&g);
        }
        self
    }

    pub fn coeff(&self, g: BaseGenerator) -> ExactRational {
        self.coeffs.get(&g).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BaseGenerator, &ExactRational)> {
        self.coeffs.iter().map(|(g, c)| (*g, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, s: &ExactRational) -> Self {
        self.coeffs
            .iter()
            .fold(Self::zero(), |acc, (g, c)| acc.plus(*g, c * s))
    }
}

impl Add for &BaseClassExpr {
    type Output = BaseClassExpr;
    fn add(self, rhs: &BaseClassExpr) -> BaseClassExpr {
        rhs.coeffs
            .iter()
            .fold(self.clone(), |acc, (g, c)| acc.plus(*g, c.clone()))
    }
}

impl Sub for &BaseClassExpr {
    type Output = BaseClassExpr;
    fn sub(self, rhs: &BaseClassExpr) -> BaseClassExpr {
        self + &rhs.scaled(&-ExactRational::one())
    }
}

impl fmt::Display for BaseClassExpr {
    /// Renders as e.g. `λ + 1/2*a - 1/2*b + d - 1/4*δ0ram`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .coeffs
            .iter()
            .map(|(g, c)| (g.to_string(), c.clone()))
            .collect();
        write_linear_combination(f, &terms)
    }
}

impl fmt::Debug for BaseClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree-one part of `χ_*(x)`.
///
/// Rules: `cL² ↦ a`, `cL·cω ↦ b`, `cP² ↦ -δ0ram/2`, `cP·cω ↦ 0`, `cL·cP ↦ 0`,
/// and `cω² + c2Ω ↦ 12λ`. The last two monomials only have a known image
/// together, so their coefficients must agree.
pub fn fiber_pushforward_deg1(x: &FiberClassExpr) -> Result<BaseClassExpr> {
    use FiberMonomial::*;
    let mumford_sq = x.coeff(OmegaOmega);
    let mumford_c2 = x.coeff(C2Omega);
    if mumford_sq != mumford_c2 {
        return Err(Error::UnpushableMonomial(format!(
            "cω^2 and c2Ω appear with coefficients {mumford_sq} and {mumford_c2}, not as cω^2 + c2Ω"
        )));
    }
    let mut out = BaseClassExpr::zero();
    for (m, c) in x.terms() {
        out = match m {
            LL => out.plus(BaseGenerator::A, c.clone()),
            LOmega => out.plus(BaseGenerator::B, c.clone()),
            PP => out.plus(BaseGenerator::D0Ram, c * ExactRational::frac(-1, 2)),
            OmegaOmega => out.plus(BaseGenerator::Lambda, c * ExactRational::from(12)),
            One | L | P | Omega | LP | POmega | C2Omega => out,
        };
    }
    Ok(out)
}

/// Bundles whose first Chern class [`c1_pushforward_bundle`] knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PushforwardBundle {
    /// `χ_*(𝓛⊗²)`, with vanishing `R¹`.
    LSquared,
    /// `χ_*(𝓛⊗𝓟)`, corrected by `c₁(R¹χ_*(𝓛⊗𝓟)) = d`.
    LTwisted,
    /// `χ_*𝓛`, the opaque generator `c`.
    LPlain,
    /// `χ_*𝒪`
    Trivial,
}

/// `c₁(χ_*F) = [χ_*(ch F · td)]₁ + c₁(R¹χ_*F)`.
pub fn c1_pushforward_bundle(kind: PushforwardBundle) -> Result<BaseClassExpr> {
    let grr = |c1: FiberClassExpr| -> Result<BaseClassExpr> {
        let integrand = fiber_mul(&chern_character_line(&c1)?, &todd_factor());
        fiber_pushforward_deg1(&integrand)
    };
    match kind {
        PushforwardBundle::LSquared => grr(FiberClassExpr::c_l().scaled(&ExactRational::from(2))),
        PushforwardBundle::LTwisted => Ok(grr(&FiberClassExpr::c_l() + &FiberClassExpr::c_p())?
            .plus(BaseGenerator::D, ExactRational::one())),
        PushforwardBundle::LPlain => Ok(BaseClassExpr::generator(BaseGenerator::C)),
        PushforwardBundle::Trivial => fiber_pushforward_deg1(&todd_factor()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use FiberMonomial::*;

    fn half() -> ExactRational {
        ExactRational::frac(1, 2)
    }

    #[test]
    fn products() {
        let l = FiberClassExpr::c_l();
        assert_eq!(fiber_mul(&l, &l), FiberClassExpr::monomial(LL, ExactRational::one()));

        let a = &FiberClassExpr::one() + &l;
        let b = &FiberClassExpr::one() - &FiberClassExpr::c_omega().scaled(&half());
        let mut expected = FiberClassExpr::one();
        expected = &expected + &l;
        expected = &expected + &FiberClassExpr::monomial(Omega, -half());
        expected = &expected + &FiberClassExpr::monomial(LOmega, -half());
        assert_eq!(fiber_mul(&a, &b), expected);

        let ll = FiberClassExpr::monomial(LL, ExactRational::one());
        assert_eq!(fiber_mul(&ll, &FiberClassExpr::c_omega()), FiberClassExpr::zero());
        assert_eq!(fiber_mul(&FiberClassExpr::c2_omega(), &l), FiberClassExpr::zero());
    }

    #[test]
    fn chern_characters() {
        let two_l = FiberClassExpr::c_l().scaled(&ExactRational::from(2));
        let ch = chern_character_line(&two_l).unwrap();
        let expected = &(&FiberClassExpr::one() + &two_l)
            + &FiberClassExpr::monomial(LL, ExactRational::from(2));
        assert_eq!(ch, expected);

        let lp = &FiberClassExpr::c_l() + &FiberClassExpr::c_p();
        let ch = chern_character_line(&lp).unwrap();
        assert_eq!(ch.coeff(LL), half());
        assert_eq!(ch.coeff(LP), ExactRational::one());
        assert_eq!(ch.coeff(PP), half());
        assert_eq!(ch.coeff(L), ExactRational::one());

        assert_eq!(chern_character_line(&FiberClassExpr::zero()).unwrap(), FiberClassExpr::one());
        assert!(chern_character_line(&FiberClassExpr::one()).is_err());
    }

    #[test]
    fn todd() {
        let t = todd_factor();
        assert_eq!(t.coeff(Omega), -half());
        assert_eq!(t.coeff(C2Omega), ExactRational::frac(1, 12));
        assert_eq!(t.coeff(OmegaOmega), ExactRational::frac(1, 12));
        assert_eq!(t.coeff(One), ExactRational::one());
    }

    #[test]
    fn pushforward_rules() {
        let mumford = &FiberClassExpr::monomial(OmegaOmega, ExactRational::frac(1, 12))
            + &FiberClassExpr::monomial(C2Omega, ExactRational::frac(1, 12));
        assert_eq!(
            fiber_pushforward_deg1(&mumford).unwrap(),
            BaseClassExpr::generator(BaseGenerator::Lambda)
        );
        let pp = FiberClassExpr::monomial(PP, ExactRational::one());
        assert_eq!(
            fiber_pushforward_deg1(&pp).unwrap(),
            BaseClassExpr::zero().plus(BaseGenerator::D0Ram, -half())
        );
        assert!(fiber_pushforward_deg1(&FiberClassExpr::c_l()).unwrap().is_zero());
        assert!(fiber_pushforward_deg1(&FiberClassExpr::monomial(POmega, ExactRational::one()))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn lone_mumford_terms_are_rejected() {
        assert!(matches!(
            fiber_pushforward_deg1(&FiberClassExpr::monomial(OmegaOmega, ExactRational::one())),
            Err(Error::UnpushableMonomial(_))
        ));
        assert!(matches!(
            fiber_pushforward_deg1(&FiberClassExpr::c2_omega()),
            Err(Error::UnpushableMonomial(_))
        ));
    }

    #[test]
    fn bundle_first_chern_classes() {
        use BaseGenerator::*;
        let sq = c1_pushforward_bundle(PushforwardBundle::LSquared).unwrap();
        let expected = BaseClassExpr::generator(Lambda)
            .plus(A, ExactRational::from(2))
            .plus(B, ExactRational::from(-1));
        assert_eq!(sq, expected);
        assert_eq!(sq.to_string(), "λ + 2*a - b");

        let tw = c1_pushforward_bundle(PushforwardBundle::LTwisted).unwrap();
        let expected = BaseClassExpr::generator(Lambda)
            .plus(A, half())
            .plus(B, -half())
            .plus(D0Ram, ExactRational::frac(-1, 4))
            .plus(D, ExactRational::one());
        assert_eq!(tw, expected);

        assert_eq!(
            c1_pushforward_bundle(PushforwardBundle::Trivial).unwrap(),
            BaseClassExpr::generator(Lambda)
        );
        assert_eq!(
            c1_pushforward_bundle(PushforwardBundle::LPlain).unwrap(),
            BaseClassExpr::generator(C)
        );
    }

    const MONOMIALS: [FiberMonomial; 11] =
        [One, L, P, Omega, LL, LP, LOmega, PP, POmega, OmegaOmega, C2Omega];

    fn arb_expr() -> impl Strategy<Value = FiberClassExpr> {
        proptest::collection::vec(-20i64..20, 11).prop_map(|cs| {
            MONOMIALS
                .iter()
                .zip(cs)
                .fold(FiberClassExpr::zero(), |acc, (m, c)| {
                    &acc + &FiberClassExpr::monomial(*m, ExactRational::from(c))
                })
        })
    }

    // Pushable expressions: cω² and c2Ω tied together.
    fn arb_pushable() -> impl Strategy<Value = FiberClassExpr> {
        (arb_expr(), -20i64..20).prop_map(|(e, m)| {
            let m = ExactRational::from(m);
            let mut out = FiberClassExpr::zero();
            for (mono, c) in e.terms() {
                if mono != OmegaOmega && mono != C2Omega {
                    out = &out + &FiberClassExpr::monomial(mono, c.clone());
                }
            }
            &(&out + &FiberClassExpr::monomial(OmegaOmega, m.clone()))
                + &FiberClassExpr::monomial(C2Omega, m)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn mul_commutes(x in arb_expr(), y in arb_expr()) {
            prop_assert_eq!(fiber_mul(&x, &y), fiber_mul(&y, &x));
        }

        #[test]
        fn mul_associates(x in arb_expr(), y in arb_expr(), z in arb_expr()) {
            prop_assert_eq!(fiber_mul(&fiber_mul(&x, &y), &z), fiber_mul(&x, &fiber_mul(&y, &z)));
        }

        #[test]
        fn pushforward_linear(x in arb_pushable(), y in arb_pushable(), a in -9i64..9, b in -9i64..9) {
            let (a, b) = (ExactRational::from(a), ExactRational::from(b));
            let combo = &x.scaled(&a) + &y.scaled(&b);
            let lhs = fiber_pushforward_deg1(&combo).unwrap();
            let rhs = &fiber_pushforward_deg1(&x).unwrap().scaled(&a)
                + &fiber_pushforward_deg1(&y).unwrap().scaled(&b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn only_degree_two_survives(x in arb_expr()) {
            for d in 0..2 {
                prop_assert!(fiber_pushforward_deg1(&x.homogeneous_part(d)).unwrap().is_zero());
            }
        }
    }
}
