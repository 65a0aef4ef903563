//! Divisor classes on the moduli space of stable curves and on the moduli
//! space of Prym curves, together with the forgetful map π between them.
//!
//! Classes are formal vectors over named basis elements. On the Prym side
//! the basis is λ (pulled back), the three components δ0', δ0'', δ0ram over
//! the irreducible boundary, and for `1 <= i <= g/2` the classes δ_i,
//! δ_{g-i} and δ_{i:g-i} over the reducible boundary.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::ExactRational;

/// A boundary class over Δ_i with `i >= 1`.
///
/// `Single(j)` is δ_j for `1 <= j <= g-1`, so it covers both δ_i and
/// δ_{g-i}. `Pair(i, g-i)` is δ_{i:g-i}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundaryKey {
    Single(u32),
    Pair(u32, u32),
}

impl BoundaryKey {
    pub fn is_valid_for(&self, genus: u32) -> bool {
        match *self {
            BoundaryKey::Single(j) => j >= 1 && j < genus,
            BoundaryKey::Pair(i, j) => i >= 1 && i <= j && i + j == genus,
        }
    }

    /// Index of the boundary divisor of the moduli of curves lying under this key.
    pub fn base_index(&self, genus: u32) -> u32 {
        match *self {
            BoundaryKey::Single(j) => j.min(genus - j),
            BoundaryKey::Pair(i, _) => i,
        }
    }

    /// The three keys over Δ_i: δ_i, δ_{g-i}, δ_{i:g-i}.
    pub fn over(i: u32, genus: u32) -> [BoundaryKey; 3] {
        [
            BoundaryKey::Single(i),
            BoundaryKey::Single(genus - i),
            BoundaryKey::Pair(i, genus - i),
        ]
    }
}

impl fmt::Display for BoundaryKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryKey::Single(j) => write!(f, "{j}"),
            BoundaryKey::Pair(i, j) => write!(f, "{i}:{j}"),
        }
    }
}

impl FromStr for BoundaryKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "boundary key",
            input: s.to_string(),
        };
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        match s.split_once(':') {
            None => Ok(BoundaryKey::Single(num(s)?)),
            Some((i, j)) => Ok(BoundaryKey::Pair(num(i)?, num(j)?)),
        }
    }
}

impl Serialize for BoundaryKey {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BoundaryKey {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Addresses one coordinate of a [`PrymDivisorClass`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrymBasis {
    Lambda,
    D0Prime,
    D0DoublePrime,
    D0Ram,
    Boundary(BoundaryKey),
}

impl fmt::Display for PrymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrymBasis::Lambda => write!(f, "λ"),
            PrymBasis::D0Prime => write!(f, "δ0'"),
            PrymBasis::D0DoublePrime => write!(f, "δ0''"),
            PrymBasis::D0Ram => write!(f, "δ0ram"),
            PrymBasis::Boundary(k) => write!(f, "δ{k}"),
        }
    }
}

fn prune<K: Ord>(map: &mut BTreeMap<K, ExactRational>) {
    map.retain(|_, v| !v.is_zero());
}

fn check_genus(left: u32, right: u32) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::GenusMismatch { left, right })
    }
}

/// A divisor class `a λ + Σ_i c_i δ_i` on the moduli space of genus-g curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ModuliClassJson", into = "ModuliClassJson")]
pub struct ModuliDivisorClass {
    genus: u32,
    lambda: ExactRational,
    delta: BTreeMap<u32, ExactRational>,
}

#[derive(Serialize, Deserialize)]
struct ModuliClassJson {
    genus: u32,
    lambda: ExactRational,
    #[serde(default)]
    delta: BTreeMap<u32, ExactRational>,
}

impl TryFrom<ModuliClassJson> for ModuliDivisorClass {
    type Error = Error;
    fn try_from(j: ModuliClassJson) -> Result<Self> {
        let mut c = ModuliDivisorClass::zero(j.genus)?.with_lambda(j.lambda);
        for (i, v) in j.delta {
            c = c.with_delta(i, v)?;
        }
        Ok(c)
    }
}

impl From<ModuliDivisorClass> for ModuliClassJson {
    fn from(c: ModuliDivisorClass) -> Self {
        ModuliClassJson {
            genus: c.genus,
            lambda: c.lambda,
            delta: c.delta,
        }
    }
}

impl ModuliDivisorClass {
    pub fn zero(genus: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall { genus, min: 2 });
        }
        Ok(Self {
            genus,
            lambda: ExactRational::zero(),
            delta: BTreeMap::new(),
        })
    }

    pub fn lambda_class(genus: u32) -> Result<Self> {
        Ok(Self::zero(genus)?.with_lambda(ExactRational::one()))
    }

    pub fn delta_class(genus: u32, i: u32) -> Result<Self> {
        Self::zero(genus)?.with_delta(i, ExactRational::one())
    }

    pub fn with_lambda(mut self, v: ExactRational) -> Self {
        self.lambda = v;
        self
    }

    pub fn with_delta(mut self, i: u32, v: ExactRational) -> Result<Self> {
        if i > self.genus / 2 {
            return Err(Error::InvalidBoundaryKey {
                key: format!("δ{i}"),
                genus: self.genus,
            });
        }
        self.delta.insert(i, v);
        prune(&mut self.delta);
        Ok(self)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn lambda(&self) -> &ExactRational {
        &self.lambda
    }

    pub fn delta(&self, i: u32) -> ExactRational {
        self.delta.get(&i).cloned().unwrap_or_default()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_genus(self.genus, other.genus)?;
        let mut out = self.clone();
        out.lambda += &other.lambda;
        for (i, v) in &other.delta {
            *out.delta.entry(*i).or_default() += v;
        }
        prune(&mut out.delta);
        Ok(out)
    }

    pub fn scaled(&self, s: &ExactRational) -> Self {
        let mut out = self.clone();
        out.lambda = &out.lambda * s;
        out.delta.values_mut().for_each(|v| *v = &*v * s);
        prune(&mut out.delta);
        out
    }
}

/// A divisor class on the moduli space of genus-g Prym curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PrymClassJson", into = "PrymClassJson")]
pub struct PrymDivisorClass {
    genus: u32,
    lambda: ExactRational,
    d0p: ExactRational,
    d0pp: ExactRational,
    d0ram: ExactRational,
    boundary: BTreeMap<BoundaryKey, ExactRational>,
}

#[derive(Serialize, Deserialize)]
struct PrymClassJson {
    genus: u32,
    lambda: ExactRational,
    d0p: ExactRational,
    d0pp: ExactRational,
    d0ram: ExactRational,
    #[serde(default)]
    boundary: BTreeMap<BoundaryKey, ExactRational>,
}

impl TryFrom<PrymClassJson> for PrymDivisorClass {
    type Error = Error;
    fn try_from(j: PrymClassJson) -> Result<Self> {
        let mut c = PrymDivisorClass::four_term(j.genus, j.lambda, j.d0p, j.d0pp, j.d0ram)?;
        for (k, v) in j.boundary {
            c.set(PrymBasis::Boundary(k), v)?;
        }
        Ok(c)
    }
}

impl From<PrymDivisorClass> for PrymClassJson {
    fn from(c: PrymDivisorClass) -> Self {
        PrymClassJson {
            genus: c.genus,
            lambda: c.lambda,
            d0p: c.d0p,
            d0pp: c.d0pp,
            d0ram: c.d0ram,
            boundary: c.boundary,
        }
    }
}

impl PrymDivisorClass {
    pub fn zero(genus: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall { genus, min: 2 });
        }
        Ok(Self {
            genus,
            lambda: ExactRational::zero(),
            d0p: ExactRational::zero(),
            d0pp: ExactRational::zero(),
            d0ram: ExactRational::zero(),
            boundary: BTreeMap::new(),
        })
    }

    /// `λ·lambda + δ0'·d0p + δ0''·d0pp + δ0ram·d0ram` with no higher boundary.
    pub fn four_term(
        genus: u32,
        lambda: ExactRational,
        d0p: ExactRational,
        d0pp: ExactRational,
        d0ram: ExactRational,
    ) -> Result<Self> {
        let mut c = Self::zero(genus)?;
        c.lambda = lambda;
        c.d0p = d0p;
        c.d0pp = d0pp;
        c.d0ram = d0ram;
        Ok(c)
    }

    pub fn basis(genus: u32, e: PrymBasis) -> Result<Self> {
        let mut c = Self::zero(genus)?;
        c.set(e, ExactRational::one())?;
        Ok(c)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// All coordinates valid in this genus, in a fixed order.
    pub fn basis_elements(genus: u32) -> Vec<PrymBasis> {
        let mut v = vec![
            PrymBasis::Lambda,
            PrymBasis::D0Prime,
            PrymBasis::D0DoublePrime,
            PrymBasis::D0Ram,
        ];
        for i in 1..=genus / 2 {
            for k in BoundaryKey::over(i, genus) {
                let e = PrymBasis::Boundary(k);
                if !v.contains(&e) {
                    v.push(e);
                }
            }
        }
        v
    }

    pub fn coeff(&self, e: PrymBasis) -> ExactRational {
        match e {
            PrymBasis::Lambda => self.lambda.clone(),
            PrymBasis::D0Prime => self.d0p.clone(),
            PrymBasis::D0DoublePrime => self.d0pp.clone(),
            PrymBasis::D0Ram => self.d0ram.clone(),
            PrymBasis::Boundary(k) => self.boundary.get(&k).cloned().unwrap_or_default(),
        }
    }

    pub fn lambda(&self) -> &ExactRational {
        &self.lambda
    }

    pub fn d0p(&self) -> &ExactRational {
        &self.d0p
    }

    pub fn d0pp(&self) -> &ExactRational {
        &self.d0pp
    }

    pub fn d0ram(&self) -> &ExactRational {
        &self.d0ram
    }

    /// Nonzero higher-boundary coefficients.
    pub fn boundary(&self) -> &BTreeMap<BoundaryKey, ExactRational> {
        &self.boundary
    }

    pub fn set(&mut self, e: PrymBasis, v: ExactRational) -> Result<()> {
        match e {
            PrymBasis::Lambda => self.lambda = v,
            PrymBasis::D0Prime => self.d0p = v,
            PrymBasis::D0DoublePrime => self.d0pp = v,
            PrymBasis::D0Ram => self.d0ram = v,
            PrymBasis::Boundary(k) => {
                if !k.is_valid_for(self.genus) {
                    return Err(Error::InvalidBoundaryKey {
                        key: k.to_string(),
                        genus: self.genus,
                    });
                }
                self.boundary.insert(k, v);
                prune(&mut self.boundary);
            }
        }
        Ok(())
    }

    pub fn add_to(&mut self, e: PrymBasis, v: &ExactRational) -> Result<()> {
        let cur = self.coeff(e);
        self.set(e, cur + v)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_genus(self.genus, other.genus)?;
        let mut out = self.clone();
        for e in Self::basis_elements(self.genus) {
            out.add_to(e, &other.coeff(e))?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scaled(&-ExactRational::one()))
    }

    pub fn scaled(&self, s: &ExactRational) -> Self {
        let mut out = self.clone();
        out.lambda = &out.lambda * s;
        out.d0p = &out.d0p * s;
        out.d0pp = &out.d0pp * s;
        out.d0ram = &out.d0ram * s;
        out.boundary.values_mut().for_each(|v| *v = &*v * s);
        prune(&mut out.boundary);
        out
    }

    /// Number of nonzero coordinates.
    pub fn support_size(&self) -> usize {
        [&self.lambda, &self.d0p, &self.d0pp, &self.d0ram]
            .into_iter()
            .filter(|c| !c.is_zero())
            .count()
            + self.boundary.len()
    }

    /// True when only λ, δ0', δ0'', δ0ram carry coefficients.
    pub fn is_four_term(&self) -> bool {
        self.boundary.is_empty()
    }
}

impl fmt::Display for PrymDivisorClass {
    /// Renders as e.g. `13*λ - 2*δ0' - 2*δ0'' - 3*δ0ram - 3*δ1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, ExactRational)> = Self::basis_elements(self.genus)
            .into_iter()
            .map(|e| (e.to_string(), self.coeff(e)))
            .collect();
        write_linear_combination(f, &terms)
    }
}

/// Writes `c1*x1 + c2*x2 - ...`, skipping zero terms and unit coefficients.
pub(crate) fn write_linear_combination(
    f: &mut fmt::Formatter<'_>,
    terms: &[(String, ExactRational)],
) -> fmt::Result {
    let mut first = true;
    for (name, c) in terms {
        if c.is_zero() {
            continue;
        }
        let sign = match (first, c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        first = false;
        let mag = c.abs();
        if mag == ExactRational::one() {
            write!(f, "{sign}{name}")?;
        } else {
            write!(f, "{sign}{mag}*{name}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// `2^(2g) - 1`, the degree of π.
pub fn degree_of_pi(genus: u32) -> BigInt {
    (BigInt::from(1) << (2 * genus as usize)) - 1
}

/// `2^(2g-2)`
fn square_roots(genus: u32) -> BigInt {
    BigInt::from(1) << (2 * genus as usize - 2)
}

/// π^*: λ ↦ λ, δ0 ↦ δ0' + δ0'' + 2δ0ram, δ_i ↦ δ_i + δ_{g-i} + δ_{i:g-i}.
pub fn pullback_pi(c: &ModuliDivisorClass) -> PrymDivisorClass {
    let g = c.genus;
    let mut out = PrymDivisorClass::zero(g).expect("genus already validated");
    out.lambda = c.lambda.clone();
    let d0 = c.delta(0);
    out.d0p = d0.clone();
    out.d0pp = d0.clone();
    out.d0ram = &d0 * ExactRational::from(2);
    for (&i, v) in c.delta.range(1..) {
        for k in BoundaryKey::over(i, g) {
            out.add_to(PrymBasis::Boundary(k), v)
                .expect("keys over Δ_i are valid");
        }
    }
    out
}

/// Multiplicities for pushing the higher boundary classes down along π.
///
/// These are not part of the standard relations, so none are set by default
/// and [`pushforward_pi`] refuses classes that need them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HigherBoundaryMultiplicities {
    pub multiplicity: BTreeMap<BoundaryKey, ExactRational>,
}

/// π_* with the default (empty) higher-boundary rules.
pub fn pushforward_pi(c: &PrymDivisorClass) -> Result<ModuliDivisorClass> {
    pushforward_pi_with(c, &HigherBoundaryMultiplicities::default())
}

/// π_*: λ ↦ (2^{2g}-1)λ, δ0' ↦ 2(2^{2g-2}-1)δ0, δ0'' ↦ δ0, δ0ram ↦ 2^{2g-2}δ0.
/// A higher boundary key `k` maps to `rules[k]·δ_i` when configured.
pub fn pushforward_pi_with(
    c: &PrymDivisorClass,
    rules: &HigherBoundaryMultiplicities,
) -> Result<ModuliDivisorClass> {
    let g = c.genus;
    let census = boundary_fiber_census(g)?;
    let mut out = ModuliDivisorClass::zero(g)?;
    out.lambda = &c.lambda * ExactRational::integer(degree_of_pi(g));
    let d0 = &c.d0p * ExactRational::integer(census.count_d0p.clone())
        + &c.d0pp * ExactRational::integer(census.count_d0pp.clone())
        + &c.d0ram * ExactRational::integer(census.count_d0ram.clone());
    out = out.with_delta(0, d0)?;
    for (k, v) in &c.boundary {
        let m = rules
            .multiplicity
            .get(k)
            .ok_or_else(|| Error::UnsupportedPushforward(format!("δ{k}")))?;
        let i = k.base_index(g);
        let cur = out.delta(i);
        out = out.with_delta(i, cur + v * m)?;
    }
    Ok(out)
}

/// `13λ - 2(δ0' + δ0'') - 3δ0ram - 2Σ(δ_i + δ_{g-i} + δ_{i:g-i}) - (δ_1 + δ_{g-1} + δ_{1:g-1})`.
///
/// For even g the two single keys over Δ_{g/2} coincide and their
/// contributions add.
pub fn canonical_class_prym(genus: u32) -> Result<PrymDivisorClass> {
    if genus < 4 {
        return Err(Error::GenusTooSmall { genus, min: 4 });
    }
    let mut k = PrymDivisorClass::four_term(
        genus,
        ExactRational::from(13),
        ExactRational::from(-2),
        ExactRational::from(-2),
        ExactRational::from(-3),
    )?;
    let two = ExactRational::from(-2);
    for i in 1..=genus / 2 {
        for key in BoundaryKey::over(i, genus) {
            k.add_to(PrymBasis::Boundary(key), &two)?;
        }
    }
    for key in BoundaryKey::over(1, genus) {
        k.add_to(PrymBasis::Boundary(key), &-ExactRational::one())?;
    }
    Ok(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlopeVerdict {
    Pass,
    Fail,
    NotApplicable,
}

/// One ratio test `a / b < bound` for a class `aλ - bδ - ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeCheck {
    pub coefficient: String,
    pub lambda_coeff: ExactRational,
    pub boundary_coeff: ExactRational,
    pub ratio: Option<ExactRational>,
    pub bound: ExactRational,
    pub verdict: SlopeVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeReport {
    pub genus: u32,
    pub checks: Vec<SlopeCheck>,
}

impl SlopeReport {
    pub fn check(&self, coefficient: &str) -> Option<&SlopeCheck> {
        self.checks.iter().find(|c| c.coefficient == coefficient)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == SlopeVerdict::Pass)
    }
}

/// Compares the class against the canonical-class slopes: 13/2 for δ0', δ0''
/// and the generic higher boundary, 13/3 for δ0ram and the keys over Δ_1.
///
/// Up to genus 23 only λ, δ0', δ0'', δ0ram are inspected; above that every
/// higher boundary key is tested too.
pub fn slope_inequalities(d: &PrymDivisorClass) -> SlopeReport {
    let g = d.genus;
    let half = ExactRational::frac(13, 2);
    let third = ExactRational::frac(13, 3);
    let mut targets = vec![
        (PrymBasis::D0Prime, half.clone()),
        (PrymBasis::D0DoublePrime, half.clone()),
        (PrymBasis::D0Ram, third.clone()),
    ];
    if g > 23 {
        let over_one = BoundaryKey::over(1, g);
        for e in PrymDivisorClass::basis_elements(g).into_iter().skip(4) {
            let bound = match e {
                PrymBasis::Boundary(k) if over_one.contains(&k) => third.clone(),
                _ => half.clone(),
            };
            targets.push((e, bound));
        }
    }
    let a = d.lambda.clone();
    let checks = targets
        .into_iter()
        .map(|(e, bound)| {
            let b = -d.coeff(e);
            let (ratio, verdict) = if b.is_positive() {
                let r = &a / &b;
                let v = if r < bound {
                    SlopeVerdict::Pass
                } else {
                    SlopeVerdict::Fail
                };
                (Some(r), v)
            } else {
                (None, SlopeVerdict::NotApplicable)
            };
            SlopeCheck {
                coefficient: e.to_string(),
                lambda_coeff: a.clone(),
                boundary_coeff: b,
                ratio,
                bound,
                verdict,
            }
        })
        .collect();
    SlopeReport { genus: g, checks }
}

/// How many Prym structures of each boundary type lie over a general
/// one-nodal irreducible curve of arithmetic genus g.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberCensus {
    pub genus: u32,
    #[serde(with = "bigint_string")]
    pub count_d0p: BigInt,
    #[serde(with = "bigint_string")]
    pub count_d0pp: BigInt,
    #[serde(with = "bigint_string")]
    pub count_d0ram: BigInt,
}

impl FiberCensus {
    /// Distinct Prym structures over the curve.
    pub fn distinct_total(&self) -> BigInt {
        &self.count_d0p + &self.count_d0pp + &self.count_d0ram
    }

    /// Sheets of π over the curve; π is simply ramified along δ0ram.
    pub fn sheet_total(&self) -> BigInt {
        &self.count_d0p + &self.count_d0pp + 2 * &self.count_d0ram
    }
}

pub fn boundary_fiber_census(genus: u32) -> Result<FiberCensus> {
    if genus < 2 {
        return Err(Error::GenusTooSmall { genus, min: 2 });
    }
    let roots = square_roots(genus);
    Ok(FiberCensus {
        genus,
        count_d0p: 2 * (&roots - 1),
        count_d0pp: BigInt::from(1),
        count_d0ram: roots,
    })
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> ExactRational {
        ExactRational::from(n)
    }

    #[test]
    fn pullback_delta0() {
        let c = pullback_pi(&ModuliDivisorClass::delta_class(15, 0).unwrap());
        let expected = PrymDivisorClass::four_term(15, q(0), q(1), q(1), q(2)).unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn pullback_lambda_and_zero() {
        let l = pullback_pi(&ModuliDivisorClass::lambda_class(15).unwrap());
        assert_eq!(l, PrymDivisorClass::basis(15, PrymBasis::Lambda).unwrap());
        let z = pullback_pi(&ModuliDivisorClass::zero(15).unwrap());
        assert_eq!(z, PrymDivisorClass::zero(15).unwrap());
    }

    #[test]
    fn pullback_higher_boundary() {
        let c = pullback_pi(&ModuliDivisorClass::delta_class(15, 3).unwrap());
        assert_eq!(c.coeff(PrymBasis::Boundary(BoundaryKey::Single(3))), q(1));
        assert_eq!(c.coeff(PrymBasis::Boundary(BoundaryKey::Single(12))), q(1));
        assert_eq!(c.coeff(PrymBasis::Boundary(BoundaryKey::Pair(3, 12))), q(1));
        assert_eq!(c.support_size(), 3);
    }

    #[test]
    fn pushforward_rules() {
        let pp = PrymDivisorClass::basis(15, PrymBasis::D0DoublePrime).unwrap();
        assert_eq!(pushforward_pi(&pp).unwrap().delta(0), q(1));
        let ram = PrymDivisorClass::basis(15, PrymBasis::D0Ram).unwrap();
        assert_eq!(
            pushforward_pi(&ram).unwrap().delta(0),
            ExactRational::integer(BigInt::from(1) << 28)
        );
        let p = PrymDivisorClass::basis(15, PrymBasis::D0Prime).unwrap();
        assert_eq!(
            pushforward_pi(&p).unwrap().delta(0),
            ExactRational::integer(2 * ((BigInt::from(1) << 28) - 1))
        );
    }

    #[test]
    fn pushforward_of_higher_boundary_is_unsupported_by_default() {
        let c = PrymDivisorClass::basis(15, PrymBasis::Boundary(BoundaryKey::Pair(2, 13))).unwrap();
        assert!(matches!(pushforward_pi(&c), Err(Error::UnsupportedPushforward(_))));
        let mut rules = HigherBoundaryMultiplicities::default();
        rules.multiplicity.insert(BoundaryKey::Pair(2, 13), q(5));
        assert_eq!(pushforward_pi_with(&c, &rules).unwrap().delta(2), q(5));
    }

    #[test]
    fn canonical_class_genus_15() {
        let k = canonical_class_prym(15).unwrap();
        assert_eq!(k.lambda(), &q(13));
        assert_eq!(k.d0ram(), &q(-3));
        assert_eq!(k.d0p(), &q(-2));
        assert_eq!(k.coeff(PrymBasis::Boundary(BoundaryKey::Single(1))), q(-3));
        assert_eq!(k.coeff(PrymBasis::Boundary(BoundaryKey::Single(14))), q(-3));
        assert_eq!(k.coeff(PrymBasis::Boundary(BoundaryKey::Pair(1, 14))), q(-3));
        assert_eq!(k.coeff(PrymBasis::Boundary(BoundaryKey::Single(2))), q(-2));
        assert_eq!(k.coeff(PrymBasis::Boundary(BoundaryKey::Pair(7, 8))), q(-2));
    }

    #[test]
    fn canonical_class_needs_genus_four() {
        assert_eq!(
            canonical_class_prym(3),
            Err(Error::GenusTooSmall { genus: 3, min: 4 })
        );
    }

    #[test]
    fn canonical_class_support_odd_genus() {
        for g in (5..=31).step_by(2) {
            let k = canonical_class_prym(g).unwrap();
            assert_eq!(k.support_size(), 3 * (g as usize / 2) + 4, "genus {g}");
        }
    }

    #[test]
    fn slopes_of_d15_2() {
        let d = PrymDivisorClass::four_term(15, q(5808), q(-924), q(-924), q(-990)).unwrap();
        let r = slope_inequalities(&d);
        let p = r.check("δ0'").unwrap();
        assert_eq!(p.ratio, Some(ExactRational::frac(44, 7)));
        assert_eq!(p.verdict, SlopeVerdict::Pass);
        let ram = r.check("δ0ram").unwrap();
        assert_eq!(ram.ratio, Some(ExactRational::frac(88, 15)));
        assert_eq!(ram.verdict, SlopeVerdict::Fail);
        assert_eq!(r.checks.len(), 3);
    }

    #[test]
    fn slopes_of_virtual_d15() {
        let d = PrymDivisorClass::four_term(
            15,
            q(206382),
            q(-31020),
            q(-31020),
            ExactRational::frac(-115071, 2),
        )
        .unwrap();
        let r = slope_inequalities(&d);
        let p = r.check("δ0'").unwrap();
        assert_eq!(p.ratio, Some(ExactRational::frac(3127, 470)));
        assert_eq!(p.verdict, SlopeVerdict::Fail);
    }

    #[test]
    fn slopes_without_boundary_are_not_applicable() {
        let d = PrymDivisorClass::basis(15, PrymBasis::Lambda).unwrap();
        let r = slope_inequalities(&d);
        assert!(r.checks.iter().all(|c| c.verdict == SlopeVerdict::NotApplicable));
    }

    #[test]
    fn slopes_above_23_include_higher_boundary() {
        let k = canonical_class_prym(25).unwrap();
        let r = slope_inequalities(&k);
        assert_eq!(r.checks.len(), 3 + 3 * 12);
        assert!(r.checks.iter().all(|c| c.verdict == SlopeVerdict::Fail));
    }

    #[test]
    fn census_small_genus() {
        let c = boundary_fiber_census(2).unwrap();
        assert_eq!(
            (c.count_d0p.clone(), c.count_d0pp.clone(), c.count_d0ram.clone()),
            (BigInt::from(6), BigInt::from(1), BigInt::from(4))
        );
        assert_eq!(c.distinct_total(), BigInt::from(11));
        assert_eq!(c.sheet_total(), BigInt::from(15));
        assert!(boundary_fiber_census(1).is_err());
    }

    #[test]
    fn census_sheet_count_is_degree() {
        for g in 2..=30 {
            let c = boundary_fiber_census(g).unwrap();
            assert_eq!(c.sheet_total(), degree_of_pi(g));
            assert_eq!(c.count_d0pp, BigInt::from(1));
        }
    }

    #[test]
    fn projection_formula() {
        for g in 2..=30 {
            let deg = ExactRational::integer(degree_of_pi(g));
            let d0 = ModuliDivisorClass::delta_class(g, 0).unwrap();
            assert_eq!(pushforward_pi(&pullback_pi(&d0)).unwrap(), d0.scaled(&deg));
            let l = ModuliDivisorClass::lambda_class(g).unwrap();
            assert_eq!(pushforward_pi(&pullback_pi(&l)).unwrap(), l.scaled(&deg));
        }
    }

    #[test]
    fn json_shape() {
        let k = canonical_class_prym(15).unwrap();
        let v: serde_json::Value = serde_json::to_value(&k).unwrap();
        assert_eq!(v["genus"], 15);
        assert_eq!(v["lambda"], "13");
        assert_eq!(v["d0ram"], "-3");
        assert_eq!(v["boundary"]["1"], "-3");
        assert_eq!(v["boundary"]["1:14"], "-3");
        let back: PrymDivisorClass = serde_json::from_value(v).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn json_rejects_bad_keys() {
        let j = r#"{"genus":15,"lambda":"1","d0p":"0","d0pp":"0","d0ram":"0","boundary":{"2:12":"1"}}"#;
        assert!(serde_json::from_str::<PrymDivisorClass>(j).is_err());
    }

    #[test]
    fn genus_mismatch() {
        let a = PrymDivisorClass::zero(15).unwrap();
        let b = PrymDivisorClass::zero(14).unwrap();
        assert_eq!(a.try_add(&b), Err(Error::GenusMismatch { left: 15, right: 14 }));
    }

    fn arb_moduli(g: u32) -> impl Strategy<Value = ModuliDivisorClass> {
        proptest::collection::vec(-1000i64..1000, (g / 2 + 2) as usize).prop_map(move |v| {
            let mut c = ModuliDivisorClass::zero(g).unwrap().with_lambda(q(v[0]));
            for (i, x) in v[1..].iter().enumerate() {
                c = c.with_delta(i as u32, q(*x)).unwrap();
            }
            c
        })
    }

    fn arb_prym_four(g: u32) -> impl Strategy<Value = PrymDivisorClass> {
        proptest::collection::vec(-1000i64..1000, 4)
            .prop_map(move |v| PrymDivisorClass::four_term(g, q(v[0]), q(v[1]), q(v[2]), q(v[3])).unwrap())
    }

    proptest! {
        #[test]
        fn pullback_is_linear(x in arb_moduli(15), y in arb_moduli(15), s in -50i64..50) {
            let s = q(s);
            let lhs = pullback_pi(&x.scaled(&s).try_add(&y).unwrap());
            let rhs = pullback_pi(&x).scaled(&s).try_add(&pullback_pi(&y)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pushforward_is_linear(x in arb_prym_four(15), y in arb_prym_four(15), s in -50i64..50) {
            let s = q(s);
            let lhs = pushforward_pi(&x.scaled(&s).try_add(&y).unwrap()).unwrap();
            let rhs = pushforward_pi(&x).unwrap().scaled(&s)
                .try_add(&pushforward_pi(&y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
