//! Brill-Noether bookkeeping: ρ, the number of linear series when ρ = 0,
//! Serre duality, Riemann-Roch, and the dimension counts behind the
//! multiplication map and the base-point-free pencil trick.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Genus, projective dimension and degree of a linear series g^r_d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BNParams {
    pub g: i64,
    pub r: i64,
    pub d: i64,
}

impl BNParams {
    pub fn new(g: i64, r: i64, d: i64) -> Result<Self> {
        if g < 2 || r < 0 || d < 0 {
            return Err(Error::InvalidParams(format!(
                "need g >= 2, r >= 0, d >= 0; got ({g}, {r}, {d})"
            )));
        }
        Ok(Self { g, r, d })
    }

    /// `g - d + r`, which is h^1 of a complete g^r_d.
    pub fn h1(&self) -> i64 {
        self.g - self.d + self.r
    }
}

pub fn rho(p: &BNParams) -> i64 {
    p.g - (p.r + 1) * p.h1()
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// Number of g^r_d on a general curve when ρ = 0:
/// `g! · Π_{i=0}^{r} i! / Π_{i=0}^{r} (g-d+r+i)!`.
pub fn series_count(p: &BNParams) -> Result<BigInt> {
    let rho = rho(p);
    if rho != 0 {
        return Err(Error::RhoNonzero(rho));
    }
    let num = (0..=p.r).fold(factorial(p.g), |acc, i| acc * factorial(i));
    let den = (0..=p.r).fold(BigInt::from(1), |acc, i| acc * factorial(p.h1() + i));
    let (n, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::NonIntegralCount(rem.to_string()));
    }
    Ok(n)
}

/// The residual series `|K - D|`: `(g, g-d+r-1, 2g-2-d)`.
pub fn serre_dual(p: &BNParams) -> Result<BNParams> {
    let r = p.g - p.d + p.r - 1;
    let d = 2 * p.g - 2 - p.d;
    if r < 0 || d < 0 {
        return Err(Error::InvalidParams(format!(
            "Serre dual of ({}, {}, {}) would be ({}, {r}, {d})",
            p.g, p.r, p.d, p.g
        )));
    }
    BNParams::new(p.g, r, d)
}

/// `h^0 = d - g + 1 + h^1`.
pub fn riemann_roch_h0(g: i64, d: i64, h1: i64) -> Result<i64> {
    if h1 < 0 {
        return Err(Error::InvalidParams(format!("h1 must be >= 0, got {h1}")));
    }
    let h0 = d - g + 1 + h1;
    if h0 < 0 {
        return Err(Error::NegativeSectionCount(h0));
    }
    Ok(h0)
}

/// Dimensions on both sides of `Sym²H⁰(L) ⊕ Sym²H⁰(L⊗η) → H⁰(L⊗²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionBalance {
    pub lhs: i64,
    pub rhs: i64,
}

impl DimensionBalance {
    pub fn is_balanced(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn surplus(&self) -> i64 {
        self.lhs - self.rhs
    }
}

fn sym2_dim(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// The target assumes `h¹(L⊗²) = 0`, so `h⁰(L⊗²) = 2d - g + 1`.
pub fn mult_map_dimension_balance(g: i64, r: i64, d: i64, h0_twist: i64) -> Result<DimensionBalance> {
    let p = BNParams::new(g, r, d)?;
    let rho = rho(&p);
    if rho != 0 {
        return Err(Error::RhoNonzero(rho));
    }
    if h0_twist < 0 {
        return Err(Error::InvalidParams(format!("h0_twist must be >= 0, got {h0_twist}")));
    }
    Ok(DimensionBalance {
        lhs: sym2_dim(r + 1) + sym2_dim(h0_twist),
        rhs: riemann_roch_h0(g, 2 * d, 0)?,
    })
}

/// Dimension count at one step of the pencil-trick sequence
/// `0 → H⁰(ω⊗A^{-j-1}) → H⁰(A)⊗H⁰(ω⊗A^{-j}) → H⁰(ω⊗A^{-j+1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub j: i64,
    pub kernel: i64,
    pub middle: i64,
    pub target: i64,
    pub balanced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimChainReport {
    pub k: i64,
    pub r: i64,
    pub g_check: i64,
    /// `(j, h⁰(ω_D ⊗ A^{-j}))` for `j = 0..=r+1`.
    pub chain: Vec<(i64, i64)>,
    /// One entry for each `j <= r`.
    pub steps: Vec<ChainStep>,
}

impl DimChainReport {
    pub fn all_balanced(&self) -> bool {
        self.steps.iter().all(|s| s.balanced)
    }
}

/// Dimension chain for a curve `D` of genus `(k-1)(r+1)` with a pencil `A`
/// of degree `k`, where `h⁰(ω_D ⊗ A^{-j}) = (k-1)(r+1-j)`.
pub fn petri_chain(k: i64, r: i64) -> Result<DimChainReport> {
    if k < 3 {
        return Err(Error::InvalidParams(format!("need k >= 3, got {k}")));
    }
    if r < 1 {
        return Err(Error::InvalidParams(format!("need r >= 1, got {r}")));
    }
    let h0 = |j: i64| (k - 1) * (r + 1 - j);
    let chain = (0..=r + 1).map(|j| (j, h0(j))).collect();
    let steps = (0..=r)
        .map(|j| {
            let kernel = h0(j + 1);
            let middle = 2 * h0(j);
            let target = h0(j - 1);
            ChainStep {
                j,
                kernel,
                middle,
                target,
                balanced: middle - kernel == target,
            }
        })
        .collect();
    Ok(DimChainReport {
        k,
        r,
        g_check: (k - 1) * (r + 1),
        chain,
        steps,
    })
}

/// `h⁰(L⊗η)` on a general Wirtinger cover versus a general Prym curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta0ppJump {
    pub boundary_h0: i64,
    pub generic_h0: i64,
    pub jump: i64,
    /// False when the boundary value does not exceed the generic one.
    pub is_jump: bool,
}

/// On Δ0'' we have `h⁰(L⊗η) = h⁰(ν^*L) - 1 = r`, against the generic value 2.
pub fn delta0pp_jump(r: i64) -> Result<Delta0ppJump> {
    if r < 1 {
        return Err(Error::InvalidParams(format!("need r >= 1, got {r}")));
    }
    let boundary_h0 = (r + 1) - 1;
    let generic_h0 = 2;
    let jump = boundary_h0 - generic_h0;
    Ok(Delta0ppJump {
        boundary_h0,
        generic_h0,
        jump,
        is_jump: jump > 0,
    })
}
