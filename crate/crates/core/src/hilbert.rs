//! Hilbert polynomials and section counts read off a graded free
//! resolution of an ideal sheaf on projective space.
//!
//! Two regimes are kept apart. The Hilbert polynomial uses the polynomial
//! extension of `binom(t + m + n, n)`, valid for every `t` as an Euler
//! characteristic. Section counts use `h⁰(O(m)) = binom(m + n, n)` for
//! `m >= 0` and zero otherwise; they need vanishing of the cohomology that
//! could break exactness on global sections.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial_polynomial, ExactRational, RationalPolynomial};

/// `F_index = ⊕ O(twist)` in a resolution `... → F_1 → F_0 → I → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTerm {
    pub index: u32,
    pub twists: Vec<i64>,
}

/// A resolution of an ideal sheaf `I ⊂ O_{P^n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedFreeResolution {
    #[serde(rename = "ambient")]
    pub ambient_dim: u32,
    pub terms: Vec<ResolutionTerm>,
    /// The quotient is a surface embedded by its canonical system.
    #[serde(default)]
    pub canonical_embedding: bool,
}

pub const PFAFFIAN_BUILTIN: &str = "pfaffian_14_6";

impl GradedFreeResolution {
    /// `0 → O(-7) → O(-4)^7 → O(-3)^7 → I_S → 0` on P^5.
    pub fn pfaffian_14_6() -> Self {
        Self {
            ambient_dim: 5,
            terms: vec![
                ResolutionTerm {
                    index: 0,
                    twists: vec![-3; 7],
                },
                ResolutionTerm {
                    index: 1,
                    twists: vec![-4; 7],
                },
                ResolutionTerm {
                    index: 2,
                    twists: vec![-7],
                },
            ],
            canonical_embedding: true,
        }
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            PFAFFIAN_BUILTIN => Ok(Self::pfaffian_14_6()),
            _ => Err(Error::MalformedResolution(format!("unknown builtin {name:?}"))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.ambient_dim == 0 {
            return Err(Error::MalformedResolution("ambient dimension must be >= 1".into()));
        }
        for (pos, term) in self.terms.iter().enumerate() {
            if term.index as usize != pos {
                return Err(Error::MalformedResolution(format!(
                    "homological indices must run 0, 1, 2, ...; found {} at position {pos}",
                    term.index
                )));
            }
            if term.twists.is_empty() {
                return Err(Error::MalformedResolution(format!("term {pos} has no summands")));
            }
        }
        Ok(())
    }

}

fn sign(index: u32) -> ExactRational {
    if index.is_multiple_of(2) {
        ExactRational::one()
    } else {
        -ExactRational::one()
    }
}

/// Hilbert polynomial of `O_{P^n}(t + m)`.
fn line_hilbert_polynomial(n: u32, m: i64) -> RationalPolynomial {
    binomial_polynomial(m + n as i64, n as i64).expect("n >= 0")
}

fn binom(top: i64, n: u32) -> BigInt {
    let p = binomial_polynomial(0, n as i64).expect("n >= 0");
    p.eval_int(top).to_integer().expect("binomial values are integers")
}

/// `h⁰(O_{P^n}(m))`
pub fn h0_line(n: u32, m: i64) -> BigInt {
    if m < 0 {
        BigInt::zero()
    } else {
        binom(m + n as i64, n)
    }
}

/// `hⁿ(O_{P^n}(m)) = h⁰(O(-m-n-1))`
fn top_cohomology_line(n: u32, m: i64) -> BigInt {
    h0_line(n, -m - n as i64 - 1)
}

/// Hilbert polynomial of `O/I`.
pub fn hilbert_polynomial_of_quotient(res: &GradedFreeResolution) -> Result<RationalPolynomial> {
    res.validate()?;
    let n = res.ambient_dim;
    let mut ideal = RationalPolynomial::zero();
    for term in &res.terms {
        let s = sign(term.index);
        for &tw in &term.twists {
            ideal = &ideal + &line_hilbert_polynomial(n, tw).scale(&s);
        }
    }
    Ok(&line_hilbert_polynomial(n, 0) - &ideal)
}

/// Besides h⁰, only top cohomology of a line bundle on P^n can be nonzero.
/// Splitting the resolution into short exact sequences, the alternating sum
/// of h⁰ is exact once `H^i(F_m(t)) = 0` for `1 <= i <= m + shift`; that
/// only bites for `i = n`, i.e. terms with `m + shift >= n`. `shift = 0`
/// covers `h⁰(I(t))`, `shift = 1` adds `H¹(I(t)) = 0`.
fn check_top_cohomology(res: &GradedFreeResolution, twist: i64, shift: usize) -> Result<()> {
    let n = res.ambient_dim;
    for term in &res.terms {
        let m = term.index as usize;
        if m + shift < n as usize {
            continue;
        }
        for &tw in &term.twists {
            if !top_cohomology_line(n, twist + tw).is_zero() {
                return Err(Error::SectionGuard {
                    twist,
                    reason: format!("H^{n}(O({})) != 0 in term {m}", twist + tw),
                });
            }
        }
    }
    Ok(())
}

/// `h⁰(I(t)) = Σ_m (-1)^m h⁰(F_m(t))`.
pub fn ideal_section_count(res: &GradedFreeResolution, twist: i64) -> Result<BigInt> {
    res.validate()?;
    check_top_cohomology(res, twist, 0)?;
    let n = res.ambient_dim;
    let mut total = BigInt::zero();
    for term in &res.terms {
        let s: BigInt = sign(term.index).to_integer().expect("±1");
        for &tw in &term.twists {
            total += &s * h0_line(n, twist + tw);
        }
    }
    Ok(total)
}

/// `h⁰(O/I(t)) = h⁰(O(t)) - h⁰(I(t))`, needing `H¹(I(t)) = 0` as well.
pub fn quotient_section_count(res: &GradedFreeResolution, twist: i64) -> Result<BigInt> {
    res.validate()?;
    check_top_cohomology(res, twist, 1)?;
    Ok(h0_line(res.ambient_dim, twist) - ideal_section_count(res, twist)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub degree: i64,
    pub chi_o: i64,
    /// Known only when the surface is canonically embedded; then
    /// `p_g = h⁰(O_S(1))`, `q = p_g + 1 - χ` and `K² = degree`.
    pub p_g: Option<i64>,
    pub q: Option<i64>,
    pub k_squared: Option<i64>,
    pub hilbert_poly: String,
}

fn to_i64(x: &ExactRational, what: &str) -> Result<i64> {
    x.to_integer()
        .and_then(|n| i64::try_from(n).ok())
        .ok_or_else(|| Error::MalformedResolution(format!("{what} = {x} is not a machine integer")))
}

pub fn surface_invariants(res: &GradedFreeResolution) -> Result<SurfaceInvariants> {
    let p = hilbert_polynomial_of_quotient(res)?;
    if p.degree() != Some(2) {
        return Err(Error::NotASurface(p.degree()));
    }
    let degree = to_i64(&(p.leading_coeff() * ExactRational::from(2)), "degree")?;
    let chi_o = to_i64(&p.coeff(0), "χ(O)")?;
    let (p_g, q, k_squared) = if res.canonical_embedding {
        let pg = i64::try_from(quotient_section_count(res, 1)?)
            .map_err(|_| Error::MalformedResolution("p_g overflows".into()))?;
        (Some(pg), Some(pg - (chi_o - 1)), Some(degree))
    } else {
        (None, None, None)
    };
    Ok(SurfaceInvariants {
        degree,
        chi_o,
        p_g,
        q,
        k_squared,
        hilbert_poly: p.to_string(),
    })
}

/// A general hyperplane section `C` of a canonical surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionCurve {
    pub curve_genus: i64,
    pub embedding_degree: i64,
}

/// Adjunction gives `ω_C = ω_S⊗²|_C`, so `2g - 2 = 2K²` and `deg C = K²`.
pub fn adjunction_curve(k_squared: i64) -> Result<AdjunctionCurve> {
    if k_squared < 0 {
        return Err(Error::InvalidParams(format!("K^2 must be >= 0, got {k_squared}")));
    }
    Ok(AdjunctionCurve {
        curve_genus: k_squared + 1,
        embedding_degree: k_squared,
    })
}
