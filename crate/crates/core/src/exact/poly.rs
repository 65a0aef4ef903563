use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::ExactRational;
use crate::error::{Error, Result};

/// A polynomial in one formal variable `t` with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`. Trailing zeros are always
/// stripped, so the zero polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<ExactRational>,
}

impl RationalPolynomial {
    pub fn new(coeffs: Vec<ExactRational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ExactRational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    /// `t + c`
    pub fn linear(c: ExactRational) -> Self {
        Self::new(vec![c, ExactRational::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(ExactRational::is_zero) {
            self.coeffs.pop();
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> ExactRational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> ExactRational {
        self.eval(&ExactRational::from(t))
    }

    pub fn scale(&self, s: &ExactRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        RationalPolynomial::new(out)
    }
}

/// `binom(t + shift, n) = (t+shift)(t+shift-1)...(t+shift-n+1) / n!` as a
/// polynomial in `t`.
pub fn binomial_polynomial(shift: i64, n: i64) -> Result<RationalPolynomial> {
    if n < 0 {
        return Err(Error::NegativeBinomialDegree(n));
    }
    let mut p = RationalPolynomial::constant(ExactRational::one());
    let mut factorial = BigInt::from(1);
    for k in 0..n {
        p = &p * &RationalPolynomial::linear(ExactRational::from(shift - k));
        factorial *= k + 1;
    }
    Ok(p.scale(&ExactRational::new(1, factorial)?))
}

impl fmt::Display for RationalPolynomial {
    /// Renders as `7*t^2 - 7*t + 7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag == ExactRational::one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factorial(n: u64) -> BigInt {
        (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
    }

    // binom(m, n) for m >= n >= 0 as a factorial quotient.
    fn binom_oracle(m: u64, n: u64) -> BigInt {
        factorial(m) / (factorial(n) * factorial(m - n))
    }

    #[test]
    fn five_factor_product() {
        let p = binomial_polynomial(5, 5).unwrap();
        let mut expected = RationalPolynomial::constant(ExactRational::one());
        for k in 1..=5 {
            expected = &expected * &RationalPolynomial::linear(ExactRational::from(k));
        }
        assert_eq!(p, expected.scale(&ExactRational::frac(1, 120)));
        assert_eq!(p.degree(), Some(5));
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(
            binomial_polynomial(0, 0).unwrap(),
            RationalPolynomial::from_integers(&[1])
        );
    }

    #[test]
    fn shift_two_at_three() {
        assert_eq!(binomial_polynomial(2, 5).unwrap().eval_int(3), ExactRational::one());
    }

    #[test]
    fn negative_degree_rejected() {
        assert_eq!(binomial_polynomial(3, -1), Err(Error::NegativeBinomialDegree(-1)));
    }

    #[test]
    fn display() {
        assert_eq!(RationalPolynomial::from_integers(&[7, -7, 7]).to_string(), "7*t^2 - 7*t + 7");
        assert_eq!(RationalPolynomial::from_integers(&[1, 1]).to_string(), "t + 1");
        assert_eq!(RationalPolynomial::from_integers(&[0, 0, -1]).to_string(), "-t^2");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
        assert_eq!(binomial_polynomial(0, 2).unwrap().to_string(), "1/2*t^2 - 1/2*t");
    }

    #[test]
    fn trailing_zeros_stripped() {
        let p = RationalPolynomial::from_integers(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(RationalPolynomial::from_integers(&[0, 0]).degree(), None);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn matches_factorial_quotient(shift in -10i64..10, n in 0i64..12, extra in 0i64..20) {
            // t >= n - shift keeps t + shift >= n
            let t = n - shift + extra;
            let value = binomial_polynomial(shift, n).unwrap().eval_int(t);
            let expected = binom_oracle((t + shift) as u64, n as u64);
            prop_assert_eq!(value, ExactRational::integer(expected));
        }
    }
}
