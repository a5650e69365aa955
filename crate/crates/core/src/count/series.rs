use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, index = power.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPolynomial(Vec<BigInt>);

impl IntPolynomial {
    pub fn new(coefficients: impl IntoIterator<Item = BigInt>) -> Self {
        let mut c: Vec<BigInt> = coefficients.into_iter().collect();
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IntPolynomial(c)
    }

    pub fn from_i64s(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)))
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new([c.into()])
    }

    /// `c · x^degree`
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut v = alloc::vec![BigInt::zero(); degree];
        v.push(c.into());
        Self::new(v)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.0.get(power).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)))
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = alloc::vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// A formal power series `numerator / denominator` with `denominator(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalSeries {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(RationalSeries { numerator, denominator })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// `c_0, .., c_upto` of the expansion, from the linear recurrence
    /// `d_0 c_n = a_n - Σ_{j>=1} d_j c_{n-j}`.
    ///
    /// Fails with [`Error::NonIntegralSeries`] if some coefficient is not an
    /// integer (only possible when `|d_0| != 1`).
    pub fn coefficients(&self, upto: usize) -> Result<Vec<BigInt>> {
        let d = self.denominator.coefficients();
        let d0 = &d[0];
        let mut c: Vec<BigInt> = Vec::with_capacity(upto + 1);
        for n in 0..=upto {
            let mut acc = self.numerator.coeff(n);
            for j in 1..d.len().min(n + 1) {
                if !d[j].is_zero() {
                    acc -= &d[j] * &c[n - j];
                }
            }
            let (quot, rem) = acc.div_rem(d0);
            if !rem.is_zero() {
                return Err(Error::NonIntegralSeries { index: n });
            }
            c.push(quot);
        }
        Ok(c)
    }

    pub fn coefficient(&self, n: usize) -> Result<BigInt> {
        Ok(self.coefficients(n)?.pop().expect("n+1 coefficients"))
    }

    /// The series minus its constant term.
    pub fn minus_constant(&self, c: impl Into<BigInt>) -> RationalSeries {
        let shift = &IntPolynomial::constant(c.into()) * &self.denominator;
        RationalSeries { numerator: &self.numerator - &shift, denominator: self.denominator.clone() }
    }

    /// Product of two series.
    pub fn times(&self, other: &RationalSeries) -> RationalSeries {
        RationalSeries {
            numerator: &self.numerator * &other.numerator,
            denominator: &self.denominator * &other.denominator,
        }
    }

    /// `1 / (1 - x)`.
    pub fn geometric() -> RationalSeries {
        RationalSeries { numerator: IntPolynomial::one(), denominator: IntPolynomial::from_i64s(&[1, -1]) }
    }

    pub fn is_one_at_zero(&self) -> bool {
        self.denominator.coeff(0).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn geometric_and_fibonacci() {
        let g = RationalSeries::geometric();
        assert_eq!(g.coefficients(3).unwrap(), ints(&[1, 1, 1, 1]));
        let fib =
            RationalSeries::new(IntPolynomial::from_i64s(&[0, 1]), IntPolynomial::from_i64s(&[1, -1, -1])).unwrap();
        assert_eq!(fib.coefficients(6).unwrap(), ints(&[0, 1, 1, 2, 3, 5, 8]));
    }

    #[test]
    fn zero_constant_term_rejected() {
        assert_eq!(
            RationalSeries::new(IntPolynomial::one(), IntPolynomial::from_i64s(&[0, 1])),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn non_integral_detected() {
        let s = RationalSeries::new(IntPolynomial::one(), IntPolynomial::from_i64s(&[2, 1])).unwrap();
        assert_eq!(s.coefficients(2), Err(Error::NonIntegralSeries { index: 0 }));
        let s = RationalSeries::new(IntPolynomial::from_i64s(&[2]), IntPolynomial::from_i64s(&[2, 2])).unwrap();
        assert_eq!(s.coefficients(3).unwrap(), ints(&[1, -1, 1, -1]));
    }

    #[test]
    fn polynomial_arithmetic() {
        let a = IntPolynomial::from_i64s(&[1, -1]);
        let b = IntPolynomial::from_i64s(&[1, 1]);
        assert_eq!(&a * &b, IntPolynomial::from_i64s(&[1, 0, -1]));
        assert_eq!((&a + &b).degree(), Some(0));
        assert!((&a - &a).is_zero());
        assert_eq!(IntPolynomial::from_i64s(&[3, 0, 0]).degree(), Some(0));
        assert_eq!(IntPolynomial::monomial(5, 3).coefficients(), ints(&[0, 0, 0, 5]).as_slice());
    }

    #[test]
    fn minus_constant_and_product() {
        let g = RationalSeries::geometric();
        assert_eq!(g.minus_constant(1).coefficients(3).unwrap(), ints(&[0, 1, 1, 1]));
        assert_eq!(g.times(&g).coefficients(3).unwrap(), ints(&[1, 2, 3, 4]));
    }
}
