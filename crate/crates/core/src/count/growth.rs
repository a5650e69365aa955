//! `ε_k` and the exponential growth rates of the constructed families.
//!
//! `ε_k = 1 - y_0 / 2`, where `y_0 ∈ (1, 2)` is the positive root of
//! `y^k = y^{k-1} + .. + y + 1`. It is computed twice, by bisection and by
//! the series `Σ_{i>=1} C((k+1)i-2, i-1) / (i 2^{(k+1)i})`, and the two are
//! required to agree. All arithmetic is on integers scaled by `2^128`.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Fractional bits of [`FixedPoint`].
pub const FRAC_BITS: u32 = 128;

/// A real `mantissa · 2^-128`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FixedPoint(BigInt);

impl FixedPoint {
    pub fn from_mantissa(mantissa: BigInt) -> Self {
        FixedPoint(mantissa)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.0
    }

    pub fn from_int(x: impl Into<BigInt>) -> Self {
        FixedPoint(x.into() << FRAC_BITS)
    }

    /// Rounds toward negative infinity; `None` for NaN or infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        let r = BigRational::from_float(x)?;
        let scaled = r * BigRational::from_integer(BigInt::one() << FRAC_BITS);
        Some(FixedPoint(scaled.floor().to_integer()))
    }

    pub fn to_f64(&self) -> f64 {
        // 2^-128 as an exact f64
        let scale = f64::from_bits((1023 - FRAC_BITS as u64) << 52);
        self.0.to_f64().unwrap_or(f64::NAN) * scale
    }

    pub fn abs(&self) -> FixedPoint {
        FixedPoint(self.0.abs())
    }

    pub fn mul_int(&self, x: impl Into<BigInt>) -> FixedPoint {
        FixedPoint(&self.0 * x.into())
    }

    /// Decimal expansion truncated to `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        if self.0.sign() == Sign::Minus {
            out.push('-');
        }
        let m = self.0.magnitude();
        let one = BigUint::one() << FRAC_BITS;
        let (int, mut frac) = m.div_rem(&one);
        let _ = write!(out, "{int}");
        if digits > 0 {
            out.push('.');
            for _ in 0..digits {
                frac *= 10u32;
                let (d, r) = frac.div_rem(&one);
                let _ = write!(out, "{d}");
                frac = r;
            }
        }
        out
    }
}

impl fmt::Display for FixedPoint {
    /// Uses the formatter precision, 30 digits by default.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(f.precision().unwrap_or(30)))
    }
}

impl Add for &FixedPoint {
    type Output = FixedPoint;

    fn add(self, rhs: &FixedPoint) -> FixedPoint {
        FixedPoint(&self.0 + &rhs.0)
    }
}

impl Sub for &FixedPoint {
    type Output = FixedPoint;

    fn sub(self, rhs: &FixedPoint) -> FixedPoint {
        FixedPoint(&self.0 - &rhs.0)
    }
}

/// `ε_k` with the root it came from and the series value it was checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonResult {
    pub k: usize,
    pub epsilon: FixedPoint,
    pub y0: FixedPoint,
    pub series_epsilon: FixedPoint,
    pub series_terms: usize,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// `2^-100`; smaller tolerances would fall below the fixed-point resolution.
pub const MIN_TOLERANCE: f64 = f64::from_bits((1023 - 100) << 52);

/// `y^k - Σ_{i<k} y^i` evaluated at `y = big / 2^128`, scaled by `2^{128k}`.
fn root_poly(y: &BigInt, k: usize) -> BigInt {
    let s = BigInt::one() << FRAC_BITS;
    let mut sum = BigInt::zero();
    let mut yi = BigInt::one();
    for i in 0..k {
        sum += &yi * Pow::pow(&s, k - i);
        yi *= y;
    }
    yi - sum
}

/// Largest mantissa `Y` with `f(Y / 2^128) <= 0` on `[1, 2]`.
fn root_mantissa(k: usize) -> BigInt {
    let mut lo = BigInt::one() << FRAC_BITS;
    let mut hi = BigInt::from(2) << FRAC_BITS;
    // f(1) = 1 - k < 0 and f(2) = 1 > 0
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if root_poly(&mid, k).sign() == Sign::Plus {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo
}

fn binomial(n: usize, r: usize) -> BigUint {
    num_integer::binomial(BigUint::from(n), BigUint::from(r))
}

/// Partial sum of the series, stopped once the geometric tail bound
/// `t_i ρ / (1 - ρ)` is below `tol / 4`. The term ratios increase to
/// `ρ = (k+1)^{k+1} / (k^k 2^{k+1})`.
fn series_mantissa(k: usize, tol: &BigInt) -> (BigInt, usize) {
    let rho_num = Pow::pow(BigInt::from(k + 1), k + 1);
    let rho_den = Pow::pow(BigInt::from(k), k) << (k + 1);
    let slack = tol * (&rho_den - &rho_num);
    let mut sum = BigInt::zero();
    let mut i = 1;
    loop {
        let c = BigInt::from(binomial((k + 1) * i - 2, i - 1));
        let denom = BigInt::from(i) << ((k + 1) * i);
        let t = (c << FRAC_BITS) / denom;
        sum += &t;
        if (t * &rho_num) << 2 < slack {
            return (sum, i);
        }
        i += 1;
    }
}

/// `ε_k` to within `tol`, cross-checked between the root and the series.
pub fn epsilon_k(k: usize, tol: f64) -> Result<EpsilonResult> {
    if k < 2 {
        return Err(Error::InvalidParameters(alloc::format!("epsilon_k needs k >= 2, got {k}")));
    }
    if !tol.is_finite() || tol < MIN_TOLERANCE {
        return Err(Error::InvalidTolerance);
    }
    let tol_m = FixedPoint::from_f64(tol).ok_or(Error::InvalidTolerance)?;
    let y0 = FixedPoint(root_mantissa(k));
    let two = BigInt::from(2) << FRAC_BITS;
    let epsilon = FixedPoint((two - &y0.0) >> 1);
    let (series, terms) = series_mantissa(k, &tol_m.0);
    let series_epsilon = FixedPoint(series);
    if (&epsilon - &series_epsilon).abs() > tol_m {
        return Err(Error::EpsilonMismatch { k });
    }
    Ok(EpsilonResult { k, epsilon, y0, series_epsilon, series_terms: terms })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthFamily {
    /// Fixed-length codes of Construction I': rate `q(1 - ε_k)`.
    Fixed,
    /// Variable-length codes of Construction II': rate `q(1 - ε_{k-1})`.
    Variable,
}

/// Growth rate of a family with `|I| = |J| = q/2`.
pub fn growth_rate(q: u32, k: usize, family: GrowthFamily) -> Result<FixedPoint> {
    if q < 2 || !q.is_multiple_of(2) {
        return Err(Error::InvalidParameters(alloc::format!("growth rates need an even q >= 2, got {q}")));
    }
    let eps_k = match family {
        GrowthFamily::Fixed if k >= 2 => k,
        GrowthFamily::Variable if k >= 3 => k - 1,
        _ => {
            return Err(Error::InvalidParameters(alloc::format!("k={k} is out of range for {family:?}")));
        }
    };
    let eps = epsilon_k(eps_k, DEFAULT_TOLERANCE)?.epsilon;
    Ok((&FixedPoint::from_int(1) - &eps).mul_int(q))
}

impl PartialOrd<f64> for FixedPoint {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        FixedPoint::from_f64(*other).map(|o| self.cmp(&o))
    }
}

impl PartialEq<f64> for FixedPoint {
    fn eq(&self, other: &f64) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}
