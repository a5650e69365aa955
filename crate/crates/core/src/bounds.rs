//! Upper bounds on the size of non-overlapping codes, as exact rationals.

use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Pow;

use crate::count::{b_table, CodeSizeProfile};
use crate::error::{Error, Result};

/// An upper bound `|C| <= exact` (or `<` when `strict`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundValue {
    pub exact: BigRational,
    /// Largest integer the bound allows.
    pub integer_bound: BigInt,
    pub strict: bool,
}

impl BoundValue {
    pub fn new(exact: BigRational, strict: bool) -> Self {
        let floor = exact.floor().to_integer();
        let integer_bound = if strict && exact.is_integer() { floor - 1 } else { floor };
        BoundValue { exact, integer_bound, strict }
    }

    /// True iff a code of `size` words is consistent with the bound.
    pub fn admits(&self, size: &BigUint) -> bool {
        BigInt::from(size.clone()) <= self.integer_bound
    }
}

fn check_nq(n: usize, q: u32) -> Result<()> {
    if n < 2 || q < 2 {
        return Err(Error::InvalidParameters(format!("bounds need n, q >= 2, got n={n}, q={q}")));
    }
    Ok(())
}

fn q_pow(q: u32, e: usize) -> BigInt {
    Pow::pow(BigInt::from(q), e)
}

/// `((n-1)/n)^{n-1} q^n / n`, not strict.
pub fn levenshtein_bound(n: usize, q: u32) -> Result<BoundValue> {
    check_nq(n, q)?;
    let nn = BigInt::from(n);
    let ratio = BigRational::new(nn.clone() - 1, nn.clone());
    let exact = Pow::pow(ratio, n - 1) * BigRational::new(q_pow(q, n), nn);
    Ok(BoundValue::new(exact, false))
}

/// `q^n / (2n - 1)`, strict.
pub fn chee_bound(n: usize, q: u32) -> Result<BoundValue> {
    check_nq(n, q)?;
    Ok(BoundValue::new(BigRational::new(q_pow(q, n), BigInt::from(2 * n - 1)), true))
}

/// Minimum length of `lower` lengths, or `n` when there are none.
fn profile_h(lower: &CodeSizeProfile, n: usize) -> Result<usize> {
    if let Some(top) = lower.n() {
        if top >= n {
            return Err(Error::InvalidParameters(format!(
                "the profile must only hold lengths below n={n}, found {top}"
            )));
        }
    }
    Ok(lower.h().unwrap_or(n))
}

/// Bound on `|J_q(n)|` given the sizes of the shorter layers:
/// `q^n / (m+n) - q^{-m} Σ_{i=h}^{n-1} b(m+n-i) |J_q(i)|`, strict, for `1 <= m < h`.
///
/// `lower` holds only lengths below `n`; `b` is computed from it.
pub fn recursive_bound(lower: &CodeSizeProfile, n: usize, m: usize) -> Result<BoundValue> {
    check_nq(n, lower.q())?;
    let h = profile_h(lower, n)?;
    if m < 1 || m >= h {
        return Err(Error::InvalidParameters(format!("need 1 <= m < h={h}, got m={m}")));
    }
    let q = lower.q();
    let b = b_table(lower, m + n);
    let sum: BigInt = lower.sizes().iter().map(|(&i, size)| &b[m + n - i] * BigInt::from(size.clone())).sum();
    let exact = BigRational::new(q_pow(q, n), BigInt::from(m + n)) - BigRational::new(sum, q_pow(q, m));
    Ok(BoundValue::new(exact, true))
}

/// The smallest [`recursive_bound`] over `1 <= m < h`, with its `m`.
/// Ties go to the smallest `m`.
pub fn recursive_bound_min(lower: &CodeSizeProfile, n: usize) -> Result<(BoundValue, usize)> {
    check_nq(n, lower.q())?;
    let h = profile_h(lower, n)?;
    let mut best: Option<(BoundValue, usize)> = None;
    for m in 1..h {
        let v = recursive_bound(lower, n, m)?;
        if best.as_ref().is_none_or(|(b, _)| v.exact < b.exact) {
            best = Some((v, m));
        }
    }
    Ok(best.expect("h >= 2 leaves m = 1"))
}
