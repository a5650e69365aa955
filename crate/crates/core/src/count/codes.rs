//! Cardinalities of the constructed codes.
//!
//! Every count depends only on the part sizes `(|I|, |J|)`. The recurrences
//! and the generating functions are kept as separate routes so each can be
//! checked against the other and against enumeration.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Zero};

use super::series::{IntPolynomial, RationalSeries};
use crate::error::{Error, Result};
use crate::words::PartSizes;

fn big(x: u32) -> BigInt {
    BigInt::from(x)
}

fn pow(x: u32, e: usize) -> BigInt {
    Pow::pow(big(x), e)
}

fn to_count(v: BigInt) -> BigUint {
    v.to_biguint().expect("recurrence for a count stays nonnegative")
}

/// Value table `v[0..=n]`; negative indices read as 0.
struct Table(Vec<BigInt>);

impl Table {
    fn at(&self, idx: isize) -> &BigInt {
        static ZERO: BigInt = BigInt::ZERO;
        if idx < 0 {
            &ZERO
        } else {
            &self.0[idx as usize]
        }
    }
}

fn require(cond: bool, msg: impl FnOnce() -> alloc::string::String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameters(msg()))
    }
}

/// `u^{(k)}(n)`: `I^k`-free words of length `n` that start and end in `J`.
pub fn u_count(sizes: PartSizes, k: usize, n: usize) -> Result<BigUint> {
    require(k >= 1, || format!("u_count needs k >= 1, got {k}"))?;
    let (i, j, q) = (sizes.i(), sizes.j(), big(sizes.q()));
    let step = pow(i, k) * big(j);
    let mut t = Table(Vec::with_capacity(n + 1));
    for m in 0..=n {
        let v = match m {
            0 => BigInt::zero(),
            1 | 2 => pow(j, m),
            _ => &q * t.at(m as isize - 1) - &step * t.at(m as isize - k as isize - 1),
        };
        t.0.push(v);
    }
    Ok(to_count(t.0.pop().expect("nonempty")))
}

/// `|J| x (1 - |I| x) / (1 - q x + |I|^k |J| x^{k+1})`
pub fn u_gf(sizes: PartSizes, k: usize) -> Result<RationalSeries> {
    require(k >= 1, || format!("u_gf needs k >= 1, got {k}"))?;
    let (i, j) = (sizes.i(), sizes.j());
    let numerator = &IntPolynomial::monomial(j, 1) * &IntPolynomial::new([BigInt::from(1), -big(i)]);
    RationalSeries::new(numerator, fixed_denominator(sizes, k))
}

fn fixed_denominator(sizes: PartSizes, k: usize) -> IntPolynomial {
    let head = IntPolynomial::new([BigInt::from(1), -big(sizes.q())]);
    &head + &IntPolynomial::monomial(pow(sizes.i(), k) * big(sizes.j()), k + 1)
}

/// `|S_{I,J}^{(k)}(n)|`, the size of Construction I'.
pub fn s_count(sizes: PartSizes, k: usize, n: usize) -> Result<BigUint> {
    require(k >= 1, || format!("s_count needs k >= 1, got {k}"))?;
    let (i, j, q) = (sizes.i(), sizes.j(), big(sizes.q()));
    let ik = pow(i, k);
    let step = &ik * big(j);
    let mut t = Table(Vec::with_capacity(n + 1));
    for m in 0..=n {
        let v = if m <= k {
            BigInt::zero()
        } else if m <= k + 2 {
            &ik * pow(j, m - k)
        } else {
            &q * t.at(m as isize - 1) - &step * t.at(m as isize - k as isize - 1)
        };
        t.0.push(v);
    }
    Ok(to_count(t.0.pop().expect("nonempty")))
}

/// `|I|^k |J| x^{k+1} (1 - |I| x) / (1 - q x + |I|^k |J| x^{k+1})`
pub fn s_gf(sizes: PartSizes, k: usize) -> Result<RationalSeries> {
    require(k >= 1, || format!("s_gf needs k >= 1, got {k}"))?;
    let (i, j) = (sizes.i(), sizes.j());
    let lead = IntPolynomial::monomial(pow(i, k) * big(j), k + 1);
    let numerator = &lead * &IntPolynomial::new([BigInt::from(1), -big(i)]);
    RationalSeries::new(numerator, fixed_denominator(sizes, k))
}

/// `r^{(k)}(n)`: `(I^k ∪ J^k)`-free words of length `n` starting in `I` and
/// ending in `J`, with `r(0) = 1`.
pub fn r_count(sizes: PartSizes, k: usize, n: usize) -> Result<BigUint> {
    Ok(to_count(r_table(sizes, k, n)?.0.pop().expect("nonempty")))
}

fn r_table(sizes: PartSizes, k: usize, n: usize) -> Result<Table> {
    require(k >= 2, || format!("r_count needs k >= 2, got {k}"))?;
    let (i, j, q) = (sizes.i(), sizes.j(), big(sizes.q()));
    let mid = pow(i, k) * big(j) + big(i) * pow(j, k);
    let far = pow(i, k) * pow(j, k);
    let mut t = Table(Vec::with_capacity(n + 1));
    for m in 0..=n {
        let v = match m {
            0 => BigInt::from(1),
            1 => BigInt::zero(),
            2 => big(i) * big(j),
            _ => {
                let m = m as isize;
                let k = k as isize;
                &q * t.at(m - 1) - &mid * t.at(m - k - 1) + &far * t.at(m - 2 * k)
            }
        };
        t.0.push(v);
    }
    Ok(t)
}

/// `(|I||J| x^2 - q x + 1) / (1 - q x + (|I|^k|J| + |I||J|^k) x^{k+1} - |I|^k|J|^k x^{2k})`
pub fn r_gf(sizes: PartSizes, k: usize) -> Result<RationalSeries> {
    require(k >= 2, || format!("r_gf needs k >= 2, got {k}"))?;
    let (i, j, q) = (sizes.i(), sizes.j(), sizes.q());
    let numerator = IntPolynomial::new([BigInt::from(1), -big(q), big(i) * big(j)]);
    let denominator = &(&IntPolynomial::new([BigInt::from(1), -big(q)])
        + &IntPolynomial::monomial(pow(i, k) * big(j) + big(i) * pow(j, k), k + 1))
        - &IntPolynomial::monomial(pow(i, k) * pow(j, k), 2 * k);
    RationalSeries::new(numerator, denominator)
}

/// Checks the binary identity `r(n) = Σ_{j=1}^{k-1} r(n-j) + d^{(k)}(n)` for
/// `2 <= n <= n_max`, where `d` is `+1` on `n ≡ 0`, `-1` on `n ≡ 1 (mod k)`.
pub fn d_k_identity_check(k: usize, n_max: usize) -> Result<bool> {
    require(k >= 3, || format!("the d^(k) identity needs k >= 3, got {k}"))?;
    let sizes = PartSizes::new(1, 1)?;
    let t = r_table(sizes, k, n_max)?;
    Ok((2..=n_max).all(|n| {
        let d = match n % k {
            0 => 1,
            1 => -1,
            _ => 0,
        };
        let prev: BigInt = (1..k).map(|j| t.at(n as isize - j as isize)).sum();
        t.at(n as isize) == &(prev + d)
    }))
}

fn check_variable(k: usize, n: usize) -> Result<()> {
    require(k >= 3 && 2 * k + 2 <= n, || format!("need k >= 3 and 2k+2 <= n, got n={n}, k={k}"))
}

/// `|V_{I,J}^{(k)}(i)| = |I|^k |J|^k r(i - 2k)`.
pub fn v_count(sizes: PartSizes, k: usize, i: usize) -> Result<BigUint> {
    check_variable(k, i)?;
    let r = r_count(sizes, k, i - 2 * k)?;
    Ok(to_count(pow(sizes.i(), k) * pow(sizes.j(), k) * BigInt::from(r)))
}

/// `|𝒱_{I,J}^{(k)}(n)| = Σ_{i=2k+2}^{n} |V_{I,J}^{(k)}(i)|`, the size of Construction II'.
pub fn vcal_count(sizes: PartSizes, k: usize, n: usize) -> Result<BigUint> {
    check_variable(k, n)?;
    let t = r_table(sizes, k, n - 2 * k)?;
    let lead = pow(sizes.i(), k) * pow(sizes.j(), k);
    let sum: BigInt = (2..=n - 2 * k).map(|l| t.at(l as isize)).sum();
    Ok(to_count(lead * sum))
}

/// `|I|^k |J|^k x^{2k} / (1 - x) · (r_gf - 1)`; coefficient `n` is `|𝒱(n)|`.
pub fn vcal_gf(sizes: PartSizes, k: usize) -> Result<RationalSeries> {
    require(k >= 3, || format!("vcal_gf needs k >= 3, got {k}"))?;
    let lead = RationalSeries::new(
        IntPolynomial::monomial(pow(sizes.i(), k) * pow(sizes.j(), k), 2 * k),
        IntPolynomial::one(),
    )?;
    Ok(lead.times(&RationalSeries::geometric()).times(&r_gf(sizes, k)?.minus_constant(1)))
}
