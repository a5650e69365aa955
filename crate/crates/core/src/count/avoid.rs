//! Words avoiding every codeword of a non-overlapping code.
//!
//! The three routes take only the length profile. They agree with the
//! brute-force count in [`crate::verify`] only when the profile belongs to a
//! non-overlapping code; that is not re-checked here. For other profiles the
//! values are still well defined but may be negative, so they are returned
//! as [`BigInt`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};

use super::series::{IntPolynomial, RationalSeries};
use crate::error::{Error, Result};
use crate::words::Code;

/// Map `i -> |J_q(i)|` of a code over `Z_q`. Zero entries are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSizeProfile {
    q: u32,
    sizes: BTreeMap<usize, BigUint>,
}

impl CodeSizeProfile {
    pub fn new(q: u32, sizes: impl IntoIterator<Item = (usize, BigUint)>) -> Result<Self> {
        if !(2..=256).contains(&q) {
            return Err(Error::AlphabetSize(q as usize));
        }
        let mut out = BTreeMap::new();
        for (len, size) in sizes {
            if size.is_zero() {
                continue;
            }
            if len < 2 {
                return Err(Error::InvalidParameters(format!("profile length {len} is below 2")));
            }
            if size > Pow::pow(BigUint::from(q), len) {
                return Err(Error::InvalidParameters(format!("{size} words of length {len} exceed {q}^{len}")));
            }
            if out.insert(len, size).is_some() {
                return Err(Error::InvalidParameters(format!("length {len} listed twice")));
            }
        }
        Ok(CodeSizeProfile { q, sizes: out })
    }

    pub fn from_code(code: &Code) -> Self {
        CodeSizeProfile {
            q: code.alphabet().size() as u32,
            sizes: code.length_profile().into_iter().map(|(l, c)| (l, BigUint::from(c))).collect(),
        }
    }

    /// The empty profile over `Z_q`.
    pub fn empty(q: u32) -> Result<Self> {
        Self::new(q, [])
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn sizes(&self) -> &BTreeMap<usize, BigUint> {
        &self.sizes
    }

    pub fn size_at(&self, len: usize) -> BigUint {
        self.sizes.get(&len).cloned().unwrap_or_default()
    }

    /// Minimum length, `None` when empty.
    pub fn h(&self) -> Option<usize> {
        self.sizes.keys().next().copied()
    }

    /// Maximum length, `None` when empty.
    pub fn n(&self) -> Option<usize> {
        self.sizes.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// The profile restricted to lengths below `n`.
    pub fn below(&self, n: usize) -> CodeSizeProfile {
        CodeSizeProfile { q: self.q, sizes: self.sizes.range(..n).map(|(&l, c)| (l, c.clone())).collect() }
    }
}

/// `b(0..=m)` by the recurrence `b(m) = q b(m-1) - Σ_i |J(i)| b(m-i)`.
pub fn b_table(profile: &CodeSizeProfile, m: usize) -> Vec<BigInt> {
    let q = BigInt::from(profile.q);
    let h = profile.h().unwrap_or(usize::MAX);
    let mut b: Vec<BigInt> = Vec::with_capacity(m + 1);
    for t in 0..=m {
        let v = if t == 0 {
            BigInt::one()
        } else if t < h {
            &q * &b[t - 1]
        } else {
            let mut acc = &q * &b[t - 1];
            for (&len, size) in profile.sizes.range(..=t) {
                acc -= &b[t - len] * BigInt::from(size.clone());
            }
            acc
        };
        b.push(v);
    }
    b
}

pub fn b_count_recurrence(profile: &CodeSizeProfile, m: usize) -> BigInt {
    b_table(profile, m).pop().expect("m+1 values")
}

/// Signed multinomial sum over `t_1 + Σ i t_i = m`; compositions are walked
/// depth first over `(t_h, .., t_n)` with `t_1` implied.
pub fn b_count_multinomial(profile: &CodeSizeProfile, m: usize) -> BigInt {
    let lens: Vec<(usize, BigInt)> = profile.sizes.iter().map(|(&l, c)| (l, BigInt::from(c.clone()))).collect();
    let mut fact: Vec<BigUint> = alloc::vec![BigUint::one()];
    for x in 1..=m {
        let next = &fact[x - 1] * BigUint::from(x);
        fact.push(next);
    }
    let q = BigInt::from(profile.q);

    struct Walk<'a> {
        lens: &'a [(usize, BigInt)],
        fact: &'a [BigUint],
        q: &'a BigInt,
        total: BigInt,
    }

    impl Walk<'_> {
        // `weight` is Π |J(i)|^{t_i}; `denom` is Π t_i!
        fn go(&mut self, idx: usize, rest: usize, r: usize, weight: BigInt, denom: BigUint) {
            if idx == self.lens.len() {
                let t1 = rest;
                let coeff = &self.fact[t1 + r] / (&self.fact[t1] * &denom);
                let mut term = BigInt::from(coeff) * Pow::pow(self.q, t1) * weight;
                if r % 2 == 1 {
                    term = -term;
                }
                self.total += term;
                return;
            }
            let (len, ref size) = self.lens[idx];
            let mut w = weight;
            let mut d = denom;
            let mut t = 0;
            loop {
                self.go(idx + 1, rest - t * len, r + t, w.clone(), d.clone());
                t += 1;
                if t * len > rest {
                    break;
                }
                w *= size;
                d *= BigUint::from(t);
            }
        }
    }

    let mut walk = Walk { lens: &lens, fact: &fact, q: &q, total: BigInt::zero() };
    walk.go(0, m, 0, BigInt::one(), BigUint::one());
    walk.total
}

/// `1 / (1 - q x + Σ_i |J(i)| x^i)`
pub fn b_gf(profile: &CodeSizeProfile) -> RationalSeries {
    let mut den = IntPolynomial::new([BigInt::one(), -BigInt::from(profile.q)]);
    for (&len, size) in &profile.sizes {
        den = &den + &IntPolynomial::monomial(BigInt::from(size.clone()), len);
    }
    RationalSeries::new(IntPolynomial::one(), den).expect("constant term is 1")
}

/// `Σ_i L b(L-i) |J(i)|`: the number of length-`L` words containing exactly
/// one codeword cyclically, valid when `L - n < h`.
pub fn cyclic_exactly_one_count(profile: &CodeSizeProfile, len: usize) -> BigInt {
    let b = b_table(profile, len);
    let total: BigInt = profile.sizes.range(..=len).map(|(&i, size)| &b[len - i] * BigInt::from(size.clone())).sum();
    total * BigInt::from(len)
}
