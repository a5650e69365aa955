//! Brute-force certifiers.
//!
//! Everything here follows the definitions directly and is meant to be the
//! independent side of every cross-check against the closed forms in
//! [`crate::count`].

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::words::{for_each_word, Alphabet, Code, Symbol, Word};

/// Upper limit on `q^len` for any exhaustive scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumCap(pub u64);

impl EnumCap {
    pub const DEFAULT: EnumCap = EnumCap(1 << 24);

    pub fn check(self, alphabet: Alphabet, len: usize) -> Result<()> {
        let total = (alphabet.size() as u128).checked_pow(len as u32);
        match total {
            Some(t) if t <= self.0 as u128 => Ok(()),
            _ => Err(Error::EnumerationCap { q: alphabet.size(), len, cap: self.0 }),
        }
    }
}

impl Default for EnumCap {
    fn default() -> Self {
        EnumCap::DEFAULT
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OverlapKind {
    /// `overlap` is a proper prefix of `u` and a proper suffix of `v`.
    PrefixSuffix,
    /// `u` contains the distinct codeword `v` (= `overlap`) as a subword.
    Subword,
}

/// Evidence that a code violates the non-overlapping conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapWitness {
    pub kind: OverlapKind,
    pub u: Word,
    pub v: Word,
    pub overlap: Word,
}

impl OverlapWitness {
    /// Re-checks the witness against the definition.
    pub fn recheck(&self) -> bool {
        match self.kind {
            OverlapKind::PrefixSuffix => {
                self.u.prefixes().contains(&self.overlap) && self.v.suffixes().contains(&self.overlap)
            }
            OverlapKind::Subword => self.u != self.v && self.overlap == self.v && self.u.contains_subword(&self.v),
        }
    }
}

impl fmt::Display for OverlapWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OverlapKind::PrefixSuffix => {
                write!(f, "{} is a prefix of {} and a suffix of {}", self.overlap, self.u, self.v)
            }
            OverlapKind::Subword => write!(f, "{} contains {} as a subword", self.u, self.v),
        }
    }
}

/// Length of the shortest common proper prefix of `u` / suffix of `v`, if any.
fn prefix_suffix_overlap(u: &[Symbol], v: &[Symbol]) -> Option<usize> {
    (1..u.len().min(v.len())).find(|&l| u[..l] == v[v.len() - l..])
}

/// Overlap between the ordered pair `(u, v)`: `pre(u) ∩ suf(v)`, then
/// (for distinct words) `v` inside `u`.
pub(crate) fn pair_overlap(u: &[Symbol], v: &[Symbol]) -> Option<(OverlapKind, usize)> {
    if let Some(l) = prefix_suffix_overlap(u, v) {
        return Some((OverlapKind::PrefixSuffix, l));
    }
    if u != v && crate::words::contains_slice(u, v) {
        return Some((OverlapKind::Subword, v.len()));
    }
    None
}

/// True iff `{u, v}` (or `{u}` when equal) is non-overlapping.
pub(crate) fn compatible(u: &[Symbol], v: &[Symbol]) -> bool {
    pair_overlap(u, v).is_none() && pair_overlap(v, u).is_none()
}

pub(crate) fn self_overlapping(u: &[Symbol]) -> bool {
    prefix_suffix_overlap(u, u).is_some()
}

/// The first violation found, scanning ordered pairs `(u, v)` lexicographically.
pub fn overlap_witness(code: &Code) -> Option<OverlapWitness> {
    for u in code {
        for v in code {
            if let Some((kind, l)) = pair_overlap(u.symbols(), v.symbols()) {
                let overlap = match kind {
                    OverlapKind::PrefixSuffix => Word::from_vec(u.symbols()[..l].to_vec()),
                    OverlapKind::Subword => v.clone(),
                };
                return Some(OverlapWitness { kind, u: u.clone(), v: v.clone(), overlap });
            }
        }
    }
    None
}

pub fn is_non_overlapping(code: &Code) -> bool {
    overlap_witness(code).is_none()
}

/// Some word `x ∉ code` of the code's length such that `code ∪ {x}` stays
/// non-overlapping, or `None` if the code is non-expandable.
///
/// `len` is needed for the empty code; for a nonempty code it must match.
pub fn expanding_word(code: &Code, len: usize, cap: EnumCap) -> Result<Option<Word>> {
    match code.fixed_length() {
        Some(n) if n != len => return Err(Error::MixedLength),
        None if !code.is_empty() => return Err(Error::MixedLength),
        _ => {}
    }
    if let Some(w) = overlap_witness(code) {
        return Err(Error::Overlapping(w));
    }
    cap.check(code.alphabet(), len)?;
    let mut found = None;
    for_each_word(code.alphabet(), len, |x| {
        if found.is_some() || code.contains(x) || self_overlapping(x) {
            return;
        }
        if code.iter().all(|c| compatible(c.symbols(), x)) {
            found = Some(Word::from_vec(x.to_vec()));
        }
    });
    Ok(found)
}

/// Non-expandability of a nonempty fixed-length non-overlapping code.
pub fn is_non_expandable(code: &Code, cap: EnumCap) -> Result<bool> {
    let n = code.fixed_length().ok_or(Error::MixedLength)?;
    Ok(expanding_word(code, n, cap)?.is_none())
}

fn layers(code: &Code) -> Vec<(usize, BTreeSet<&[Symbol]>)> {
    code.length_profile()
        .into_keys()
        .map(|l| (l, code.iter().filter(|w| w.len() == l).map(|w| w.symbols()).collect()))
        .collect()
}

/// Number of length-`m` words containing no codeword as a subword.
///
/// Depth-first over prefixes; a branch is cut as soon as its prefix ends in a
/// codeword, so every word is either counted or proven to contain one.
pub fn avoiding_count_bruteforce(code: &Code, m: usize, cap: EnumCap) -> Result<BigUint> {
    cap.check(code.alphabet(), m)?;
    let layers = layers(code);
    let q = code.alphabet().size() as u16;
    let mut buf: Vec<Symbol> = Vec::with_capacity(m);
    let mut count: u64 = 0;

    fn walk(buf: &mut Vec<Symbol>, m: usize, q: u16, layers: &[(usize, BTreeSet<&[Symbol]>)], count: &mut u64) {
        if buf.len() == m {
            *count += 1;
            return;
        }
        for s in 0..q {
            buf.push(s as Symbol);
            let end = buf.len();
            let hit = layers.iter().any(|(l, words)| *l <= end && words.contains(&buf[end - l..]));
            if !hit {
                walk(buf, m, q, layers, count);
            }
            buf.pop();
        }
    }

    walk(&mut buf, m, q, &layers, &mut count);
    Ok(BigUint::from(count))
}

/// Number of length-`len` words whose cyclic reading contains exactly one
/// occurrence of a codeword (counting all codewords and all start positions).
pub fn exactly_one_cyclic_count_bruteforce(code: &Code, len: usize, cap: EnumCap) -> Result<BigUint> {
    if let Some(n) = code.max_len() {
        if n > len {
            return Err(Error::PatternTooLong { pattern: n, word: len });
        }
    }
    cap.check(code.alphabet(), len)?;
    let layers = layers(code);
    let mut doubled: Vec<Symbol> = alloc::vec![0; 2 * len];
    let mut count: u64 = 0;
    for_each_word(code.alphabet(), len, |x| {
        if layers.is_empty() {
            return;
        }
        doubled[..len].copy_from_slice(x);
        doubled[len..].copy_from_slice(x);
        let mut occurrences = 0;
        'scan: for start in 0..len {
            for (l, words) in &layers {
                if words.contains(&doubled[start..start + l]) {
                    occurrences += 1;
                    if occurrences > 1 {
                        break 'scan;
                    }
                }
            }
        }
        if occurrences == 1 {
            count += 1;
        }
    });
    Ok(BigUint::from(count))
}
