//! Code builders: the binary-to-q-ary expansion and the five constructions.
//!
//! Every builder enumerates by backtracking over positions. A position has a
//! fixed list of admissible symbols and each push is checked against the
//! window constraint ending at that position, so dead prefixes are cut early
//! instead of filtering all of `Z_q^n`. Output codes iterate in lexicographic
//! order.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Bipartition, Code, Symbol, Word};

/// A set of forbidden length-`k` blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenSet {
    k: usize,
    blocks: BTreeSet<Word>,
}

impl ForbiddenSet {
    pub fn new(k: usize, blocks: impl IntoIterator<Item = Word>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameters("block length must be >= 1".into()));
        }
        let blocks: BTreeSet<Word> = blocks.into_iter().collect();
        if let Some(b) = blocks.iter().find(|b| b.len() != k) {
            return Err(Error::InvalidParameters(format!("block {b} does not have length {k}")));
        }
        Ok(ForbiddenSet { k, blocks })
    }

    /// `symbols^k`, e.g. `I^k`.
    pub fn power(symbols: &[Symbol], k: usize) -> Result<Self> {
        let mut blocks: Vec<Vec<Symbol>> = alloc::vec![Vec::new()];
        for _ in 0..k {
            blocks = blocks
                .into_iter()
                .flat_map(|b| {
                    symbols.iter().map(move |&s| {
                        let mut next = b.clone();
                        next.push(s);
                        next
                    })
                })
                .collect();
        }
        ForbiddenSet::new(k, blocks.into_iter().filter(|b| !b.is_empty()).map(Word::from_vec))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &BTreeSet<Word> {
        &self.blocks
    }

    pub fn contains(&self, block: &[Symbol]) -> bool {
        self.blocks.contains(block)
    }
}

/// True iff `w` is shorter than `k` or none of its length-`k` windows is forbidden.
pub fn is_free(w: &[Symbol], forbidden: &ForbiddenSet) -> bool {
    w.len() < forbidden.k || w.windows(forbidden.k).all(|win| !forbidden.contains(win))
}

/// All words of length `n` with symbol `p` drawn from `allowed[p]`, pruned by
/// `reject(prefix)` after every push.
fn enumerate(allowed: &[&[Symbol]], reject: impl Fn(&[Symbol]) -> bool) -> BTreeSet<Word> {
    fn walk(
        buf: &mut Vec<Symbol>,
        allowed: &[&[Symbol]],
        reject: &dyn Fn(&[Symbol]) -> bool,
        out: &mut BTreeSet<Word>,
    ) {
        let pos = buf.len();
        if pos == allowed.len() {
            out.insert(Word::from_vec(buf.clone()));
            return;
        }
        for &s in allowed[pos] {
            buf.push(s);
            if !reject(buf) {
                walk(buf, allowed, reject, out);
            }
            buf.pop();
        }
    }

    let mut out = BTreeSet::new();
    if allowed.is_empty() {
        return out;
    }
    let mut buf = Vec::with_capacity(allowed.len());
    walk(&mut buf, allowed, &reject, &mut out);
    out
}

/// Symbols `alphabet ∩ pred`, ascending.
fn symbols_where(alphabet: Alphabet, pred: impl Fn(Symbol) -> bool) -> Vec<Symbol> {
    alphabet.symbols().filter(|&s| pred(s)).collect()
}

fn check_fixed_params(n: usize, k: usize) -> Result<()> {
    if n < 2 || k < 1 || k > n - 1 {
        return Err(Error::InvalidParameters(format!("need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")));
    }
    Ok(())
}

/// Variable-length constructions need `k >= 3` and room for `J^k R I^k` with `|R| >= 2`.
fn check_variable_params(n: usize, k: usize) -> Result<()> {
    if k < 3 || 2 * k + 2 > n {
        return Err(Error::InvalidParameters(format!("need k >= 3 and 2k+2 <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// `φ_{I,J}(ω)`: replace each 0 of `ω` by a symbol of `I` and each 1 by a symbol of `J`.
pub fn phi_expand(omega: &Word, bp: &Bipartition) -> Result<BTreeSet<Word>> {
    if !omega.is_over(Alphabet::BINARY) {
        return Err(Error::NotBinary(omega.clone()));
    }
    let allowed: Vec<&[Symbol]> = omega.symbols().iter().map(|&b| if b == 0 { bp.i() } else { bp.j() }).collect();
    Ok(enumerate(&allowed, |_| false))
}

/// `Φ_{I,J}(S)`, the union of `φ_{I,J}` over a binary code.
pub fn phi_code(code: &Code, bp: &Bipartition) -> Result<Code> {
    let mut words = BTreeSet::new();
    for omega in code {
        words.append(&mut phi_expand(omega, bp)?);
    }
    Ok(Code::from_set(bp.alphabet(), words))
}

/// Construction I: `0^k`, then a nonzero symbol, a tail free of `0^k`, and a
/// nonzero last symbol.
pub fn construction_i(n: usize, q: usize, k: usize) -> Result<Code> {
    check_fixed_params(n, k)?;
    let alphabet = Alphabet::new(q)?;
    let zero: &[Symbol] = &[0];
    let nonzero = symbols_where(alphabet, |s| s != 0);
    let any = symbols_where(alphabet, |_| true);
    let allowed: Vec<&[Symbol]> = (0..n)
        .map(|p| {
            if p < k {
                zero
            } else if p == k || p == n - 1 {
                &nonzero[..]
            } else {
                &any[..]
            }
        })
        .collect();
    let words = enumerate(&allowed, |prefix| {
        let p = prefix.len() - 1;
        p + 1 >= 2 * k && prefix[p + 1 - k..].iter().all(|&s| s == 0)
    });
    Ok(Code::from_set(alphabet, words))
}

/// Construction I.A: a block of `C ⊆ I^k`, then a `J` symbol, a `C`-free tail
/// and a `J` last symbol.
pub fn construction_ia(n: usize, bp: &Bipartition, forbidden: &ForbiddenSet) -> Result<Code> {
    let k = forbidden.k();
    check_fixed_params(n, k)?;
    if let Some(b) = forbidden.blocks().iter().find(|b| !b.symbols().iter().all(|&s| bp.in_i(s))) {
        return Err(Error::InvalidParameters(format!("block {b} is not in I^{k}")));
    }
    let allowed: Vec<&[Symbol]> = (0..n)
        .map(|p| {
            if p < k {
                bp.i()
            } else if p == k || p == n - 1 {
                bp.j()
            } else {
                bp_all(bp)
            }
        })
        .collect();
    let words = enumerate(&allowed, |prefix| {
        let p = prefix.len() - 1;
        if p + 1 == k {
            !forbidden.contains(prefix)
        } else {
            p + 1 >= 2 * k && forbidden.contains(&prefix[p + 1 - k..])
        }
    });
    Ok(Code::from_set(bp.alphabet(), words))
}

fn bp_all(bp: &Bipartition) -> &'static [Symbol] {
    &ALL_SYMBOLS[..bp.alphabet().size()]
}

static ALL_SYMBOLS: [Symbol; 256] = {
    let mut a = [0u8; 256];
    let mut i = 0;
    while i < 256 {
        a[i] = i as u8;
        i += 1;
    }
    a
};

/// Construction I': `I^k`, then a `J` symbol, an `I^k`-free tail and a `J`
/// last symbol.
pub fn construction_i_prime(n: usize, bp: &Bipartition, k: usize) -> Result<Code> {
    check_fixed_params(n, k)?;
    let allowed: Vec<&[Symbol]> = (0..n)
        .map(|p| {
            if p < k {
                bp.i()
            } else if p == k || p == n - 1 {
                bp.j()
            } else {
                bp_all(bp)
            }
        })
        .collect();
    let words = enumerate(&allowed, |prefix| {
        let p = prefix.len() - 1;
        p + 1 >= 2 * k && prefix[p + 1 - k..].iter().all(|&s| bp.in_i(s))
    });
    Ok(Code::from_set(bp.alphabet(), words))
}

/// Words of `V_{I,J}^{(k)}(len) = J^k × R × I^k`, where the middle `R` starts
/// in `I`, ends in `J` and has no run of `k` symbols from one part.
fn v_layer(len: usize, bp: &Bipartition, k: usize) -> BTreeSet<Word> {
    let (i, j) = (bp.i(), bp.j());
    let allowed: Vec<&[Symbol]> = (0..len)
        .map(|p| {
            if p < k || p == len - k - 1 {
                j
            } else if p == k || p >= len - k {
                i
            } else {
                bp_all(bp)
            }
        })
        .collect();
    enumerate(&allowed, |prefix| {
        let p = prefix.len() - 1;
        if p + 1 < 2 * k || p >= len - k {
            return false;
        }
        let window = &prefix[p + 1 - k..];
        window.iter().all(|&s| bp.in_i(s)) || window.iter().all(|&s| bp.in_j(s))
    })
}

/// Construction II (binary): `1^k 0`, a middle free of `0^k` and `1^k` ending
/// in 1, then `0^k`; united over lengths `2k+2..=n`.
pub fn construction_ii(n: usize, k: usize) -> Result<Code> {
    check_variable_params(n, k)?;
    let one: &[Symbol] = &[1];
    let zero: &[Symbol] = &[0];
    let both: &[Symbol] = &[0, 1];
    let mut words = BTreeSet::new();
    for len in 2 * k + 2..=n {
        let allowed: Vec<&[Symbol]> = (0..len)
            .map(|p| match p {
                p if p < k => one,
                p if p == k => zero,
                p if p == len - k - 1 => one,
                p if p >= len - k => zero,
                _ => both,
            })
            .collect();
        let mut layer = enumerate(&allowed, |prefix| {
            // the middle occupies positions k..len-k
            let p = prefix.len() - 1;
            if p + 1 < 2 * k || p >= len - k {
                return false;
            }
            let window = &prefix[p + 1 - k..];
            window.iter().all(|&s| s == window[0])
        });
        words.append(&mut layer);
    }
    Ok(Code::from_set(Alphabet::BINARY, words))
}

/// Construction II': `J^k × R_{I,J}^{(k)}(i-2k) × I^k` united over `i = 2k+2..=n`.
pub fn construction_ii_prime(n: usize, bp: &Bipartition, k: usize) -> Result<Code> {
    check_variable_params(n, k)?;
    let mut words = BTreeSet::new();
    for len in 2 * k + 2..=n {
        words.append(&mut v_layer(len, bp, k));
    }
    Ok(Code::from_set(bp.alphabet(), words))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_non_overlapping;
    use alloc::string::{String, ToString};

    fn strs(code: &Code) -> Vec<String> {
        code.iter().map(|w| w.to_string()).collect()
    }

    fn word(q: usize, s: &str) -> Word {
        Word::new(Alphabet::new(q).unwrap(), s.bytes().map(|b| b - b'0').collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn free_predicate() {
        let c = ForbiddenSet::new(2, [word(2, "00")]).unwrap();
        assert!(is_free(&[1, 1], &c));
        assert!(!is_free(&[1, 0, 0, 1], &c));
        assert!(is_free(&[0], &c));
        assert!(ForbiddenSet::new(2, [word(2, "0")]).is_err());
    }

    #[test]
    fn power_sets() {
        let c = ForbiddenSet::power(&[0, 2], 3).unwrap();
        assert_eq!(c.blocks().len(), 8);
        assert!(c.contains(&[2, 0, 2]));
        assert!(!c.contains(&[1, 0, 2]));
    }

    #[test]
    fn phi_examples() {
        let a4 = Alphabet::new(4).unwrap();
        let bp = Bipartition::new(a4, &[0, 2], &[1, 3]).unwrap();
        let img = phi_expand(&word(2, "001"), &bp).unwrap();
        assert_eq!(img.len(), 8);
        assert!(img.iter().all(|w| w.len() == 3 && bp.in_j(w.symbols()[2])));

        let bin = Bipartition::binary();
        assert_eq!(phi_expand(&word(2, "0110"), &bin).unwrap().into_iter().collect::<Vec<_>>(), [word(2, "0110")]);

        let a3 = Alphabet::new(3).unwrap();
        let bp = Bipartition::new(a3, &[0, 1], &[2]).unwrap();
        let img: Vec<String> = phi_expand(&word(2, "01"), &bp).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(img, ["02", "12"]);

        assert!(matches!(phi_expand(&word(3, "02"), &bp), Err(Error::NotBinary(_))));
    }

    #[test]
    fn phi_code_examples() {
        let a3 = Alphabet::new(3).unwrap();
        let bp = Bipartition::new(a3, &[0], &[1, 2]).unwrap();
        let s = Code::from_strs(Alphabet::BINARY, &["01"]).unwrap();
        assert_eq!(strs(&phi_code(&s, &bp).unwrap()), ["01", "02"]);
        assert!(phi_code(&Code::empty(Alphabet::BINARY), &bp).unwrap().is_empty());

        let s = construction_i(6, 2, 2).unwrap();
        assert_eq!(phi_code(&s, &bp).unwrap().len(), 32);
    }

    #[test]
    fn construction_i_examples() {
        assert_eq!(strs(&construction_i(6, 2, 2).unwrap()), ["001011", "001101", "001111"]);
        assert_eq!(construction_i(3, 6, 1).unwrap().len(), 25);
        assert_eq!(strs(&construction_i(2, 2, 1).unwrap()), ["01"]);
        assert_eq!(strs(&construction_i(6, 2, 3).unwrap()), ["000101", "000111"]);
        assert_eq!(strs(&construction_i(7, 2, 4).unwrap()), ["0000101", "0000111"]);
        assert!(construction_i(5, 2, 5).is_err());
        assert!(construction_i(5, 2, 0).is_err());
        assert!(construction_i(5, 1, 2).is_err());
    }

    #[test]
    fn construction_ia_examples() {
        let a4 = Alphabet::new(4).unwrap();
        let bp = Bipartition::new(a4, &[0, 1], &[2, 3]).unwrap();
        let c = ForbiddenSet::power(bp.i(), 1).unwrap();
        let code = construction_ia(2, &bp, &c).unwrap();
        assert_eq!(strs(&code), ["02", "03", "12", "13"]);

        let none = ForbiddenSet::new(2, []).unwrap();
        assert!(construction_ia(5, &bp, &none).unwrap().is_empty());

        let outside = ForbiddenSet::new(2, [word(4, "02")]).unwrap();
        assert!(construction_ia(5, &bp, &outside).is_err());

        // a proper subset C ⊂ I^k still yields a non-overlapping code
        let partial = ForbiddenSet::new(2, [word(4, "00"), word(4, "01")]).unwrap();
        let code = construction_ia(6, &bp, &partial).unwrap();
        assert!(!code.is_empty());
        assert!(is_non_overlapping(&code));
    }

    #[test]
    fn construction_i_prime_examples() {
        let a3 = Alphabet::new(3).unwrap();
        for k in 1..7 {
            let bp = Bipartition::canonical(a3, 1).unwrap();
            assert_eq!(construction_i_prime(7, &bp, k).unwrap(), construction_i(7, 3, k).unwrap());
        }
        let bp = Bipartition::canonical(a3, 1).unwrap();
        assert_eq!(construction_i_prime(7, &bp, 2).unwrap().len(), 88);
        let a5 = Alphabet::new(5).unwrap();
        let bp = Bipartition::canonical(a5, 3).unwrap();
        assert_eq!(construction_i_prime(3, &bp, 2).unwrap().len(), 18);
    }

    #[test]
    fn construction_ii_examples() {
        let expected: BTreeSet<String> =
            ["11101000", "111011000", "111001000", "1110101000", "1110011000"].iter().map(|s| s.to_string()).collect();
        assert_eq!(strs(&construction_ii(10, 3).unwrap()).into_iter().collect::<BTreeSet<_>>(), expected);
        assert_eq!(strs(&construction_ii(8, 3).unwrap()), ["11101000"]);
        assert!(construction_ii(10, 2).is_err());
        assert!(construction_ii(9, 4).is_err());
        assert!(construction_ii(10, 4).unwrap().iter().all(|w| w.len() == 10));
    }

    #[test]
    fn construction_ii_prime_examples() {
        let bin = Bipartition::binary();
        for n in 8..=14 {
            assert_eq!(construction_ii_prime(n, &bin, 3).unwrap(), construction_ii(n, 3).unwrap());
        }
        let a3 = Alphabet::new(3).unwrap();
        let best =
            (1..3).map(|i| construction_ii_prime(10, &Bipartition::canonical(a3, i).unwrap(), 3).unwrap().len()).max();
        assert_eq!(best, Some(128));
        let a4 = Alphabet::new(4).unwrap();
        let bp = Bipartition::canonical(a4, 2).unwrap();
        assert_eq!(construction_ii_prime(8, &bp, 3).unwrap().len(), 256);
    }
}
