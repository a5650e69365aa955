//! Alphabets, words, bipartitions and codes.
//!
//! A word is a nonempty string over `Z_q = {0, .., q-1}`. Words order
//! lexicographically, so every set of words in this crate iterates in a
//! reproducible order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;

use crate::error::{Error, Result};

pub type Symbol = u8;

/// The alphabet `Z_q`, `2 <= q <= 256`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u16);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);

    pub fn new(q: usize) -> Result<Self> {
        if (2..=256).contains(&q) {
            Ok(Alphabet(q as u16))
        } else {
            Err(Error::AlphabetSize(q))
        }
    }

    pub fn size(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, symbol: Symbol) -> bool {
        (symbol as usize) < self.size()
    }

    pub fn symbols(self) -> impl Iterator<Item = Symbol> + Clone {
        (0..self.size()).map(|s| s as Symbol)
    }
}

/// A nonempty word over some `Z_q`.
///
/// The word itself does not carry `q`; [`Word::new`] checks the symbols
/// against the alphabet it is built for and [`Code`] re-checks membership.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(alphabet: Alphabet, symbols: impl Into<Vec<Symbol>>) -> Result<Self> {
        let symbols = symbols.into();
        if symbols.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(&symbol) = symbols.iter().find(|&&s| !alphabet.contains(s)) {
            return Err(Error::SymbolOutOfRange { symbol, q: alphabet.size() });
        }
        Ok(Word(symbols))
    }

    /// Caller guarantees a nonempty symbol vector.
    pub(crate) fn from_vec(symbols: Vec<Symbol>) -> Self {
        debug_assert!(!symbols.is_empty());
        Word(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; words have at least one symbol.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_over(&self, alphabet: Alphabet) -> bool {
        self.0.iter().all(|&s| alphabet.contains(s))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Proper nonempty prefixes, lengths `1..len`. Empty for a length-1 word.
    pub fn prefixes(&self) -> BTreeSet<Word> {
        (1..self.len()).map(|l| Word(self.0[..l].to_vec())).collect()
    }

    /// Proper nonempty suffixes, lengths `1..len`. Empty for a length-1 word.
    pub fn suffixes(&self) -> BTreeSet<Word> {
        let n = self.len();
        (1..n).map(|l| Word(self.0[n - l..].to_vec())).collect()
    }

    /// True iff `pattern` occurs as a contiguous block of `self` (including equality).
    pub fn contains_subword(&self, pattern: &Word) -> bool {
        contains_slice(&self.0, &pattern.0)
    }

    /// Number of start positions `0..len` at which `pattern` occurs when `self`
    /// is read cyclically.
    pub fn cyclic_occurrences(&self, pattern: &Word) -> Result<usize> {
        let (n, l) = (self.len(), pattern.len());
        if l > n {
            return Err(Error::PatternTooLong { pattern: l, word: n });
        }
        Ok((0..n).filter(|&start| (0..l).all(|j| self.0[(start + j) % n] == pattern.0[j])).count())
    }

    pub fn count_symbol(&self, symbol: Symbol) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }
}

pub(crate) fn contains_slice(haystack: &[Symbol], needle: &[Symbol]) -> bool {
    needle.len() <= haystack.len() && haystack.windows(needle.len()).any(|w| w == needle)
}

impl Borrow<[Symbol]> for Word {
    fn borrow(&self) -> &[Symbol] {
        &self.0
    }
}

impl AsRef<[Symbol]> for Word {
    fn as_ref(&self) -> &[Symbol] {
        &self.0
    }
}

impl fmt::Display for Word {
    /// Digit string when every symbol is below 10, otherwise comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&s| s < 10) {
            for &s in &self.0 {
                write!(f, "{s}")?;
            }
        } else {
            for (i, &s) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Sizes `(|I|, |J|)` of a bipartition; both at least one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartSizes {
    i: u32,
    j: u32,
}

impl PartSizes {
    pub fn new(i: u32, j: u32) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::InvalidBipartition("both parts must be nonempty"));
        }
        Ok(PartSizes { i, j })
    }

    /// `|I| = i_size`, `|J| = q - i_size`.
    pub fn split(q: u32, i_size: u32) -> Result<Self> {
        if i_size >= q {
            return Err(Error::InvalidBipartition("|I| must be below q"));
        }
        PartSizes::new(i_size, q - i_size)
    }

    pub fn i(self) -> u32 {
        self.i
    }

    pub fn j(self) -> u32 {
        self.j
    }

    pub fn q(self) -> u32 {
        self.i + self.j
    }

    /// Every split of `Z_q` by part sizes, `|I| = 1..q-1`.
    pub fn all_for(q: u32) -> impl Iterator<Item = PartSizes> {
        (1..q).map(move |i| PartSizes { i, j: q - i })
    }
}

/// An ordered bipartition `(I, J)` of `Z_q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    alphabet: Alphabet,
    in_i: Vec<bool>,
    i: Vec<Symbol>,
    j: Vec<Symbol>,
}

impl Bipartition {
    /// `I` as given, `J` its complement in `Z_q`.
    pub fn from_i(alphabet: Alphabet, i: &[Symbol]) -> Result<Self> {
        let mut in_i = alloc::vec![false; alphabet.size()];
        for &s in i {
            if !alphabet.contains(s) {
                return Err(Error::SymbolOutOfRange { symbol: s, q: alphabet.size() });
            }
            if in_i[s as usize] {
                return Err(Error::InvalidBipartition("repeated symbol in I"));
            }
            in_i[s as usize] = true;
        }
        Self::from_mask(alphabet, in_i)
    }

    /// Both parts given explicitly; they must be disjoint and cover `Z_q`.
    pub fn new(alphabet: Alphabet, i: &[Symbol], j: &[Symbol]) -> Result<Self> {
        let bp = Self::from_i(alphabet, i)?;
        let mut seen = alloc::vec![false; alphabet.size()];
        for &s in j {
            if !alphabet.contains(s) {
                return Err(Error::SymbolOutOfRange { symbol: s, q: alphabet.size() });
            }
            if bp.in_i[s as usize] {
                return Err(Error::InvalidBipartition("I and J intersect"));
            }
            if seen[s as usize] {
                return Err(Error::InvalidBipartition("repeated symbol in J"));
            }
            seen[s as usize] = true;
        }
        if j.len() != bp.j.len() {
            return Err(Error::InvalidBipartition("I and J do not cover the alphabet"));
        }
        Ok(bp)
    }

    /// `I = {0, .., i_size-1}`, `J = {i_size, .., q-1}`.
    pub fn canonical(alphabet: Alphabet, i_size: usize) -> Result<Self> {
        let i: Vec<Symbol> = (0..i_size).map(|s| s as Symbol).collect();
        if i_size > alphabet.size() {
            return Err(Error::InvalidBipartition("|I| must be below q"));
        }
        Self::from_i(alphabet, &i)
    }

    /// The identity split `I = {0}`, `J = {1}` of `Z_2`.
    pub fn binary() -> Self {
        Self::canonical(Alphabet::BINARY, 1).expect("valid")
    }

    fn from_mask(alphabet: Alphabet, in_i: Vec<bool>) -> Result<Self> {
        let i: Vec<Symbol> = alphabet.symbols().filter(|&s| in_i[s as usize]).collect();
        let j: Vec<Symbol> = alphabet.symbols().filter(|&s| !in_i[s as usize]).collect();
        if i.is_empty() || j.is_empty() {
            return Err(Error::InvalidBipartition("both parts must be nonempty"));
        }
        Ok(Bipartition { alphabet, in_i, i, j })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn i(&self) -> &[Symbol] {
        &self.i
    }

    pub fn j(&self) -> &[Symbol] {
        &self.j
    }

    pub fn in_i(&self, s: Symbol) -> bool {
        self.in_i.get(s as usize).copied().unwrap_or(false)
    }

    pub fn in_j(&self, s: Symbol) -> bool {
        self.alphabet.contains(s) && !self.in_i(s)
    }

    pub fn sizes(&self) -> PartSizes {
        PartSizes { i: self.i.len() as u32, j: self.j.len() as u32 }
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Bipartition").field("I", &self.i).field("J", &self.j).finish()
    }
}

/// A finite set of codewords over a common alphabet, all of length at least 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    alphabet: Alphabet,
    words: BTreeSet<Word>,
}

impl Code {
    pub fn empty(alphabet: Alphabet) -> Self {
        Code { alphabet, words: BTreeSet::new() }
    }

    /// Rejects words outside the alphabet, words of length 1 and duplicates.
    pub fn new(alphabet: Alphabet, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let mut code = Code::empty(alphabet);
        for w in words {
            if let Some(&symbol) = w.symbols().iter().find(|&&s| !alphabet.contains(s)) {
                return Err(Error::SymbolOutOfRange { symbol, q: alphabet.size() });
            }
            if w.len() < 2 {
                return Err(Error::ShortCodeword(w));
            }
            if code.words.contains(&w) {
                return Err(Error::DuplicateWord(w));
            }
            code.words.insert(w);
        }
        Ok(code)
    }

    /// Parses digit-string words; test and example convenience for `q <= 10`.
    pub fn from_strs(alphabet: Alphabet, words: &[&str]) -> Result<Self> {
        let mut parsed = Vec::with_capacity(words.len());
        for w in words {
            let symbols: Vec<Symbol> = w.bytes().map(|b| b.wrapping_sub(b'0')).collect();
            parsed.push(Word::new(alphabet, symbols)?);
        }
        Code::new(alphabet, parsed)
    }

    /// Builder-internal: words already validated.
    pub(crate) fn from_set(alphabet: Alphabet, words: BTreeSet<Word>) -> Self {
        debug_assert!(words.iter().all(|w| w.len() >= 2 && w.is_over(alphabet)));
        Code { alphabet, words }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &[Symbol]) -> bool {
        self.words.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> + Clone {
        self.words.iter()
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn into_words(self) -> BTreeSet<Word> {
        self.words
    }

    pub fn min_len(&self) -> Option<usize> {
        self.words.iter().map(Word::len).min()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.words.iter().map(Word::len).max()
    }

    /// `Some(n)` when the code is nonempty and every word has length `n`.
    pub fn fixed_length(&self) -> Option<usize> {
        let n = self.min_len()?;
        (self.max_len() == Some(n)).then_some(n)
    }

    /// `length -> number of codewords of that length`.
    pub fn length_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for w in &self.words {
            *profile.entry(w.len()).or_insert(0) += 1;
        }
        profile
    }

    /// The sub-code of words with length exactly `len`.
    pub fn layer(&self, len: usize) -> Code {
        let words = self.words.iter().filter(|w| w.len() == len).cloned().collect();
        Code { alphabet: self.alphabet, words }
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(q={}, ", self.alphabet.size())?;
        f.debug_set().entries(self.words.iter().map(|w| alloc::format!("{w}"))).finish()?;
        f.write_str(")")
    }
}

impl<'a> IntoIterator for &'a Code {
    type Item = &'a Word;
    type IntoIter = alloc::collections::btree_set::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// Calls `f` on every word of `Z_q^len` in lexicographic order.
pub(crate) fn for_each_word(alphabet: Alphabet, len: usize, mut f: impl FnMut(&[Symbol])) {
    let mut buf: Vec<Symbol> = alloc::vec![0; len];
    loop {
        f(&buf);
        // odometer increment from the right
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if (buf[pos] as usize) + 1 < alphabet.size() {
                buf[pos] += 1;
                break;
            }
            buf[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        let q = s.bytes().map(|b| b - b'0').max().unwrap_or(0) as usize + 1;
        Word::new(Alphabet::new(q.max(2)).unwrap(), s.bytes().map(|b| b - b'0').collect::<Vec<_>>()).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Word> {
        items.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn prefixes_and_suffixes() {
        assert_eq!(w("0011").prefixes(), set(&["0", "00", "001"]));
        assert_eq!(w("0011").suffixes(), set(&["1", "11", "011"]));
        assert_eq!(w("01").prefixes(), set(&["0"]));
        assert_eq!(w("01").suffixes(), set(&["1"]));
        assert_eq!(w("02101").prefixes(), set(&["0", "02", "021", "0210"]));
        assert_eq!(w("02101").suffixes(), set(&["1", "01", "101", "2101"]));
        assert!(w("0").prefixes().is_empty());
        assert!(w("0").suffixes().is_empty());
    }

    #[test]
    fn subwords() {
        assert!(w("1100").contains_subword(&w("10")));
        assert!(w("0011").contains_subword(&w("0011")));
        assert!(!w("0011").contains_subword(&w("10")));
        assert!(!w("01").contains_subword(&w("011")));
    }

    #[test]
    fn cyclic_counts() {
        assert_eq!(w("0101").cyclic_occurrences(&w("01")), Ok(2));
        assert_eq!(w("0000").cyclic_occurrences(&w("01")), Ok(0));
        // starts 1 and 3 (the second wraps around)
        assert_eq!(w("00101").cyclic_occurrences(&w("010")), Ok(2));
        assert_eq!(w("0110").cyclic_occurrences(&w("00")), Ok(1));
        assert!(matches!(w("01").cyclic_occurrences(&w("010")), Err(Error::PatternTooLong { pattern: 3, word: 2 })));
    }

    #[test]
    fn word_validation() {
        let bin = Alphabet::BINARY;
        assert_eq!(Word::new(bin, Vec::new()), Err(Error::EmptyWord));
        assert_eq!(Word::new(bin, [0, 2]), Err(Error::SymbolOutOfRange { symbol: 2, q: 2 }));
        assert!(Alphabet::new(1).is_err());
        assert!(Alphabet::new(257).is_err());
    }

    #[test]
    fn code_validation() {
        let bin = Alphabet::BINARY;
        assert!(matches!(Code::from_strs(bin, &["0"]), Err(Error::ShortCodeword(_))));
        assert!(matches!(Code::from_strs(bin, &["01", "01"]), Err(Error::DuplicateWord(_))));
        assert!(Code::from_strs(bin, &["012"]).is_err());
        let c = Code::from_strs(bin, &["1100", "10", "111"]).unwrap();
        assert_eq!(c.min_len(), Some(2));
        assert_eq!(c.max_len(), Some(4));
        assert_eq!(c.fixed_length(), None);
        assert_eq!(c.length_profile().into_iter().collect::<Vec<_>>(), [(2, 1), (3, 1), (4, 1)]);
        let order: Vec<_> = c.iter().map(|w| w.to_string()).collect();
        assert_eq!(order, ["10", "1100", "111"]);
    }

    #[test]
    fn display_large_symbols() {
        let a = Alphabet::new(12).unwrap();
        assert_eq!(Word::new(a, [0, 11, 3]).unwrap().to_string(), "0,11,3");
    }

    #[test]
    fn bipartitions() {
        let a = Alphabet::new(4).unwrap();
        let bp = Bipartition::new(a, &[0, 2], &[1, 3]).unwrap();
        assert_eq!(bp.sizes(), PartSizes::new(2, 2).unwrap());
        assert!(bp.in_i(2) && bp.in_j(3) && !bp.in_j(7));
        assert!(Bipartition::new(a, &[0, 1], &[1, 2, 3]).is_err());
        assert!(Bipartition::new(a, &[0], &[1, 2]).is_err());
        assert!(Bipartition::from_i(a, &[0, 1, 2, 3]).is_err());
        assert!(Bipartition::from_i(a, &[]).is_err());
        let c = Bipartition::canonical(a, 3).unwrap();
        assert_eq!((c.i(), c.j()), (&[0, 1, 2][..], &[3][..]));
    }

    #[test]
    fn word_enumeration_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_word(Alphabet::new(3).unwrap(), 2, |w| seen.push(w.to_vec()));
        assert_eq!(seen.len(), 9);
        assert!(seen.windows(2).all(|p| p[0] < p[1]));
    }
}
