#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use noc_core::words::{Alphabet, Code, Word};

/// Non-overlap by hashing: every proper prefix goes in a set, then no proper
/// suffix may hit it, and no window of a codeword may be a shorter codeword.
pub fn fast_non_overlapping(code: &Code) -> bool {
    let mut prefixes: HashSet<&[u8]> = HashSet::new();
    for w in code {
        let s = w.symbols();
        for l in 1..s.len() {
            prefixes.insert(&s[..l]);
        }
    }
    let words: HashSet<&[u8]> = code.iter().map(|w| w.symbols()).collect();
    let lengths: BTreeSet<usize> = code.iter().map(|w| w.len()).collect();
    for w in code {
        let s = w.symbols();
        if (1..s.len()).any(|l| prefixes.contains(&s[s.len() - l..])) {
            return false;
        }
        for &l in lengths.range(..s.len()) {
            if s.windows(l).any(|win| words.contains(win)) {
                return false;
            }
        }
    }
    true
}

/// Every word of length `n` over `Z_q`, lexicographic.
pub fn all_words(q: usize, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..q as u8).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn code_of(q: usize, words: impl IntoIterator<Item = Vec<u8>>) -> Code {
    let alphabet = Alphabet::new(q).unwrap();
    let set: BTreeSet<Vec<u8>> = words.into_iter().collect();
    Code::new(alphabet, set.into_iter().map(|w| Word::new(alphabet, w).unwrap())).unwrap()
}

pub fn strs(code: &Code) -> Vec<String> {
    code.iter().map(|w| w.to_string()).collect()
}

/// True iff `w` has `k` consecutive symbols all satisfying `pred`.
pub fn has_run(w: &[u8], k: usize, pred: impl Fn(u8) -> bool) -> bool {
    w.windows(k).any(|win| win.iter().all(|&s| pred(s)))
}
