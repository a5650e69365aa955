//! Exact maximum codes by branch and bound, and greedy expansion.
//!
//! A maximum non-overlapping code of length `n` is a maximum clique in the
//! graph on non-self-overlapping words with an edge between every
//! compatible pair. The search colours the remaining candidates greedily and
//! prunes a branch when the colour count cannot beat the incumbent. The
//! branching order is fixed (degree descending, ties lexicographic), so the
//! node count and the witness are reproducible.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::verify::{compatible, overlap_witness, self_overlapping, EnumCap};
use crate::words::{for_each_word, Alphabet, Code, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub q: usize,
    /// `|witness|`, including any base words.
    pub max_size: usize,
    pub witness: Code,
    pub nodes_explored: u64,
    /// False when the node limit stopped the search; `max_size` is then only
    /// a lower bound.
    pub complete: bool,
}

/// Fixed-size bitset over candidate indices.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(len: usize) -> Self {
        Bits(alloc::vec![0; len.div_ceil(64)])
    }

    fn full(len: usize) -> Self {
        let mut b = Bits::empty(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    fn first(&self) -> Option<usize> {
        self.0.iter().position(|&w| w != 0).map(|wi| wi * 64 + self.0[wi].trailing_zeros() as usize)
    }
}

struct Clique<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    limit: u64,
    aborted: bool,
}

impl Clique<'_> {
    /// Greedy colouring of `p` in index order; returns vertices with their
    /// cumulative colour number, sorted by colour.
    fn colour(&self, p: &Bits) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(p.count());
        let mut uncoloured = p.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.and_not_assign(&self.adj[v]);
                uncoloured.remove(v);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, mut p: Bits) {
        self.nodes += 1;
        if self.nodes > self.limit {
            self.aborted = true;
            return;
        }
        if p.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        let order = self.colour(&p);
        for &(v, c) in order.iter().rev() {
            if self.current.len() + c <= self.best.len() || self.aborted {
                return;
            }
            self.current.push(v);
            let next = p.and(&self.adj[v]);
            self.expand(next);
            self.current.pop();
            p.remove(v);
        }
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
    }
}

fn check_base(base: &Code) -> Result<()> {
    match overlap_witness(base) {
        Some(w) => Err(Error::Overlapping(w)),
        None => Ok(()),
    }
}

/// Largest set of length-`n` words that can be added to `base` keeping it
/// non-overlapping. `base` may mix lengths.
pub fn max_code_extending(base: &Code, n: usize, node_limit: u64, cap: EnumCap) -> Result<SearchResult> {
    if n < 2 {
        return Err(Error::InvalidParameters(alloc::format!("need n >= 2, got {n}")));
    }
    check_base(base)?;
    let alphabet = base.alphabet();
    cap.check(alphabet, n)?;
    let mut lex: Vec<Word> = Vec::new();
    for_each_word(alphabet, n, |x| {
        if !base.contains(x) && !self_overlapping(x) && base.iter().all(|c| compatible(c.symbols(), x)) {
            lex.push(Word::from_vec(x.to_vec()));
        }
    });

    let lex_adj: Vec<Vec<bool>> =
        lex.iter().map(|u| lex.iter().map(|v| u != v && compatible(u.symbols(), v.symbols())).collect()).collect();
    let mut order: Vec<usize> = (0..lex.len()).collect();
    let degree = |i: usize| lex_adj[i].iter().filter(|&&e| e).count();
    order.sort_by_key(|&i| (core::cmp::Reverse(degree(i)), i));

    let len = order.len();
    let adj: Vec<Bits> = order
        .iter()
        .map(|&u| {
            let mut b = Bits::empty(len);
            for (pos, &v) in order.iter().enumerate() {
                if lex_adj[u][v] {
                    b.insert(pos);
                }
            }
            b
        })
        .collect();

    let mut clique =
        Clique { adj: &adj, best: Vec::new(), current: Vec::new(), nodes: 0, limit: node_limit, aborted: false };
    clique.expand(Bits::full(len));

    let mut words: BTreeSet<Word> = base.words().clone();
    words.extend(clique.best.iter().map(|&pos| lex[order[pos]].clone()));
    let witness = Code::from_set(alphabet, words);
    Ok(SearchResult {
        n,
        q: alphabet.size(),
        max_size: witness.len(),
        witness,
        nodes_explored: clique.nodes,
        complete: !clique.aborted,
    })
}

/// `C(n, q)`: the maximum size of a non-overlapping code of length `n` over `Z_q`.
pub fn max_code_exhaustive(n: usize, q: usize, node_limit: u64, cap: EnumCap) -> Result<SearchResult> {
    max_code_extending(&Code::empty(Alphabet::new(q)?), n, node_limit, cap)
}

/// Adds length-`n` words in lexicographic order while the code stays
/// non-overlapping. The result is non-expandable.
pub fn greedy_expand(code: &Code, n: usize, cap: EnumCap) -> Result<Code> {
    match code.fixed_length() {
        Some(len) if len != n => return Err(Error::MixedLength),
        None if !code.is_empty() => return Err(Error::MixedLength),
        _ => {}
    }
    check_base(code)?;
    cap.check(code.alphabet(), n)?;
    let mut words: Vec<Word> = code.iter().cloned().collect();
    for_each_word(code.alphabet(), n, |x| {
        if !code.contains(x) && !self_overlapping(x) && words.iter().all(|c| compatible(c.symbols(), x)) {
            words.push(Word::from_vec(x.to_vec()));
        }
    });
    Ok(Code::from_set(code.alphabet(), words.into_iter().collect()))
}
