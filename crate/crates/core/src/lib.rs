//! Exact construction, verification, counting and bounds for q-ary
//! non-overlapping (cross-bifix-free) codes.
//!
//! The crate is `no_std` and needs only `alloc`. All cardinalities are
//! arbitrary-precision integers.
//!
//! - [`words`]: alphabets, words, bipartitions, codes.
//! - [`verify`]: brute-force certifiers and counting oracles.
//! - [`construct`]: the binary-to-q-ary expansion and Constructions I, I.A, I', II, II'.
//! - [`count`]: recurrences, rational generating functions, avoidance counts, `ε_k`.
//! - [`bounds`]: Levenshtein, Chee et al. and the recursive bound.
//! - [`search`]: exact maximum codes by branch and bound, greedy expansion.

#![no_std]
extern crate alloc;

pub mod bounds;
pub mod construct;
pub mod count;
pub mod error;
pub mod search;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use words::{Alphabet, Bipartition, Code, PartSizes, Symbol, Word};
