//! Bijective packing of words over `{1..n}` into vertex ids.
//!
//! A word `u_1 u_2 ... u_t` is read as base-`n` digits `u_i - 1`, most
//! significant first, and shifted by one so ids run over `1..=n^t`.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordCodec {
    base: u64,
    len: u32,
}

impl WordCodec {
    pub fn new(base: u32, len: u32) -> WordCodec {
        assert!(base >= 1, "alphabet must be nonempty");
        WordCodec {
            base: base.into(),
            len,
        }
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `n^t`, or `None` on overflow.
    pub fn count(&self) -> Option<u64> {
        self.base.checked_pow(self.len)
    }

    pub fn encode(&self, word: &[Vertex]) -> u64 {
        assert_eq!(word.len(), self.len as usize, "word length");
        1 + word.iter().fold(0u64, |acc, &letter| {
            debug_assert!(letter >= 1 && u64::from(letter) <= self.base);
            acc * self.base + u64::from(letter - 1)
        })
    }

    pub fn decode(&self, id: u64) -> Vec<Vertex> {
        let mut rest = id - 1;
        let mut word = vec![0; self.len as usize];
        for slot in word.iter_mut().rev() {
            *slot = (rest % self.base) as Vertex + 1;
            rest /= self.base;
        }
        debug_assert_eq!(rest, 0, "id out of range");
        word
    }

    /// Final letter: the base vertex this vertex is a copy of.
    pub fn last_letter(&self, id: u64) -> Vertex {
        ((id - 1) % self.base) as Vertex + 1
    }

    /// Id of the constant word `x x ... x`.
    pub fn extreme(&self, x: Vertex) -> u64 {
        self.encode(&vec![x; self.len as usize])
    }
}
