use std::collections::HashMap;

use super::Symbol;

/// Sparse occurrence counts of the symbols seen so far.
///
/// Only symbols that have occurred are stored, so the footprint grows with
/// the number of distinct symbols rather than with the alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountTable {
    counts: HashMap<Symbol, u64>,
    total: u64,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one occurrence of `s`.
    pub fn observe(&mut self, s: Symbol) {
        *self.counts.entry(s).or_insert(0) += 1;
        self.total += 1;
    }

    /// Occurrences of `s`; zero if unseen.
    #[inline]
    pub fn count(&self, s: Symbol) -> u64 {
        self.counts.get(&s).copied().unwrap_or(0)
    }

    /// Number of observations, `n`.
    #[inline]
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of distinct symbols observed, `u`.
    #[inline]
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    #[inline]
    pub fn is_seen(&self, s: Symbol) -> bool {
        self.counts.contains_key(&s)
    }

    /// Seen symbols with their counts, in no particular order.
    pub fn iter(&self) -> impl Iterator<Item = (Symbol, u64)> + '_ {
        self.counts.iter().map(|(&s, &c)| (s, c))
    }
}
