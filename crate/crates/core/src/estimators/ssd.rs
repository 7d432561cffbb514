use super::{check_symbol, CountTable, Log2Prob, ModelError, SequentialModel, Symbol};

/// Sparse sequential Dirichlet estimator.
///
/// At step `i` (one more than the symbols consumed so far) with `u` distinct
/// symbols seen, an unseen symbol gets `(1/i) / (X - u)` and a seen symbol
/// `s` gets `(1 - 1/i) (c_s + 1/2) / (i + u/2 - 1)`.
///
/// Once every symbol of the alphabet has occurred the unseen branch is empty
/// and the conditionals sum to `1 - 1/i`. The lost mass is kept: the joint
/// probabilities reported here are exactly the product of the factors above.
#[derive(Debug, Clone, PartialEq)]
pub struct SsdState {
    alphabet_size: usize,
    counts: CountTable,
}

impl SsdState {
    pub fn new(alphabet_size: usize) -> Result<Self, ModelError> {
        if alphabet_size == 0 {
            return Err(ModelError::EmptyAlphabet);
        }
        Ok(SsdState {
            alphabet_size,
            counts: CountTable::new(),
        })
    }

    pub fn counts(&self) -> &CountTable {
        &self.counts
    }

    /// Index `i` of the next symbol.
    #[inline]
    pub fn step(&self) -> u64 {
        self.counts.total() + 1
    }

    /// Escape weight `1/i` for the next symbol.
    #[inline]
    pub fn escape_weight(&self) -> f64 {
        1.0 / self.step() as f64
    }

    /// Probability mass the next conditional distributes: one, or `1 - 1/i`
    /// when the alphabet is exhausted.
    pub fn total_mass(&self) -> f64 {
        if self.counts.distinct() < self.alphabet_size {
            1.0
        } else {
            1.0 - self.escape_weight()
        }
    }

    #[inline]
    fn seen_prob(&self, c: u64) -> f64 {
        let n = self.counts.total() as f64;
        let u = self.counts.distinct() as f64;
        (1.0 - self.escape_weight()) * (c as f64 + 0.5) / (n + 0.5 * u)
    }

    #[inline]
    fn unseen_prob(&self) -> f64 {
        self.escape_weight() / (self.alphabet_size - self.counts.distinct()) as f64
    }
}

impl SequentialModel for SsdState {
    fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    fn observed(&self) -> u64 {
        self.counts.total()
    }

    fn conditional(&self, s: Symbol) -> Result<Log2Prob, ModelError> {
        check_symbol(s, self.alphabet_size)?;
        let c = self.counts.count(s);
        if c > 0 {
            Ok(Log2Prob::from_prob(self.seen_prob(c)))
        } else if self.counts.distinct() < self.alphabet_size {
            Ok(Log2Prob::from_prob(self.unseen_prob()))
        } else {
            Err(ModelError::SaturatedAlphabet {
                symbol: s,
                alphabet_size: self.alphabet_size,
            })
        }
    }

    fn update(&mut self, s: Symbol) -> Result<(), ModelError> {
        check_symbol(s, self.alphabet_size)?;
        if !self.counts.is_seen(s) && self.counts.distinct() == self.alphabet_size {
            return Err(ModelError::SaturatedAlphabet {
                symbol: s,
                alphabet_size: self.alphabet_size,
            });
        }
        self.counts.observe(s);
        Ok(())
    }

    fn distribution_into(&self, out: &mut Vec<f64>) {
        out.clear();
        let fill = if self.counts.distinct() < self.alphabet_size {
            self.unseen_prob()
        } else {
            0.0
        };
        out.resize(self.alphabet_size, fill);
        for (s, c) in self.counts.iter() {
            out[s] = self.seen_prob(c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Symbol = 0;
    const B: Symbol = 1;

    #[test]
    fn fresh_state_is_uniform() {
        let m = SsdState::new(26).unwrap();
        assert_eq!(m.step(), 1);
        for s in [0, 13, 25] {
            assert!((m.conditional(s).unwrap().value() - (1.0f64 / 26.0).log2()).abs() < 1e-12);
        }
    }

    #[test]
    fn after_one_symbol() {
        let mut m = SsdState::new(26).unwrap();
        m.update(A).unwrap();
        assert_eq!(m.step(), 2);
        assert_eq!(m.counts().distinct(), 1);
        // (1 - 1/2)(1 + 1/2)/(2 + 1/2 - 1) = 1/2
        assert!((m.conditional(A).unwrap().value() - 0.5f64.log2()).abs() < 1e-12);
        // (1/2) / 25
        assert!((m.conditional(B).unwrap().value() - (1.0f64 / 50.0).log2()).abs() < 1e-12);
    }

    #[test]
    fn update_identity_does_not_matter() {
        let mut m = SsdState::new(26).unwrap();
        m.update(25).unwrap();
        assert_eq!(m.counts().distinct(), 1);
        assert_eq!(m.counts().total(), 1);
    }

    #[test]
    fn product_of_two_conditionals() {
        let mut m = SsdState::new(26).unwrap();
        let mut lp = m.conditional(A).unwrap();
        m.update(A).unwrap();
        lp += m.conditional(A).unwrap();
        m.update(A).unwrap();
        assert!((lp.prob() - 1.0 / 52.0).abs() < 1e-15);
    }

    #[test]
    fn saturated_alphabet_only_has_seen_symbols() {
        let mut m = SsdState::new(2).unwrap();
        m.update(0).unwrap();
        m.update(1).unwrap();
        assert!(m.conditional(0).is_ok());
        let mut m1 = SsdState::new(1).unwrap();
        m1.update(0).unwrap();
        // with every symbol seen, an unseen symbol can only be out of range
        assert!(matches!(m1.conditional(1), Err(ModelError::SymbolOutOfRange { .. })));

        let mut m3 = SsdState::new(3).unwrap();
        for s in [0, 1, 2] {
            m3.update(s).unwrap();
        }
        assert!((m3.total_mass() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn saturated_distribution_is_deficient() {
        let mut m = SsdState::new(2).unwrap();
        m.update(1).unwrap();
        m.update(0).unwrap();
        let mut d = Vec::new();
        m.distribution_into(&mut d);
        assert!((d.iter().sum::<f64>() - (1.0 - 1.0 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn single_symbol_alphabet() {
        let mut m = SsdState::new(1).unwrap();
        // alpha_1 = 1 and one unseen symbol: certain
        assert_eq!(m.conditional(0).unwrap().value(), 0.0);
        m.update(0).unwrap();
        // afterwards the seen branch carries 1 - 1/i
        assert!((m.conditional(0).unwrap().prob() - 0.5).abs() < 1e-15);
        let mut fresh = SsdState::new(1).unwrap();
        let bits = super::super::ideal_code_length(&mut fresh, &[0; 100]).unwrap();
        assert!((bits - 100f64.log2()).abs() < 1e-10);
    }

    #[test]
    fn distribution_sums_to_total_mass() {
        let mut m = SsdState::new(6).unwrap();
        for s in [2, 2, 5, 0, 2] {
            m.update(s).unwrap();
            let mut d = Vec::new();
            m.distribution_into(&mut d);
            assert!((d.iter().sum::<f64>() - m.total_mass()).abs() < 1e-14);
        }
    }
}
