use super::logspace::{log2_sum_exp2, Log2Factorials};
use super::{check_symbol, CountTable, Log2Prob, ModelError, SequentialModel, Symbol};

/// Sequential sub-alphabet estimator: a mixture of add-1/2 estimators over
/// all non-empty subsets of the alphabet, with prior weight
/// `1 / (X * C(X, m))` on each subset of size `m`.
///
/// The add-1/2 probability of a sequence over a subset depends only on the
/// counts and the subset size, so the `2^X - 1` subsets collapse into `X`
/// size buckets. With `u` distinct symbols observed, `C(X - u, m - u)`
/// subsets of size `m` contain all of them; the rest give zero probability.
#[derive(Debug, Clone, PartialEq)]
pub struct SsaState {
    alphabet_size: usize,
    counts: CountTable,
    /// Entry `m - 1` holds `log2 KT_m(x_{1:n})`.
    block_logprob: Vec<f64>,
    /// Entry `m - 1` holds `-log2 X - log2 C(X, m)`.
    prior_logweight: Vec<f64>,
    factorials: Log2Factorials,
}

impl SsaState {
    pub fn new(alphabet_size: usize) -> Result<Self, ModelError> {
        if alphabet_size == 0 {
            return Err(ModelError::EmptyAlphabet);
        }
        let factorials = Log2Factorials::new(alphabet_size);
        let log2_x = (alphabet_size as f64).log2();
        let prior_logweight = (1..=alphabet_size)
            .map(|m| -log2_x - factorials.binomial(alphabet_size, m))
            .collect();
        Ok(SsaState {
            alphabet_size,
            counts: CountTable::new(),
            block_logprob: vec![0.0; alphabet_size],
            prior_logweight,
            factorials,
        })
    }

    pub fn counts(&self) -> &CountTable {
        &self.counts
    }

    /// `log2 KT_m` of the sequence so far, indexed by `m - 1`.
    pub fn block_logprob(&self) -> &[f64] {
        &self.block_logprob
    }

    pub fn prior_logweight(&self) -> &[f64] {
        &self.prior_logweight
    }

    /// Log probability of everything consumed so far.
    pub fn joint_log2prob(&self) -> Log2Prob {
        Log2Prob::new(self.log2_evidence())
    }

    /// `log2` of the total mixture weight of subsets containing every seen
    /// symbol, each scaled by its add-1/2 probability and by `extra(m)`.
    fn log2_mixture(&self, first: usize, skip: usize, extra: impl Fn(usize) -> f64) -> f64 {
        let x = self.alphabet_size;
        let free = x - skip;
        log2_sum_exp2((first..=x).map(|m| {
            self.prior_logweight[m - 1]
                + self.factorials.binomial(free, m - skip)
                + self.block_logprob[m - 1]
                + extra(m)
        }))
    }

    fn log2_evidence(&self) -> f64 {
        let u = self.counts.distinct();
        self.log2_mixture(u.max(1), u, |_| 0.0)
    }

    /// Per-symbol mass shared by seen symbols before the `c_s + 1/2` factor.
    fn log2_seen_mass(&self) -> f64 {
        let u = self.counts.distinct();
        let n = self.counts.total() as f64;
        self.log2_mixture(u.max(1), u, |m| -(n + 0.5 * m as f64).log2())
    }

    /// Mass of any single unseen symbol; subsets must also contain it.
    fn log2_unseen_mass(&self) -> f64 {
        let u = self.counts.distinct();
        if u == self.alphabet_size {
            return f64::NEG_INFINITY;
        }
        let n = self.counts.total() as f64;
        self.log2_mixture(u + 1, u + 1, |m| -1.0 - (n + 0.5 * m as f64).log2())
    }
}

impl SequentialModel for SsaState {
    fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    fn observed(&self) -> u64 {
        self.counts.total()
    }

    fn conditional(&self, s: Symbol) -> Result<Log2Prob, ModelError> {
        check_symbol(s, self.alphabet_size)?;
        let c = self.counts.count(s);
        let numerator = if c > 0 {
            (c as f64 + 0.5).log2() + self.log2_seen_mass()
        } else {
            self.log2_unseen_mass()
        };
        Ok(Log2Prob::new(numerator - self.log2_evidence()))
    }

    fn update(&mut self, s: Symbol) -> Result<(), ModelError> {
        check_symbol(s, self.alphabet_size)?;
        let num = (self.counts.count(s) as f64 + 0.5).log2();
        let n = self.counts.total() as f64;
        for (i, lp) in self.block_logprob.iter_mut().enumerate() {
            let m = (i + 1) as f64;
            *lp += num - (n + 0.5 * m).log2();
        }
        self.counts.observe(s);
        Ok(())
    }

    fn distribution_into(&self, out: &mut Vec<f64>) {
        let evidence = self.log2_evidence();
        let unseen = (self.log2_unseen_mass() - evidence).exp2();
        let seen = self.log2_seen_mass() - evidence;
        out.clear();
        out.resize(self.alphabet_size, unseen);
        for (s, c) in self.counts.iter() {
            out[s] = ((c as f64 + 0.5).log2() + seen).exp2();
        }
    }
}
