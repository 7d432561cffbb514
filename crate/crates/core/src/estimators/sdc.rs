use super::{check_symbol, CountTable, Log2Prob, ModelError, SequentialModel, Symbol};

/// Add-1/2 conditional `(c_s + 1/2) / (n + m/2)` over an alphabet of size `m`.
#[inline]
pub fn kt_conditional(counts: &CountTable, m: usize, s: Symbol) -> Log2Prob {
    let c = counts.count(s) as f64;
    let n = counts.total() as f64;
    Log2Prob::new(((c + 0.5) / (n + 0.5 * m as f64)).log2())
}

/// Sequential Dirichlet (Krichevsky–Trofimov) estimator over a fixed alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct SdcState {
    alphabet_size: usize,
    counts: CountTable,
}

impl SdcState {
    pub fn new(alphabet_size: usize) -> Result<Self, ModelError> {
        if alphabet_size == 0 {
            return Err(ModelError::EmptyAlphabet);
        }
        Ok(SdcState {
            alphabet_size,
            counts: CountTable::new(),
        })
    }

    pub fn counts(&self) -> &CountTable {
        &self.counts
    }
}

impl SequentialModel for SdcState {
    fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    fn observed(&self) -> u64 {
        self.counts.total()
    }

    fn conditional(&self, s: Symbol) -> Result<Log2Prob, ModelError> {
        check_symbol(s, self.alphabet_size)?;
        Ok(kt_conditional(&self.counts, self.alphabet_size, s))
    }

    fn update(&mut self, s: Symbol) -> Result<(), ModelError> {
        check_symbol(s, self.alphabet_size)?;
        self.counts.observe(s);
        Ok(())
    }

    fn distribution_into(&self, out: &mut Vec<f64>) {
        let denom = self.counts.total() as f64 + 0.5 * self.alphabet_size as f64;
        out.clear();
        out.resize(self.alphabet_size, 0.5 / denom);
        for (s, c) in self.counts.iter() {
            out[s] = (c as f64 + 0.5) / denom;
        }
    }
}
