use std::cmp::Ordering;

use super::{CoderError, PRECISION_TOTAL};
use crate::estimators::{Log2Prob, Symbol};

/// Largest alphabet that leaves room for a frequency floor of one.
pub const MAX_ALPHABET: usize = PRECISION_TOTAL as usize - 1;

/// Integer cumulative frequencies summing to [`PRECISION_TOTAL`], every
/// symbol with frequency at least one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantizedCdf {
    cumulative: Vec<u32>,
}

impl QuantizedCdf {
    /// `alphabet_size + 1` entries, starting at 0 and ending at the total.
    pub fn cumulative(&self) -> &[u32] {
        &self.cumulative
    }

    pub fn alphabet_size(&self) -> usize {
        self.cumulative.len() - 1
    }

    #[inline]
    pub fn start(&self, s: Symbol) -> u32 {
        self.cumulative[s]
    }

    #[inline]
    pub fn freq(&self, s: Symbol) -> u32 {
        self.cumulative[s + 1] - self.cumulative[s]
    }

    /// The symbol whose interval contains `target`.
    pub fn find(&self, target: u32) -> Symbol {
        debug_assert!(target < PRECISION_TOTAL);
        self.cumulative.partition_point(|&c| c <= target) - 1
    }
}

/// Quantizes a conditional given in log space. See [`quantize_linear`].
pub fn quantize(conditional: &[Log2Prob]) -> Result<QuantizedCdf, CoderError> {
    let probs: Vec<f64> = conditional.iter().map(|lp| lp.prob()).collect();
    quantize_linear(&probs)
}

/// Turns probabilities into a [`QuantizedCdf`].
///
/// The input is renormalized first, so deficient distributions are fine.
/// Each symbol starts with frequency one and the remaining
/// `PRECISION_TOTAL - X` units are split in proportion to probability by
/// largest remainder, ties going to the lower symbol index. Since every
/// frequency is at least `p * (PRECISION_TOTAL - X)`, no symbol loses more
/// than `log2(PRECISION_TOTAL / (PRECISION_TOTAL - X))` bits.
pub fn quantize_linear(probs: &[f64]) -> Result<QuantizedCdf, CoderError> {
    let x = probs.len();
    if x == 0 {
        return Err(CoderError::BadDistribution("empty alphabet".into()));
    }
    if x > MAX_ALPHABET {
        return Err(CoderError::AlphabetTooLarge {
            size: x,
            max: MAX_ALPHABET,
        });
    }
    if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
        return Err(CoderError::BadDistribution(
            "probabilities must be finite and non-negative".into(),
        ));
    }
    let sum: f64 = probs.iter().sum();
    if sum <= 0.0 {
        return Err(CoderError::BadDistribution("zero total mass".into()));
    }

    let spare = PRECISION_TOTAL as usize - x;
    let scale = spare as f64 / sum;
    let mut freq = Vec::with_capacity(x);
    let mut remainder = Vec::with_capacity(x);
    let mut assigned = 0i64;
    for &p in probs {
        let ideal = p * scale;
        let base = ideal.floor();
        freq.push(base as u32 + 1);
        remainder.push(ideal - base);
        assigned += base as i64;
    }

    let mut leftover = spare as i64 - assigned;
    if leftover != 0 {
        let by_remainder = |&i: &usize, &j: &usize| -> Ordering {
            remainder[j].total_cmp(&remainder[i]).then(i.cmp(&j))
        };
        let mut order: Vec<usize> = (0..x).collect();
        if leftover > 0 && (leftover as usize) < x {
            let k = leftover as usize;
            order.select_nth_unstable_by(k - 1, by_remainder);
            for &i in &order[..k] {
                freq[i] += 1;
            }
        } else {
            order.sort_unstable_by(by_remainder);
            if leftover > 0 {
                // only reachable through rounding in the floors
                for &i in order.iter().cycle().take(leftover as usize) {
                    freq[i] += 1;
                }
            } else {
                for &i in order.iter().rev() {
                    if leftover == 0 {
                        break;
                    }
                    if freq[i] > 1 {
                        freq[i] -= 1;
                        leftover += 1;
                    }
                }
            }
        }
    }

    let mut cumulative = Vec::with_capacity(x + 1);
    let mut acc = 0u32;
    cumulative.push(0);
    for f in freq {
        acc += f;
        cumulative.push(acc);
    }
    debug_assert_eq!(acc, PRECISION_TOTAL);
    Ok(QuantizedCdf { cumulative })
}
