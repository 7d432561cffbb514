//! Base-2 log-domain arithmetic.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Sub};

use libm::lgamma as ln_gamma;

/// A base-2 log probability.
///
/// Every model in this crate reports probabilities as `Log2Prob`; joint
/// probabilities of long sequences underflow `f64` long before their logs
/// lose precision.
#[derive(Debug, Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct Log2Prob(f64);

impl Log2Prob {
    /// Probability one.
    pub const CERTAIN: Log2Prob = Log2Prob(0.0);

    pub fn new(value: f64) -> Self {
        debug_assert!(!value.is_nan(), "log2 probability is NaN");
        Log2Prob(value)
    }

    pub fn from_prob(p: f64) -> Self {
        Log2Prob::new(p.log2())
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Linear-domain probability.
    #[inline]
    pub fn prob(self) -> f64 {
        self.0.exp2()
    }

    /// Ideal code length in bits, `-log2 p`.
    #[inline]
    pub fn bits(self) -> f64 {
        -self.0
    }
}

impl Add for Log2Prob {
    type Output = Log2Prob;
    fn add(self, rhs: Log2Prob) -> Log2Prob {
        Log2Prob(self.0 + rhs.0)
    }
}

impl AddAssign for Log2Prob {
    fn add_assign(&mut self, rhs: Log2Prob) {
        self.0 += rhs.0;
    }
}

/// The difference of two log probabilities is a log ratio, not a probability.
impl Sub for Log2Prob {
    type Output = f64;
    fn sub(self, rhs: Log2Prob) -> f64 {
        self.0 - rhs.0
    }
}

impl Sum for Log2Prob {
    fn sum<I: Iterator<Item = Log2Prob>>(iter: I) -> Log2Prob {
        iter.fold(Log2Prob::CERTAIN, |acc, x| acc + x)
    }
}

impl fmt::Display for Log2Prob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `log2(sum_i 2^v_i)` in a single pass, rescaling whenever a new maximum
/// appears. Returns negative infinity for an empty input.
pub fn log2_sum_exp2<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut max = f64::NEG_INFINITY;
    let mut acc = 0.0f64;
    for v in values {
        if v == f64::NEG_INFINITY {
            continue;
        }
        if v <= max {
            acc += (v - max).exp2();
        } else {
            acc = acc * (max - v).exp2() + 1.0;
            max = v;
        }
    }
    if acc == 0.0 {
        f64::NEG_INFINITY
    } else {
        max + acc.log2()
    }
}

/// `log2 C(n, k)` through the log-gamma function. Zero outside `0 <= k <= n`
/// is not meaningful, so callers must keep `k <= n`.
pub fn log2_binomial(n: u64, k: u64) -> f64 {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    match k {
        0 => 0.0,
        1 => (n as f64).log2(),
        _ => {
            (ln_gamma(n as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((n - k) as f64 + 1.0))
                / std::f64::consts::LN_2
        }
    }
}

/// Table of `log2 k!` for `k in 0..=max`, so that binomials over a fixed
/// alphabet cost three lookups.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Log2Factorials(Vec<f64>);

impl Log2Factorials {
    pub(crate) fn new(max: usize) -> Self {
        Log2Factorials(
            (0..=max)
                .map(|k| {
                    if k < 2 {
                        0.0
                    } else {
                        ln_gamma(k as f64 + 1.0) / std::f64::consts::LN_2
                    }
                })
                .collect(),
        )
    }

    #[inline]
    pub(crate) fn binomial(&self, n: usize, k: usize) -> f64 {
        debug_assert!(k <= n);
        if k == 0 || k == n {
            return 0.0;
        }
        self.0[n] - self.0[k] - self.0[n - k]
    }
}
