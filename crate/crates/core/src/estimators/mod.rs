//! Sequential probability estimators for memoryless sources.
//!
//! Three adaptive coding distributions are provided, all driven by symbol
//! counts:
//!
//! - [`SdcState`]: the add-1/2 (Krichevsky–Trofimov) sequential Dirichlet
//!   estimator over a fixed alphabet.
//! - [`SsdState`]: the sparse sequential Dirichlet estimator, which escapes
//!   to a uniform choice over unseen symbols with weight `1/i` at step `i`
//!   and otherwise runs the add-1/2 rule over the symbols seen so far.
//!   Constant time per symbol, memory proportional to the distinct symbols.
//! - [`SsaState`]: the sequential sub-alphabet estimator, a Bayesian mixture
//!   of add-1/2 estimators over every non-empty subset of the alphabet.
//!   Linear time and space in the alphabet size.
//!
//! [`OracleModel`] codes with a known categorical distribution and serves
//! as the baseline. Queries ([`SequentialModel::conditional`]) never
//! mutate; [`SequentialModel::update`] advances the state.

mod bound;
mod counts;
mod logspace;
mod oracle;
mod sdc;
mod ssa;
mod ssd;

use thiserror::Error;

pub use bound::{redundancy_bound, BoundKind};
pub use counts::CountTable;
pub use logspace::{log2_binomial, log2_sum_exp2, Log2Prob};
pub use oracle::{oracle_log2prob, OracleModel};
pub use sdc::{kt_conditional, SdcState};
pub use ssa::SsaState;
pub use ssd::SsdState;

/// Dense symbol index in `0..alphabet_size`. External alphabets (bytes,
/// tokens) are mapped onto indices by the caller.
pub type Symbol = usize;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("symbol {symbol} is outside an alphabet of size {alphabet_size}")]
    SymbolOutOfRange { symbol: Symbol, alphabet_size: usize },

    #[error("symbol {symbol} is unseen but all {alphabet_size} symbols have already occurred")]
    SaturatedAlphabet { symbol: Symbol, alphabet_size: usize },

    #[error("symbol {symbol} has zero probability under the oracle")]
    ImpossibleEvent { symbol: Symbol },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid bound parameters n={n}, a={a}, x={x}")]
    InvalidBoundParameters { n: u64, a: u64, x: u64 },
}

#[inline]
pub fn check_symbol(s: Symbol, alphabet_size: usize) -> Result<(), ModelError> {
    if s < alphabet_size {
        Ok(())
    } else {
        Err(ModelError::SymbolOutOfRange {
            symbol: s,
            alphabet_size,
        })
    }
}

/// A coding distribution that assigns probabilities one symbol at a time.
///
/// The joint probability of a sequence is the product of conditionals,
/// each taken before the corresponding `update`.
pub trait SequentialModel {
    fn alphabet_size(&self) -> usize;

    /// Number of symbols consumed so far.
    fn observed(&self) -> u64;

    /// Log probability that the next symbol is `s`.
    fn conditional(&self, s: Symbol) -> Result<Log2Prob, ModelError>;

    /// Consumes `s`.
    fn update(&mut self, s: Symbol) -> Result<(), ModelError>;

    /// Writes the linear-domain probability of every symbol into `out`.
    /// Symbols the model cannot emit get zero. The default calls
    /// `conditional` once per symbol; models with a cheaper closed form
    /// override it.
    fn distribution_into(&self, out: &mut Vec<f64>) {
        out.clear();
        out.extend((0..self.alphabet_size()).map(|s| match self.conditional(s) {
            Ok(lp) => lp.prob(),
            Err(_) => 0.0,
        }));
    }
}

/// Joint log probability of `seq` by the chain rule. The model is advanced
/// past `seq`; pass a fresh model for the probability of `seq` alone.
pub fn sequence_log2prob<M: SequentialModel + ?Sized>(
    model: &mut M,
    seq: &[Symbol],
) -> Result<Log2Prob, ModelError> {
    let mut total = Log2Prob::CERTAIN;
    for &s in seq {
        total += model.conditional(s)?;
        model.update(s)?;
    }
    Ok(total)
}

/// `-log2 p(seq)` in bits.
pub fn ideal_code_length<M: SequentialModel + ?Sized>(
    model: &mut M,
    seq: &[Symbol],
) -> Result<f64, ModelError> {
    sequence_log2prob(model, seq).map(Log2Prob::bits)
}

/// Models that can be named in a compressed container.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Sdc,
    Ssd,
    Ssa,
}

impl ModelKind {
    pub fn id(self) -> u8 {
        match self {
            ModelKind::Sdc => 0,
            ModelKind::Ssd => 1,
            ModelKind::Ssa => 2,
        }
    }

    pub fn from_id(id: u8) -> Option<Self> {
        match id {
            0 => Some(ModelKind::Sdc),
            1 => Some(ModelKind::Ssd),
            2 => Some(ModelKind::Ssa),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Sdc => "sdc",
            ModelKind::Ssd => "ssd",
            ModelKind::Ssa => "ssa",
        }
    }
}

/// Runtime choice among the three adaptive estimators.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyModel {
    Sdc(SdcState),
    Ssd(SsdState),
    Ssa(SsaState),
}

impl AnyModel {
    pub fn new(kind: ModelKind, alphabet_size: usize) -> Result<Self, ModelError> {
        Ok(match kind {
            ModelKind::Sdc => AnyModel::Sdc(SdcState::new(alphabet_size)?),
            ModelKind::Ssd => AnyModel::Ssd(SsdState::new(alphabet_size)?),
            ModelKind::Ssa => AnyModel::Ssa(SsaState::new(alphabet_size)?),
        })
    }

    pub fn kind(&self) -> ModelKind {
        match self {
            AnyModel::Sdc(_) => ModelKind::Sdc,
            AnyModel::Ssd(_) => ModelKind::Ssd,
            AnyModel::Ssa(_) => ModelKind::Ssa,
        }
    }

    fn inner(&self) -> &dyn SequentialModel {
        match self {
            AnyModel::Sdc(m) => m,
            AnyModel::Ssd(m) => m,
            AnyModel::Ssa(m) => m,
        }
    }
}

impl SequentialModel for AnyModel {
    fn alphabet_size(&self) -> usize {
        self.inner().alphabet_size()
    }

    fn observed(&self) -> u64 {
        self.inner().observed()
    }

    fn conditional(&self, s: Symbol) -> Result<Log2Prob, ModelError> {
        self.inner().conditional(s)
    }

    fn update(&mut self, s: Symbol) -> Result<(), ModelError> {
        match self {
            AnyModel::Sdc(m) => m.update(s),
            AnyModel::Ssd(m) => m.update(s),
            AnyModel::Ssa(m) => m.update(s),
        }
    }

    fn distribution_into(&self, out: &mut Vec<f64>) {
        self.inner().distribution_into(out)
    }
}
