//! Synthetic memoryless-source experiments.
//!
//! Each trial draws a categorical distribution over `a` symbols uniformly
//! from the simplex, samples a sequence from it, places the symbols at
//! indices `0..a` of the larger alphabet of size `x`, and scores the
//! sequence under every selected coding distribution. Scores are ideal code
//! lengths `-log2 p` unless [`Scoring::Coded`] asks for range-coded payload
//! sizes.
//!
//! Trial `t` draws from a ChaCha8 stream keyed by the experiment seed with
//! stream number `t`, so results do not depend on how trials are scheduled.

use std::fmt::{self, Write as _};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;
use thiserror::Error;

use crate::coder::{encode_payload, CoderError};
use crate::estimators::{
    ideal_code_length, ModelError, OracleModel, SdcState, SequentialModel, SsaState, SsdState,
    Symbol,
};

pub const DEFAULT_TRIALS: u64 = 100_000;
pub const DEFAULT_SEQ_LEN: usize = 100;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid experiment configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Coder(#[from] CoderError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Oracle,
    SdcA,
    SdcX,
    Ssd,
    Ssa,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Oracle,
        Method::SdcA,
        Method::SdcX,
        Method::Ssd,
        Method::Ssa,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Method::Oracle => "ORACLE",
            Method::SdcA => "SDC_A",
            Method::SdcX => "SDC_X",
            Method::Ssd => "SSD",
            Method::Ssa => "SSA",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// How a trial's sequence is scored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scoring {
    /// `-log2 p(x)` under the model.
    #[default]
    Ideal,
    /// Bits of the range-coded payload.
    Coded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub sub_alphabet: usize,
    pub full_alphabet: usize,
    pub trials: u64,
    pub seq_len: usize,
    pub seed: u64,
    pub methods: Vec<Method>,
    pub scoring: Scoring,
}

impl ExperimentConfig {
    pub fn new(sub_alphabet: usize, full_alphabet: usize) -> Self {
        ExperimentConfig {
            sub_alphabet,
            full_alphabet,
            trials: DEFAULT_TRIALS,
            seq_len: DEFAULT_SEQ_LEN,
            seed: 0,
            methods: Method::ALL.to_vec(),
            scoring: Scoring::Ideal,
        }
    }

    pub fn with_trials(mut self, trials: u64) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_seq_len(mut self, seq_len: usize) -> Self {
        self.seq_len = seq_len;
        self
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        let fail = |msg: String| Err(BenchError::Config(msg));
        if self.sub_alphabet == 0 {
            return fail("sub-alphabet size must be at least 1".into());
        }
        if self.full_alphabet < self.sub_alphabet {
            return fail(format!(
                "full alphabet ({}) is smaller than the sub-alphabet ({})",
                self.full_alphabet, self.sub_alphabet
            ));
        }
        if self.trials == 0 {
            return fail("trials must be at least 1".into());
        }
        if self.seq_len == 0 {
            return fail("sequence length must be at least 1".into());
        }
        if self.methods.is_empty() {
            return fail("no methods selected".into());
        }
        Ok(())
    }

    fn has(&self, m: Method) -> bool {
        self.methods.contains(&m)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub label: String,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    /// One row per selected method, in [`Method::ALL`] order.
    pub rows: Vec<SummaryRow>,
    /// Per-trial `SSD - SSA`, present when both were run.
    pub difference: Option<SummaryRow>,
    /// Per-trial scores indexed like [`Method::ALL`]; unselected methods are NaN.
    pub per_trial: Vec<[f64; 5]>,
}

impl ExperimentReport {
    pub fn row(&self, label: &str) -> Option<&SummaryRow> {
        self.rows
            .iter()
            .chain(self.difference.iter())
            .find(|r| r.label == label)
    }

    pub fn mean(&self, method: Method) -> Option<f64> {
        self.row(method.label()).map(|r| r.mean)
    }

    /// All rows with the difference row last.
    pub fn all_rows(&self) -> Vec<SummaryRow> {
        self.rows.iter().chain(self.difference.iter()).cloned().collect()
    }
}

/// The random stream for one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A point drawn uniformly from the `k`-simplex (symmetric Dirichlet with
/// concentration one) as normalized standard exponentials.
pub fn sample_simplex<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Vec<f64> {
    assert!(k >= 1, "simplex dimension must be positive");
    let mut v: Vec<f64> = (0..k).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let sum: f64 = v.iter().sum();
    for p in &mut v {
        *p /= sum;
    }
    v
}

/// `n` i.i.d. draws from `theta` by inverse CDF.
pub fn generate_sequence<R: Rng + ?Sized>(theta: &[f64], n: usize, rng: &mut R) -> Vec<Symbol> {
    let last_positive = theta
        .iter()
        .rposition(|&p| p > 0.0)
        .expect("theta has positive mass");
    (0..n)
        .map(|_| {
            let u: f64 = rng.random();
            let mut acc = 0.0;
            for (s, &p) in theta.iter().enumerate() {
                acc += p;
                if u < acc && p > 0.0 {
                    return s;
                }
            }
            last_positive
        })
        .collect()
}

/// Expected code length in bits of `n` symbols coded with the true
/// distribution when that distribution is uniform on the `k`-simplex:
/// `n (H_k - 1) / ln 2`.
pub fn expected_oracle_bits(k: usize, n: usize) -> f64 {
    let harmonic_tail: f64 = (2..=k).map(|j| 1.0 / j as f64).sum();
    n as f64 * harmonic_tail / std::f64::consts::LN_2
}

fn score<M: SequentialModel>(
    mut model: M,
    seq: &[Symbol],
    scoring: Scoring,
) -> Result<f64, BenchError> {
    Ok(match scoring {
        Scoring::Ideal => ideal_code_length(&mut model, seq)?,
        Scoring::Coded => (encode_payload(&mut model, seq)?.len() * 8) as f64,
    })
}

/// Scores for a single trial, indexed like [`Method::ALL`].
pub fn run_trial(config: &ExperimentConfig, trial: u64) -> Result<[f64; 5], BenchError> {
    let mut rng = trial_rng(config.seed, trial);
    let theta = sample_simplex(config.sub_alphabet, &mut rng);
    let seq = generate_sequence(&theta, config.seq_len, &mut rng);
    let (a, x, how) = (config.sub_alphabet, config.full_alphabet, config.scoring);

    let mut out = [f64::NAN; 5];
    for &m in &Method::ALL {
        if !config.has(m) {
            continue;
        }
        out[m.index()] = match m {
            Method::Oracle => score(OracleModel::new(theta.clone())?, &seq, how)?,
            Method::SdcA => score(SdcState::new(a)?, &seq, how)?,
            Method::SdcX => score(SdcState::new(x)?, &seq, how)?,
            Method::Ssd => score(SsdState::new(x)?, &seq, how)?,
            Method::Ssa => score(SsaState::new(x)?, &seq, how)?,
        };
    }
    Ok(out)
}

/// Mean with Neumaier compensation, plus min and max.
fn summarize(label: &str, values: impl Iterator<Item = f64>) -> SummaryRow {
    let (mut sum, mut comp, mut count) = (0.0f64, 0.0f64, 0u64);
    let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
        count += 1;
        min = min.min(v);
        max = max.max(v);
    }
    SummaryRow {
        label: label.to_string(),
        mean: (sum + comp) / count as f64,
        min,
        max,
    }
}

fn aggregate(config: &ExperimentConfig, per_trial: Vec<[f64; 5]>) -> ExperimentReport {
    let rows = Method::ALL
        .iter()
        .filter(|m| config.has(**m))
        .map(|m| summarize(m.label(), per_trial.iter().map(|t| t[m.index()])))
        .collect();
    let difference = (config.has(Method::Ssd) && config.has(Method::Ssa)).then(|| {
        summarize(
            "DIFF",
            per_trial
                .iter()
                .map(|t| t[Method::Ssd.index()] - t[Method::Ssa.index()]),
        )
    });
    ExperimentReport {
        rows,
        difference,
        per_trial,
    }
}

/// Runs every trial, in parallel, and summarizes them in trial order.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport, BenchError> {
    config.validate()?;
    let per_trial = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(aggregate(config, per_trial))
}

/// Same as [`run_experiment`] on the calling thread.
pub fn run_experiment_serial(config: &ExperimentConfig) -> Result<ExperimentReport, BenchError> {
    config.validate()?;
    let per_trial = (0..config.trials)
        .map(|t| run_trial(config, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(aggregate(config, per_trial))
}

/// `method,mean,min,max` followed by one line per row, six decimals.
pub fn emit_csv(rows: &[SummaryRow]) -> String {
    let mut out = String::from("method,mean,min,max\n");
    for r in rows {
        writeln!(out, "{},{:.6},{:.6},{:.6}", r.label, r.mean, r.min, r.max).unwrap();
    }
    out
}

/// Fixed-width table for terminals.
pub fn format_table(rows: &[SummaryRow]) -> String {
    let mut out = format!("{:<8} {:>14} {:>14} {:>14}\n", "method", "mean", "min", "max");
    for r in rows {
        writeln!(
            out,
            "{:<8} {:>14.6} {:>14.6} {:>14.6}",
            r.label, r.mean, r.min, r.max
        )
        .unwrap();
    }
    out
}
