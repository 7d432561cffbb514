use super::{check_symbol, Log2Prob, ModelError, SequentialModel, Symbol};

/// Codes with a known categorical distribution `theta`.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleModel {
    theta: Vec<f64>,
    steps: u64,
}

impl OracleModel {
    pub fn new(theta: Vec<f64>) -> Result<Self, ModelError> {
        if theta.is_empty() {
            return Err(ModelError::EmptyAlphabet);
        }
        if theta.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(ModelError::InvalidDistribution(
                "probabilities must be finite and non-negative".into(),
            ));
        }
        let sum: f64 = theta.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(ModelError::InvalidDistribution(format!(
                "probabilities sum to {sum}"
            )));
        }
        Ok(OracleModel { theta, steps: 0 })
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }
}

impl SequentialModel for OracleModel {
    fn alphabet_size(&self) -> usize {
        self.theta.len()
    }

    fn observed(&self) -> u64 {
        self.steps
    }

    fn conditional(&self, s: Symbol) -> Result<Log2Prob, ModelError> {
        check_symbol(s, self.theta.len())?;
        let p = self.theta[s];
        if p > 0.0 {
            Ok(Log2Prob::from_prob(p))
        } else {
            Err(ModelError::ImpossibleEvent { symbol: s })
        }
    }

    fn update(&mut self, s: Symbol) -> Result<(), ModelError> {
        self.conditional(s)?;
        self.steps += 1;
        Ok(())
    }

    fn distribution_into(&self, out: &mut Vec<f64>) {
        out.clear();
        out.extend_from_slice(&self.theta);
    }
}

/// `sum_i log2 theta[x_i]`.
pub fn oracle_log2prob(model: &OracleModel, seq: &[Symbol]) -> Result<Log2Prob, ModelError> {
    seq.iter().map(|&s| model.conditional(s)).sum()
}
