use super::logspace::log2_binomial;
use super::ModelError;

/// Closed-form redundancy bounds, in bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// Add-1/2 estimator over the full alphabet of size `x`.
    SdcFull,
    /// Add-1/2 estimator over the occurring alphabet of size `a`.
    SdcKnown,
    /// Sub-alphabet mixture.
    Ssa,
    /// Sparse sequential Dirichlet coding.
    Ssd,
}

impl BoundKind {
    pub const ALL: [BoundKind; 4] = [
        BoundKind::SdcFull,
        BoundKind::SdcKnown,
        BoundKind::Ssa,
        BoundKind::Ssd,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BoundKind::SdcFull => "SDC_FULL",
            BoundKind::SdcKnown => "SDC_KNOWN",
            BoundKind::Ssa => "SSA",
            BoundKind::Ssd => "SSD",
        }
    }
}

/// Redundancy bound for a length-`n` sequence over an occurring alphabet of
/// size `a` inside a full alphabet of size `x`.
///
/// `a` is ignored for [`BoundKind::SdcFull`] and `x` for
/// [`BoundKind::SdcKnown`].
pub fn redundancy_bound(kind: BoundKind, n: u64, a: u64, x: u64) -> Result<f64, ModelError> {
    let bad = || ModelError::InvalidBoundParameters { n, a, x };
    if n == 0 {
        return Err(bad());
    }
    let log_n = (n as f64).log2();
    let (af, xf) = (a as f64, x as f64);
    match kind {
        BoundKind::SdcFull => {
            if x == 0 {
                return Err(bad());
            }
            Ok((xf - 1.0) / 2.0 * log_n + xf - 1.0)
        }
        BoundKind::SdcKnown => {
            if a == 0 {
                return Err(bad());
            }
            Ok((af - 1.0) / 2.0 * log_n + af - 1.0)
        }
        BoundKind::Ssa | BoundKind::Ssd => {
            if a == 0 || a > x {
                return Err(bad());
            }
            if kind == BoundKind::Ssa {
                Ok(xf.log2() + log2_binomial(x, a) + (af - 1.0) / 2.0 * log_n + af + 1.0)
            } else {
                Ok((af + 1.0) / 2.0 * log_n + af * xf.log2() + af + 1.0)
            }
        }
    }
}
