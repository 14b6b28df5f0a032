use serde::{Deserialize, Serialize};

use crate::error::{RelError, Result};

/// Numerical thresholds shared by every rank, definiteness and equality test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceProfile {
    /// Singular values below `rank_rel * sigma_max` count as zero.
    pub rank_rel: f64,
    /// Floor for the minimum eigenvalue of Hermitian forms.
    pub psd_abs: f64,
    /// Projector distance below which two subspaces are equal.
    pub eq_tol: f64,
}

/// Below this largest singular value a spanning set is treated as zero.
pub(crate) const ZERO_FLOOR: f64 = 1e-13;

impl Default for ToleranceProfile {
    fn default() -> Self {
        Self {
            rank_rel: 1e-10,
            psd_abs: 1e-10,
            eq_tol: 1e-8,
        }
    }
}

impl ToleranceProfile {
    pub fn new(rank_rel: f64, psd_abs: f64, eq_tol: f64) -> Result<Self> {
        let tol = Self {
            rank_rel,
            psd_abs,
            eq_tol,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("rank_rel", self.rank_rel),
            ("psd_abs", self.psd_abs),
            ("eq_tol", self.eq_tol),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(RelError::InvalidTolerance(format!(
                    "{name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        Ok(())
    }

    pub fn with_eq_tol(mut self, eq_tol: f64) -> Self {
        self.eq_tol = eq_tol;
        self
    }

    /// Default profile with `eq_tol` taken from `RELCALC_TOL_EQ` when set and valid.
    pub fn from_env() -> Self {
        let base = Self::default();
        match std::env::var("RELCALC_TOL_EQ")
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
        {
            Some(v) if v.is_finite() && v > 0.0 => base.with_eq_tol(v),
            _ => base,
        }
    }
}
