use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numeric thresholds used by the algebra and representation layers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative gap separating eigenvalue clusters.
    pub cluster_gap: f64,
    /// Eigenvalues below this (relative) count as zero in rank and null
    /// space computations.
    pub rank: f64,
    /// Allowed distance of a degree from the nearest integer.
    pub integrality: f64,
    /// Multiplicative cocycle identity for exact-valued tables.
    pub cocycle: f64,
    /// Numerically read cocycles (Clifford extensions and factors).
    pub numeric_cocycle: f64,
    /// Representation identities `φ(x)φ(y) = α(x,y)φ(xy)` and unitarity.
    pub representation: f64,
    /// Character and isomorphism comparisons.
    pub comparison: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            cluster_gap: 1e-8,
            rank: 1e-8,
            integrality: 1e-6,
            cocycle: 1e-12,
            numeric_cocycle: 1e-6,
            representation: 1e-8,
            comparison: 1e-6,
        }
    }
}

impl Tolerances {
    /// Scale the comparison-style thresholds to `tol`, keeping the
    /// stricter structural ones.
    pub fn with_comparison(mut self, tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
        }
        self.comparison = tol;
        self.integrality = tol;
        self.numeric_cocycle = tol;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [
            self.cluster_gap,
            self.rank,
            self.integrality,
            self.cocycle,
            self.numeric_cocycle,
            self.representation,
            self.comparison,
        ];
        if all.iter().all(|t| *t > 0.0 && t.is_finite()) {
            Ok(())
        } else {
            Err(Error::Config("tolerances must be positive".into()))
        }
    }
}

/// Number of fresh random draws before a numeric step gives up.
pub const MAX_RETRIES: usize = 5;

pub const DEFAULT_SEED: u64 = 20240601;
