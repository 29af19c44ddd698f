//! Criterion weight vectors.

use thiserror::Error;

/// Absolute tolerance on the weights-sum-to-one constraint.
pub const WEIGHT_SUM_EPSILON: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WeightError {
    #[error("weight vector is empty")]
    Empty,
    #[error("weight {value} at index {index} is outside [0, 1]")]
    OutOfRange { index: usize, value: f64 },
    #[error("weights sum to {sum}, expected 1 within {WEIGHT_SUM_EPSILON}")]
    SumNotOne { sum: f64 },
}

/// Per-criterion weights in `[0, 1]` summing to one.
///
/// Weights are used exactly as given. A vector whose sum is farther than
/// [`WEIGHT_SUM_EPSILON`] from one is rejected rather than renormalized, so
/// mistyped inputs surface instead of being silently repaired.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self, WeightError> {
        if weights.is_empty() {
            return Err(WeightError::Empty);
        }
        for (index, &value) in weights.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(WeightError::OutOfRange { index, value });
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_EPSILON {
            return Err(WeightError::SumNotOne { sum });
        }
        Ok(Self(weights))
    }

    /// `n` equal weights `1/n`.
    pub fn uniform(n: usize) -> Result<Self, WeightError> {
        if n == 0 {
            return Err(WeightError::Empty);
        }
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}
