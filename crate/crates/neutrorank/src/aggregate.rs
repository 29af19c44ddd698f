//! Weighted operators that collapse a row of criterion values into one value.
//!
//! The arithmetic operator combines truth probabilistic-sum style
//! (`1 - prod (1 - t_k)^{w_k}`) and indeterminacy/falsity product style
//! (`prod x_k^{w_k}`); the geometric operator swaps the two roles. For
//! interval values the same formulas apply boundwise. Both operators are
//! idempotent and monotone under containment, and the arithmetic aggregate
//! always contains the geometric one.

use thiserror::Error;

use crate::value::{InValue, SvnValue, UnitInterval};
use crate::weights::WeightVector;

/// Which weighted operator collapses a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    /// Group-influence style: not very sensitive to any single value.
    Arithmetic,
    /// Individual-influence style: sensitive to each value; a zero truth
    /// with positive weight annihilates the aggregate truth.
    Geometric,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AggregateError {
    #[error("row has {values} values but there are {weights} weights")]
    LengthMismatch { values: usize, weights: usize },
}

/// `base^exponent` over `[0, 1] x [0, 1]` with `0^0 = 1`, so zero-weight
/// criteria are true no-ops.
fn weighted_pow(base: f64, exponent: f64) -> f64 {
    if base == 0.0 {
        if exponent == 0.0 {
            1.0
        } else {
            0.0
        }
    } else {
        // libm pow may overshoot 1 by an ulp for base just below 1
        base.powf(exponent).min(1.0)
    }
}

fn check_len(values: usize, weights: &WeightVector) -> Result<(), AggregateError> {
    if values == weights.len() {
        Ok(())
    } else {
        Err(AggregateError::LengthMismatch {
            values,
            weights: weights.len(),
        })
    }
}

/// `prod x_k^{w_k}` over one component of the row.
fn product(components: impl Iterator<Item = f64>, weights: &[f64]) -> f64 {
    components
        .zip(weights)
        .map(|(x, &w)| weighted_pow(x, w))
        .product()
}

/// `1 - prod (1 - x_k)^{w_k}` over one component of the row.
fn dual_product(components: impl Iterator<Item = f64>, weights: &[f64]) -> f64 {
    1.0 - product(components.map(|x| 1.0 - x), weights)
}

pub fn svn_weighted_average(values: &[SvnValue], weights: &WeightVector) -> Result<SvnValue, AggregateError> {
    check_len(values.len(), weights)?;
    let w = weights.as_slice();
    Ok(SvnValue::new(
        dual_product(values.iter().map(SvnValue::truth), w),
        product(values.iter().map(SvnValue::indeterminacy), w),
        product(values.iter().map(SvnValue::falsity), w),
    )
    .expect("aggregate components stay in [0, 1]"))
}

pub fn svn_weighted_geometric(values: &[SvnValue], weights: &WeightVector) -> Result<SvnValue, AggregateError> {
    check_len(values.len(), weights)?;
    let w = weights.as_slice();
    Ok(SvnValue::new(
        product(values.iter().map(SvnValue::truth), w),
        dual_product(values.iter().map(SvnValue::indeterminacy), w),
        dual_product(values.iter().map(SvnValue::falsity), w),
    )
    .expect("aggregate components stay in [0, 1]"))
}

fn interval_product(intervals: impl Iterator<Item = UnitInterval> + Clone, weights: &[f64]) -> UnitInterval {
    UnitInterval::raw(
        product(intervals.clone().map(|p| p.lo()), weights),
        product(intervals.map(|p| p.hi()), weights),
    )
}

fn interval_dual_product(intervals: impl Iterator<Item = UnitInterval> + Clone, weights: &[f64]) -> UnitInterval {
    UnitInterval::raw(
        dual_product(intervals.clone().map(|p| p.lo()), weights),
        dual_product(intervals.map(|p| p.hi()), weights),
    )
}

/// Boundwise arithmetic aggregation. Lenient (descending) bounds are
/// combined exactly as stored.
pub fn interval_weighted_average(values: &[InValue], weights: &WeightVector) -> Result<InValue, AggregateError> {
    check_len(values.len(), weights)?;
    let w = weights.as_slice();
    Ok(InValue::from_intervals(
        interval_dual_product(values.iter().map(InValue::truth), w),
        interval_product(values.iter().map(InValue::indeterminacy), w),
        interval_product(values.iter().map(InValue::falsity), w),
    ))
}

/// Boundwise geometric aggregation.
pub fn interval_weighted_geometric(values: &[InValue], weights: &WeightVector) -> Result<InValue, AggregateError> {
    check_len(values.len(), weights)?;
    let w = weights.as_slice();
    Ok(InValue::from_intervals(
        interval_product(values.iter().map(InValue::truth), w),
        interval_dual_product(values.iter().map(InValue::indeterminacy), w),
        interval_dual_product(values.iter().map(InValue::falsity), w),
    ))
}

pub fn aggregate_svn(
    values: &[SvnValue],
    weights: &WeightVector,
    operator: Operator,
) -> Result<SvnValue, AggregateError> {
    match operator {
        Operator::Arithmetic => svn_weighted_average(values, weights),
        Operator::Geometric => svn_weighted_geometric(values, weights),
    }
}

pub fn aggregate_interval(
    values: &[InValue],
    weights: &WeightVector,
    operator: Operator,
) -> Result<InValue, AggregateError> {
    match operator {
        Operator::Arithmetic => interval_weighted_average(values, weights),
        Operator::Geometric => interval_weighted_geometric(values, weights),
    }
}
