//! The end-to-end pipeline: collapse each alternative's row with a weighted
//! operator, score the aggregates, and order alternatives with the
//! two-level comparator.
//!
//! Row aggregation and scoring are embarrassingly parallel; with the
//! `parallel` feature (on by default) [`DecisionMatrix::rank`] fans rows
//! out over rayon. [`DecisionMatrix::rank_sequential`] is always available
//! and produces bit-identical reports.

use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::aggregate::{aggregate_interval, aggregate_svn, AggregateError, Operator};
use crate::ranking::{
    accuracy_interval, accuracy_svn, compare_interval, compare_svn, score_interval, score_svn, Comparison,
    DecidedBy, Relation, Score,
};
use crate::value::{InValue, SvnValue, ValueError, EQ_EPSILON};
use crate::weights::WeightVector;

/// A value kind that can fill a decision matrix.
pub trait CriterionValue: Copy + Send + Sync {
    fn aggregate_row(values: &[Self], weights: &WeightVector, operator: Operator) -> Result<Self, AggregateError>;
    fn score(&self) -> Score;
    fn accuracy(&self) -> Score;
    fn compare(&self, other: &Self) -> Comparison;
    fn complement(&self) -> Result<Self, ValueError>;
}

impl CriterionValue for SvnValue {
    fn aggregate_row(values: &[Self], weights: &WeightVector, operator: Operator) -> Result<Self, AggregateError> {
        aggregate_svn(values, weights, operator)
    }

    fn score(&self) -> Score {
        score_svn(*self)
    }

    fn accuracy(&self) -> Score {
        accuracy_svn(*self)
    }

    fn compare(&self, other: &Self) -> Comparison {
        compare_svn(*self, *other)
    }

    fn complement(&self) -> Result<Self, ValueError> {
        Ok(SvnValue::complement(self))
    }
}

impl CriterionValue for InValue {
    fn aggregate_row(values: &[Self], weights: &WeightVector, operator: Operator) -> Result<Self, AggregateError> {
        aggregate_interval(values, weights, operator)
    }

    fn score(&self) -> Score {
        score_interval(*self)
    }

    fn accuracy(&self) -> Score {
        accuracy_interval(*self)
    }

    fn compare(&self, other: &Self) -> Comparison {
        compare_interval(*self, *other)
    }

    fn complement(&self) -> Result<Self, ValueError> {
        InValue::complement(self)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("matrix has no alternatives")]
    NoAlternatives,
    #[error("{criteria} criteria but {weights} weights")]
    CriteriaWeightMismatch { criteria: usize, weights: usize },
    #[error("{rows} rows for {alternatives} alternatives")]
    RowCount { rows: usize, alternatives: usize },
    #[error("alternative {alternative:?} has {got} values, expected {expected}")]
    RowLength {
        alternative: String,
        got: usize,
        expected: usize,
    },
    #[error("unknown criterion {name:?}")]
    UnknownCriterion { name: String },
    #[error("alternative {alternative:?}, criterion {criterion:?}: {source}")]
    Entry {
        alternative: String,
        criterion: String,
        source: ValueError,
    },
}

/// Named alternatives x named criteria grid of one value kind, plus the
/// criterion weights. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionMatrix<V> {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    weights: WeightVector,
    rows: Vec<Vec<V>>,
}

/// Matrix of single-valued entries.
pub type SvnMatrix = DecisionMatrix<SvnValue>;
/// Matrix of interval entries.
pub type IntervalMatrix = DecisionMatrix<InValue>;

impl<V: CriterionValue> DecisionMatrix<V> {
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<String>,
        weights: WeightVector,
        rows: Vec<Vec<V>>,
    ) -> Result<Self, MatrixError> {
        if alternatives.is_empty() {
            return Err(MatrixError::NoAlternatives);
        }
        if criteria.len() != weights.len() {
            return Err(MatrixError::CriteriaWeightMismatch {
                criteria: criteria.len(),
                weights: weights.len(),
            });
        }
        if rows.len() != alternatives.len() {
            return Err(MatrixError::RowCount {
                rows: rows.len(),
                alternatives: alternatives.len(),
            });
        }
        for (name, row) in alternatives.iter().zip(&rows) {
            if row.len() != criteria.len() {
                return Err(MatrixError::RowLength {
                    alternative: name.clone(),
                    got: row.len(),
                    expected: criteria.len(),
                });
            }
        }
        Ok(Self {
            alternatives,
            criteria,
            weights,
            rows,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn rows(&self) -> &[Vec<V>] {
        &self.rows
    }

    /// Complements every entry of the named criteria, turning cost criteria
    /// into benefit criteria. Opt-in preprocessing; ranking never applies
    /// it implicitly.
    pub fn with_complemented_criteria(&self, names: &[String]) -> Result<Self, MatrixError> {
        let mut columns = Vec::with_capacity(names.len());
        for name in names {
            let index = self
                .criteria
                .iter()
                .position(|c| c == name)
                .ok_or_else(|| MatrixError::UnknownCriterion { name: name.clone() })?;
            columns.push(index);
        }
        let mut rows = self.rows.clone();
        for (row, alternative) in rows.iter_mut().zip(&self.alternatives) {
            for &col in &columns {
                row[col] = row[col].complement().map_err(|source| MatrixError::Entry {
                    alternative: alternative.clone(),
                    criterion: self.criteria[col].clone(),
                    source,
                })?;
            }
        }
        Ok(Self {
            alternatives: self.alternatives.clone(),
            criteria: self.criteria.clone(),
            weights: self.weights.clone(),
            rows,
        })
    }

    fn summarize(&self, row: &[V], operator: Operator) -> (V, f64) {
        let aggregate = V::aggregate_row(row, &self.weights, operator)
            .expect("row lengths are validated at construction");
        let score = aggregate.score().value();
        (aggregate, score)
    }

    /// Ranks on the current thread.
    pub fn rank_sequential(&self, operator: Operator) -> RankingReport<V> {
        let summaries: Vec<(V, f64)> = self.rows.iter().map(|row| self.summarize(row, operator)).collect();
        self.assemble(summaries, operator)
    }

    /// Ranks with per-row aggregation and scoring fanned out over rayon.
    /// The report is bit-identical to [`Self::rank_sequential`].
    #[cfg(feature = "parallel")]
    pub fn rank_parallel(&self, operator: Operator) -> RankingReport<V> {
        let summaries: Vec<(V, f64)> = self.rows.par_iter().map(|row| self.summarize(row, operator)).collect();
        self.assemble(summaries, operator)
    }

    /// Ranks with the default execution strategy: parallel when the
    /// `parallel` feature is enabled, sequential otherwise.
    pub fn rank(&self, operator: Operator) -> RankingReport<V> {
        #[cfg(feature = "parallel")]
        {
            self.rank_parallel(operator)
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.rank_sequential(operator)
        }
    }

    fn assemble(&self, summaries: Vec<(V, f64)>, operator: Operator) -> RankingReport<V> {
        let tied = score_tie_flags(&summaries);

        // sort indices best-first; stable sort keeps input order on double ties
        let mut order: Vec<usize> = (0..summaries.len()).collect();
        order.sort_by(|&a, &b| match summaries[a].0.compare(&summaries[b].0).relation {
            Relation::Greater => std::cmp::Ordering::Less,
            Relation::Less => std::cmp::Ordering::Greater,
            Relation::Equal => std::cmp::Ordering::Equal,
        });

        let mut rows: Vec<RankedRow<V>> = Vec::with_capacity(order.len());
        for (position, &index) in order.iter().enumerate() {
            let (aggregate, score) = summaries[index];
            let rank = if position > 0
                && summaries[order[position - 1]].0.compare(&aggregate).relation == Relation::Equal
            {
                rows[position - 1].rank
            } else {
                position + 1
            };
            rows.push(RankedRow {
                alternative: self.alternatives[index].clone(),
                aggregate,
                score: Score::new(score),
                accuracy: tied[index].then(|| aggregate.accuracy()),
                rank,
            });
        }

        let tie_events = self.tie_events(&summaries, &tied);

        RankingReport {
            operator,
            rows,
            tie_events,
        }
    }

    fn tie_events(&self, summaries: &[(V, f64)], tied: &[bool]) -> Vec<TieEvent> {
        let mut events = Vec::new();
        for a in 0..summaries.len() {
            if !tied[a] {
                continue;
            }
            for b in a + 1..summaries.len() {
                if !tied[b] || (summaries[a].1 - summaries[b].1).abs() > EQ_EPSILON {
                    continue;
                }
                let decided_by = summaries[a].0.compare(&summaries[b].0).decided_by;
                if decided_by == DecidedBy::Score {
                    continue;
                }
                events.push(TieEvent {
                    alternatives: (self.alternatives[a].clone(), self.alternatives[b].clone()),
                    decided_by,
                });
            }
        }
        events
    }
}

/// Marks rows that participate in a score tie. Groups are maximal chains of
/// scores adjacent within [`EQ_EPSILON`], found in O(m log m) rather than
/// by an all-pairs scan.
fn score_tie_flags<V>(summaries: &[(V, f64)]) -> Vec<bool> {
    let mut by_score: Vec<usize> = (0..summaries.len()).collect();
    by_score.sort_by(|&a, &b| summaries[a].1.total_cmp(&summaries[b].1));
    let mut tied = vec![false; summaries.len()];
    for pair in by_score.windows(2) {
        if (summaries[pair[0]].1 - summaries[pair[1]].1).abs() <= EQ_EPSILON {
            tied[pair[0]] = true;
            tied[pair[1]] = true;
        }
    }
    tied
}

/// One report line: the alternative, its aggregate value, its score, its
/// accuracy when a score tie made it relevant, and its 1-based rank
/// (competition style: equal rows share the smallest position).
#[derive(Debug, Clone, PartialEq)]
pub struct RankedRow<V> {
    pub alternative: String,
    pub aggregate: V,
    pub score: Score,
    pub accuracy: Option<Score>,
    pub rank: usize,
}

/// A score tie between two alternatives and the level that resolved it.
#[derive(Debug, Clone, PartialEq)]
pub struct TieEvent {
    pub alternatives: (String, String),
    pub decided_by: DecidedBy,
}

/// Alternatives ordered best-first.
#[derive(Debug, Clone, PartialEq)]
pub struct RankingReport<V> {
    pub operator: Operator,
    pub rows: Vec<RankedRow<V>>,
    pub tie_events: Vec<TieEvent>,
}

impl<V> RankingReport<V> {
    /// Alternative names in rank order.
    pub fn ordered_names(&self) -> Vec<&str> {
        self.rows.iter().map(|row| row.alternative.as_str()).collect()
    }
}
