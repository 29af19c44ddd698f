//! Multi-criteria decision analysis over neutrosophic criterion values.
//!
//! Alternatives are judged per criterion with either single-valued triples
//! of truth, indeterminacy and falsity degrees in `[0, 1]`, or with
//! interval-valued triples. Each alternative's row is collapsed by a
//! weighted arithmetic or geometric operator, the aggregates are scored
//! into `[-1, 1]`, and alternatives are ordered by score with an accuracy
//! functional breaking score ties.
//!
//! ```
//! use neutrorank::{DecisionMatrix, Operator, SvnValue, WeightVector};
//!
//! let matrix = DecisionMatrix::new(
//!     vec!["upgrade".into(), "replace".into()],
//!     vec!["cost".into(), "reliability".into()],
//!     WeightVector::new(vec![0.6, 0.4])?,
//!     vec![
//!         vec![SvnValue::new(0.7, 0.1, 0.2)?, SvnValue::new(0.5, 0.3, 0.3)?],
//!         vec![SvnValue::new(0.4, 0.2, 0.5)?, SvnValue::new(0.8, 0.1, 0.1)?],
//!     ],
//! )?;
//! let report = matrix.rank(Operator::Arithmetic);
//! assert_eq!(report.rows[0].alternative, "upgrade");
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! With the default `parallel` feature, ranking aggregates rows on a rayon
//! pool; disable it for a dependency-free sequential build. Both paths
//! return bit-identical reports.

pub mod aggregate;
pub mod decision;
pub mod ranking;
pub mod value;
pub mod weights;

pub use aggregate::{
    aggregate_interval, aggregate_svn, interval_weighted_average, interval_weighted_geometric,
    svn_weighted_average, svn_weighted_geometric, AggregateError, Operator,
};
pub use decision::{
    CriterionValue, DecisionMatrix, IntervalMatrix, MatrixError, RankedRow, RankingReport, SvnMatrix, TieEvent,
};
pub use ranking::{
    accuracy_interval, accuracy_svn, compare_interval, compare_svn, score_interval, score_svn, Comparison,
    DecidedBy, Relation, Score,
};
pub use value::{InValue, SvnValue, UnitInterval, ValidationPolicy, ValueError, EQ_EPSILON};
pub use weights::{WeightError, WeightVector, WEIGHT_SUM_EPSILON};
