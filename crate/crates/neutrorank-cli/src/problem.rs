//! Problem documents: the JSON and CSV descriptions of a decision problem,
//! and their validation into typed decision matrices.
//!
//! JSON schema:
//!
//! ```json
//! {
//!   "kind": "svn",
//!   "criteria": [{ "name": "growth", "weight": 0.35 }, ...],
//!   "alternatives": [{ "name": "A1", "values": [[0.4, 0.2, 0.3], ...] }, ...],
//!   "options": { "validation": "strict", "operator": "arithmetic" }
//! }
//! ```
//!
//! Single-valued entries are `[t, i, f]` triples; interval entries are
//! `[[t.lo, t.hi], [i.lo, i.hi], [f.lo, f.hi]]` triples of pairs. The
//! optional `options` block can preselect the validation policy and the
//! aggregation operator; command-line flags override it.
//!
//! CSV layout: a header row `alternative,<crit>.t,<crit>.i,<crit>.f,...`
//! (six columns `<crit>.t.lo,<crit>.t.hi,...` per criterion for interval
//! problems), one row per alternative, and weights either in a leading
//! `#weights,w1,w2,...` comment row or via `--weights`.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use neutrorank::{
    DecisionMatrix, InValue, IntervalMatrix, Operator, SvnMatrix, SvnValue, ValidationPolicy, WeightError,
    WeightVector,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Svn,
    Interval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OperatorChoice {
    Arithmetic,
    Geometric,
}

impl From<OperatorChoice> for Operator {
    fn from(choice: OperatorChoice) -> Self {
        match choice {
            OperatorChoice::Arithmetic => Operator::Arithmetic,
            OperatorChoice::Geometric => Operator::Geometric,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ValidationChoice {
    Strict,
    Lenient,
}

impl From<ValidationChoice> for ValidationPolicy {
    fn from(choice: ValidationChoice) -> Self {
        match choice {
            ValidationChoice::Strict => ValidationPolicy::Strict,
            ValidationChoice::Lenient => ValidationPolicy::Lenient,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionSpec {
    pub name: String,
    pub weight: f64,
}

/// One criterion value as written in a document, before validation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueSpec {
    Svn([f64; 3]),
    Interval([[f64; 2]; 3]),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlternativeSpec {
    pub name: String,
    pub values: Vec<ValueSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct DocumentOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationChoice>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<OperatorChoice>,
}

/// A parsed but not yet validated decision problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub kind: SetKind,
    pub criteria: Vec<CriterionSpec>,
    pub alternatives: Vec<AlternativeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<DocumentOptions>,
}

pub fn parse_problem(source: &str, format: Format, csv_weights: Option<&[f64]>) -> Result<ProblemDocument, CliError> {
    match format {
        Format::Json => {
            if csv_weights.is_some() {
                return Err(CliError::Parse("--weights applies only to csv input".into()));
            }
            serde_json::from_str(source).map_err(|e| CliError::Parse(format!("invalid json: {e}")))
        }
        Format::Csv => parse_csv(source, csv_weights),
    }
}

/// Pretty-printed JSON at full precision, ending in a newline. Rendering
/// the same document twice is byte-identical, and parsing the result gives
/// the document back exactly.
pub fn render_problem_json(doc: &ProblemDocument) -> Result<String, CliError> {
    let mut out = serde_json::to_string_pretty(doc).map_err(|e| CliError::Internal(e.to_string()))?;
    out.push('\n');
    Ok(out)
}

fn parse_csv(source: &str, weight_flag: Option<&[f64]>) -> Result<ProblemDocument, CliError> {
    let parse = |what: &str, cell: &str| -> Result<f64, CliError> {
        cell.trim()
            .parse::<f64>()
            .map_err(|_| CliError::Parse(format!("{what}: {cell:?} is not a number")))
    };

    // comment rows are pulled out before the csv reader sees the text
    let mut comment_weights: Option<Vec<f64>> = None;
    let mut body = String::new();
    for line in source.lines() {
        let trimmed = line.trim_start();
        if let Some(rest) = trimmed.strip_prefix('#') {
            let mut cells = rest.split(',').map(str::trim);
            if cells.next() == Some("weights") {
                if comment_weights.is_some() {
                    return Err(CliError::Parse("multiple #weights rows".into()));
                }
                comment_weights = Some(
                    cells
                        .map(|cell| parse("#weights row", cell))
                        .collect::<Result<_, _>>()?,
                );
            }
            continue;
        }
        if !trimmed.is_empty() {
            body.push_str(line);
            body.push('\n');
        }
    }

    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(body.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::Parse(format!("invalid csv: {e}")))?
        .clone();
    if headers.is_empty() || headers.get(0) != Some("alternative") {
        return Err(CliError::Parse("csv header must start with \"alternative\"".into()));
    }

    let columns: Vec<&str> = headers.iter().skip(1).collect();
    if columns.is_empty() {
        return Err(CliError::Parse("csv header names no criterion columns".into()));
    }
    let (kind, per_criterion, suffixes): (SetKind, usize, &[&str]) = if columns[0].ends_with(".t.lo") {
        (SetKind::Interval, 6, &[".t.lo", ".t.hi", ".i.lo", ".i.hi", ".f.lo", ".f.hi"])
    } else {
        (SetKind::Svn, 3, &[".t", ".i", ".f"])
    };
    if !columns.len().is_multiple_of(per_criterion) {
        return Err(CliError::Parse(format!(
            "expected {per_criterion} columns per criterion, found {} value columns",
            columns.len()
        )));
    }
    let mut names = Vec::new();
    for group in columns.chunks(per_criterion) {
        let name = group[0]
            .strip_suffix(suffixes[0])
            .ok_or_else(|| CliError::Parse(format!("column {:?} does not end in {:?}", group[0], suffixes[0])))?;
        for (column, suffix) in group.iter().zip(suffixes) {
            if column.strip_suffix(suffix) != Some(name) {
                return Err(CliError::Parse(format!(
                    "column {column:?} does not match criterion {name:?} with suffix {suffix:?}"
                )));
            }
        }
        names.push(name.to_string());
    }

    // an explicit flag overrides a #weights row
    let weights = match (weight_flag, comment_weights) {
        (Some(flag), _) => flag.to_vec(),
        (None, Some(row)) => row,
        (None, None) => {
            return Err(CliError::Parse(
                "no weights: add a #weights row or pass --weights".into(),
            ))
        }
    };
    if weights.len() != names.len() {
        return Err(CliError::Parse(format!(
            "{} weights for {} criteria",
            weights.len(),
            names.len()
        )));
    }

    let criteria: Vec<CriterionSpec> = names
        .into_iter()
        .zip(&weights)
        .map(|(name, &weight)| CriterionSpec { name, weight })
        .collect();

    let mut alternatives = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Parse(format!("invalid csv: {e}")))?;
        if record.len() != 1 + columns.len() {
            return Err(CliError::Parse(format!(
                "row {:?} has {} cells, expected {}",
                record.get(0).unwrap_or(""),
                record.len(),
                1 + columns.len()
            )));
        }
        let name = record.get(0).unwrap_or_default().to_string();
        let cells: Result<Vec<f64>, CliError> = record
            .iter()
            .skip(1)
            .map(|cell| parse(&format!("row {name:?}"), cell))
            .collect();
        let cells = cells?;
        let values = cells
            .chunks(per_criterion)
            .map(|chunk| match kind {
                SetKind::Svn => ValueSpec::Svn([chunk[0], chunk[1], chunk[2]]),
                SetKind::Interval => ValueSpec::Interval([
                    [chunk[0], chunk[1]],
                    [chunk[2], chunk[3]],
                    [chunk[4], chunk[5]],
                ]),
            })
            .collect();
        alternatives.push(AlternativeSpec { name, values });
    }

    Ok(ProblemDocument {
        kind,
        criteria,
        alternatives,
        options: None,
    })
}

/// A validated decision problem, ready to rank.
#[derive(Debug, Clone, PartialEq)]
pub enum Problem {
    Svn(SvnMatrix),
    Interval(IntervalMatrix),
}

/// Validates every invariant of the document, naming the offending
/// alternative, criterion and field in each diagnostic.
pub fn build_problem(doc: &ProblemDocument, validation: ValidationChoice) -> Result<Problem, CliError> {
    if doc.alternatives.is_empty() {
        return Err(CliError::Validation("no alternatives".into()));
    }
    if doc.criteria.is_empty() {
        return Err(CliError::Validation("no criteria".into()));
    }
    let weights = WeightVector::new(doc.criteria.iter().map(|c| c.weight).collect()).map_err(|e| {
        CliError::Validation(match e {
            WeightError::OutOfRange { index, value } => {
                format!("criterion {:?}: weight {value} is outside [0, 1]", doc.criteria[index].name)
            }
            other => other.to_string(),
        })
    })?;
    for alternative in &doc.alternatives {
        if alternative.values.len() != doc.criteria.len() {
            return Err(CliError::Validation(format!(
                "alternative {:?} has {} values for {} criteria",
                alternative.name,
                alternative.values.len(),
                doc.criteria.len()
            )));
        }
    }

    let names: Vec<String> = doc.alternatives.iter().map(|a| a.name.clone()).collect();
    let criteria: Vec<String> = doc.criteria.iter().map(|c| c.name.clone()).collect();
    let entry_context = |alternative: &str, criterion: usize| {
        format!("alternative {:?}, criterion {:?}", alternative, doc.criteria[criterion].name)
    };

    match doc.kind {
        SetKind::Svn => {
            let mut rows = Vec::with_capacity(doc.alternatives.len());
            for alternative in &doc.alternatives {
                let mut row = Vec::with_capacity(alternative.values.len());
                for (s, value) in alternative.values.iter().enumerate() {
                    let ValueSpec::Svn([t, i, f]) = value else {
                        return Err(CliError::Validation(format!(
                            "{}: expected a single-valued [t, i, f] triple",
                            entry_context(&alternative.name, s)
                        )));
                    };
                    let value = SvnValue::new(*t, *i, *f).map_err(|e| {
                        CliError::Validation(format!("{}: {e}", entry_context(&alternative.name, s)))
                    })?;
                    row.push(value);
                }
                rows.push(row);
            }
            let matrix = DecisionMatrix::new(names, criteria, weights, rows)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            Ok(Problem::Svn(matrix))
        }
        SetKind::Interval => {
            let policy = ValidationPolicy::from(validation);
            let mut rows = Vec::with_capacity(doc.alternatives.len());
            for alternative in &doc.alternatives {
                let mut row = Vec::with_capacity(alternative.values.len());
                for (s, value) in alternative.values.iter().enumerate() {
                    let ValueSpec::Interval([t, i, f]) = value else {
                        return Err(CliError::Validation(format!(
                            "{}: expected an interval [[lo, hi], [lo, hi], [lo, hi]] triple",
                            entry_context(&alternative.name, s)
                        )));
                    };
                    let value = InValue::with_policy(*t, *i, *f, policy).map_err(|e| {
                        CliError::Validation(format!("{}: {e}", entry_context(&alternative.name, s)))
                    })?;
                    row.push(value);
                }
                rows.push(row);
            }
            let matrix = DecisionMatrix::new(names, criteria, weights, rows)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            Ok(Problem::Interval(matrix))
        }
    }
}
