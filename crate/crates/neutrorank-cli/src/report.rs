//! Rendering of ranking reports as an aligned text table or as JSON.
//!
//! Table numbers are rounded to the requested precision (default 4
//! decimals); JSON output keeps full precision and is byte-stable across
//! runs.

use serde::Serialize;

use neutrorank::{DecidedBy, InValue, RankingReport, SvnValue};

use crate::error::CliError;
use crate::problem::{OperatorChoice, SetKind, ValueSpec};

/// A matrix entry kind the CLI knows how to print.
pub trait RenderValue {
    fn to_spec(&self) -> ValueSpec;
    fn format(&self, precision: usize) -> String;
}

impl RenderValue for SvnValue {
    fn to_spec(&self) -> ValueSpec {
        ValueSpec::Svn([self.truth(), self.indeterminacy(), self.falsity()])
    }

    fn format(&self, precision: usize) -> String {
        format!(
            "({:.p$}, {:.p$}, {:.p$})",
            self.truth(),
            self.indeterminacy(),
            self.falsity(),
            p = precision
        )
    }
}

impl RenderValue for InValue {
    fn to_spec(&self) -> ValueSpec {
        ValueSpec::Interval([
            [self.truth().lo(), self.truth().hi()],
            [self.indeterminacy().lo(), self.indeterminacy().hi()],
            [self.falsity().lo(), self.falsity().hi()],
        ])
    }

    fn format(&self, precision: usize) -> String {
        let pair = |p: neutrorank::UnitInterval| format!("[{:.p$}, {:.p$}]", p.lo(), p.hi(), p = precision);
        format!(
            "({}, {}, {})",
            pair(self.truth()),
            pair(self.indeterminacy()),
            pair(self.falsity())
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum DecidedByDoc {
    Score,
    Accuracy,
    TiePolicy,
}

impl From<DecidedBy> for DecidedByDoc {
    fn from(level: DecidedBy) -> Self {
        match level {
            DecidedBy::Score => DecidedByDoc::Score,
            DecidedBy::Accuracy => DecidedByDoc::Accuracy,
            DecidedBy::TiePolicy => DecidedByDoc::TiePolicy,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
struct ReportRowDoc {
    rank: usize,
    alternative: String,
    aggregate: ValueSpec,
    score: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    accuracy: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
struct TieEventDoc {
    alternatives: (String, String),
    decided_by: DecidedByDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
struct ReportDoc {
    kind: SetKind,
    operator: OperatorChoice,
    rows: Vec<ReportRowDoc>,
    tie_events: Vec<TieEventDoc>,
}

fn report_doc<V: RenderValue>(kind: SetKind, operator: OperatorChoice, report: &RankingReport<V>) -> ReportDoc {
    ReportDoc {
        kind,
        operator,
        rows: report
            .rows
            .iter()
            .map(|row| ReportRowDoc {
                rank: row.rank,
                alternative: row.alternative.clone(),
                aggregate: row.aggregate.to_spec(),
                score: row.score.value(),
                accuracy: row.accuracy.map(|a| a.value()),
            })
            .collect(),
        tie_events: report
            .tie_events
            .iter()
            .map(|event| TieEventDoc {
                alternatives: event.alternatives.clone(),
                decided_by: event.decided_by.into(),
            })
            .collect(),
    }
}

pub fn render_json<V: RenderValue>(
    kind: SetKind,
    operator: OperatorChoice,
    report: &RankingReport<V>,
) -> Result<String, CliError> {
    let mut out = serde_json::to_string_pretty(&report_doc(kind, operator, report))
        .map_err(|e| CliError::Internal(e.to_string()))?;
    out.push('\n');
    Ok(out)
}

pub fn render_table<V: RenderValue>(operator: OperatorChoice, report: &RankingReport<V>, precision: usize) -> String {
    let operator_name = match operator {
        OperatorChoice::Arithmetic => "arithmetic",
        OperatorChoice::Geometric => "geometric",
    };

    let has_accuracy = report.rows.iter().any(|row| row.accuracy.is_some());
    let mut header = vec!["rank".to_string(), "alternative".to_string(), "aggregate".to_string(), "score".to_string()];
    if has_accuracy {
        header.push("accuracy".to_string());
    }
    header.push("note".to_string());

    let note_for = |name: &str| -> String {
        let notes: Vec<String> = report
            .tie_events
            .iter()
            .filter_map(|event| {
                let (a, b) = (&event.alternatives.0, &event.alternatives.1);
                let other = if a == name {
                    b
                } else if b == name {
                    a
                } else {
                    return None;
                };
                Some(match event.decided_by {
                    DecidedBy::Accuracy => format!("score tie with {other}: accuracy decided"),
                    DecidedBy::TiePolicy => format!("score tie with {other}: kept input order"),
                    DecidedBy::Score => String::new(),
                })
            })
            .collect();
        notes.join("; ")
    };

    let mut lines: Vec<Vec<String>> = vec![header];
    for row in &report.rows {
        let mut line = vec![
            row.rank.to_string(),
            row.alternative.clone(),
            row.aggregate.format(precision),
            format!("{:.p$}", row.score.value(), p = precision),
        ];
        if has_accuracy {
            line.push(match row.accuracy {
                Some(a) => format!("{:.p$}", a.value(), p = precision),
                None => String::new(),
            });
        }
        line.push(note_for(&row.alternative));
        lines.push(line);
    }

    let columns = lines[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| lines.iter().map(|line| line[c].len()).max().unwrap_or(0))
        .collect();

    let mut out = format!("operator: {operator_name}\n");
    for line in &lines {
        let rendered: Vec<String> = line
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{cell:<width$}", width = widths[c]))
            .collect();
        out.push_str(rendered.join("  ").trim_end());
        out.push('\n');
    }
    out
}
