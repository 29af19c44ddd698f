//! Library behind the `neutrorank` binary: parse a decision problem from
//! JSON or CSV, validate it, rank it, and render the report.

pub mod error;
pub mod problem;
pub mod report;

pub use error::CliError;
pub use problem::{
    build_problem, parse_problem, render_problem_json, AlternativeSpec, CriterionSpec, DocumentOptions, Format,
    OperatorChoice, Problem, ProblemDocument, SetKind, ValidationChoice, ValueSpec,
};
pub use report::{render_json, render_table, RenderValue};

use neutrorank::{Operator, RankingReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputChoice {
    Table,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    pub operator: OperatorChoice,
    pub validation: ValidationChoice,
    pub output: OutputChoice,
    pub precision: usize,
    pub cost_criteria: Vec<String>,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            operator: OperatorChoice::Arithmetic,
            validation: ValidationChoice::Strict,
            output: OutputChoice::Table,
            precision: 4,
            cost_criteria: Vec::new(),
        }
    }
}

/// Merges explicit flags with the document's optional `options` block;
/// flags win, then the document, then the defaults (arithmetic, strict).
pub fn resolve_choices(
    doc: &ProblemDocument,
    operator_flag: Option<OperatorChoice>,
    validation_flag: Option<ValidationChoice>,
) -> (OperatorChoice, ValidationChoice) {
    let doc_options = doc.options.unwrap_or_default();
    (
        operator_flag
            .or(doc_options.operator)
            .unwrap_or(OperatorChoice::Arithmetic),
        validation_flag
            .or(doc_options.validation)
            .unwrap_or(ValidationChoice::Strict),
    )
}

fn render<V: RenderValue>(
    kind: SetKind,
    report: &RankingReport<V>,
    options: &RunOptions,
) -> Result<String, CliError> {
    match options.output {
        OutputChoice::Table => Ok(render_table(options.operator, report, options.precision)),
        OutputChoice::Json => render_json(kind, options.operator, report),
    }
}

/// Validates, optionally complements cost criteria, ranks, and renders.
pub fn run(doc: &ProblemDocument, options: &RunOptions) -> Result<String, CliError> {
    let operator = Operator::from(options.operator);
    match build_problem(doc, options.validation)? {
        Problem::Svn(matrix) => {
            let matrix = if options.cost_criteria.is_empty() {
                matrix
            } else {
                matrix
                    .with_complemented_criteria(&options.cost_criteria)
                    .map_err(|e| CliError::Validation(e.to_string()))?
            };
            render(SetKind::Svn, &matrix.rank(operator), options)
        }
        Problem::Interval(matrix) => {
            let matrix = if options.cost_criteria.is_empty() {
                matrix
            } else {
                matrix
                    .with_complemented_criteria(&options.cost_criteria)
                    .map_err(|e| CliError::Validation(e.to_string()))?
            };
            render(SetKind::Interval, &matrix.rank(operator), options)
        }
    }
}
