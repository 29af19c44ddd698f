use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use neutrorank_cli::{
    parse_problem, resolve_choices, run, CliError, Format, OperatorChoice, OutputChoice, RunOptions,
    ValidationChoice,
};

/// Rank alternatives valued by neutrosophic truth/indeterminacy/falsity
/// degrees.
///
/// Exit codes: 0 success, 2 unreadable or malformed input, 3 invalid
/// problem, 4 internal error.
#[derive(Debug, Parser)]
#[command(name = "neutrorank", version)]
struct Args {
    /// Problem description file
    #[arg(long)]
    input: PathBuf,

    /// Input format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Weighted operator collapsing each row [default: arithmetic, unless
    /// the document's options say otherwise]
    #[arg(long, value_enum)]
    operator: Option<OperatorChoice>,

    /// Interval bound checking [default: strict, unless the document's
    /// options say otherwise]
    #[arg(long, value_enum)]
    validation: Option<ValidationChoice>,

    /// Report format
    #[arg(long, value_enum, default_value_t = OutputChoice::Table)]
    output: OutputChoice,

    /// Decimal places in table output
    #[arg(long, default_value_t = 4)]
    precision: usize,

    /// Comma-separated names of cost criteria to complement before ranking
    #[arg(long, value_delimiter = ',')]
    cost_criteria: Vec<String>,

    /// Comma-separated criterion weights (csv input only; overrides a
    /// #weights row)
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
}

fn execute(args: &Args) -> Result<String, CliError> {
    let source = fs::read_to_string(&args.input)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", args.input.display())))?;
    let doc = parse_problem(&source, args.format, args.weights.as_deref())?;
    let (operator, validation) = resolve_choices(&doc, args.operator, args.validation);
    let options = RunOptions {
        operator,
        validation,
        output: args.output,
        precision: args.precision,
        cost_criteria: args.cost_criteria.clone(),
    };
    run(&doc, &options)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(rendered) => {
            print!("{rendered}");
            ExitCode::SUCCESS
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}
