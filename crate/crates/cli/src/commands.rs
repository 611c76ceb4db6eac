use std::fmt;
use std::fs;
use std::path::Path;

use serde::Serialize;

use ontoqual::inventory::{parse_inventory, validate};
use ontoqual::{
    compare, evaluate_inventory, reevaluate, Indicator, OntologyInventory, RequirementsModel,
};

use crate::args::{Cli, Command, Format};
use crate::render::{csv, json, text};

/// Exit code for usage and input errors (unreadable, malformed or invalid files).
pub const EXIT_INPUT: i32 = 2;
/// Exit code for semantic errors (pairing, binding).
pub const EXIT_SEMANTIC: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Semantic(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Semantic(_) => EXIT_SEMANTIC,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Semantic(m) => f.write_str(m),
        }
    }
}

impl From<ontoqual::Error> for CliError {
    fn from(e: ontoqual::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Semantic(e.to_string())
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_inventory(path: &Path) -> Result<OntologyInventory, CliError> {
    parse_inventory(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_model(path: Option<&Path>) -> Result<RequirementsModel, CliError> {
    match path {
        None => Ok(RequirementsModel::default_model()),
        Some(p) => RequirementsModel::from_json(&read(p)?)
            .map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
    }
}

/// Runs one command and returns the rendered report.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Evaluate { inventory } => {
            let model = load_model(cli.model.as_deref())?;
            cmd_evaluate(&model, &load_inventory(inventory)?, cli.format)
        }
        Command::Compare { inventories } => {
            let model = load_model(cli.model.as_deref())?;
            let invs = inventories
                .iter()
                .map(|p| load_inventory(p))
                .collect::<Result<Vec<_>, _>>()?;
            cmd_compare(&model, &invs, cli.format)
        }
        Command::Diff { before, after } => {
            let model = load_model(cli.model.as_deref())?;
            cmd_diff(
                &model,
                &load_inventory(before)?,
                &load_inventory(after)?,
                cli.format,
            )
        }
        Command::PlotData { indicator } => Ok(cmd_plot_data(*indicator, cli.format)),
        Command::Validate { inventories } => {
            if let Some(p) = &cli.model {
                load_model(Some(p))?;
            }
            let outcomes: Vec<ValidationOutcome> = inventories.iter().map(|p| check(p)).collect();
            let report = match cli.format {
                Format::Text => text::validation(&outcomes),
                Format::Csv => csv::validation(&outcomes),
                Format::Json => json::validation(&outcomes),
            };
            if outcomes.iter().all(|o| o.problems.is_empty()) {
                Ok(report)
            } else {
                Err(CliError::Input(report.trim_end().to_string()))
            }
        }
    }
}

pub fn cmd_evaluate(
    model: &RequirementsModel,
    inv: &OntologyInventory,
    format: Format,
) -> Result<String, CliError> {
    let eval = evaluate_inventory(model, inv)?;
    Ok(match format {
        Format::Text => text::evaluation(&model.model_id, &eval),
        Format::Csv => csv::evaluation(&eval),
        Format::Json => json::evaluation(&model.model_id, &eval),
    })
}

pub fn cmd_compare(
    model: &RequirementsModel,
    invs: &[OntologyInventory],
    format: Format,
) -> Result<String, CliError> {
    let report = compare(model, invs)?;
    Ok(match format {
        Format::Text => text::comparison(&report),
        Format::Csv => csv::comparison(&report),
        Format::Json => json::comparison(&report),
    })
}

pub fn cmd_diff(
    model: &RequirementsModel,
    before: &OntologyInventory,
    after: &OntologyInventory,
    format: Format,
) -> Result<String, CliError> {
    let report = reevaluate(model, before, after)?;
    Ok(match format {
        Format::Text => text::improvement(&model.model_id, &report),
        Format::Csv => csv::improvement(&report),
        Format::Json => json::improvement(&model.model_id, &report),
    })
}

/// Always CSV unless JSON is asked for; text would add nothing over CSV.
pub fn cmd_plot_data(indicator: Indicator, format: Format) -> String {
    match format {
        Format::Json => json::plot_data(indicator),
        Format::Text | Format::Csv => csv::plot_data(indicator),
    }
}

#[derive(Debug, Serialize)]
pub struct ValidationOutcome {
    pub path: String,
    /// `Some` once the document parsed.
    pub entity: Option<String>,
    pub problems: Vec<String>,
}

fn check(path: &Path) -> ValidationOutcome {
    let display = path.display().to_string();
    let parsed =
        read(path).and_then(|s| parse_inventory(&s).map_err(|e| CliError::Input(e.to_string())));
    match parsed {
        Err(e) => ValidationOutcome {
            path: display,
            entity: None,
            problems: vec![e.to_string()],
        },
        Ok(inv) => ValidationOutcome {
            path: display,
            entity: Some(format!("{} {}", inv.entity_name, inv.version)),
            problems: validate(&inv)
                .violations
                .iter()
                .map(ToString::to_string)
                .collect(),
        },
    }
}
