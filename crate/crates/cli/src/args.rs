use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ontoqual::Indicator;

/// Measure, evaluate and compare the internal quality of core ontologies.
#[derive(Debug, Parser)]
#[command(name = "ontoqual", version)]
pub struct Cli {
    /// Requirements model (JSON). Defaults to the bundled model.
    #[arg(long, global = true, value_name = "PATH")]
    pub model: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Measures, elementary indicators and the derived tree for one inventory.
    Evaluate { inventory: PathBuf },

    /// Side-by-side evaluation of two or more inventories.
    Compare {
        #[arg(num_args = 2.., required = true)]
        inventories: Vec<PathBuf>,
    },

    /// Before/after re-evaluation of two versions of the same ontology.
    Diff { before: PathBuf, after: PathBuf },

    /// Samples an elementary function as `x,score` rows.
    PlotData {
        #[arg(value_parser = parse_indicator)]
        indicator: Indicator,
    },

    /// Checks inventories against the schema and referential rules.
    Validate {
        #[arg(required = true)]
        inventories: Vec<PathBuf>,
    },
}

fn parse_indicator(s: &str) -> Result<Indicator, String> {
    s.parse().map_err(|e: ontoqual::Error| e.to_string())
}
