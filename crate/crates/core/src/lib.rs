//! Measurement, evaluation and comparison of the structural and reuse
//! quality of core ontologies.
//!
//! The pipeline runs inventory -> direct counts -> indirect metrics ->
//! elementary indicators -> LSP-aggregated partial and global indicators:
//!
//! ```
//! use ontoqual::{bundled, compare, inventory, lsp::RequirementsModel};
//!
//! let model = RequirementsModel::default_model();
//! let spo = inventory::parse_inventory(bundled::SPO).unwrap();
//! let eval = compare::evaluate_inventory(&model, &spo).unwrap();
//! assert!((eval.global() - 64.81).abs() < 0.01);
//! ```

pub mod bundled;
pub mod compare;
pub mod error;
pub mod indicators;
pub mod inventory;
pub mod lsp;
pub mod metrics;

pub use compare::{
    compare, evaluate_inventory, reevaluate, weaknesses, ComparisonReport, EntityEvaluation,
    ImprovementReport, NodeDelta, Weakness,
};
pub use error::{Error, Result};
pub use indicators::{classify, AcceptabilityLevel, ElementaryResult, Indicator};
pub use inventory::{
    derive_basis, parse_inventory, validate, MeasurementBasis, OntologyInventory, ValidationReport,
};
pub use lsp::{
    evaluate_tree, weighted_power_mean, EvaluationResult, OperatorLabel, RequirementsModel,
    RequirementsNode,
};
pub use metrics::{measure, MeasureSet};
