//! Logic Scoring of Preference: weighted power means, the generalized
//! conjunction/disjunction operators, and requirements-tree evaluation.

mod mean;
mod model;
mod operator;
mod tree;

pub use mean::{weighted_power_mean, GEOMETRIC_THRESHOLD, WEIGHT_SUM_TOLERANCE};
pub use model::{NodeKind, RequirementsModel, RequirementsNode};
pub use operator::{OperatorLabel, OperatorTable, MAX_ARITY, MIN_ARITY};
pub use tree::{evaluate_tree, EvaluationResult};
