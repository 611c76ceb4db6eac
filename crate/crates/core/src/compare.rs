//! Evaluation pipeline and the comparison / re-evaluation workflows built on
//! top of it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indicators::{evaluate_bindings, AcceptabilityLevel, ElementaryResult};
use crate::inventory::{derive_basis, ensure_valid, OntologyInventory};
use crate::lsp::{evaluate_tree, EvaluationResult, RequirementsModel};
use crate::metrics::{measure, MeasureSet};

/// Nodes within this distance of a node's best value share the win.
pub const WINNER_TOLERANCE: f64 = 1e-9;

/// Everything computed for one entity against one model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntityEvaluation {
    pub entity_name: String,
    pub version: String,
    pub measures: MeasureSet,
    pub elementary: Vec<ElementaryResult>,
    pub result: EvaluationResult,
}

impl EntityEvaluation {
    pub fn global(&self) -> f64 {
        self.result.value
    }
}

/// validate -> derive_basis -> measure -> elementary indicators -> tree.
/// Errors are tagged with the entity name.
pub fn evaluate_inventory(
    model: &RequirementsModel,
    inv: &OntologyInventory,
) -> Result<EntityEvaluation> {
    let run = || -> Result<EntityEvaluation> {
        ensure_valid(inv)?;
        let measures = measure(&derive_basis(inv))?;
        let elementary = evaluate_bindings(model.attribute_bindings(), &measures)?;
        let result = evaluate_tree(model, &elementary)?;
        Ok(EntityEvaluation {
            entity_name: inv.entity_name.clone(),
            version: inv.version.clone(),
            measures,
            elementary,
            result,
        })
    };
    run().map_err(|e| e.for_entity(&inv.entity_name))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparedEntity {
    /// Entity name, suffixed with the version when two entities share a name.
    pub label: String,
    pub evaluation: EntityEvaluation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub model_id: String,
    /// In input order.
    pub entities: Vec<ComparedEntity>,
    /// Labels by global value, best first; ties by ascending label.
    pub ranking: Vec<String>,
    pub per_node_winner: BTreeMap<String, Vec<String>>,
}

impl ComparisonReport {
    pub fn entity(&self, label: &str) -> Option<&EntityEvaluation> {
        self.entities
            .iter()
            .find(|e| e.label == label)
            .map(|e| &e.evaluation)
    }
}

fn labels(inventories: &[OntologyInventory]) -> Result<Vec<String>> {
    let count = |name: &str| inventories.iter().filter(|i| i.entity_name == name).count();
    let labels: Vec<String> = inventories
        .iter()
        .map(|inv| {
            if count(&inv.entity_name) > 1 {
                format!("{} v{}", inv.entity_name, inv.version)
            } else {
                inv.entity_name.clone()
            }
        })
        .collect();
    for (i, label) in labels.iter().enumerate() {
        if labels[..i].contains(label) {
            return Err(Error::DuplicateEntity(label.clone()));
        }
    }
    Ok(labels)
}

/// Evaluates every inventory against `model` and ranks them.
pub fn compare(
    model: &RequirementsModel,
    inventories: &[OntologyInventory],
) -> Result<ComparisonReport> {
    if inventories.len() < 2 {
        return Err(Error::TooFewEntities(inventories.len()));
    }
    let labels = labels(inventories)?;

    let evaluations: Vec<Result<EntityEvaluation>> = std::thread::scope(|scope| {
        let handles: Vec<_> = inventories
            .iter()
            .map(|inv| scope.spawn(move || evaluate_inventory(model, inv)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("evaluation thread panicked"))
            .collect()
    });
    let entities = labels
        .into_iter()
        .zip(evaluations)
        .map(|(label, evaluation)| {
            Ok(ComparedEntity {
                label,
                evaluation: evaluation?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut order: Vec<&ComparedEntity> = entities.iter().collect();
    order.sort_by(|a, b| {
        b.evaluation
            .global()
            .total_cmp(&a.evaluation.global())
            .then_with(|| a.label.cmp(&b.label))
    });
    let ranking = order.iter().map(|e| e.label.clone()).collect();

    let mut per_node_winner = BTreeMap::new();
    for (_, node) in model.root.walk() {
        let values: Vec<(&str, f64)> = entities
            .iter()
            .map(|e| {
                let v = e
                    .evaluation
                    .result
                    .find(&node.id)
                    .map_or(f64::NAN, |n| n.value);
                (e.label.as_str(), v)
            })
            .collect();
        let best = values
            .iter()
            .map(|(_, v)| *v)
            .fold(f64::NEG_INFINITY, f64::max);
        let mut winners: Vec<String> = values
            .iter()
            .filter(|(_, v)| best - v <= WINNER_TOLERANCE)
            .map(|(l, _)| l.to_string())
            .collect();
        winners.sort();
        per_node_winner.insert(node.id.clone(), winners);
    }

    Ok(ComparisonReport {
        model_id: model.model_id.clone(),
        entities,
        ranking,
        per_node_winner,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Weakness {
    pub attribute_id: String,
    pub name: String,
    pub score: f64,
    pub level: AcceptabilityLevel,
}

/// Attribute leaves below the Satisfactory level, lowest score first.
pub fn weaknesses(result: &EvaluationResult) -> Vec<Weakness> {
    let mut out: Vec<Weakness> = result
        .walk()
        .into_iter()
        .map(|(_, n)| n)
        .filter(|n| n.is_attribute() && n.level != AcceptabilityLevel::Satisfactory)
        .map(|n| Weakness {
            attribute_id: n.node_id.clone(),
            name: n.name.clone(),
            score: n.value,
            level: n.level,
        })
        .collect();
    out.sort_by(|a, b| {
        a.score
            .total_cmp(&b.score)
            .then_with(|| a.attribute_id.cmp(&b.attribute_id))
    });
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeDelta {
    pub node_id: String,
    pub before: f64,
    pub after: f64,
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImprovementReport {
    pub entity_name: String,
    pub before: EntityEvaluation,
    pub after: EntityEvaluation,
    /// `after - before` for every node, in tree order.
    pub deltas: Vec<NodeDelta>,
    /// Attributes whose acceptability level went up.
    pub addressed_attributes: Vec<String>,
}

/// Per-node differences between two results of the same model.
pub fn diff_results(before: &EvaluationResult, after: &EvaluationResult) -> Result<Vec<NodeDelta>> {
    let (b, a) = (before.walk(), after.walk());
    if b.len() != a.len() {
        return Err(Error::Topology(before.node_id.clone()));
    }
    b.iter()
        .zip(&a)
        .map(|((db, nb), (da, na))| {
            if db != da || nb.node_id != na.node_id || nb.children.len() != na.children.len() {
                return Err(Error::Topology(nb.node_id.clone()));
            }
            Ok(NodeDelta {
                node_id: nb.node_id.clone(),
                before: nb.value,
                after: na.value,
                delta: na.value - nb.value,
            })
        })
        .collect()
}

/// Evaluates two versions of one entity against the same model.
pub fn reevaluate(
    model: &RequirementsModel,
    before: &OntologyInventory,
    after: &OntologyInventory,
) -> Result<ImprovementReport> {
    if before.entity_name != after.entity_name {
        return Err(Error::Pairing {
            before: before.entity_name.clone(),
            after: after.entity_name.clone(),
        });
    }
    let before_eval = evaluate_inventory(model, before)?;
    let after_eval = evaluate_inventory(model, after)?;
    let deltas = diff_results(&before_eval.result, &after_eval.result)?;

    let addressed_attributes = before_eval
        .result
        .walk()
        .into_iter()
        .zip(after_eval.result.walk())
        .filter(|((_, b), (_, a))| b.is_attribute() && a.level > b.level)
        .map(|((_, b), _)| b.node_id.clone())
        .collect();

    Ok(ImprovementReport {
        entity_name: before.entity_name.clone(),
        before: before_eval,
        after: after_eval,
        deltas,
        addressed_attributes,
    })
}
