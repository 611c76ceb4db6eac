use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::mean::weighted_power_mean;
use super::model::{NodeKind, RequirementsModel, RequirementsNode};
use super::operator::{OperatorLabel, OperatorTable};
use crate::error::{Error, Result};
use crate::indicators::{classify, AcceptabilityLevel, ElementaryResult, Indicator};

/// A scored requirements tree. Mirrors the model's topology node for node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationResult {
    pub node_id: String,
    pub name: String,
    pub weight: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub operator: Option<OperatorLabel>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub indicator: Option<Indicator>,
    pub value: f64,
    pub level: AcceptabilityLevel,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub children: Vec<EvaluationResult>,
}

impl EvaluationResult {
    pub fn is_attribute(&self) -> bool {
        self.children.is_empty()
    }

    /// Pre-order walk yielding `(depth, node)`.
    pub fn walk(&self) -> Vec<(usize, &EvaluationResult)> {
        let mut out = Vec::new();
        let mut stack = vec![(0, self)];
        while let Some((depth, node)) = stack.pop() {
            out.push((depth, node));
            for child in node.children.iter().rev() {
                stack.push((depth + 1, child));
            }
        }
        out
    }

    pub fn find(&self, id: &str) -> Option<&EvaluationResult> {
        self.walk()
            .into_iter()
            .map(|(_, n)| n)
            .find(|n| n.node_id == id)
    }
}

/// Scores every node: leaves take their elementary score, characteristics
/// the weighted power mean of their children under their operator.
pub fn evaluate_tree(
    model: &RequirementsModel,
    elems: &[ElementaryResult],
) -> Result<EvaluationResult> {
    let mut scores: HashMap<&str, &ElementaryResult> = HashMap::new();
    for e in elems {
        if scores.insert(e.attribute_id.as_str(), e).is_some() {
            return Err(Error::Binding {
                node: e.attribute_id.clone(),
                reason: "more than one elementary result".into(),
            });
        }
    }
    evaluate_node(&model.root, &model.operators, &scores)
}

fn evaluate_node(
    node: &RequirementsNode,
    table: &OperatorTable,
    scores: &HashMap<&str, &ElementaryResult>,
) -> Result<EvaluationResult> {
    let (value, operator, indicator, children) = match &node.kind {
        NodeKind::Attribute { indicator } => {
            let elem = scores.get(node.id.as_str()).ok_or_else(|| Error::Binding {
                node: node.id.clone(),
                reason: "no elementary result".into(),
            })?;
            (elem.score, None, Some(*indicator), Vec::new())
        }
        NodeKind::Characteristic { operator, children } => {
            let children = children
                .iter()
                .map(|c| evaluate_node(c, table, scores))
                .collect::<Result<Vec<_>>>()?;
            let values: Vec<f64> = children.iter().map(|c| c.value).collect();
            let weights: Vec<f64> = children.iter().map(|c| c.weight).collect();
            let r = table.resolve(*operator, children.len());
            let value = weighted_power_mean(&values, &weights, r)?;
            (value, Some(*operator), None, children)
        }
    };
    Ok(EvaluationResult {
        node_id: node.id.clone(),
        name: node.name.clone(),
        weight: node.weight,
        operator,
        indicator,
        value,
        level: classify(value).map_err(|_| Error::Binding {
            node: node.id.clone(),
            reason: format!("value {value} outside [0, 100]"),
        })?,
        children,
    })
}
