use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::mean::WEIGHT_SUM_TOLERANCE;
use super::operator::{ExponentOverrides, OperatorLabel, OperatorTable};
use crate::bundled;
use crate::error::{Error, Result};
use crate::indicators::Indicator;

#[derive(Debug, Clone, PartialEq)]
pub enum NodeKind {
    /// Leaf bound to an elementary indicator.
    Attribute { indicator: Indicator },
    /// Internal node aggregating its children with an LSP operator.
    Characteristic {
        operator: OperatorLabel,
        children: Vec<RequirementsNode>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RequirementsNode {
    /// Dotted numeral such as `1.1.4`.
    pub id: String,
    pub name: String,
    /// Weight within the parent; 1 for the root.
    pub weight: f64,
    pub kind: NodeKind,
}

impl RequirementsNode {
    pub fn children(&self) -> &[RequirementsNode] {
        match &self.kind {
            NodeKind::Characteristic { children, .. } => children,
            NodeKind::Attribute { .. } => &[],
        }
    }

    pub fn operator(&self) -> Option<OperatorLabel> {
        match self.kind {
            NodeKind::Characteristic { operator, .. } => Some(operator),
            NodeKind::Attribute { .. } => None,
        }
    }

    pub fn indicator(&self) -> Option<Indicator> {
        match self.kind {
            NodeKind::Attribute { indicator } => Some(indicator),
            NodeKind::Characteristic { .. } => None,
        }
    }

    pub fn is_attribute(&self) -> bool {
        matches!(self.kind, NodeKind::Attribute { .. })
    }

    /// Pre-order walk yielding `(depth, node)`.
    pub fn walk(&self) -> Vec<(usize, &RequirementsNode)> {
        let mut out = Vec::new();
        let mut stack = vec![(0, self)];
        while let Some((depth, node)) = stack.pop() {
            out.push((depth, node));
            for child in node.children().iter().rev() {
                stack.push((depth + 1, child));
            }
        }
        out
    }
}

/// A quality model: the requirements tree plus the exponent table its
/// operators resolve against.
#[derive(Debug, Clone, PartialEq)]
pub struct RequirementsModel {
    pub model_id: String,
    pub root: RequirementsNode,
    pub operators: OperatorTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum KindTag {
    Attribute,
    Characteristic,
}

/// One node as written in a model file. `model_id` and
/// `operator_exponents` are only accepted on the root.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    model_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    operator_exponents: Option<ExponentOverrides>,
    id: String,
    name: String,
    kind: KindTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    operator: Option<OperatorLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    children: Option<Vec<NodeDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    indicator: Option<Indicator>,
}

impl RequirementsModel {
    /// The built-in ontological internal quality model.
    pub fn default_model() -> RequirementsModel {
        RequirementsModel::from_json(bundled::DEFAULT_MODEL).expect("bundled model is valid")
    }

    pub fn from_json(source: &str) -> Result<RequirementsModel> {
        let mut de = serde_json::Deserializer::from_str(source);
        let doc: NodeDocument = serde_path_to_error::deserialize(&mut de).map_err(|e| {
            let inner = e.inner();
            Error::Parse {
                locus: format!(
                    "{} (line {}, column {})",
                    e.path(),
                    inner.line(),
                    inner.column()
                ),
                message: inner.to_string(),
            }
        })?;

        let mut problems = Vec::new();
        let operators = match &doc.operator_exponents {
            Some(o) => OperatorTable::standard().with_overrides(o)?,
            None => OperatorTable::standard().clone(),
        };
        let model_id = doc.model_id.clone().unwrap_or_else(|| doc.id.clone());
        if let Some(w) = doc.weight {
            if w != 1.0 {
                problems.push(format!("root weight must be 1, got {w}"));
            }
        }
        let mut seen = HashSet::new();
        let root = build(doc, true, &mut seen, &mut problems);
        if !problems.is_empty() {
            return Err(Error::Model(problems.join("; ")));
        }
        Ok(RequirementsModel {
            model_id,
            root,
            operators,
        })
    }

    pub fn to_json(&self) -> String {
        let mut doc = unbuild(&self.root);
        doc.model_id = Some(self.model_id.clone());
        serde_json::to_string_pretty(&doc).expect("model serialization is infallible")
    }

    /// Attribute leaves and their indicators, in tree order.
    pub fn attribute_bindings(&self) -> Vec<(&str, Indicator)> {
        self.root
            .walk()
            .into_iter()
            .filter_map(|(_, n)| n.indicator().map(|i| (n.id.as_str(), i)))
            .collect()
    }

    pub fn find(&self, id: &str) -> Option<&RequirementsNode> {
        self.root
            .walk()
            .into_iter()
            .map(|(_, n)| n)
            .find(|n| n.id == id)
    }
}

fn build(
    doc: NodeDocument,
    is_root: bool,
    seen: &mut HashSet<String>,
    problems: &mut Vec<String>,
) -> RequirementsNode {
    let id = doc.id;
    if id.is_empty() {
        problems.push("node with empty id".into());
    } else if !seen.insert(id.clone()) {
        problems.push(format!("duplicate node id {id}"));
    }
    if !is_root && (doc.model_id.is_some() || doc.operator_exponents.is_some()) {
        problems.push(format!(
            "{id}: model_id and operator_exponents are only allowed on the root"
        ));
    }

    let weight = match (doc.weight, is_root) {
        (Some(w), _) => w,
        (None, true) => 1.0,
        (None, false) => {
            problems.push(format!("{id}: missing weight"));
            f64::NAN
        }
    };
    if !is_root && !(weight > 0.0 && weight <= 1.0) {
        problems.push(format!("{id}: weight {weight} outside (0, 1]"));
    }

    let kind = match doc.kind {
        KindTag::Attribute => {
            if doc.operator.is_some() || doc.children.is_some() {
                problems.push(format!("{id}: attributes take no operator or children"));
            }
            let indicator = doc.indicator.unwrap_or_else(|| {
                problems.push(format!("{id}: attribute without indicator"));
                Indicator::DefinedTerms
            });
            NodeKind::Attribute { indicator }
        }
        KindTag::Characteristic => {
            if doc.indicator.is_some() {
                problems.push(format!("{id}: characteristics take no indicator"));
            }
            let operator = doc.operator.unwrap_or_else(|| {
                problems.push(format!("{id}: characteristic without operator"));
                OperatorLabel::A
            });
            let children: Vec<RequirementsNode> = doc
                .children
                .unwrap_or_default()
                .into_iter()
                .map(|c| build(c, false, seen, problems))
                .collect();
            if children.len() < 2 {
                problems.push(format!("{id}: characteristics need at least two children"));
            }
            let sum: f64 = children.iter().map(|c| c.weight).sum();
            if !children.is_empty() && (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
                problems.push(format!("{id}: child weights sum to {sum}, not 1"));
            }
            NodeKind::Characteristic { operator, children }
        }
    };

    RequirementsNode {
        id,
        name: doc.name,
        weight,
        kind,
    }
}

fn unbuild(node: &RequirementsNode) -> NodeDocument {
    let (kind, operator, children, indicator) = match &node.kind {
        NodeKind::Attribute { indicator } => (KindTag::Attribute, None, None, Some(*indicator)),
        NodeKind::Characteristic { operator, children } => (
            KindTag::Characteristic,
            Some(*operator),
            Some(children.iter().map(unbuild).collect()),
            None,
        ),
    };
    NodeDocument {
        model_id: None,
        operator_exponents: None,
        id: node.id.clone(),
        name: node.name.clone(),
        kind,
        weight: Some(node.weight),
        operator,
        children,
        indicator,
    }
}
