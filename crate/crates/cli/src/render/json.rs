use serde::Serialize;

use ontoqual::{
    AcceptabilityLevel, ComparisonReport, EntityEvaluation, EvaluationResult, ImprovementReport,
    Indicator, MeasurementBasis, OperatorLabel,
};

use super::round2;
use crate::commands::ValidationOutcome;

#[derive(Serialize)]
struct Node<'a> {
    id: &'a str,
    name: &'a str,
    weight: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    operator: Option<OperatorLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    indicator: Option<Indicator>,
    value: f64,
    rounded: f64,
    level: AcceptabilityLevel,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    children: Vec<Node<'a>>,
}

impl<'a> From<&'a EvaluationResult> for Node<'a> {
    fn from(r: &'a EvaluationResult) -> Self {
        Node {
            id: &r.node_id,
            name: &r.name,
            weight: r.weight,
            operator: r.operator,
            indicator: r.indicator,
            value: r.value,
            rounded: round2(r.value),
            level: r.level,
            children: r.children.iter().map(Node::from).collect(),
        }
    }
}

#[derive(Serialize)]
struct Measure<'a> {
    metric: &'a str,
    value: f64,
    rounded: f64,
}

#[derive(Serialize)]
struct Measures<'a> {
    counts: &'a MeasurementBasis,
    indirect: Vec<Measure<'a>>,
}

#[derive(Serialize)]
struct Elementary<'a> {
    attribute_id: &'a str,
    indicator: Indicator,
    metric: &'a str,
    input: f64,
    score: f64,
    rounded: f64,
    level: AcceptabilityLevel,
}

#[derive(Serialize)]
struct Evaluation<'a> {
    model_id: &'a str,
    entity_name: &'a str,
    version: &'a str,
    measures: Measures<'a>,
    elementary: Vec<Elementary<'a>>,
    result: Node<'a>,
}

fn evaluation_doc<'a>(model_id: &'a str, eval: &'a EntityEvaluation) -> Evaluation<'a> {
    Evaluation {
        model_id,
        entity_name: &eval.entity_name,
        version: &eval.version,
        measures: Measures {
            counts: &eval.measures.basis,
            indirect: eval
                .measures
                .percentages()
                .into_iter()
                .map(|(metric, value)| Measure {
                    metric,
                    value,
                    rounded: round2(value),
                })
                .collect(),
        },
        elementary: eval
            .elementary
            .iter()
            .map(|e| Elementary {
                attribute_id: &e.attribute_id,
                indicator: e.indicator,
                metric: e.indicator.metric(),
                input: e.input,
                score: e.score,
                rounded: round2(e.score),
                level: e.level,
            })
            .collect(),
        result: Node::from(&eval.result),
    }
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn evaluation(model_id: &str, eval: &EntityEvaluation) -> String {
    pretty(&evaluation_doc(model_id, eval))
}

#[derive(Serialize)]
struct Compared<'a> {
    label: &'a str,
    global: f64,
    rounded: f64,
    #[serde(flatten)]
    evaluation: Evaluation<'a>,
}

#[derive(Serialize)]
struct Comparison<'a> {
    model_id: &'a str,
    ranking: &'a [String],
    per_node_winner: &'a std::collections::BTreeMap<String, Vec<String>>,
    entities: Vec<Compared<'a>>,
}

pub fn comparison(report: &ComparisonReport) -> String {
    pretty(&Comparison {
        model_id: &report.model_id,
        ranking: &report.ranking,
        per_node_winner: &report.per_node_winner,
        entities: report
            .entities
            .iter()
            .map(|e| Compared {
                label: &e.label,
                global: e.evaluation.global(),
                rounded: round2(e.evaluation.global()),
                evaluation: evaluation_doc(&report.model_id, &e.evaluation),
            })
            .collect(),
    })
}

#[derive(Serialize)]
struct Delta<'a> {
    node_id: &'a str,
    before: f64,
    after: f64,
    delta: f64,
    before_rounded: f64,
    after_rounded: f64,
    delta_rounded: f64,
}

#[derive(Serialize)]
struct Improvement<'a> {
    model_id: &'a str,
    entity_name: &'a str,
    before_version: &'a str,
    after_version: &'a str,
    addressed_attributes: &'a [String],
    deltas: Vec<Delta<'a>>,
    before: Node<'a>,
    after: Node<'a>,
}

pub fn improvement(model_id: &str, report: &ImprovementReport) -> String {
    pretty(&Improvement {
        model_id,
        entity_name: &report.entity_name,
        before_version: &report.before.version,
        after_version: &report.after.version,
        addressed_attributes: &report.addressed_attributes,
        deltas: report
            .deltas
            .iter()
            .map(|d| Delta {
                node_id: &d.node_id,
                before: d.before,
                after: d.after,
                delta: d.delta,
                before_rounded: round2(d.before),
                after_rounded: round2(d.after),
                delta_rounded: round2(d.delta),
            })
            .collect(),
        before: Node::from(&report.before.result),
        after: Node::from(&report.after.result),
    })
}

#[derive(Serialize)]
struct Sample {
    x: f64,
    score: f64,
}

pub fn plot_data(indicator: Indicator) -> String {
    let samples: Vec<Sample> = indicator
        .samples()
        .into_iter()
        .map(|(x, score)| Sample { x, score })
        .collect();
    pretty(&samples)
}

pub fn validation(outcomes: &[ValidationOutcome]) -> String {
    pretty(&outcomes)
}
