use std::fmt::Write;

use ontoqual::compare::weaknesses;
use ontoqual::{ComparisonReport, EntityEvaluation, EvaluationResult, ImprovementReport};

use super::{fmt2, fmt_delta, fmt_input};
use crate::commands::ValidationOutcome;

fn indent(depth: usize) -> String {
    "  ".repeat(depth)
}

fn operator_cell(node: &EvaluationResult) -> &'static str {
    node.operator.map_or("-", |op| op.as_str())
}

pub fn evaluation(model_id: &str, eval: &EntityEvaluation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Entity: {}", eval.entity_name);
    let _ = writeln!(out, "Version: {}", eval.version);
    let _ = writeln!(out, "Model: {model_id}");

    out.push_str("\nDirect measures\n");
    for (label, n) in eval.measures.basis.labelled() {
        let _ = writeln!(out, "{label} {n}");
    }

    out.push_str("\nIndirect measures\n");
    for (label, x) in eval.measures.percentages() {
        let _ = writeln!(out, "{label} {}", fmt2(x));
    }
    let _ = writeln!(out, "#UISG {}", eval.measures.uisg);

    out.push_str("\nElementary indicators (attribute, indicator, metric, value, score, level)\n");
    for e in &eval.elementary {
        let _ = writeln!(
            out,
            "{} {} {} {} {} {}",
            e.attribute_id,
            e.indicator,
            e.indicator.metric(),
            fmt_input(e.indicator, e.input),
            fmt2(e.score),
            e.level
        );
    }

    out.push_str("\nDerived indicators (code, name, score, level)\n");
    for (depth, node) in eval.result.walk() {
        let _ = writeln!(
            out,
            "{}{} {} {} {}",
            indent(depth),
            node.node_id,
            node.name,
            fmt2(node.value),
            node.level
        );
    }
    out
}

pub fn comparison(report: &ComparisonReport) -> String {
    let labels: Vec<&str> = report.entities.iter().map(|e| e.label.as_str()).collect();
    let mut out = String::new();
    let _ = writeln!(out, "Model: {}", report.model_id);
    let _ = writeln!(out, "Entities: {}", labels.join(", "));

    let _ = writeln!(
        out,
        "\nDerived indicators (code, name, weight, op., {}, best)",
        labels.join(", ")
    );
    let first = &report.entities[0].evaluation.result;
    for (depth, node) in first.walk() {
        let values: Vec<String> = report
            .entities
            .iter()
            .map(|e| {
                e.evaluation
                    .result
                    .find(&node.node_id)
                    .map_or("-".into(), |n| fmt2(n.value))
            })
            .collect();
        let best = report
            .per_node_winner
            .get(&node.node_id)
            .map(|w| w.join("/"))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{}{} {} {} {} {} {}",
            indent(depth),
            node.node_id,
            node.name,
            fmt2(node.weight),
            operator_cell(node),
            values.join(" "),
            best
        );
    }

    let _ = writeln!(out, "\nRanking: {}", report.ranking.join(", "));
    for (place, label) in report.ranking.iter().enumerate() {
        if let Some(e) = report.entity(label) {
            let _ = writeln!(
                out,
                "{}. {} {} {}",
                place + 1,
                label,
                fmt2(e.global()),
                e.result.level
            );
        }
    }

    out.push_str("\nWeaknesses (attributes scoring 85 or less)\n");
    for entity in &report.entities {
        let _ = writeln!(out, "{}", entity.label);
        let found = weaknesses(&entity.evaluation.result);
        if found.is_empty() {
            out.push_str("  none\n");
        }
        for w in found {
            let _ = writeln!(
                out,
                "  {} {} {} {}",
                w.attribute_id,
                w.name,
                fmt2(w.score),
                w.level
            );
        }
    }
    out
}

pub fn improvement(model_id: &str, report: &ImprovementReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Entity: {}", report.entity_name);
    let _ = writeln!(
        out,
        "Versions: {} -> {}",
        report.before.version, report.after.version
    );
    let _ = writeln!(out, "Model: {model_id}");

    out.push_str("\nDerived indicators (code, name, before, after, delta)\n");
    for ((depth, node), d) in report.after.result.walk().into_iter().zip(&report.deltas) {
        let _ = writeln!(
            out,
            "{}{} {} {} {} {}",
            indent(depth),
            d.node_id,
            node.name,
            fmt2(d.before),
            fmt2(d.after),
            fmt_delta(d.delta)
        );
    }

    out.push_str("\nAddressed attributes:");
    if report.addressed_attributes.is_empty() {
        out.push_str(" none\n");
    } else {
        out.push('\n');
        for id in &report.addressed_attributes {
            let name = report.after.result.find(id).map_or("", |n| n.name.as_str());
            let _ = writeln!(out, "  {id} {name}");
        }
    }
    out
}

pub fn validation(outcomes: &[ValidationOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        match (&o.entity, o.problems.is_empty()) {
            (Some(entity), true) => {
                let _ = writeln!(out, "{}: ok ({entity})", o.path);
            }
            _ => {
                let _ = writeln!(out, "{}: {} problem(s)", o.path, o.problems.len());
                for p in &o.problems {
                    let _ = writeln!(out, "  - {p}");
                }
            }
        }
    }
    out
}
