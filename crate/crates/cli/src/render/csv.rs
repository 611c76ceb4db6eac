use ontoqual::indicators::Domain;
use ontoqual::{ComparisonReport, EntityEvaluation, ImprovementReport, Indicator};

use super::{fmt2, fmt_delta, fmt_input};
use crate::commands::ValidationOutcome;

type Rows = Vec<Vec<String>>;

fn write(header: &[&str], rows: Rows) -> String {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    // writing to a Vec cannot fail
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 input")
}

/// One table with a `section` column: `measure`, `elementary` and `node`
/// rows. `rounded` is what the text report shows; `value` is exact.
pub fn evaluation(eval: &EntityEvaluation) -> String {
    let mut rows: Rows = Vec::new();
    for (label, n) in eval.measures.basis.labelled() {
        rows.push(vec![
            "measure".into(),
            label.into(),
            n.to_string(),
            String::new(),
            n.to_string(),
            String::new(),
        ]);
    }
    for (label, x) in eval.measures.percentages() {
        rows.push(vec![
            "measure".into(),
            label.into(),
            fmt2(x),
            String::new(),
            x.to_string(),
            String::new(),
        ]);
    }
    for e in &eval.elementary {
        rows.push(vec![
            "elementary".into(),
            e.attribute_id.clone(),
            fmt2(e.score),
            e.level.to_string(),
            e.score.to_string(),
            format!(
                "{} {}={}",
                e.indicator,
                e.indicator.metric(),
                fmt_input(e.indicator, e.input)
            ),
        ]);
    }
    for (_, node) in eval.result.walk() {
        rows.push(vec![
            "node".into(),
            node.node_id.clone(),
            fmt2(node.value),
            node.level.to_string(),
            node.value.to_string(),
            node.name.clone(),
        ]);
    }
    write(
        &["section", "id", "rounded", "level", "value", "detail"],
        rows,
    )
}

/// Long format: one row per (node, entity).
pub fn comparison(report: &ComparisonReport) -> String {
    let mut rows: Rows = Vec::new();
    let first = &report.entities[0].evaluation.result;
    for (_, node) in first.walk() {
        let winners = report.per_node_winner.get(&node.node_id);
        for entity in &report.entities {
            let Some(n) = entity.evaluation.result.find(&node.node_id) else {
                continue;
            };
            let best = winners.is_some_and(|w| w.contains(&entity.label));
            rows.push(vec![
                node.node_id.clone(),
                node.name.clone(),
                node.weight.to_string(),
                node.operator.map_or(String::new(), |op| op.to_string()),
                entity.label.clone(),
                n.value.to_string(),
                fmt2(n.value),
                n.level.to_string(),
                best.to_string(),
            ]);
        }
    }
    write(
        &[
            "id", "name", "weight", "operator", "entity", "value", "rounded", "level", "best",
        ],
        rows,
    )
}

pub fn improvement(report: &ImprovementReport) -> String {
    let rows = report
        .after
        .result
        .walk()
        .into_iter()
        .zip(&report.deltas)
        .map(|((_, node), d)| {
            vec![
                d.node_id.clone(),
                node.name.clone(),
                d.before.to_string(),
                d.after.to_string(),
                d.delta.to_string(),
                fmt2(d.before),
                fmt2(d.after),
                fmt_delta(d.delta),
                report.addressed_attributes.contains(&d.node_id).to_string(),
            ]
        })
        .collect();
    write(
        &[
            "id",
            "name",
            "before",
            "after",
            "delta",
            "before_rounded",
            "after_rounded",
            "delta_rounded",
            "addressed",
        ],
        rows,
    )
}

/// `x,score` samples: step 0.5 over percentages, integers over counts.
pub fn plot_data(indicator: Indicator) -> String {
    let count = indicator.function().domain == Domain::Count;
    let rows = indicator
        .samples()
        .into_iter()
        .map(|(x, y)| {
            if count {
                vec![format!("{x}"), format!("{y}")]
            } else {
                vec![format!("{x:.1}"), fmt2(y)]
            }
        })
        .collect();
    write(&["x", "score"], rows)
}

pub fn validation(outcomes: &[ValidationOutcome]) -> String {
    let mut rows: Rows = Vec::new();
    for o in outcomes {
        let entity = o.entity.clone().unwrap_or_default();
        if o.problems.is_empty() {
            rows.push(vec![
                o.path.clone(),
                entity.clone(),
                "true".into(),
                String::new(),
            ]);
        }
        for p in &o.problems {
            rows.push(vec![
                o.path.clone(),
                entity.clone(),
                "false".into(),
                p.clone(),
            ]);
        }
    }
    write(&["path", "entity", "valid", "problem"], rows)
}
