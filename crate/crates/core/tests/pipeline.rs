//! End-to-end checks over the bundled fixtures.

use approx::assert_abs_diff_eq;
use ontoqual::inventory::parse_inventory;
use ontoqual::{
    bundled, compare, evaluate_inventory, reevaluate, weaknesses, OntologyInventory,
    RequirementsModel,
};

fn load(src: &str) -> OntologyInventory {
    parse_inventory(src).unwrap()
}

#[test]
fn published_global_scores() {
    let model = RequirementsModel::default_model();
    let cases = [
        (bundled::SPO, 64.81),
        (bundled::PROCESSCO_V1_2, 87.82),
        (bundled::PROCESSCO_V1_3, 98.48),
    ];
    for (src, want) in cases {
        let eval = evaluate_inventory(&model, &load(src)).unwrap();
        assert_abs_diff_eq!(eval.global(), want, epsilon = 0.05);
    }
}

#[test]
fn reevaluation_agrees_with_comparison() {
    let model = RequirementsModel::default_model();
    let (before, after, other) = (
        load(bundled::PROCESSCO_V1_2),
        load(bundled::PROCESSCO_V1_3),
        load(bundled::SPO),
    );
    let improvement = reevaluate(&model, &before, &after).unwrap();
    let report = compare(&model, &[after, other]).unwrap();
    assert_eq!(&improvement.after, report.entity("ProcessCO").unwrap());
}

#[test]
fn comparison_is_order_independent() {
    let model = RequirementsModel::default_model();
    let invs = [
        load(bundled::SPO),
        load(bundled::PROCESSCO_V1_2),
        load(bundled::PROCESSCO_V1_3),
    ];
    let forward = compare(&model, &invs).unwrap();
    let mut reversed = invs.clone();
    reversed.reverse();
    let backward = compare(&model, &reversed).unwrap();
    assert_eq!(forward.ranking, backward.ranking);
    assert_eq!(forward.per_node_winner, backward.per_node_winner);
    assert_eq!(forward.ranking, ["ProcessCO v1.3", "ProcessCO v1.2", "SPO"]);
}

#[test]
fn weaknesses_cover_every_low_leaf_once() {
    let model = RequirementsModel::default_model();
    for src in [
        bundled::SPO,
        bundled::PROCESSCO_V1_2,
        bundled::PROCESSCO_V1_3,
    ] {
        let eval = evaluate_inventory(&model, &load(src)).unwrap();
        let found = weaknesses(&eval.result);
        for (_, node) in eval.result.walk() {
            let hits = found
                .iter()
                .filter(|w| w.attribute_id == node.node_id)
                .count();
            let expected = usize::from(node.is_attribute() && node.value <= 85.0);
            assert_eq!(hits, expected, "{}", node.node_id);
        }
    }
}

#[test]
fn improvement_addresses_only_axioms() {
    let model = RequirementsModel::default_model();
    let r = reevaluate(
        &model,
        &load(bundled::PROCESSCO_V1_2),
        &load(bundled::PROCESSCO_V1_3),
    )
    .unwrap();
    assert_eq!(r.addressed_attributes, ["1.1.3"]);
    let d = |id: &str| r.deltas.iter().find(|d| d.node_id == id).unwrap().delta;
    assert_abs_diff_eq!(d("1.1.4"), 0.0);
    assert_abs_diff_eq!(d("1.2"), 0.0);
    assert_abs_diff_eq!(d("1"), 10.66, epsilon = 0.05);
}
