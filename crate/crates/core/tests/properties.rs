//! Randomized checks over inventories and the power mean.

use ontoqual::inventory::{
    derive_basis, parse_inventory, to_json, validate, AxiomEntry, GlossaryRef, OntologyInventory,
    PropertyEntry, RelationshipEntry, RelationshipKind, ReuseMapping, SourceKind, TermEntry,
};
use ontoqual::weighted_power_mean;
use proptest::prelude::*;

fn term() -> impl Strategy<Value = (bool, Option<bool>)> {
    (any::<bool>(), prop::option::of(any::<bool>()))
}

prop_compose! {
    fn inventory()(
        terms in prop::collection::vec(term(), 1..8),
        props in prop::collection::vec((any::<bool>(), 0usize..8), 0..6),
        axioms in prop::collection::vec(any::<bool>(), 0..6),
        rels in prop::collection::vec((0u8..3, 0usize..8, 0usize..8, any::<bool>(), any::<bool>()), 0..10),
        glossaries in 0usize..4,
    ) -> OntologyInventory {
        let n = terms.len();
        OntologyInventory {
            entity_name: "Random".into(),
            version: "1".into(),
            terms: terms
                .iter()
                .enumerate()
                .map(|(i, (defined, reuse))| TermEntry {
                    name: format!("T{i}"),
                    defined: *defined,
                    reuse: reuse.map(|direct| ReuseMapping {
                        source_kind: if direct { SourceKind::Direct } else { SourceKind::Indirect },
                        target: "FO::Thing".into(),
                    }),
                })
                .collect(),
            properties: props
                .iter()
                .enumerate()
                .map(|(i, (defined, owner))| PropertyEntry {
                    owner_term: format!("T{}", owner % n),
                    name: format!("p{i}"),
                    defined: *defined,
                })
                .collect(),
            axioms: axioms
                .iter()
                .enumerate()
                .map(|(i, formal)| AxiomEntry { id: format!("A{i}"), formally_specified: *formal })
                .collect(),
            relationships: rels
                .iter()
                .enumerate()
                .map(|(i, (kind, s, t, defined, reused))| {
                    let kind = [RelationshipKind::IsA, RelationshipKind::PartOf, RelationshipKind::NonTaxonomic]
                        [*kind as usize];
                    RelationshipEntry {
                        name: format!("r{i}"),
                        kind,
                        source: format!("T{}", s % n),
                        target: format!("T{}", t % n),
                        defined: *defined,
                        reused_from_fo: *reused && !kind.is_taxonomic(),
                    }
                })
                .collect(),
            glossaries: (0..glossaries).map(|i| GlossaryRef::new(format!("G{i}"))).collect(),
            provenance: "generated".into(),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn generated_inventories_are_valid(inv in inventory()) {
        let report = validate(&inv);
        prop_assert!(report.is_valid(), "{}", report);
    }

    #[test]
    fn serialization_round_trips(inv in inventory()) {
        let back = parse_inventory(&to_json(&inv)).unwrap();
        prop_assert_eq!(back, inv);
    }

    #[test]
    fn basis_satisfies_count_invariants(inv in inventory()) {
        let b = derive_basis(&inv);
        prop_assert!(b.invariant_violations().is_empty());
        prop_assert_eq!(b.tr as usize, inv.relationships.len());
    }
}

fn normalized(raw: &[f64]) -> Vec<f64> {
    let total: f64 = raw.iter().sum();
    raw.iter().map(|w| w / total).collect()
}

fn exponent() -> impl Strategy<Value = f64> {
    prop_oneof![
        -20.0f64..20.0,
        Just(f64::NEG_INFINITY),
        Just(f64::INFINITY),
        Just(0.0),
        Just(-3.51),
        Just(0.619),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn wpm_is_internal(
        values in prop::collection::vec(0.0f64..=100.0, 2..6),
        raw in prop::collection::vec(0.01f64..1.0, 6),
        r in exponent(),
    ) {
        let w = normalized(&raw[..values.len()]);
        let m = weighted_power_mean(&values, &w, r).unwrap();
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(lo <= m && m <= hi, "{} not in [{}, {}]", m, lo, hi);
    }

    #[test]
    fn wpm_is_monotone(
        values in prop::collection::vec(0.0f64..=100.0, 2..6),
        raw in prop::collection::vec(0.01f64..1.0, 6),
        r in exponent(),
        pick in 0usize..6,
        bump in 0.0f64..50.0,
    ) {
        let w = normalized(&raw[..values.len()]);
        let before = weighted_power_mean(&values, &w, r).unwrap();
        let mut raised = values.clone();
        let i = pick % values.len();
        raised[i] = (raised[i] + bump).min(100.0);
        let after = weighted_power_mean(&raised, &w, r).unwrap();
        prop_assert!(after >= before - 1e-9 * before.max(1.0), "{} < {}", after, before);
    }
}
