//! Ontology inventories: the itemized record of one ontology's terms,
//! properties, axioms, relationships, reuse mappings and glossary references,
//! plus the direct-measure counts derived from it.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceKind {
    Direct,
    Indirect,
}

/// Reuse of a term from a foundational ontology, e.g. `ThingFO::Thing`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReuseMapping {
    pub source_kind: SourceKind,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    pub name: String,
    /// Whether the term has a natural-language definition.
    pub defined: bool,
    #[serde(default)]
    pub reuse: Option<ReuseMapping>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropertyEntry {
    pub owner_term: String,
    pub name: String,
    pub defined: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxiomEntry {
    pub id: String,
    /// Specified in a formal language such as first-order logic.
    pub formally_specified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationshipKind {
    IsA,
    PartOf,
    NonTaxonomic,
}

impl RelationshipKind {
    pub fn is_taxonomic(self) -> bool {
        !matches!(self, RelationshipKind::NonTaxonomic)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationshipEntry {
    /// Relation name, or the role name for unnamed relations.
    pub name: String,
    pub kind: RelationshipKind,
    pub source: String,
    pub target: String,
    /// Only evaluated for non-taxonomic relationships.
    pub defined: bool,
    /// Only allowed on non-taxonomic relationships.
    pub reused_from_fo: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GlossaryRef {
    pub name: String,
}

impl GlossaryRef {
    pub fn new(name: impl Into<String>) -> Self {
        GlossaryRef { name: name.into() }
    }

    fn normalized(&self) -> String {
        self.name.split_whitespace().collect::<Vec<_>>().join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntologyInventory {
    pub entity_name: String,
    pub version: String,
    pub terms: Vec<TermEntry>,
    pub properties: Vec<PropertyEntry>,
    pub axioms: Vec<AxiomEntry>,
    pub relationships: Vec<RelationshipEntry>,
    pub glossaries: Vec<GlossaryRef>,
    pub provenance: String,
}

/// On-disk layout. Kept separate so the version tag never leaks into the
/// in-memory model.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InventoryDocument {
    schema_version: String,
    entity_name: String,
    version: String,
    terms: Vec<TermEntry>,
    properties: Vec<PropertyEntry>,
    axioms: Vec<AxiomEntry>,
    relationships: Vec<RelationshipEntry>,
    glossaries: Vec<GlossaryRef>,
    #[serde(default)]
    provenance: String,
}

/// Parses an inventory document. Only structural well-formedness is checked;
/// run [`validate`] before measuring.
pub fn parse_inventory(source: &str) -> Result<OntologyInventory> {
    let value: serde_json::Value = serde_json::from_str(source).map_err(|e| Error::Parse {
        locus: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;

    match value.get("schema_version") {
        Some(serde_json::Value::String(v)) if v == SCHEMA_VERSION => {}
        Some(other) => {
            return Err(Error::UnsupportedVersion {
                found: other.to_string(),
            })
        }
        None if value.is_object() => {
            return Err(Error::Parse {
                locus: "schema_version".into(),
                message: "missing field `schema_version`".into(),
            })
        }
        None => {
            return Err(Error::Parse {
                locus: ".".into(),
                message: "expected a JSON object at the top level".into(),
            })
        }
    }

    let doc: InventoryDocument =
        serde_path_to_error::deserialize(value).map_err(|e| Error::Parse {
            locus: e.path().to_string(),
            message: e.inner().to_string(),
        })?;

    Ok(OntologyInventory {
        entity_name: doc.entity_name,
        version: doc.version,
        terms: doc.terms,
        properties: doc.properties,
        axioms: doc.axioms,
        relationships: doc.relationships,
        glossaries: doc.glossaries,
        provenance: doc.provenance,
    })
}

/// Serializes an inventory back into the document schema (pretty-printed).
pub fn to_json(inv: &OntologyInventory) -> String {
    let doc = InventoryDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        entity_name: inv.entity_name.clone(),
        version: inv.version.clone(),
        terms: inv.terms.clone(),
        properties: inv.properties.clone(),
        axioms: inv.axioms.clone(),
        relationships: inv.relationships.clone(),
        glossaries: inv.glossaries.clone(),
        provenance: inv.provenance.clone(),
    };
    serde_json::to_string_pretty(&doc).expect("inventory serialization is infallible")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyOntology,
    EmptyTermName {
        index: usize,
    },
    DuplicateTerm {
        name: String,
    },
    EmptyPropertyName {
        index: usize,
    },
    DuplicateProperty {
        owner: String,
        name: String,
    },
    UnknownPropertyOwner {
        owner: String,
        name: String,
    },
    DuplicateAxiom {
        id: String,
    },
    DanglingReference {
        index: usize,
        relationship: String,
        missing: Vec<String>,
    },
    ReuseOnTaxonomic {
        index: usize,
        relationship: String,
    },
    DuplicateRelationship {
        relationship: String,
        source: String,
        target: String,
    },
    EmptyGlossaryName {
        index: usize,
    },
    DuplicateGlossary {
        name: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyOntology => write!(f, "the ontology has no terms"),
            Violation::EmptyTermName { index } => write!(f, "terms[{index}]: empty name"),
            Violation::DuplicateTerm { name } => write!(f, "duplicate term `{name}`"),
            Violation::EmptyPropertyName { index } => write!(f, "properties[{index}]: empty name"),
            Violation::DuplicateProperty { owner, name } => {
                write!(f, "duplicate property `{name}` on term `{owner}`")
            }
            Violation::UnknownPropertyOwner { owner, name } => {
                write!(f, "property `{name}` is owned by unknown term `{owner}`")
            }
            Violation::DuplicateAxiom { id } => write!(f, "duplicate axiom `{id}`"),
            Violation::DanglingReference {
                index,
                relationship,
                missing,
            } => write!(
                f,
                "relationships[{index}] `{relationship}` references unknown term(s): {}",
                missing.join(", ")
            ),
            Violation::ReuseOnTaxonomic {
                index,
                relationship,
            } => write!(
                f,
                "relationships[{index}] `{relationship}` is taxonomic but flagged as reused from a foundational ontology"
            ),
            Violation::DuplicateRelationship {
                relationship,
                source,
                target,
            } => write!(f, "duplicate relationship `{relationship}` ({source}, {target})"),
            Violation::EmptyGlossaryName { index } => write!(f, "glossaries[{index}]: empty name"),
            Violation::DuplicateGlossary { name } => write!(f, "duplicate glossary `{name}`"),
        }
    }
}

/// Every violated inventory invariant. Empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "  - {v}")?;
        }
        Ok(())
    }
}

pub fn validate(inv: &OntologyInventory) -> ValidationReport {
    let mut violations = Vec::new();

    if inv.terms.is_empty() {
        violations.push(Violation::EmptyOntology);
    }

    let mut terms = HashSet::new();
    for (index, term) in inv.terms.iter().enumerate() {
        if term.name.is_empty() {
            violations.push(Violation::EmptyTermName { index });
        } else if !terms.insert(term.name.as_str()) {
            violations.push(Violation::DuplicateTerm {
                name: term.name.clone(),
            });
        }
    }

    let mut properties = HashSet::new();
    for (index, prop) in inv.properties.iter().enumerate() {
        if prop.name.is_empty() {
            violations.push(Violation::EmptyPropertyName { index });
            continue;
        }
        if !terms.contains(prop.owner_term.as_str()) {
            violations.push(Violation::UnknownPropertyOwner {
                owner: prop.owner_term.clone(),
                name: prop.name.clone(),
            });
        }
        if !properties.insert((prop.owner_term.as_str(), prop.name.as_str())) {
            violations.push(Violation::DuplicateProperty {
                owner: prop.owner_term.clone(),
                name: prop.name.clone(),
            });
        }
    }

    let mut axioms = HashSet::new();
    for axiom in &inv.axioms {
        if !axioms.insert(axiom.id.as_str()) {
            violations.push(Violation::DuplicateAxiom {
                id: axiom.id.clone(),
            });
        }
    }

    let mut relationships = HashSet::new();
    for (index, rel) in inv.relationships.iter().enumerate() {
        let mut missing: Vec<String> = Vec::new();
        for end in [&rel.source, &rel.target] {
            if !terms.contains(end.as_str()) && !missing.contains(end) {
                missing.push(end.clone());
            }
        }
        if !missing.is_empty() {
            violations.push(Violation::DanglingReference {
                index,
                relationship: rel.name.clone(),
                missing,
            });
        }
        if rel.reused_from_fo && rel.kind.is_taxonomic() {
            violations.push(Violation::ReuseOnTaxonomic {
                index,
                relationship: rel.name.clone(),
            });
        }
        if !relationships.insert((
            rel.name.as_str(),
            rel.kind,
            rel.source.as_str(),
            rel.target.as_str(),
        )) {
            violations.push(Violation::DuplicateRelationship {
                relationship: rel.name.clone(),
                source: rel.source.clone(),
                target: rel.target.clone(),
            });
        }
    }

    let mut glossaries = HashMap::new();
    for (index, glossary) in inv.glossaries.iter().enumerate() {
        let key = glossary.normalized();
        if key.is_empty() {
            violations.push(Violation::EmptyGlossaryName { index });
        } else if glossaries.insert(key.clone(), index).is_some() {
            violations.push(Violation::DuplicateGlossary { name: key });
        }
    }

    ValidationReport { violations }
}

/// Validates and turns a non-empty report into an [`Error::Invalid`].
pub fn ensure_valid(inv: &OntologyInventory) -> Result<()> {
    let report = validate(inv);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Invalid {
            entity: inv.entity_name.clone(),
            report,
        })
    }
}

/// The direct metrics: raw counts over the inventory lists.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasurementBasis {
    /// Total terms.
    pub tt: u32,
    /// Defined terms.
    pub dt: u32,
    /// Total properties.
    pub tp: u32,
    /// Defined properties.
    pub dp: u32,
    /// Total axioms.
    pub ta: u32,
    /// Formally specified axioms.
    pub sa: u32,
    /// Total non-taxonomic relationships.
    pub tntr: u32,
    /// Defined non-taxonomic relationships.
    pub dntr: u32,
    /// Total relationships, taxonomic or not.
    pub tr: u32,
    /// Terms specialized directly from a foundational ontology.
    pub stdfo: u32,
    /// Terms specialized indirectly from a foundational ontology.
    pub stifo: u32,
    /// Non-taxonomic relationships specialized from a foundational ontology.
    pub sntrfo: u32,
    /// International standard glossaries used or referred.
    pub uisg: u32,
}

impl MeasurementBasis {
    /// The counts with their conventional labels, in reporting order.
    pub fn labelled(&self) -> [(&'static str, u32); 13] {
        [
            ("#TT", self.tt),
            ("#DT", self.dt),
            ("#TP", self.tp),
            ("#DP", self.dp),
            ("#TA", self.ta),
            ("#SA", self.sa),
            ("#TNTR", self.tntr),
            ("#DNTR", self.dntr),
            ("#TR", self.tr),
            ("#STDFO", self.stdfo),
            ("#STIFO", self.stifo),
            ("#SNTRFO", self.sntrfo),
            ("#UISG", self.uisg),
        ]
    }

    /// Names of the violated count invariants, if any.
    pub fn invariant_violations(&self) -> Vec<&'static str> {
        let checks = [
            (self.dt <= self.tt, "dt <= tt"),
            (self.dp <= self.tp, "dp <= tp"),
            (self.sa <= self.ta, "sa <= ta"),
            (self.dntr <= self.tntr, "dntr <= tntr"),
            (self.tntr <= self.tr, "tntr <= tr"),
            (self.sntrfo <= self.tntr, "sntrfo <= tntr"),
            (
                u64::from(self.stdfo) + u64::from(self.stifo) <= u64::from(self.tt),
                "stdfo + stifo <= tt",
            ),
        ];
        checks
            .into_iter()
            .filter_map(|(ok, name)| (!ok).then_some(name))
            .collect()
    }
}

fn count<T>(items: &[T], pred: impl Fn(&T) -> bool) -> u32 {
    items.iter().filter(|i| pred(i)).count() as u32
}

/// Counts the direct metrics. The inventory is expected to have passed
/// [`validate`]; on invalid input the counts are still the naive scans.
pub fn derive_basis(inv: &OntologyInventory) -> MeasurementBasis {
    let non_taxonomic = |r: &RelationshipEntry| r.kind == RelationshipKind::NonTaxonomic;
    let reused_as = |kind: SourceKind| {
        move |t: &TermEntry| t.reuse.as_ref().is_some_and(|m| m.source_kind == kind)
    };

    MeasurementBasis {
        tt: inv.terms.len() as u32,
        dt: count(&inv.terms, |t| t.defined),
        tp: inv.properties.len() as u32,
        dp: count(&inv.properties, |p| p.defined),
        ta: inv.axioms.len() as u32,
        sa: count(&inv.axioms, |a| a.formally_specified),
        tntr: count(&inv.relationships, non_taxonomic),
        dntr: count(&inv.relationships, |r| non_taxonomic(r) && r.defined),
        tr: inv.relationships.len() as u32,
        stdfo: count(&inv.terms, reused_as(SourceKind::Direct)),
        stifo: count(&inv.terms, reused_as(SourceKind::Indirect)),
        sntrfo: count(&inv.relationships, |r| non_taxonomic(r) && r.reused_from_fo),
        uisg: inv.glossaries.len() as u32,
    }
}
