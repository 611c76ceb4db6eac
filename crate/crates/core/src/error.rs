use thiserror::Error;

use crate::inventory::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The document is not well-formed JSON or does not match the schema.
    #[error("parse error at {locus}: {message}")]
    Parse { locus: String, message: String },

    #[error("unsupported schema version {found} (expected \"1\")")]
    UnsupportedVersion { found: String },

    #[error("inventory `{entity}` failed validation:\n{report}")]
    Invalid {
        entity: String,
        report: ValidationReport,
    },

    #[error("ratio contract violated: numerator {numerator} exceeds denominator {denominator}")]
    RatioContract { numerator: u32, denominator: u32 },

    #[error("ontology has no terms")]
    EmptyOntology,

    #[error("ontology has no relationships; %BNTR is undefined")]
    NoRelationships,

    #[error("{function}: input {input} is outside the domain {domain}")]
    Domain {
        function: String,
        input: f64,
        domain: String,
    },

    #[error("aggregation contract violated: {0}")]
    Aggregation(String),

    #[error("operator {0} is a limit operator and has no finite exponent")]
    LimitOperator(String),

    #[error("unknown LSP operator `{0}`")]
    UnknownOperator(String),

    #[error("unknown indicator `{name}` (valid: {valid})")]
    UnknownIndicator { name: String, valid: String },

    #[error("invalid requirements model: {0}")]
    Model(String),

    #[error("binding error at node {node}: {reason}")]
    Binding { node: String, reason: String },

    #[error("cannot pair `{before}` with `{after}`: entity names differ")]
    Pairing { before: String, after: String },

    #[error("duplicate entity `{0}` in comparison")]
    DuplicateEntity(String),

    #[error("comparison needs at least two entities, got {0}")]
    TooFewEntities(usize),

    #[error("result topology mismatch at node {0}")]
    Topology(String),

    #[error("entity `{entity}`: {source}")]
    Entity {
        entity: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for errors caused by the input documents themselves (parse,
    /// schema, validation and unmeasurable counts) rather than by how they
    /// are combined.
    pub fn is_input_error(&self) -> bool {
        match self {
            Error::Parse { .. }
            | Error::UnsupportedVersion { .. }
            | Error::Invalid { .. }
            | Error::RatioContract { .. }
            | Error::EmptyOntology
            | Error::NoRelationships
            | Error::Model(_)
            | Error::UnknownOperator(_)
            | Error::UnknownIndicator { .. }
            | Error::TooFewEntities(_) => true,
            Error::Entity { source, .. } => source.is_input_error(),
            _ => false,
        }
    }

    pub(crate) fn for_entity(self, entity: &str) -> Error {
        match self {
            e @ Error::Entity { .. } => e,
            e => Error::Entity {
                entity: entity.to_string(),
                source: Box::new(e),
            },
        }
    }
}
