//! Data files compiled into the library: the reference inventories, the
//! default quality model and the operator exponent table.

pub const SPO: &str = include_str!("../data/inventories/spo.json");
pub const PROCESSCO_V1_2: &str = include_str!("../data/inventories/processco-v1.2.json");
pub const PROCESSCO_V1_3: &str = include_str!("../data/inventories/processco-v1.3.json");

pub const DEFAULT_MODEL: &str = include_str!("../data/default-model.json");
pub const OPERATOR_TABLE: &str = include_str!("../data/operators.json");
