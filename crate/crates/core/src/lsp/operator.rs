use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bundled;
use crate::error::{Error, Result};

pub const MIN_ARITY: usize = 2;
pub const MAX_ARITY: usize = 5;
const ARITIES: usize = MAX_ARITY - MIN_ARITY + 1;

/// The seventeen aggregation operators, ordered from full disjunction (`D`)
/// through the arithmetic mean (`A`) to full conjunction (`C`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperatorLabel {
    D,
    DPlusPlus,
    DPlus,
    DPlusMinus,
    DA,
    DMinusPlus,
    DMinus,
    DMinusMinus,
    A,
    CMinusMinus,
    CMinus,
    CMinusPlus,
    CA,
    CPlusMinus,
    CPlus,
    CPlusPlus,
    C,
}

impl OperatorLabel {
    pub const ALL: [OperatorLabel; 17] = [
        OperatorLabel::D,
        OperatorLabel::DPlusPlus,
        OperatorLabel::DPlus,
        OperatorLabel::DPlusMinus,
        OperatorLabel::DA,
        OperatorLabel::DMinusPlus,
        OperatorLabel::DMinus,
        OperatorLabel::DMinusMinus,
        OperatorLabel::A,
        OperatorLabel::CMinusMinus,
        OperatorLabel::CMinus,
        OperatorLabel::CMinusPlus,
        OperatorLabel::CA,
        OperatorLabel::CPlusMinus,
        OperatorLabel::CPlus,
        OperatorLabel::CPlusPlus,
        OperatorLabel::C,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OperatorLabel::D => "D",
            OperatorLabel::DPlusPlus => "D++",
            OperatorLabel::DPlus => "D+",
            OperatorLabel::DPlusMinus => "D+-",
            OperatorLabel::DA => "DA",
            OperatorLabel::DMinusPlus => "D-+",
            OperatorLabel::DMinus => "D-",
            OperatorLabel::DMinusMinus => "D--",
            OperatorLabel::A => "A",
            OperatorLabel::CMinusMinus => "C--",
            OperatorLabel::CMinus => "C-",
            OperatorLabel::CMinusPlus => "C-+",
            OperatorLabel::CA => "CA",
            OperatorLabel::CPlusMinus => "C+-",
            OperatorLabel::CPlus => "C+",
            OperatorLabel::CPlusPlus => "C++",
            OperatorLabel::C => "C",
        }
    }

    /// `C` (min) and `D` (max) have no finite exponent.
    pub fn is_limit(self) -> bool {
        matches!(self, OperatorLabel::C | OperatorLabel::D)
    }

    pub fn is_conjunctive(self) -> bool {
        self > OperatorLabel::A
    }

    pub fn is_disjunctive(self) -> bool {
        self < OperatorLabel::A
    }
}

impl fmt::Display for OperatorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // typeset documents often print "--" as an em or en dash
        let normalized = s
            .trim()
            .replace(['\u{2014}', '\u{2013}'], "--")
            .replace('\u{2212}', "-");
        OperatorLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == normalized)
            .ok_or_else(|| Error::UnknownOperator(s.to_string()))
    }
}

impl Serialize for OperatorLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for OperatorLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Raw JSON form: label -> arity (as a string key) -> exponent.
pub type ExponentOverrides = BTreeMap<String, BTreeMap<String, f64>>;

/// Power-mean exponents for every non-limit operator at arities 2 through 5.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorTable {
    exponents: HashMap<OperatorLabel, [f64; ARITIES]>,
}

impl OperatorTable {
    /// The table shipped with the library.
    pub fn standard() -> &'static OperatorTable {
        static TABLE: OnceLock<OperatorTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            OperatorTable::from_json(bundled::OPERATOR_TABLE)
                .expect("bundled operator table is valid")
        })
    }

    /// Parses a complete table. Every non-limit label except `A` must be
    /// present with all four arities.
    pub fn from_json(source: &str) -> Result<OperatorTable> {
        let raw: ExponentOverrides = serde_json::from_str(source).map_err(|e| Error::Parse {
            locus: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        let mut table = OperatorTable {
            exponents: HashMap::new(),
        };
        table.exponents.insert(OperatorLabel::A, [1.0; ARITIES]);
        table.merge(&raw)?;
        let missing: Vec<String> = OperatorLabel::ALL
            .into_iter()
            .filter(|l| !l.is_limit())
            .filter(|l| {
                table
                    .exponents
                    .get(l)
                    .is_none_or(|row| row.iter().any(|r| r.is_nan()))
            })
            .map(|l| l.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::Model(format!(
                "operator table incomplete for: {}",
                missing.join(", ")
            )));
        }
        let problems = table.check();
        if !problems.is_empty() {
            return Err(Error::Model(problems.join("; ")));
        }
        Ok(table)
    }

    /// Returns a copy with individual entries replaced.
    pub fn with_overrides(&self, overrides: &ExponentOverrides) -> Result<OperatorTable> {
        let mut table = self.clone();
        table.merge(overrides)?;
        let problems = table.check();
        if !problems.is_empty() {
            return Err(Error::Model(problems.join("; ")));
        }
        Ok(table)
    }

    fn merge(&mut self, raw: &ExponentOverrides) -> Result<()> {
        for (label, row) in raw {
            let label: OperatorLabel = label.parse()?;
            if label.is_limit() {
                return Err(Error::Model(format!(
                    "{label} is a limit operator and takes no exponent"
                )));
            }
            let entry = self.exponents.entry(label).or_insert([f64::NAN; ARITIES]);
            for (arity, r) in row {
                let n: usize = arity
                    .parse()
                    .ok()
                    .filter(|n| (MIN_ARITY..=MAX_ARITY).contains(n))
                    .ok_or_else(|| {
                        Error::Model(format!("{label}: arity `{arity}` outside 2..5"))
                    })?;
                if !r.is_finite() {
                    return Err(Error::Model(format!(
                        "{label}: exponent for arity {n} is not finite"
                    )));
                }
                entry[n - MIN_ARITY] = *r;
            }
        }
        Ok(())
    }

    /// Ordering problems: `A` must be 1, conjunctive exponents below 1 and
    /// decreasing toward `C`, disjunctive above 1 and increasing toward `D`.
    pub fn check(&self) -> Vec<String> {
        let mut problems = Vec::new();
        for i in 0..ARITIES {
            let n = i + MIN_ARITY;
            let r = |l: &OperatorLabel| self.exponents.get(l).map(|row| row[i]);
            if r(&OperatorLabel::A) != Some(1.0) {
                problems.push(format!("A must have exponent 1 at arity {n}"));
            }
            let finite: Vec<(OperatorLabel, f64)> = OperatorLabel::ALL
                .iter()
                .filter(|l| !l.is_limit())
                .filter_map(|l| r(l).filter(|v| !v.is_nan()).map(|v| (*l, v)))
                .collect();
            for pair in finite.windows(2) {
                let ((la, ra), (lb, rb)) = (pair[0], pair[1]);
                if ra <= rb {
                    problems.push(format!("arity {n}: {la} ({ra}) must exceed {lb} ({rb})"));
                }
            }
        }
        problems
    }

    /// Tabulated exponent for a non-limit operator. Arities outside 2..5 use
    /// the nearest tabulated arity.
    pub fn exponent_for(&self, label: OperatorLabel, arity: usize) -> Result<f64> {
        if label.is_limit() {
            return Err(Error::LimitOperator(label.to_string()));
        }
        let n = arity.clamp(MIN_ARITY, MAX_ARITY);
        Ok(self.exponents[&label][n - MIN_ARITY])
    }

    /// Exponent including the limits: `-inf` for `C`, `+inf` for `D`.
    pub fn resolve(&self, label: OperatorLabel, arity: usize) -> f64 {
        match label {
            OperatorLabel::C => f64::NEG_INFINITY,
            OperatorLabel::D => f64::INFINITY,
            _ => self
                .exponent_for(label, arity)
                .expect("non-limit labels are tabulated"),
        }
    }
}
