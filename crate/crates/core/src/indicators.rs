//! Elementary indicators: functions mapping one metric value onto a
//! `[0, 100]` satisfaction score, and the acceptability levels used to
//! interpret those scores.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::MeasureSet;

/// Tolerance for continuity at interior breakpoints.
pub const CONTINUITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Real values in `[0, 100]`.
    Percentage,
    /// Non-negative integers.
    Count,
}

impl Domain {
    fn contains(self, x: f64) -> bool {
        match self {
            Domain::Percentage => (0.0..=100.0).contains(&x),
            Domain::Count => x.is_finite() && x >= 0.0 && x.fract() == 0.0,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Percentage => f.write_str("[0, 100]"),
            Domain::Count => f.write_str("non-negative integers"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    /// `[lo, hi)`
    pub const fn closed_open(lo: f64, hi: f64) -> Self {
        Interval {
            lo,
            hi,
            lo_closed: true,
            hi_closed: false,
        }
    }

    /// `(lo, hi]`
    pub const fn open_closed(lo: f64, hi: f64) -> Self {
        Interval {
            lo,
            hi,
            lo_closed: false,
            hi_closed: true,
        }
    }

    /// `[lo, hi]`
    pub const fn closed(lo: f64, hi: f64) -> Self {
        Interval {
            lo,
            hi,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub const fn point(x: f64) -> Self {
        Interval::closed(x, x)
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_closed {
            x >= self.lo
        } else {
            x > self.lo
        };
        let below = if self.hi_closed {
            x <= self.hi
        } else {
            x < self.hi
        };
        above && below
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearPiece {
    pub interval: Interval,
    pub slope: f64,
    pub intercept: f64,
}

impl LinearPiece {
    fn at(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Step {
    pub interval: Interval,
    pub output: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionKind {
    Identity,
    PiecewiseLinear(Vec<LinearPiece>),
    Step(Vec<Step>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementaryFunctionSpec {
    pub domain: Domain,
    pub kind: FunctionKind,
}

impl ElementaryFunctionSpec {
    pub fn identity() -> Self {
        ElementaryFunctionSpec {
            domain: Domain::Percentage,
            kind: FunctionKind::Identity,
        }
    }

    fn intervals(&self) -> Vec<Interval> {
        match &self.kind {
            FunctionKind::Identity => vec![Interval::closed(0.0, 100.0)],
            FunctionKind::PiecewiseLinear(pieces) => pieces.iter().map(|p| p.interval).collect(),
            FunctionKind::Step(steps) => steps.iter().map(|s| s.interval).collect(),
        }
    }

    /// Structural problems: gaps, overlaps, discontinuities. Empty means
    /// the function is well-formed.
    pub fn check(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let intervals = self.intervals();

        match self.domain {
            Domain::Percentage => {
                let mut sorted = intervals.clone();
                sorted.sort_by(|a, b| a.lo.total_cmp(&b.lo));
                match (sorted.first(), sorted.last()) {
                    (Some(first), Some(last)) => {
                        if first.lo != 0.0 || !first.lo_closed {
                            problems.push("does not start at a closed 0".to_string());
                        }
                        if last.hi != 100.0 || !last.hi_closed {
                            problems.push("does not end at a closed 100".to_string());
                        }
                    }
                    _ => problems.push("no pieces".to_string()),
                }
                for pair in sorted.windows(2) {
                    let (a, b) = (pair[0], pair[1]);
                    if a.hi != b.lo {
                        problems.push(format!("gap or overlap between {} and {}", a.hi, b.lo));
                    } else if a.hi_closed == b.lo_closed {
                        let what = if a.hi_closed { "overlap" } else { "gap" };
                        problems.push(format!("{what} at {}", a.hi));
                    }
                }
            }
            Domain::Count => {
                let bound = intervals
                    .iter()
                    .flat_map(|i| [i.lo, i.hi])
                    .filter(|v| v.is_finite())
                    .fold(0.0f64, f64::max);
                for n in 0..=(bound as u64 + 1) {
                    let hits = intervals.iter().filter(|i| i.contains(n as f64)).count();
                    if hits != 1 {
                        problems.push(format!("{n} is covered {hits} times"));
                    }
                }
                if !intervals.iter().any(|i| i.hi == f64::INFINITY) {
                    problems.push("no unbounded final step".to_string());
                }
            }
        }

        if let FunctionKind::PiecewiseLinear(pieces) = &self.kind {
            let mut sorted = pieces.clone();
            sorted.sort_by(|a, b| a.interval.lo.total_cmp(&b.interval.lo));
            for pair in sorted.windows(2) {
                let b = pair[0].interval.hi;
                let (left, right) = (pair[0].at(b), pair[1].at(b));
                if (left - right).abs() > CONTINUITY_TOLERANCE {
                    problems.push(format!("discontinuous at {b}: {left} vs {right}"));
                }
            }
        }
        problems
    }
}

/// Evaluates an elementary function at `x`.
pub fn eval_elementary(spec: &ElementaryFunctionSpec, x: f64) -> Result<f64> {
    let out_of_domain = || Error::Domain {
        function: "elementary function".into(),
        input: x,
        domain: spec.domain.to_string(),
    };
    if !spec.domain.contains(x) {
        return Err(out_of_domain());
    }
    match &spec.kind {
        FunctionKind::Identity => Ok(x),
        FunctionKind::PiecewiseLinear(pieces) => pieces
            .iter()
            .find(|p| p.interval.contains(x))
            .map(|p| p.at(x))
            .ok_or_else(out_of_domain),
        FunctionKind::Step(steps) => steps
            .iter()
            .find(|s| s.interval.contains(x))
            .map(|s| s.output)
            .ok_or_else(out_of_domain),
    }
}

/// Six-piece tent peaking at 100 for a 50/50 balance between non-taxonomic
/// and taxonomic relationships.
pub fn tent_bntr_spec() -> ElementaryFunctionSpec {
    let piece = |interval, slope, intercept| LinearPiece {
        interval,
        slope,
        intercept,
    };
    ElementaryFunctionSpec {
        domain: Domain::Percentage,
        kind: FunctionKind::PiecewiseLinear(vec![
            piece(Interval::closed_open(0.0, 10.0), 6.0, 0.0),
            piece(Interval::closed_open(10.0, 40.0), 5.0 / 6.0, 155.0 / 3.0),
            piece(Interval::closed(40.0, 50.0), 1.5, 25.0),
            piece(Interval::open_closed(50.0, 60.0), -1.5, 175.0),
            piece(Interval::open_closed(60.0, 90.0), -5.0 / 6.0, 135.0),
            piece(Interval::open_closed(90.0, 100.0), -6.0, 600.0),
        ]),
    }
}

fn step(interval: Interval, output: f64) -> Step {
    Step { interval, output }
}

pub fn step_stfo_spec() -> ElementaryFunctionSpec {
    ElementaryFunctionSpec {
        domain: Domain::Percentage,
        kind: FunctionKind::Step(vec![
            step(Interval::closed_open(0.0, 70.0), 0.0),
            step(Interval::closed_open(70.0, 95.0), 60.0),
            step(Interval::closed_open(95.0, 100.0), 85.0),
            step(Interval::point(100.0), 100.0),
        ]),
    }
}

pub fn step_sntrfo_spec() -> ElementaryFunctionSpec {
    ElementaryFunctionSpec {
        domain: Domain::Percentage,
        kind: FunctionKind::Step(vec![
            step(Interval::closed_open(0.0, 20.0), 0.0),
            step(Interval::closed_open(20.0, 70.0), 20.0),
            step(Interval::closed_open(70.0, 95.0), 60.0),
            step(Interval::closed_open(95.0, 100.0), 85.0),
            step(Interval::point(100.0), 100.0),
        ]),
    }
}

pub fn step_uisg_spec() -> ElementaryFunctionSpec {
    ElementaryFunctionSpec {
        domain: Domain::Count,
        kind: FunctionKind::Step(vec![
            step(Interval::point(0.0), 0.0),
            step(Interval::point(1.0), 75.0),
            step(Interval::closed_open(2.0, f64::INFINITY), 100.0),
        ]),
    }
}

pub fn tent_bntr(x: f64) -> Result<f64> {
    eval_elementary(&tent_bntr_spec(), x)
}

pub fn step_stfo(x: f64) -> Result<f64> {
    eval_elementary(&step_stfo_spec(), x)
}

pub fn step_sntrfo(x: f64) -> Result<f64> {
    eval_elementary(&step_sntrfo_spec(), x)
}

pub fn step_uisg(n: u32) -> f64 {
    match n {
        0 => 0.0,
        1 => 75.0,
        _ => 100.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AcceptabilityLevel {
    /// `[0, 60]`: corrective actions with high priority.
    Unsatisfactory,
    /// `(60, 85]`: corrective actions should be performed.
    Marginal,
    /// `(85, 100]`: no corrective action needed.
    Satisfactory,
}

impl AcceptabilityLevel {
    pub const ALL: [AcceptabilityLevel; 3] = [
        AcceptabilityLevel::Unsatisfactory,
        AcceptabilityLevel::Marginal,
        AcceptabilityLevel::Satisfactory,
    ];

    pub fn range(self) -> Interval {
        match self {
            AcceptabilityLevel::Unsatisfactory => Interval::closed(0.0, 60.0),
            AcceptabilityLevel::Marginal => Interval::open_closed(60.0, 85.0),
            AcceptabilityLevel::Satisfactory => Interval::open_closed(85.0, 100.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AcceptabilityLevel::Unsatisfactory => "Unsatisfactory",
            AcceptabilityLevel::Marginal => "Marginal",
            AcceptabilityLevel::Satisfactory => "Satisfactory",
        }
    }
}

impl fmt::Display for AcceptabilityLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify(score: f64) -> Result<AcceptabilityLevel> {
    AcceptabilityLevel::ALL
        .into_iter()
        .find(|level| level.range().contains(score))
        .ok_or_else(|| Error::Domain {
            function: "classify".into(),
            input: score,
            domain: Domain::Percentage.to_string(),
        })
}

/// The eight elementary indicators. Serialized under their canonical names;
/// the spelling variants seen in published result tables are accepted on
/// input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Indicator {
    #[serde(rename = "PL_DTA")]
    DefinedTerms,
    #[serde(rename = "PL_DPA")]
    DefinedProperties,
    #[serde(rename = "PL_FSAA")]
    FormalAxioms,
    #[serde(rename = "PL_DNTRA")]
    DefinedNonTaxonomic,
    #[serde(rename = "PL_BNTRRA", alias = "PL_BNTTRA")]
    BalancedRelationships,
    #[serde(rename = "P_LRTFO", alias = "P_LRTRFO")]
    TermReuse,
    #[serde(rename = "P_LRNRFO", alias = "P_LRNRTRFO")]
    RelationshipReuse,
    #[serde(rename = "P_LUISG")]
    GlossaryUse,
}

impl Indicator {
    pub const ALL: [Indicator; 8] = [
        Indicator::DefinedTerms,
        Indicator::DefinedProperties,
        Indicator::FormalAxioms,
        Indicator::DefinedNonTaxonomic,
        Indicator::BalancedRelationships,
        Indicator::TermReuse,
        Indicator::RelationshipReuse,
        Indicator::GlossaryUse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Indicator::DefinedTerms => "PL_DTA",
            Indicator::DefinedProperties => "PL_DPA",
            Indicator::FormalAxioms => "PL_FSAA",
            Indicator::DefinedNonTaxonomic => "PL_DNTRA",
            Indicator::BalancedRelationships => "PL_BNTRRA",
            Indicator::TermReuse => "P_LRTFO",
            Indicator::RelationshipReuse => "P_LRNRFO",
            Indicator::GlossaryUse => "P_LUISG",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        match self {
            Indicator::BalancedRelationships => &["PL_BNTTRA"],
            Indicator::TermReuse => &["P_LRTRFO"],
            Indicator::RelationshipReuse => &["P_LRNRTRFO"],
            _ => &[],
        }
    }

    /// Label of the metric the indicator interprets.
    pub fn metric(self) -> &'static str {
        match self {
            Indicator::DefinedTerms => "%DT",
            Indicator::DefinedProperties => "%DP",
            Indicator::FormalAxioms => "%SA",
            Indicator::DefinedNonTaxonomic => "%DNTR",
            Indicator::BalancedRelationships => "%BNTR",
            Indicator::TermReuse => "%STFO",
            Indicator::RelationshipReuse => "%SNTRFO",
            Indicator::GlossaryUse => "#UISG",
        }
    }

    pub fn input(self, m: &MeasureSet) -> f64 {
        match self {
            Indicator::DefinedTerms => m.pct_dt,
            Indicator::DefinedProperties => m.pct_dp,
            Indicator::FormalAxioms => m.pct_sa,
            Indicator::DefinedNonTaxonomic => m.pct_dntr,
            Indicator::BalancedRelationships => m.pct_bntr,
            Indicator::TermReuse => m.pct_stfo,
            Indicator::RelationshipReuse => m.pct_sntrfo,
            Indicator::GlossaryUse => f64::from(m.uisg),
        }
    }

    pub fn function(self) -> ElementaryFunctionSpec {
        match self {
            Indicator::DefinedTerms
            | Indicator::DefinedProperties
            | Indicator::FormalAxioms
            | Indicator::DefinedNonTaxonomic => ElementaryFunctionSpec::identity(),
            Indicator::BalancedRelationships => tent_bntr_spec(),
            Indicator::TermReuse => step_stfo_spec(),
            Indicator::RelationshipReuse => step_sntrfo_spec(),
            Indicator::GlossaryUse => step_uisg_spec(),
        }
    }

    pub fn score(self, x: f64) -> Result<f64> {
        eval_elementary(&self.function(), x).map_err(|e| match e {
            Error::Domain { input, domain, .. } => Error::Domain {
                function: self.name().to_string(),
                input,
                domain,
            },
            other => other,
        })
    }

    /// Sample points for plotting: every 0.5 over `[0, 100]`, or the
    /// integers `0..=10` for count inputs.
    pub fn samples(self) -> Vec<(f64, f64)> {
        let xs: Vec<f64> = match self.function().domain {
            Domain::Percentage => (0..=200).map(|i| f64::from(i) * 0.5).collect(),
            Domain::Count => (0..=10).map(f64::from).collect(),
        };
        xs.into_iter()
            .map(|x| (x, self.score(x).expect("samples lie inside the domain")))
            .collect()
    }
}

impl fmt::Display for Indicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Indicator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Indicator::ALL
            .into_iter()
            .find(|i| i.name() == s || i.aliases().contains(&s))
            .ok_or_else(|| Error::UnknownIndicator {
                name: s.to_string(),
                valid: Indicator::ALL.map(Indicator::name).join(", "),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementaryResult {
    pub attribute_id: String,
    pub indicator: Indicator,
    pub input: f64,
    pub score: f64,
    pub level: AcceptabilityLevel,
}

/// Attribute-to-indicator binding of the default quality model.
pub const DEFAULT_BINDINGS: [(&str, Indicator); 8] = [
    ("1.1.1", Indicator::DefinedTerms),
    ("1.1.2", Indicator::DefinedProperties),
    ("1.1.3", Indicator::FormalAxioms),
    ("1.1.4.1", Indicator::DefinedNonTaxonomic),
    ("1.1.4.2", Indicator::BalancedRelationships),
    ("1.2.1.1", Indicator::TermReuse),
    ("1.2.1.2", Indicator::RelationshipReuse),
    ("1.2.2", Indicator::GlossaryUse),
];

pub fn evaluate_attributes(m: &MeasureSet) -> Result<Vec<ElementaryResult>> {
    evaluate_bindings(DEFAULT_BINDINGS.iter().map(|(id, ind)| (*id, *ind)), m)
}

pub fn evaluate_bindings<'a>(
    bindings: impl IntoIterator<Item = (&'a str, Indicator)>,
    m: &MeasureSet,
) -> Result<Vec<ElementaryResult>> {
    bindings
        .into_iter()
        .map(|(attribute_id, indicator)| {
            let input = indicator.input(m);
            let score = indicator.score(input)?;
            Ok(ElementaryResult {
                attribute_id: attribute_id.to_string(),
                indicator,
                input,
                score,
                level: classify(score)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inventory::MeasurementBasis;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn identity_examples() {
        let id = ElementaryFunctionSpec::identity();
        assert_eq!(eval_elementary(&id, 80.56).unwrap(), 80.56);
        assert_eq!(eval_elementary(&id, 0.0).unwrap(), 0.0);
        assert_eq!(eval_elementary(&id, 100.0).unwrap(), 100.0);
        assert!(matches!(
            eval_elementary(&id, -0.1),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            eval_elementary(&id, 100.5),
            Err(Error::Domain { .. })
        ));
        assert!(eval_elementary(&id, f64::NAN).is_err());
    }

    #[test]
    fn tent_examples() {
        // unrounded %BNTR inputs: 27/53 and 18/44
        assert_abs_diff_eq!(tent_bntr(2700.0 / 53.0).unwrap(), 98.58, epsilon = 0.01);
        assert_abs_diff_eq!(tent_bntr(1800.0 / 44.0).unwrap(), 86.36, epsilon = 0.01);
        // rounded inputs land exactly on the tolerance edge (98.59, 86.365)
        assert_abs_diff_eq!(tent_bntr(50.94).unwrap(), 98.58, epsilon = 0.01 + 1e-9);
        assert_abs_diff_eq!(tent_bntr(40.91).unwrap(), 86.36, epsilon = 0.01 + 1e-9);
        assert_eq!(tent_bntr(50.0).unwrap(), 100.0);
        assert_abs_diff_eq!(tent_bntr(25.0).unwrap(), 72.5, epsilon = 1e-12);
        assert!(tent_bntr(101.0).is_err());
    }

    #[test]
    fn tent_breakpoints() {
        for (x, want) in [
            (0.0, 0.0),
            (10.0, 60.0),
            (40.0, 85.0),
            (50.0, 100.0),
            (60.0, 85.0),
            (90.0, 60.0),
            (100.0, 0.0),
        ] {
            assert_abs_diff_eq!(tent_bntr(x).unwrap(), want, epsilon = 1e-9);
        }
    }

    #[test]
    fn builtin_functions_are_well_formed() {
        for ind in Indicator::ALL {
            assert!(
                ind.function().check().is_empty(),
                "{ind}: {:?}",
                ind.function().check()
            );
        }
    }

    #[test]
    fn check_catches_gap_and_jump() {
        let spec = ElementaryFunctionSpec {
            domain: Domain::Percentage,
            kind: FunctionKind::PiecewiseLinear(vec![
                LinearPiece {
                    interval: Interval::closed_open(0.0, 50.0),
                    slope: 1.0,
                    intercept: 0.0,
                },
                LinearPiece {
                    interval: Interval::open_closed(50.0, 100.0),
                    slope: 1.0,
                    intercept: 1.0,
                },
            ]),
        };
        let problems = spec.check();
        assert!(
            problems.iter().any(|p| p.contains("gap at 50")),
            "{problems:?}"
        );
        assert!(
            problems.iter().any(|p| p.contains("discontinuous")),
            "{problems:?}"
        );
    }

    #[test]
    fn stfo_examples() {
        assert_eq!(step_stfo(100.0).unwrap(), 100.0);
        assert_eq!(step_stfo(96.0).unwrap(), 85.0);
        assert_eq!(step_stfo(95.0).unwrap(), 85.0);
        assert_eq!(step_stfo(94.99).unwrap(), 60.0);
        assert_eq!(step_stfo(70.0).unwrap(), 60.0);
        assert_eq!(step_stfo(69.99).unwrap(), 0.0);
        assert_eq!(step_stfo(0.0).unwrap(), 0.0);
        assert!(step_stfo(-1.0).is_err());
    }

    #[test]
    fn sntrfo_examples() {
        assert_eq!(step_sntrfo(2200.0 / 99.0).unwrap(), 20.0);
        assert_eq!(step_sntrfo(22.22).unwrap(), 20.0);
        assert_eq!(step_sntrfo(100.0).unwrap(), 100.0);
        assert_eq!(step_sntrfo(19.99).unwrap(), 0.0);
        assert_eq!(step_sntrfo(20.0).unwrap(), 20.0);
        assert!(step_sntrfo(100.01).is_err());
    }

    #[test]
    fn uisg_examples() {
        assert_eq!(step_uisg(5), 100.0);
        assert_eq!(step_uisg(1), 75.0);
        assert_eq!(step_uisg(0), 0.0);
        for n in 0..20u32 {
            assert_eq!(
                Indicator::GlossaryUse.score(f64::from(n)).unwrap(),
                step_uisg(n)
            );
        }
        assert!(Indicator::GlossaryUse.score(1.5).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(0.0).unwrap(), AcceptabilityLevel::Unsatisfactory);
        assert_eq!(classify(60.0).unwrap(), AcceptabilityLevel::Unsatisfactory);
        assert_eq!(classify(60.000001).unwrap(), AcceptabilityLevel::Marginal);
        assert_eq!(classify(85.0).unwrap(), AcceptabilityLevel::Marginal);
        assert_eq!(classify(98.58).unwrap(), AcceptabilityLevel::Satisfactory);
        assert_eq!(classify(100.0).unwrap(), AcceptabilityLevel::Satisfactory);
        assert!(classify(100.1).is_err());
        assert!(classify(-0.1).is_err());
    }

    #[test]
    fn indicator_names_and_aliases() {
        for ind in Indicator::ALL {
            assert_eq!(ind.name().parse::<Indicator>().unwrap(), ind);
        }
        assert_eq!(
            "PL_BNTTRA".parse::<Indicator>().unwrap(),
            Indicator::BalancedRelationships
        );
        assert_eq!(
            "P_LRTRFO".parse::<Indicator>().unwrap(),
            Indicator::TermReuse
        );
        assert_eq!(
            "P_LRNRTRFO".parse::<Indicator>().unwrap(),
            Indicator::RelationshipReuse
        );
        let err = "PL_XYZ".parse::<Indicator>().unwrap_err().to_string();
        assert!(err.contains("P_LUISG"), "{err}");
        let json: Indicator = serde_json::from_str("\"PL_BNTTRA\"").unwrap();
        assert_eq!(serde_json::to_string(&json).unwrap(), "\"PL_BNTRRA\"");
    }

    fn measures(pcts: [f64; 7], uisg: u32) -> MeasureSet {
        MeasureSet {
            basis: MeasurementBasis::default(),
            pct_dt: pcts[0],
            pct_dp: pcts[1],
            pct_sa: pcts[2],
            pct_dntr: pcts[3],
            pct_bntr: pcts[4],
            pct_stfo: pcts[5],
            pct_sntrfo: pcts[6],
            uisg,
        }
    }

    fn scores(m: &MeasureSet) -> Vec<f64> {
        evaluate_attributes(m)
            .unwrap()
            .iter()
            .map(|r| (r.score * 100.0).round() / 100.0)
            .collect()
    }

    #[test]
    fn attributes_spo() {
        let m = measures(
            [
                2900.0 / 36.0,
                0.0,
                100.0,
                1100.0 / 27.0,
                2700.0 / 53.0,
                100.0,
                600.0 / 27.0,
            ],
            5,
        );
        assert_eq!(
            scores(&m),
            vec![80.56, 0.0, 100.0, 40.74, 98.58, 100.0, 20.0, 100.0]
        );
    }

    #[test]
    fn attributes_processco() {
        let m = measures([100.0, 100.0, 0.0, 100.0, 1800.0 / 44.0, 100.0, 100.0], 3);
        assert_eq!(
            scores(&m),
            vec![100.0, 100.0, 0.0, 100.0, 86.36, 100.0, 100.0, 100.0]
        );
        let levels: Vec<_> = evaluate_attributes(&m)
            .unwrap()
            .iter()
            .map(|r| r.level)
            .collect();
        assert_eq!(levels[2], AcceptabilityLevel::Unsatisfactory);
        assert_eq!(levels[4], AcceptabilityLevel::Satisfactory);
    }

    #[test]
    fn attributes_all_zero() {
        let m = measures([0.0; 7], 0);
        assert!(evaluate_attributes(&m)
            .unwrap()
            .iter()
            .all(|r| r.score == 0.0));
    }

    #[test]
    fn plot_samples() {
        let tent = Indicator::BalancedRelationships.samples();
        assert_eq!(tent.len(), 201);
        assert!(tent.contains(&(50.0, 100.0)));
        let uisg = Indicator::GlossaryUse.samples();
        assert_eq!(&uisg[..3], &[(0.0, 0.0), (1.0, 75.0), (2.0, 100.0)]);
    }

    fn is_non_decreasing(f: impl Fn(f64) -> f64, xs: impl Iterator<Item = f64>) -> bool {
        let ys: Vec<f64> = xs.map(f).collect();
        ys.windows(2).all(|w| w[0] <= w[1])
    }

    #[test]
    fn steps_are_non_decreasing() {
        let grid = || (0..=10_000).map(|i| f64::from(i) / 100.0);
        assert!(is_non_decreasing(|x| step_stfo(x).unwrap(), grid()));
        assert!(is_non_decreasing(|x| step_sntrfo(x).unwrap(), grid()));
        assert!(is_non_decreasing(
            |x| step_uisg(x as u32),
            (0..50).map(f64::from)
        ));
    }

    proptest! {
        #[test]
        fn scores_stay_in_range(x in 0.0f64..=100.0) {
            for ind in Indicator::ALL {
                let input = if ind == Indicator::GlossaryUse { x.floor() } else { x };
                let s = ind.score(input).unwrap();
                prop_assert!((0.0..=100.0).contains(&s), "{} at {} -> {}", ind, input, s);
            }
        }

        #[test]
        fn tent_is_symmetric(d in 0.0f64..=50.0) {
            let diff = tent_bntr(50.0 - d).unwrap() - tent_bntr(50.0 + d).unwrap();
            prop_assert!(diff.abs() < 1e-9);
        }

        #[test]
        fn classify_partitions(x in 0.0f64..=100.0) {
            let matching = AcceptabilityLevel::ALL.iter().filter(|l| l.range().contains(x)).count();
            prop_assert_eq!(matching, 1);
        }
    }
}
