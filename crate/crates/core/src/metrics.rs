//! Indirect metrics computed from the direct counts.
//!
//! All arithmetic is full precision; rounding is a rendering concern.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inventory::MeasurementBasis;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasureSet {
    pub basis: MeasurementBasis,
    /// %DT: defined terms.
    pub pct_dt: f64,
    /// %DP: defined properties.
    pub pct_dp: f64,
    /// %SA: formally specified axioms.
    pub pct_sa: f64,
    /// %DNTR: defined non-taxonomic relationships.
    pub pct_dntr: f64,
    /// %BNTR: non-taxonomic share of all relationships.
    pub pct_bntr: f64,
    /// %STFO: terms specialized from a foundational ontology.
    pub pct_stfo: f64,
    /// %SNTRFO: non-taxonomic relationships specialized from a foundational ontology.
    pub pct_sntrfo: f64,
    /// #UISG, passed through from the basis.
    pub uisg: u32,
}

impl MeasureSet {
    /// `(label, value)` for the seven percentages, in report order.
    pub fn percentages(&self) -> [(&'static str, f64); 7] {
        [
            ("%DT", self.pct_dt),
            ("%DP", self.pct_dp),
            ("%SA", self.pct_sa),
            ("%DNTR", self.pct_dntr),
            ("%BNTR", self.pct_bntr),
            ("%STFO", self.pct_stfo),
            ("%SNTRFO", self.pct_sntrfo),
        ]
    }
}

/// `numerator / denominator * 100`, or exactly 0 when the denominator is 0.
pub fn guarded_ratio(numerator: u32, denominator: u32) -> Result<f64> {
    if numerator > denominator {
        return Err(Error::RatioContract {
            numerator,
            denominator,
        });
    }
    if denominator == 0 {
        return Ok(0.0);
    }
    Ok(f64::from(numerator) / f64::from(denominator) * 100.0)
}

/// %STFO. No zero guard: an ontology without terms is an error.
pub fn pct_specialized_terms(stdfo: u32, stifo: u32, tt: u32) -> Result<f64> {
    if tt == 0 {
        return Err(Error::EmptyOntology);
    }
    let specialized =
        stdfo
            .checked_add(stifo)
            .filter(|s| *s <= tt)
            .ok_or(Error::RatioContract {
                numerator: stdfo.saturating_add(stifo),
                denominator: tt,
            })?;
    Ok(f64::from(specialized) / f64::from(tt) * 100.0)
}

pub fn measure(basis: &MeasurementBasis) -> Result<MeasureSet> {
    if basis.tt == 0 {
        return Err(Error::EmptyOntology);
    }
    if basis.tr == 0 {
        return Err(Error::NoRelationships);
    }
    Ok(MeasureSet {
        basis: *basis,
        pct_dt: guarded_ratio(basis.dt, basis.tt)?,
        pct_dp: guarded_ratio(basis.dp, basis.tp)?,
        pct_sa: guarded_ratio(basis.sa, basis.ta)?,
        pct_dntr: guarded_ratio(basis.dntr, basis.tntr)?,
        // tr > 0 was checked above, so the guard never fires here
        pct_bntr: guarded_ratio(basis.tntr, basis.tr)?,
        pct_stfo: pct_specialized_terms(basis.stdfo, basis.stifo, basis.tt)?,
        pct_sntrfo: guarded_ratio(basis.sntrfo, basis.tntr)?,
        uisg: basis.uisg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn round2(x: f64) -> f64 {
        (x * 100.0).round() / 100.0
    }

    #[test]
    fn ratio_examples() {
        assert_abs_diff_eq!(
            guarded_ratio(29, 36).unwrap(),
            80.555_555_555,
            epsilon = 1e-8
        );
        assert_eq!(guarded_ratio(0, 0).unwrap(), 0.0);
        assert_eq!(guarded_ratio(18, 18).unwrap(), 100.0);
    }

    #[test]
    fn ratio_contract() {
        assert!(matches!(
            guarded_ratio(3, 2),
            Err(Error::RatioContract {
                numerator: 3,
                denominator: 2
            })
        ));
    }

    #[test]
    fn specialized_terms_examples() {
        assert_eq!(pct_specialized_terms(36, 0, 36).unwrap(), 100.0);
        assert_eq!(pct_specialized_terms(0, 0, 10).unwrap(), 0.0);
        assert_eq!(pct_specialized_terms(3, 2, 10).unwrap(), 50.0);
        assert!(matches!(
            pct_specialized_terms(0, 0, 0),
            Err(Error::EmptyOntology)
        ));
        assert!(matches!(
            pct_specialized_terms(6, 6, 10),
            Err(Error::RatioContract { .. })
        ));
    }

    #[test]
    fn measure_spo() {
        let basis = MeasurementBasis {
            tt: 36,
            dt: 29,
            tp: 0,
            dp: 0,
            ta: 22,
            sa: 22,
            tntr: 27,
            dntr: 11,
            tr: 53,
            stdfo: 36,
            stifo: 0,
            sntrfo: 6,
            uisg: 5,
        };
        let m = measure(&basis).unwrap();
        let got: Vec<f64> = m.percentages().iter().map(|(_, v)| round2(*v)).collect();
        assert_eq!(got, vec![80.56, 0.0, 100.0, 40.74, 50.94, 100.0, 22.22]);
        assert_eq!(m.uisg, 5);
    }

    #[test]
    fn measure_processco() {
        let basis = MeasurementBasis {
            tt: 30,
            dt: 30,
            tp: 30,
            dp: 30,
            ta: 0,
            sa: 0,
            tntr: 18,
            dntr: 18,
            tr: 44,
            stdfo: 30,
            stifo: 0,
            sntrfo: 18,
            uisg: 3,
        };
        let m = measure(&basis).unwrap();
        let got: Vec<f64> = m.percentages().iter().map(|(_, v)| round2(*v)).collect();
        assert_eq!(got, vec![100.0, 100.0, 0.0, 100.0, 40.91, 100.0, 100.0]);
        assert_eq!(m.uisg, 3);
    }

    #[test]
    fn measure_saturation() {
        let basis = MeasurementBasis {
            tt: 8,
            dt: 8,
            tp: 4,
            dp: 4,
            ta: 3,
            sa: 3,
            tntr: 5,
            dntr: 5,
            tr: 10,
            stdfo: 6,
            stifo: 2,
            sntrfo: 5,
            uisg: 2,
        };
        let m = measure(&basis).unwrap();
        for (label, v) in m.percentages() {
            let want = if label == "%BNTR" { 50.0 } else { 100.0 };
            assert_eq!(v, want, "{label}");
        }
    }

    #[test]
    fn measure_rejects_empty_inputs() {
        let empty_terms = MeasurementBasis {
            tr: 1,
            ..Default::default()
        };
        assert!(matches!(measure(&empty_terms), Err(Error::EmptyOntology)));
        let no_rels = MeasurementBasis {
            tt: 1,
            ..Default::default()
        };
        assert!(matches!(measure(&no_rels), Err(Error::NoRelationships)));
    }

    #[test]
    fn zero_guard_is_exact() {
        let basis = MeasurementBasis {
            tt: 4,
            dt: 2,
            tr: 3,
            ..Default::default()
        };
        let m = measure(&basis).unwrap();
        for v in [m.pct_dp, m.pct_sa, m.pct_dntr, m.pct_sntrfo] {
            assert_eq!(v.to_bits(), 0.0f64.to_bits());
        }
    }

    proptest! {
        #[test]
        fn ratio_identity(den in 1u32..100_000, frac in 0.0f64..=1.0) {
            let num = (f64::from(den) * frac).floor() as u32;
            let pct = guarded_ratio(num, den).unwrap();
            let lhs = pct * f64::from(den);
            let rhs = 100.0 * f64::from(num);
            // two roundings (divide, multiply) plus the check multiply
            prop_assert!((lhs - rhs).abs() <= 4.0 * f64::EPSILON * rhs.max(1.0));
            prop_assert!((0.0..=100.0).contains(&pct));
        }

        #[test]
        fn ratio_scale_invariant(den in 1u32..10_000, frac in 0.0f64..=1.0, k in 1u32..1000) {
            let num = (f64::from(den) * frac).floor() as u32;
            prop_assert_eq!(guarded_ratio(num, den).unwrap(), guarded_ratio(num * k, den * k).unwrap());
        }
    }
}
