use crate::error::{Error, Result};

/// Allowed deviation of a weight vector's sum from 1.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Exponents closer to zero than this use the weighted geometric mean.
pub const GEOMETRIC_THRESHOLD: f64 = 1e-6;

/// Below this input, negative exponents are evaluated in log space.
const LOG_SPACE_THRESHOLD: f64 = 1e-3;

/// Weighted power mean `(sum w_i * x_i^r)^(1/r)`.
///
/// `r = -inf` gives the minimum and `r = +inf` the maximum; `r` near zero
/// gives the weighted geometric mean. For `r < 0` any zero input makes the
/// result zero, matching the limit of the formula.
///
/// Inputs must be non-negative and finite, the weights positive and summing
/// to one within [`WEIGHT_SUM_TOLERANCE`].
pub fn weighted_power_mean(values: &[f64], weights: &[f64], r: f64) -> Result<f64> {
    if values.len() != weights.len() {
        return Err(Error::Aggregation(format!(
            "{} values but {} weights",
            values.len(),
            weights.len()
        )));
    }
    if values.len() < 2 {
        return Err(Error::Aggregation(format!(
            "need at least two inputs, got {}",
            values.len()
        )));
    }
    if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
        return Err(Error::Aggregation(format!("weight {w} is not positive")));
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        return Err(Error::Aggregation(format!("weights sum to {sum}, not 1")));
    }
    if let Some(x) = values.iter().find(|x| !(x.is_finite() && **x >= 0.0)) {
        return Err(Error::Aggregation(format!(
            "input {x} is not a non-negative number"
        )));
    }
    if r.is_nan() {
        return Err(Error::Aggregation("exponent is NaN".into()));
    }

    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let mean = if r == f64::INFINITY {
        max
    } else if r == f64::NEG_INFINITY {
        min
    } else if max == 0.0 || (r < 0.0 && min == 0.0) {
        0.0
    } else if r.abs() < GEOMETRIC_THRESHOLD {
        if min == 0.0 {
            0.0
        } else {
            values
                .iter()
                .zip(weights)
                .map(|(x, w)| w * x.ln())
                .sum::<f64>()
                .exp()
        }
    } else if r < 0.0 && min < LOG_SPACE_THRESHOLD {
        log_space_mean(values, weights, r)
    } else {
        let sum: f64 = values.iter().zip(weights).map(|(x, w)| w * x.powf(r)).sum();
        if sum.is_normal() {
            sum.powf(1.0 / r)
        } else {
            // x^r under- or overflowed for a large |r|
            log_space_mean(values, weights, r)
        }
    };

    // rounding can push the result a hair outside the inputs' hull
    Ok(mean.clamp(min, max))
}

/// `exp(ln(sum w x^r) / r)` with the inner sum taken via log-sum-exp.
/// Inputs must be strictly positive.
fn log_space_mean(values: &[f64], weights: &[f64], r: f64) -> f64 {
    let terms: Vec<f64> = values
        .iter()
        .zip(weights)
        .map(|(x, w)| w.ln() + r * x.ln())
        .collect();
    let peak = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let log_sum = peak + terms.iter().map(|t| (t - peak).exp()).sum::<f64>().ln();
    (log_sum / r).exp()
}
