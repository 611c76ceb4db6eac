//! Report rendering. Text tables show 2 decimals; CSV and JSON carry the
//! full-precision value next to the rounded one.

pub mod csv;
pub mod json;
pub mod text;

use ontoqual::indicators::Domain;
use ontoqual::Indicator;

/// Rounds to 2 decimals, half away from zero.
///
/// The value is treated as the decimal it was meant to be: `1.005` rounds up
/// even though its binary form sits slightly below the midpoint.
pub fn round2(x: f64) -> f64 {
    let scaled = x * 100.0;
    let nudge = scaled.signum() * scaled.abs().max(1.0) * 8.0 * f64::EPSILON;
    let r = (scaled + nudge).round() / 100.0;
    // never render -0.00
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn fmt2(x: f64) -> String {
    format!("{:.2}", round2(x))
}

/// Like [`fmt2`] but always signed: `+10.66`, `-3.00`, `+0.00`.
pub fn fmt_delta(x: f64) -> String {
    format!("{:+.2}", round2(x))
}

/// Metric values: counts as integers, percentages with 2 decimals.
pub fn fmt_input(indicator: Indicator, x: f64) -> String {
    match indicator.function().domain {
        Domain::Count => format!("{x}"),
        Domain::Percentage => fmt2(x),
    }
}
