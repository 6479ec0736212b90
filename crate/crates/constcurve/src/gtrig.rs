//! Generalized sine and cosine for arbitrary real sectional curvature.
//!
//! For curvature `K` the two kernels are defined by the series
//!
//! ```text
//! gsin(K, d) = Σ_{i≥0} (−K)^i d^(2i+1) / (2i+1)!
//! gcos(K, d) = Σ_{i≥0} (−K)^i d^(2i)   / (2i)!
//! ```
//!
//! which specialize to `(d, 1)` at `K = 0`, `(sin, cos)` of `d√K` at
//! `K > 0` (the sine rescaled by `1/√K`), and `(sinh, cosh)` of `d√−K`
//! at `K < 0`. Evaluation uses the truncated series when `|K|·d² < 0.5`
//! and the closed forms otherwise; the crossover avoids the cancellation
//! that plagues `sin(x)/x`-style expressions near `K = 0`.
//!
//! Both kernels reduce the argument to `|d|` first, so `gsin` is odd and
//! `gcos` is even bit-exactly. For `K < 0` the kernels grow like
//! `cosh`/`sinh` and overflow to infinity for huge `d`; that is plain
//! IEEE behavior, not an error.

use crate::{Error, Result};

/// Below this value of `|K|·d²` the truncated series is used directly.
const SERIES_CROSSOVER: f64 = 0.5;

/// Sign classification of a sectional curvature value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryClass {
    Flat,
    Spherical,
    Hyperbolic,
}

/// A finite real sectional curvature (units 1/length²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curvature(f64);

impl Curvature {
    /// Flat plane, `K = 0`.
    pub const FLAT: Curvature = Curvature(0.0);
    /// Unit sphere, `K = 1`.
    pub const UNIT_SPHERE: Curvature = Curvature(1.0);
    /// Unit hyperboloid, `K = −1`.
    pub const UNIT_HYPERBOLIC: Curvature = Curvature(-1.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Curvature(value))
        } else {
            Err(Error::NonFiniteCurvature(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn classify(self) -> GeometryClass {
        if self.0 == 0.0 {
            GeometryClass::Flat
        } else if self.0 > 0.0 {
            GeometryClass::Spherical
        } else {
            GeometryClass::Hyperbolic
        }
    }
}

/// Generalized sine of geodesic distance `d` at curvature `k`.
pub fn gsin(k: Curvature, d: f64) -> f64 {
    let kv = k.value();
    if kv == 0.0 {
        return d;
    }
    let u = d.abs();
    let m = if kv.abs() * u * u < SERIES_CROSSOVER {
        series_pair(kv, u).0
    } else if kv > 0.0 {
        let rk = kv.sqrt();
        (u * rk).sin() / rk
    } else {
        let rk = (-kv).sqrt();
        (u * rk).sinh() / rk
    };
    if d < 0.0 {
        -m
    } else {
        m
    }
}

/// Generalized cosine of geodesic distance `d` at curvature `k`.
pub fn gcos(k: Curvature, d: f64) -> f64 {
    let kv = k.value();
    if kv == 0.0 {
        return 1.0;
    }
    let u = d.abs();
    if kv.abs() * u * u < SERIES_CROSSOVER {
        series_pair(kv, u).1
    } else if kv > 0.0 {
        (u * kv.sqrt()).cos()
    } else {
        (u * (-kv).sqrt()).cosh()
    }
}

/// Both kernels via the series, summed until terms fall below roundoff.
///
/// Only called with `|k|·u² < 0.5`, where 16 terms put the remainder far
/// below 1e-16 relative.
fn series_pair(kv: f64, u: f64) -> (f64, f64) {
    let x = -kv * u * u;
    let mut sin_term = u;
    let mut cos_term = 1.0;
    let mut sin_sum = sin_term;
    let mut cos_sum = cos_term;
    for i in 1..=16u32 {
        let two_i = f64::from(2 * i);
        cos_term *= x / (two_i * (two_i - 1.0));
        sin_term *= x / (two_i * (two_i + 1.0));
        sin_sum += sin_term;
        cos_sum += cos_term;
        if sin_term.abs() <= 1e-20 * sin_sum.abs() && cos_term.abs() <= 1e-20 * cos_sum.abs() {
            break;
        }
    }
    (sin_sum, cos_sum)
}

/// Truncated partial sums of both series with exactly `terms` terms.
///
/// Serves as the independent reference for the closed-form fast path;
/// it never dispatches to `sin`/`sinh`.
pub fn gtrig_series(k: Curvature, d: f64, terms: usize) -> (f64, f64) {
    assert!(terms >= 1, "at least one series term required");
    let x = -k.value() * d * d;
    let mut sin_term = d;
    let mut cos_term = 1.0;
    let mut sin_sum = sin_term;
    let mut cos_sum = cos_term;
    for i in 1..terms as u32 {
        let two_i = f64::from(2 * i);
        cos_term *= x / (two_i * (two_i - 1.0));
        sin_term *= x / (two_i * (two_i + 1.0));
        sin_sum += sin_term;
        cos_sum += cos_term;
    }
    (sin_sum, cos_sum)
}
