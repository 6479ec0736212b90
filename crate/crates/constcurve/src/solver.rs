//! SAS and SSS triangle solvers with built-in verification.
//!
//! SAS solves through the classical per-geometry law of cosines and then
//! verifies the result against the unified laws; solving the unified law
//! directly would be implicit, since its coefficients depend on the
//! unknown side. Every solve reports the maximum absolute residual over
//! all implemented identities and fails if it exceeds the tolerance.

use crate::gtrig::Curvature;
use crate::laws::{
    angles_from_sides, classical_cos_side, first_law_residual, side_violation,
    unified_law_residuals, x_coordinate_identity_residuals, LabeledTriangle, SideViolation,
    TriangleSides,
};
use crate::{Error, Result};

/// Verification tolerance applied when none is specified: two orders of
/// magnitude above observed double-precision residuals (~1e-12).
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// What to solve: two sides and the included angle, or three sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolveRequest {
    /// Sides `b`, `c` and the included angle `A`.
    Sas { b: f64, c: f64, angle_a: f64 },
    /// Sides `a`, `b`, `c`.
    Sss { a: f64, b: f64, c: f64 },
}

/// A solved triangle together with its worst identity residual.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub triangle: LabeledTriangle,
    /// Max absolute residual across the unified laws, the first law,
    /// and both x-coordinate identities.
    pub residual_summary: f64,
}

/// Dispatch a [`SolveRequest`] at the default tolerance.
pub fn solve(k: Curvature, request: SolveRequest) -> Result<SolveResult> {
    match request {
        SolveRequest::Sas { b, c, angle_a } => solve_sas(k, b, c, angle_a),
        SolveRequest::Sss { a, b, c } => solve_sss(k, a, b, c),
    }
}

/// Solve from sides `b`, `c` and included angle `A`.
pub fn solve_sas(k: Curvature, b: f64, c: f64, angle_a: f64) -> Result<SolveResult> {
    solve_sas_with(k, b, c, angle_a, DEFAULT_TOLERANCE)
}

pub fn solve_sas_with(k: Curvature, b: f64, c: f64, angle_a: f64, tol: f64) -> Result<SolveResult> {
    let a = classical_cos_side(k, b, c, angle_a)?;
    let sides = TriangleSides::new(k, a, b, c)?;
    verified_result(k, sides, tol)
}

/// Solve from three sides.
pub fn solve_sss(k: Curvature, a: f64, b: f64, c: f64) -> Result<SolveResult> {
    solve_sss_with(k, a, b, c, DEFAULT_TOLERANCE)
}

pub fn solve_sss_with(k: Curvature, a: f64, b: f64, c: f64, tol: f64) -> Result<SolveResult> {
    let sides = TriangleSides::new(k, a, b, c)?;
    verified_result(k, sides, tol)
}

fn verified_result(k: Curvature, sides: TriangleSides, tol: f64) -> Result<SolveResult> {
    let angles = angles_from_sides(k, sides)?;
    let triangle = LabeledTriangle { curvature: k, sides, angles, vertices: None };
    let (r1, r2, r3) = unified_law_residuals(&triangle)?;
    let rf = first_law_residual(k, sides, angles)?;
    let (x1, x2) = x_coordinate_identity_residuals(k, sides, angles);
    let residual_summary = r1.max(r2).max(r3).max(rf).max(x1).max(x2);
    if residual_summary > tol {
        return Err(Error::InvalidTriangle(format!(
            "verification residual {residual_summary} exceeds tolerance {tol}"
        )));
    }
    Ok(SolveResult { triangle, residual_summary })
}

/// Check a side triple against the geometry's validity bounds.
///
/// Returns `None` when the sides describe a valid triangle, otherwise
/// the first violated invariant.
pub fn validate_sides(k: Curvature, a: f64, b: f64, c: f64) -> Option<SideViolation> {
    side_violation(k, a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    const K0: Curvature = Curvature::FLAT;
    const K1: Curvature = Curvature::UNIT_SPHERE;
    const KM1: Curvature = Curvature::UNIT_HYPERBOLIC;

    fn assert_close(x: f64, y: f64, tol: f64) {
        assert!((x - y).abs() <= tol, "{x} vs {y}");
    }

    #[test]
    fn sas_known_solutions() {
        let r = solve_sas(K0, 4.0, 3.0, FRAC_PI_2).unwrap();
        assert_close(r.triangle.sides.a, 5.0, 1e-12);
        assert_close(r.triangle.angles.b, 0.927_295_218_001_612_2, 1e-12);
        assert_close(r.triangle.angles.c, 0.643_501_108_793_284_4, 1e-12);

        let r = solve_sas(K1, FRAC_PI_4, FRAC_PI_4, FRAC_PI_2).unwrap();
        assert_close(r.triangle.sides.a, FRAC_PI_3, 1e-14);
        assert_close(r.triangle.angles.b, r.triangle.angles.c, 1e-12); // isosceles

        let r = solve_sas(KM1, 1.0, 1.0, FRAC_PI_2).unwrap();
        assert_close(r.triangle.sides.a, (1.0f64.cosh().powi(2)).acosh(), 1e-12);
    }

    #[test]
    fn sss_known_solutions() {
        let r = solve_sss(K0, 5.0, 4.0, 3.0).unwrap();
        assert_close(r.triangle.angles.a, FRAC_PI_2, 1e-12);

        let r = solve_sss(K1, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap();
        assert_close(r.triangle.angles.a, FRAC_PI_2, 1e-15);
        assert_close(r.triangle.angles.b, FRAC_PI_2, 1e-15);
        assert_close(r.triangle.angles.c, FRAC_PI_2, 1e-15);
    }

    #[test]
    fn sss_rejects_triangle_inequality_violation() {
        assert!(matches!(
            solve_sss(K0, 10.0, 1.0, 1.0),
            Err(Error::InvalidTriangle(_))
        ));
    }

    #[test]
    fn isosceles_symmetry() {
        for k in [K0, K1, KM1] {
            for angle_a in [0.3, FRAC_PI_2, 2.4] {
                let r = solve_sas(k, 0.8, 0.8, angle_a).unwrap();
                assert_close(r.triangle.angles.b, r.triangle.angles.c, 1e-12);
            }
        }
    }

    #[test]
    fn solved_side_increases_with_included_angle() {
        for k in [K0, K1, KM1] {
            let mut prev = 0.0;
            for i in 1..30 {
                let angle_a = 0.1 * i as f64;
                let a = solve_sas(k, 0.9, 0.6, angle_a).unwrap().triangle.sides.a;
                assert!(a > prev, "K={} A={angle_a}", k.value());
                prev = a;
            }
        }
    }

    #[test]
    fn validate_sides_verdicts() {
        use SideViolation::*;
        assert_eq!(validate_sides(KM1, 1.0, 1.0, 1.0), None);
        assert!(matches!(
            validate_sides(K1, 2.2, 2.2, 2.2),
            Some(SphericalPerimeterBound { .. })
        ));
        // thin but valid: perimeter 6.04 stays below 2π
        assert_eq!(validate_sides(K1, FRAC_PI_2, FRAC_PI_2, 2.9), None);
        assert!(matches!(
            validate_sides(K1, 3.2, 0.1, 0.1),
            Some(SphericalSideBound { .. })
        ));
        assert!(matches!(validate_sides(K0, 10.0, 1.0, 1.0), Some(TriangleInequality)));
        assert!(matches!(validate_sides(K0, 0.0, 1.0, 1.0), Some(NonPositive { .. })));
    }

    #[test]
    fn sas_sss_round_trip() {
        for k in [K0, K1, KM1] {
            for (b, c, angle_a) in [(0.9, 0.5, 1.1), (1.3, 1.2, 0.4), (0.3, 0.25, 2.7)] {
                let sas = solve_sas(k, b, c, angle_a).unwrap();
                let s = sas.triangle.sides;
                let sss = solve_sss(k, s.a, s.b, s.c).unwrap();
                assert_close(sss.triangle.angles.a, angle_a, 1e-9);
            }
        }
    }
}
