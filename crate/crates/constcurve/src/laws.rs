//! The unified trigonometric laws at arbitrary constant curvature.
//!
//! Writing `s(x) = gsin(K, x)` and `C{p,q}_r = (gcos p + gcos q)/(1 + gcos r)`,
//! the three cyclic laws of cosines read
//!
//! ```text
//! C{b,c}_a s(a)² = C{c,a}_b s(b)² + C{a,b}_c s(c)² − 2 s(b) s(c) cos A
//! ```
//!
//! (and rotations), which at `K = 0` collapse to the classical Euclidean
//! law since every coefficient is identically 1. Dropping the cosine term
//! gives the three-squares Pythagorean identity for a right angle at A.
//! The module also carries the first law of cosines, the two x-coordinate
//! identities the laws are derived from, the classical (per-geometry)
//! law used for SAS solving, and the closed-form 3×3 solve recovering
//! angle cosines from sides.
//!
//! All residuals are absolute `|LHS − RHS|`: every identity term is O(1)
//! on the validity domains, which keeps thresholds interpretable.

use crate::gtrig::{gcos, gsin, Curvature, GeometryClass};
use crate::surface::SurfacePoint;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Denominators `1 + gcos(r)` smaller than this are degenerate.
const DENOM_TOL: f64 = 1e-14;
/// Allowance for roundoff when a solved cosine strays past ±1.
const COSINE_CLAMP_TOL: f64 = 1e-9;

/// Side lengths `(a, b, c)`, each opposite the same-named vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleSides {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TriangleSides {
    /// Validate sides for geometry `k`: positivity, the strict triangle
    /// inequality, and on the sphere the scaled bounds `side < π/√K`,
    /// `perimeter < 2π/√K`.
    pub fn new(k: Curvature, a: f64, b: f64, c: f64) -> Result<Self> {
        if let Some(violation) = side_violation(k, a, b, c) {
            return Err(Error::InvalidTriangle(violation.to_string()));
        }
        Ok(TriangleSides { a, b, c })
    }

    /// Cyclic relabeling `(a, b, c) → (b, c, a)`.
    pub fn rotated(self) -> Self {
        TriangleSides { a: self.b, b: self.c, c: self.a }
    }
}

/// Why a side triple fails validation for a given geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SideViolation {
    /// A side is non-positive or non-finite.
    NonPositive { side: &'static str, value: f64 },
    /// A side is not strictly less than the sum of the other two.
    TriangleInequality,
    /// A spherical side reaches the bound `π/√K`.
    SphericalSideBound { bound: f64 },
    /// The spherical perimeter reaches `2π/√K`.
    SphericalPerimeterBound { bound: f64 },
}

impl std::fmt::Display for SideViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SideViolation::NonPositive { side, value } => {
                write!(f, "side {side} = {value} must be finite and > 0")
            }
            SideViolation::TriangleInequality => {
                write!(f, "each side must be strictly less than the sum of the other two")
            }
            SideViolation::SphericalSideBound { bound } => {
                write!(f, "spherical side bound: each side must be < {bound}")
            }
            SideViolation::SphericalPerimeterBound { bound } => {
                write!(f, "spherical perimeter bound: a+b+c must be < {bound}")
            }
        }
    }
}

/// Reason the side triple fails validation, if any.
pub fn side_violation(k: Curvature, a: f64, b: f64, c: f64) -> Option<SideViolation> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        if !(v.is_finite() && v > 0.0) {
            return Some(SideViolation::NonPositive { side: name, value: v });
        }
    }
    if k.classify() == GeometryClass::Spherical {
        let bound = PI / k.value().sqrt();
        if a >= bound || b >= bound || c >= bound {
            return Some(SideViolation::SphericalSideBound { bound });
        }
        if a + b + c >= 2.0 * bound {
            return Some(SideViolation::SphericalPerimeterBound { bound: 2.0 * bound });
        }
    }
    if a >= b + c || b >= c + a || c >= a + b {
        return Some(SideViolation::TriangleInequality);
    }
    None
}

/// Interior angles `(A, B, C)` in radians, each in `(0, π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleAngles {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TriangleAngles {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        for (name, v) in [("A", a), ("B", b), ("C", c)] {
            if !(v.is_finite() && v > 0.0 && v < PI) {
                return Err(Error::InvalidTriangle(format!(
                    "angle {name} = {v} must lie in (0, π)"
                )));
            }
        }
        Ok(TriangleAngles { a, b, c })
    }

    /// Cyclic relabeling `(A, B, C) → (B, C, A)`.
    pub fn rotated(self) -> Self {
        TriangleAngles { a: self.b, b: self.c, c: self.a }
    }
}

/// A fully labeled triangle: curvature, sides, angles, and (when it came
/// from a coordinate construction) the embedded vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledTriangle {
    pub curvature: Curvature,
    pub sides: TriangleSides,
    pub angles: TriangleAngles,
    pub vertices: Option<[SurfacePoint; 3]>,
}

/// The unified coefficient `(gcos p + gcos q) / (1 + gcos r)`.
///
/// `coefficient(K, b, c, a)` is the factor multiplying `gsin(a)²`.
/// Identically 1 at `K = 0`.
pub fn coefficient(k: Curvature, p: f64, q: f64, r: f64) -> Result<f64> {
    let denom = 1.0 + gcos(k, r);
    if denom.abs() <= DENOM_TOL {
        return Err(Error::DegenerateDenominator(r));
    }
    Ok((gcos(k, p) + gcos(k, q)) / denom)
}

/// One cyclic law-of-cosines residual, with `cos_a` the cosine of the
/// angle opposite side `a`. The other two residuals are this function
/// applied to rotated arguments, which makes cyclic symmetry exact.
fn cyclic_law_residual(k: Curvature, a: f64, b: f64, c: f64, cos_a: f64) -> Result<f64> {
    let (sa, sb, sc) = (gsin(k, a), gsin(k, b), gsin(k, c));
    let lhs = coefficient(k, b, c, a)? * sa * sa;
    let rhs = coefficient(k, c, a, b)? * sb * sb + coefficient(k, a, b, c)? * sc * sc
        - 2.0 * sb * sc * cos_a;
    Ok((lhs - rhs).abs())
}

/// Absolute residuals of the three cyclic unified laws of cosines.
pub fn unified_law_residuals(t: &LabeledTriangle) -> Result<(f64, f64, f64)> {
    let (k, s, ang) = (t.curvature, t.sides, t.angles);
    let (s2, a2) = (s.rotated(), ang.rotated());
    let (s3, a3) = (s2.rotated(), a2.rotated());
    Ok((
        cyclic_law_residual(k, s.a, s.b, s.c, ang.a.cos())?,
        cyclic_law_residual(k, s2.a, s2.b, s2.c, a2.a.cos())?,
        cyclic_law_residual(k, s3.a, s3.b, s3.c, a3.a.cos())?,
    ))
}

/// Residual of the three-squares Pythagorean identity; assumes the side
/// triple came from a construction with the right angle at A.
pub fn unified_pythagoras_residual(k: Curvature, s: TriangleSides) -> Result<f64> {
    let (sa, sb, sc) = (gsin(k, s.a), gsin(k, s.b), gsin(k, s.c));
    let lhs = coefficient(k, s.b, s.c, s.a)? * sa * sa;
    let rhs = coefficient(k, s.c, s.a, s.b)? * sb * sb + coefficient(k, s.a, s.b, s.c)? * sc * sc;
    Ok((lhs - rhs).abs())
}

/// Residual of the first law of cosines
/// `C{b,c}_a gsin(a) = gsin(c) cos B + gsin(b) cos C`.
pub fn first_law_residual(k: Curvature, s: TriangleSides, ang: TriangleAngles) -> Result<f64> {
    let lhs = coefficient(k, s.b, s.c, s.a)? * gsin(k, s.a);
    let rhs = gsin(k, s.c) * ang.b.cos() + gsin(k, s.b) * ang.c.cos();
    Ok((lhs - rhs).abs())
}

/// Residuals of the two x-coordinate identities the laws derive from:
/// the translated-vertex equation and its inverse-translation companion.
pub fn x_coordinate_identity_residuals(
    k: Curvature,
    s: TriangleSides,
    ang: TriangleAngles,
) -> (f64, f64) {
    let (sa, sb, sc) = (gsin(k, s.a), gsin(k, s.b), gsin(k, s.c));
    let (ca, cb, cc) = (gcos(k, s.a), gcos(k, s.b), gcos(k, s.c));
    let forward = cb * sa - sb * ca * ang.c.cos() - sc * ang.b.cos();
    let inverse = -cc * sa + sc * ca * ang.b.cos() + sb * ang.c.cos();
    (forward.abs(), inverse.abs())
}

/// Side `a` from adjacent sides `b`, `c` and the included angle `A`,
/// via the classical per-geometry law of cosines.
pub fn classical_cos_side(k: Curvature, b: f64, c: f64, angle_a: f64) -> Result<f64> {
    if !(b > 0.0 && c > 0.0 && b.is_finite() && c.is_finite()) {
        return Err(Error::InvalidTriangle(format!("sides b = {b}, c = {c} must be > 0")));
    }
    if !(angle_a > 0.0 && angle_a < PI) {
        return Err(Error::InvalidTriangle(format!("angle A = {angle_a} must lie in (0, π)")));
    }
    let kv = k.value();
    match k.classify() {
        GeometryClass::Flat => Ok((b * b + c * c - 2.0 * b * c * angle_a.cos()).sqrt()),
        GeometryClass::Spherical => {
            let bound = PI / kv.sqrt();
            if b >= bound || c >= bound {
                return Err(Error::SphericalDomain(b.max(c)));
            }
            let g = gcos(k, b) * gcos(k, c) + kv * gsin(k, b) * gsin(k, c) * angle_a.cos();
            if g.abs() > 1.0 + COSINE_CLAMP_TOL {
                return Err(Error::SphericalDomain(g));
            }
            Ok(g.clamp(-1.0, 1.0).acos() / kv.sqrt())
        }
        GeometryClass::Hyperbolic => {
            let g = gcos(k, b) * gcos(k, c) + kv * gsin(k, b) * gsin(k, c) * angle_a.cos();
            // cosh of the side; roundoff may dip just below 1
            Ok(g.max(1.0).acosh() / (-kv).sqrt())
        }
    }
}

/// Determinant of the angle-recovery system, `2·gsin a·gsin b·gsin c`.
pub fn angle_system_determinant(k: Curvature, s: TriangleSides) -> f64 {
    2.0 * gsin(k, s.a) * gsin(k, s.b) * gsin(k, s.c)
}

/// Recover all three angles from the sides by solving the 3×3 system
///
/// ```text
/// ⎛ s(b)  s(a)   0  ⎞ ⎛cos A⎞   ⎛ C{a,b}_c s(c) ⎞
/// ⎜  0    s(c)  s(b)⎟ ⎜cos B⎟ = ⎜ C{b,c}_a s(a) ⎟
/// ⎝ s(c)   0    s(a)⎠ ⎝cos C⎠   ⎝ C{c,a}_b s(b) ⎠
/// ```
///
/// in closed form (Cramer elimination; the determinant factors as
/// `2 s(a) s(b) s(c)`, so singularity means a side with vanishing gsin).
pub fn angles_from_sides(k: Curvature, s: TriangleSides) -> Result<TriangleAngles> {
    let det = angle_system_determinant(k, s);
    if det.abs() <= DENOM_TOL {
        return Err(Error::SingularSystem(det.abs()));
    }
    let (sa, sb, sc) = (gsin(k, s.a), gsin(k, s.b), gsin(k, s.c));
    let kbca = coefficient(k, s.b, s.c, s.a)?;
    let kcab = coefficient(k, s.c, s.a, s.b)?;
    let kabc = coefficient(k, s.a, s.b, s.c)?;
    let cos_a = (kcab * sb * sb + kabc * sc * sc - kbca * sa * sa) / (2.0 * sb * sc);
    let cos_b = (kabc * sc * sc + kbca * sa * sa - kcab * sb * sb) / (2.0 * sc * sa);
    let cos_c = (kbca * sa * sa + kcab * sb * sb - kabc * sc * sc) / (2.0 * sa * sb);
    let mut angles = [0.0f64; 3];
    for (slot, cos) in angles.iter_mut().zip([cos_a, cos_b, cos_c]) {
        if cos.abs() > 1.0 + COSINE_CLAMP_TOL {
            return Err(Error::InvalidTriangle(format!(
                "solved cosine {cos} outside [-1, 1]"
            )));
        }
        *slot = cos.clamp(-1.0, 1.0).acos();
    }
    TriangleAngles::new(angles[0], angles[1], angles[2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

    const K0: Curvature = Curvature::FLAT;
    const K1: Curvature = Curvature::UNIT_SPHERE;
    const KM1: Curvature = Curvature::UNIT_HYPERBOLIC;

    /// Independent Euclidean oracle: arccos((b² + c² − a²) / 2bc).
    fn euclid_angle(a: f64, b: f64, c: f64) -> f64 {
        ((b * b + c * c - a * a) / (2.0 * b * c)).acos()
    }

    /// Hypotenuse of the hyperbolic right triangle with legs 1, 1.
    fn hyp_hypotenuse() -> f64 {
        (1.0f64.cosh().powi(2)).acosh()
    }

    fn assert_close(x: f64, y: f64, tol: f64) {
        assert!((x - y).abs() <= tol, "{x} vs {y}");
    }

    #[test]
    fn coefficient_known_values() {
        assert_eq!(coefficient(K0, 0.3, 1.8, 2.9).unwrap(), 1.0);
        assert_close(
            coefficient(K1, FRAC_PI_4, FRAC_PI_4, FRAC_PI_3).unwrap(),
            0.942_809_041_582_063_4, // 2√2/3
            1e-15,
        );
        assert!(matches!(
            coefficient(K1, FRAC_PI_2, FRAC_PI_2, PI),
            Err(Error::DegenerateDenominator(_))
        ));
    }

    #[test]
    fn side_validation() {
        assert!(TriangleSides::new(K0, 5.0, 4.0, 3.0).is_ok());
        assert!(TriangleSides::new(K0, 10.0, 1.0, 1.0).is_err());
        assert!(TriangleSides::new(K0, -1.0, 1.0, 1.0).is_err());
        assert!(TriangleSides::new(K1, 3.2, 0.1, 0.1).is_err()); // side ≥ π
        assert!(TriangleSides::new(K1, 2.2, 2.2, 2.2).is_err()); // perimeter ≥ 2π
        assert!(TriangleSides::new(K1, FRAC_PI_2, FRAC_PI_2, 2.9).is_ok()); // perimeter 6.04 < 2π
        assert!(TriangleSides::new(KM1, 1.0, 1.0, 1.0).is_ok());
    }

    #[test]
    fn unified_law_euclidean_345() {
        let sides = TriangleSides::new(K0, 5.0, 4.0, 3.0).unwrap();
        let angles = TriangleAngles::new(
            euclid_angle(5.0, 4.0, 3.0),
            euclid_angle(4.0, 3.0, 5.0),
            euclid_angle(3.0, 5.0, 4.0),
        )
        .unwrap();
        let t = LabeledTriangle { curvature: K0, sides, angles, vertices: None };
        let (r1, r2, r3) = unified_law_residuals(&t).unwrap();
        assert!(r1 <= 1e-12 && r2 <= 1e-12 && r3 <= 1e-12);
    }

    #[test]
    fn unified_law_spherical_octant() {
        let sides = TriangleSides::new(K1, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap();
        let angles = TriangleAngles::new(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap();
        let t = LabeledTriangle { curvature: K1, sides, angles, vertices: None };
        let (r1, r2, r3) = unified_law_residuals(&t).unwrap();
        assert!(r1 <= 1e-15 && r2 <= 1e-15 && r3 <= 1e-15);
    }

    #[test]
    fn unified_law_hyperbolic_right_isosceles() {
        let a = hyp_hypotenuse();
        let sides = TriangleSides::new(KM1, a, 1.0, 1.0).unwrap();
        let angles = angles_from_sides(KM1, sides).unwrap();
        assert_close(angles.a, FRAC_PI_2, 1e-10);
        let t = LabeledTriangle { curvature: KM1, sides, angles, vertices: None };
        let (r1, r2, r3) = unified_law_residuals(&t).unwrap();
        assert!(r1 <= 1e-11 && r2 <= 1e-11 && r3 <= 1e-11);
    }

    #[test]
    fn pythagoras_known_cases() {
        let s = TriangleSides::new(K0, 5.0, 4.0, 3.0).unwrap();
        assert!(unified_pythagoras_residual(K0, s).unwrap() <= 1e-12);

        // spherical witness: cos a = cos b · cos c with b = c = π/4 gives a = π/3,
        // and both sides of the identity equal √2/2
        let s = TriangleSides::new(K1, FRAC_PI_3, FRAC_PI_4, FRAC_PI_4).unwrap();
        assert!(unified_pythagoras_residual(K1, s).unwrap() <= 1e-15);
        let lhs = coefficient(K1, s.b, s.c, s.a).unwrap() * gsin(K1, s.a).powi(2);
        assert_close(lhs, 0.707_106_781_186_547_5, 1e-15);
        let term = coefficient(K1, s.c, s.a, s.b).unwrap() * gsin(K1, s.b).powi(2);
        assert_close(term, 0.353_553_390_593_273_8, 1e-15);

        let s = TriangleSides::new(KM1, hyp_hypotenuse(), 1.0, 1.0).unwrap();
        assert!(unified_pythagoras_residual(KM1, s).unwrap() <= 1e-12);
    }

    #[test]
    fn first_law_and_x_identities_euclidean_345() {
        let s = TriangleSides::new(K0, 5.0, 4.0, 3.0).unwrap();
        // cos B = 0.6, cos C = 0.8 from the (a² + c² − b²)/2ac oracle
        let ang = TriangleAngles::new(FRAC_PI_2, 0.6f64.acos(), 0.8f64.acos()).unwrap();
        assert!(first_law_residual(K0, s, ang).unwrap() <= 1e-12);
        let (x1, x2) = x_coordinate_identity_residuals(K0, s, ang);
        assert!(x1 <= 1e-12 && x2 <= 1e-12);
    }

    #[test]
    fn first_law_and_x_identities_octant() {
        let s = TriangleSides::new(K1, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap();
        let ang = TriangleAngles::new(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap();
        assert!(first_law_residual(K1, s, ang).unwrap() <= 1e-15);
        let (x1, x2) = x_coordinate_identity_residuals(K1, s, ang);
        assert!(x1 <= 1e-15 && x2 <= 1e-15);
    }

    #[test]
    fn classical_cos_side_known_values() {
        assert_close(classical_cos_side(K0, 4.0, 3.0, FRAC_PI_2).unwrap(), 5.0, 1e-12);
        assert_close(
            classical_cos_side(K1, FRAC_PI_4, FRAC_PI_4, FRAC_PI_2).unwrap(),
            FRAC_PI_3,
            1e-15,
        );
        assert_close(
            classical_cos_side(KM1, 1.0, 1.0, FRAC_PI_2).unwrap(),
            hyp_hypotenuse(),
            1e-14,
        );
    }

    #[test]
    fn classical_cos_side_rejects_bad_sphere_inputs() {
        assert!(matches!(
            classical_cos_side(K1, 3.5, 0.5, 1.0),
            Err(Error::SphericalDomain(_))
        ));
    }

    #[test]
    fn angles_from_sides_known_values() {
        let ang = angles_from_sides(K0, TriangleSides::new(K0, 5.0, 4.0, 3.0).unwrap()).unwrap();
        assert_close(ang.a, FRAC_PI_2, 1e-12);
        assert_close(ang.b, 0.927_295_218_001_612_2, 1e-12);
        assert_close(ang.c, 0.643_501_108_793_284_4, 1e-12);

        let ang = angles_from_sides(
            K1,
            TriangleSides::new(K1, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap(),
        )
        .unwrap();
        assert_close(ang.a, FRAC_PI_2, 1e-15);
        assert_close(ang.b, FRAC_PI_2, 1e-15);
        assert_close(ang.c, FRAC_PI_2, 1e-15);

        let ang = angles_from_sides(
            KM1,
            TriangleSides::new(KM1, hyp_hypotenuse(), 1.0, 1.0).unwrap(),
        )
        .unwrap();
        assert_close(ang.a, FRAC_PI_2, 1e-10);
    }

    #[test]
    fn determinant_matches_brute_force() {
        // brute-force 3×3 determinant of the actual system matrix
        fn brute(k: Curvature, s: TriangleSides) -> f64 {
            let (sa, sb, sc) = (gsin(k, s.a), gsin(k, s.b), gsin(k, s.c));
            let m = [[sb, sa, 0.0], [0.0, sc, sb], [sc, 0.0, sa]];
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        for (kv, a, b, c) in [
            (0.0, 5.0, 4.0, 3.0),
            (1.0, 1.2, 0.9, 0.7),
            (-1.0, 2.0, 1.5, 1.0),
            (0.25, 1.0, 1.0, 1.0),
        ] {
            let k = Curvature::new(kv).unwrap();
            let s = TriangleSides { a, b, c };
            assert_close(angle_system_determinant(k, s), brute(k, s), 1e-13);
        }
    }

    #[test]
    fn cyclic_symmetry_is_bit_exact() {
        let k = KM1;
        let sides = TriangleSides::new(k, 1.1, 0.9, 0.7).unwrap();
        let angles = angles_from_sides(k, sides).unwrap();
        let t = LabeledTriangle { curvature: k, sides, angles, vertices: None };
        let rot = LabeledTriangle {
            curvature: k,
            sides: sides.rotated(),
            angles: angles.rotated(),
            vertices: None,
        };
        let (r1, r2, r3) = unified_law_residuals(&t).unwrap();
        let (p1, p2, p3) = unified_law_residuals(&rot).unwrap();
        assert_eq!((r2.to_bits(), r3.to_bits(), r1.to_bits()), (p1.to_bits(), p2.to_bits(), p3.to_bits()));
    }

    #[test]
    fn euclidean_reduction_is_classical() {
        // at K = 0 the residual is literally |a² − (b² + c² − 2bc cos A)|
        let sides = TriangleSides::new(K0, 2.0, 1.5, 1.2).unwrap();
        let angles = angles_from_sides(K0, sides).unwrap();
        let t = LabeledTriangle { curvature: K0, sides, angles, vertices: None };
        let (r1, _, _) = unified_law_residuals(&t).unwrap();
        let classical = (sides.a * sides.a
            - (sides.b * sides.b + sides.c * sides.c
                - 2.0 * sides.b * sides.c * angles.a.cos()))
        .abs();
        assert_eq!(r1.to_bits(), classical.to_bits());
    }

    proptest! {
        #[test]
        fn round_trip_sides_to_angle_to_side(
            kv in prop::sample::select(vec![-1.0f64, 0.0, 1.0]),
            b in 0.1f64..1.4,
            c in 0.1f64..1.4,
            angle_a in 0.2f64..3.0,
        ) {
            let k = Curvature::new(kv).unwrap();
            let a = match classical_cos_side(k, b, c, angle_a) {
                Ok(a) => a,
                Err(_) => return Ok(()),
            };
            let s = match TriangleSides::new(k, a, b, c) {
                Ok(s) => s,
                Err(_) => return Ok(()),
            };
            let ang = match angles_from_sides(k, s) {
                Ok(a) => a,
                Err(_) => return Ok(()),
            };
            let back = classical_cos_side(k, b, c, ang.a).unwrap();
            prop_assert!((back - a).abs() <= 1e-10);
        }

        #[test]
        fn largest_side_faces_largest_angle(
            kv in prop::sample::select(vec![-1.0f64, 0.0, 1.0]),
            a in 0.1f64..1.4,
            b in 0.1f64..1.4,
            c in 0.1f64..1.4,
        ) {
            let k = Curvature::new(kv).unwrap();
            let s = match TriangleSides::new(k, a, b, c) {
                Ok(s) => s,
                Err(_) => return Ok(()),
            };
            let ang = match angles_from_sides(k, s) {
                Ok(a) => a,
                Err(_) => return Ok(()),
            };
            let sides = [s.a, s.b, s.c];
            let angles = [ang.a, ang.b, ang.c];
            let imax_side = (0..3).max_by(|&i, &j| sides[i].total_cmp(&sides[j])).unwrap();
            let imax_ang = (0..3).max_by(|&i, &j| angles[i].total_cmp(&angles[j])).unwrap();
            // ties in near-isosceles draws can flip the argmax; compare values
            prop_assert!(angles[imax_side] >= angles[imax_ang] - 1e-9);
        }
    }
}
