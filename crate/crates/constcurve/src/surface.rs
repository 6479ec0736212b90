//! The three unit model surfaces embedded in Euclidean 3-space.
//!
//! - plane:        `z = 1`
//! - sphere:       `x² + y² + z² = 1`
//! - hyperboloid:  `x² + y² − z² = −1`, `z > 0` (upper sheet)
//!
//! The common origin is `(0, 0, 1)` on every surface. Polar coordinates
//! `(r, θ)` map to `(gsin r · cos θ, gsin r · sin θ, gcos r)`, and the
//! one-parameter isometry family ("parallel translation" along the line
//! `ℓ = surface ∩ xz-plane`) is
//!
//! ```text
//! (x, y, z) ↦ (x·gcos d + z·gsin d,  y,  −K·x·gsin d + z·gcos d)
//! ```
//!
//! This module is the coordinate-geometry oracle: distances and
//! tangent-vector angles computed here never consult the trigonometric
//! laws they are later used to verify.

use crate::gtrig::{gcos, gsin, Curvature};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Exactly rounded product plus its rounding error, via FMA.
fn two_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Exactly rounded sum plus its rounding error (Knuth two-sum).
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Unevaluated head/tail pair, enough double-double arithmetic for the
/// oracle paths. Tangent projections and translated coordinates cancel
/// terms of size sinh²(r) down to O(1); carrying the tails keeps the
/// angle and distance oracles accurate to their own magnitude.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn renorm(hi: f64, lo: f64) -> Dd {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }

    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        Dd::renorm(s, e + self.lo + o.lo)
    }

    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_product(self.hi, x);
        Dd::renorm(p, e + self.lo * x)
    }
}

/// Head/tail product of two pairs (the lo·lo term is below roundoff).
fn dd_mul(a: Dd, b: Dd) -> Dd {
    let (p, e) = two_product(a.hi, b.hi);
    Dd::renorm(p, e + a.hi * b.lo + a.lo * b.hi)
}

/// Signed 3-term dot product of head/tail vectors.
fn dot3_dd(u: [Dd; 3], w: [Dd; 3], signs: [f64; 3]) -> f64 {
    let mut acc = Dd::from_f64(0.0);
    for i in 0..3 {
        acc = acc.add(dd_mul(u[i], w[i]).mul_f64(signs[i]));
    }
    acc.value()
}

/// Compensated 3-term dot product `s₀u₀w₀ + s₁u₁w₁ + s₂u₂w₂`.
///
/// Returns a head/tail pair whose sum carries the result to roughly
/// double-double accuracy. The hyperboloid oracle needs this: its
/// projections cancel terms of size `sinh²(r)` down to O(1), and a plain
/// dot product would leave the cancellation error in the tangent data.
fn dot3(u: [f64; 3], w: [f64; 3], signs: [f64; 3]) -> (f64, f64) {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for i in 0..3 {
        let (p, e) = two_product(signs[i] * u[i], w[i]);
        // Neumaier summation of the product heads
        let t = sum + p;
        comp += if sum.abs() >= p.abs() { (sum - t) + p } else { (p - t) + sum };
        sum = t;
        comp += e;
    }
    (sum, comp)
}

const EUCLID_SIGNS: [f64; 3] = [1.0, 1.0, 1.0];
const MINKOWSKI_SIGNS: [f64; 3] = [1.0, 1.0, -1.0];

/// Which of the three unit model surfaces a point lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Euclidean,
    Spherical,
    Hyperbolic,
}

impl Geometry {
    /// The curvature of the unit model: 0, +1, or −1.
    pub fn curvature(self) -> Curvature {
        match self {
            Geometry::Euclidean => Curvature::FLAT,
            Geometry::Spherical => Curvature::UNIT_SPHERE,
            Geometry::Hyperbolic => Curvature::UNIT_HYPERBOLIC,
        }
    }

    /// The unit geometry matching the sign of an arbitrary curvature.
    pub fn from_sign(k: Curvature) -> Geometry {
        use crate::gtrig::GeometryClass::*;
        match k.classify() {
            Flat => Geometry::Euclidean,
            Spherical => Geometry::Spherical,
            Hyperbolic => Geometry::Hyperbolic,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Geometry::Euclidean => "euclidean",
            Geometry::Spherical => "spherical",
            Geometry::Hyperbolic => "hyperbolic",
        }
    }
}

/// A point on one of the three embedded model surfaces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub geometry: Geometry,
}

/// Polar coordinates `(r, θ)` about the origin `(0, 0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarCoordinate {
    pub r: f64,
    pub theta: f64,
}

impl SurfacePoint {
    /// The common origin `(0, 0, 1)`.
    pub fn origin(geometry: Geometry) -> SurfacePoint {
        SurfacePoint { x: 0.0, y: 0.0, z: 1.0, geometry }
    }

    /// Signed residual of the defining surface equation.
    pub fn surface_residual(&self) -> f64 {
        match self.geometry {
            Geometry::Euclidean => self.z - 1.0,
            Geometry::Spherical => self.x * self.x + self.y * self.y + self.z * self.z - 1.0,
            Geometry::Hyperbolic => self.x * self.x + self.y * self.y - self.z * self.z + 1.0,
        }
    }

    pub fn is_on_surface(&self, tol: f64) -> bool {
        let sheet_ok = self.geometry != Geometry::Hyperbolic || self.z > 0.0;
        sheet_ok && self.surface_residual().abs() <= tol
    }
}

/// Embed polar coordinates as a Cartesian point on the model surface.
///
/// Rejects `r ≥ π` on the sphere (outside the injective chart).
pub fn polar_to_cartesian(geometry: Geometry, p: PolarCoordinate) -> Result<SurfacePoint> {
    if !(p.r >= 0.0 && p.r.is_finite()) {
        return Err(Error::OutsideChart(p.r));
    }
    if geometry == Geometry::Spherical && p.r >= PI {
        return Err(Error::OutsideChart(p.r));
    }
    let k = geometry.curvature();
    let sr = gsin(k, p.r);
    Ok(SurfacePoint {
        x: sr * p.theta.cos(),
        y: sr * p.theta.sin(),
        z: gcos(k, p.r),
        geometry,
    })
}

/// Geodesic distance between two points on the same surface.
///
/// Sphere: `arccos(p·q)`; hyperboloid: `arccosh(−⟨p, q⟩)` in the
/// Minkowski form; plane: Euclidean distance in `z = 1`. The curved
/// forms divide by `√(⟨p,p⟩⟨q,q⟩)`, which radially projects each point
/// onto the exact surface: coordinates rounded to f64 sit slightly off
/// it, and without the normalization that offset (up to `z²·ε`) leaks
/// into the measured side. Ratios are clamped into the domain of the
/// inverse function so roundoff never produces NaN.
pub fn distance(p: SurfacePoint, q: SurfacePoint) -> Result<f64> {
    if p.geometry != q.geometry {
        return Err(Error::GeometryMismatch(p.geometry, q.geometry));
    }
    Ok(match p.geometry {
        Geometry::Euclidean => {
            let dx = p.x - q.x;
            let dy = p.y - q.y;
            dx.hypot(dy)
        }
        Geometry::Spherical => {
            let m = compensated_inner(p, q, EUCLID_SIGNS);
            let norms = compensated_inner(p, p, EUCLID_SIGNS) * compensated_inner(q, q, EUCLID_SIGNS);
            (m / norms.sqrt()).clamp(-1.0, 1.0).acos()
        }
        Geometry::Hyperbolic => {
            let m = compensated_inner(p, q, MINKOWSKI_SIGNS);
            let norms = compensated_inner(p, p, MINKOWSKI_SIGNS) * compensated_inner(q, q, MINKOWSKI_SIGNS);
            (-m / norms.sqrt()).max(1.0).acosh()
        }
    })
}

/// Compensated bilinear form of two embedded points.
fn compensated_inner(p: SurfacePoint, q: SurfacePoint, signs: [f64; 3]) -> f64 {
    let (hi, lo) = dot3([p.x, p.y, p.z], [q.x, q.y, q.z], signs);
    hi + lo
}

/// Parallel translation along the line `ℓ` by signed distance `d`.
pub fn parallel_translate(p: SurfacePoint, d: f64) -> SurfacePoint {
    let k = p.geometry.curvature();
    let (c, s) = (gcos(k, d), gsin(k, d));
    SurfacePoint {
        x: p.x * c + p.z * s,
        y: p.y,
        z: -k.value() * p.x * s + p.z * c,
        geometry: p.geometry,
    }
}

/// Interior angle at `vertex` between the geodesics toward `q1` and `q2`.
///
/// Tangent vectors come from projecting the chords onto the tangent plane
/// at the vertex; the angle is the arccos of their normalized inner
/// product (the Minkowski form on the hyperboloid, where it is positive
/// definite on tangent planes). Result in `[0, π]`.
pub fn tangent_angle_at(vertex: SurfacePoint, q1: SurfacePoint, q2: SurfacePoint) -> Result<f64> {
    if vertex.geometry != q1.geometry {
        return Err(Error::GeometryMismatch(vertex.geometry, q1.geometry));
    }
    if vertex.geometry != q2.geometry {
        return Err(Error::GeometryMismatch(vertex.geometry, q2.geometry));
    }
    let t1 = tangent_toward(vertex, q1)?;
    let t2 = tangent_toward(vertex, q2)?;
    let signs = match vertex.geometry {
        Geometry::Hyperbolic => MINKOWSKI_SIGNS,
        _ => EUCLID_SIGNS,
    };
    let n1 = dot3_dd(t1, t1, signs).sqrt();
    let n2 = dot3_dd(t2, t2, signs).sqrt();
    // Half-angle chord formula on the unit tangent vectors: |û − ŵ| =
    // 2 sin(θ/2) and |û + ŵ| = 2 cos(θ/2). Unlike arccos of the inner
    // product, whose error blows up like ε/sin θ, this keeps the angle
    // accurate to ~ε absolutely at both θ → 0 and θ → π.
    let mut diff = [Dd::from_f64(0.0); 3];
    let mut sum = [Dd::from_f64(0.0); 3];
    for i in 0..3 {
        let u = t1[i].mul_f64(1.0 / n1);
        let w = t2[i].mul_f64(1.0 / n2);
        diff[i] = u.add(w.neg());
        sum[i] = u.add(w);
    }
    let half_sin = dot3_dd(diff, diff, signs).max(0.0).sqrt();
    let half_cos = dot3_dd(sum, sum, signs).max(0.0).sqrt();
    Ok(2.0 * half_sin.atan2(half_cos))
}

/// Tangent vector at `v` pointing toward `q`, not normalized.
///
/// The chord projection `q − (⟨v, q⟩/⟨v, v⟩)v` cancels terms of size
/// sinh²(r) down to O(sinh of the chord length), so components are kept
/// as head/tail pairs all the way into the inner products. Dividing by
/// `⟨v, v⟩` instead of assuming ±1 keeps the projection exact when the
/// rounded vertex sits slightly off the surface; the residual error it
/// leaves is along `v` and cancels from the angle to second order.
fn tangent_toward(v: SurfacePoint, q: SurfacePoint) -> Result<[Dd; 3]> {
    let va = [v.x, v.y, v.z];
    let qa = [q.x, q.y, q.z];
    let t = match v.geometry {
        Geometry::Euclidean => [
            Dd::renorm(q.x, -v.x),
            Dd::renorm(q.y, -v.y),
            Dd::from_f64(0.0),
        ],
        Geometry::Spherical => {
            let (hi, lo) = dot3(va, qa, EUCLID_SIGNS);
            let norm = compensated_inner(v, v, EUCLID_SIGNS);
            project(qa, va, Dd::renorm(-hi / norm, -lo / norm))
        }
        Geometry::Hyperbolic => {
            let (hi, lo) = dot3(va, qa, MINKOWSKI_SIGNS);
            let norm = -compensated_inner(v, v, MINKOWSKI_SIGNS);
            project(qa, va, Dd::renorm(hi / norm, lo / norm))
        }
    };
    let norm2 = t[0].hi * t[0].hi + t[1].hi * t[1].hi + t[2].hi * t[2].hi;
    if norm2 <= 1e-24 {
        return Err(Error::ZeroTangent);
    }
    Ok(t)
}

/// `q + m·v` componentwise, keeping the rounding tails.
fn project(q: [f64; 3], v: [f64; 3], m: Dd) -> [Dd; 3] {
    let mut t = [Dd::from_f64(0.0); 3];
    for i in 0..3 {
        t[i] = m.mul_f64(v[i]).add(Dd::from_f64(q[i]));
    }
    t
}

/// Parallel translation with head/tail coordinates, for the isometry oracle.
///
/// The independently rounded `gcos d`, `gsin d` violate the identity
/// `gcos² + K·gsin² = 1` by δ ~ ε·cosh²(d); left uncorrected the map
/// rescales the quadratic form, and points with large coordinates turn
/// that δ into a distance error far above ε. Dividing both by √(1 + δ)
/// restores the identity to O(δ²).
fn translate_dd(p: SurfacePoint, d: f64) -> [Dd; 3] {
    let k = p.geometry.curvature();
    let kv = k.value();
    let (c, s) = (gcos(k, d), gsin(k, d));
    let (c2, e2) = two_product(c, c);
    let (s2, f2) = two_product(s, s);
    let defect = Dd::renorm(c2, e2)
        .add(Dd::renorm(s2, f2).mul_f64(kv))
        .add(Dd::from_f64(-1.0))
        .value();
    let cc = Dd::renorm(c, c * (-0.5 * defect));
    let ss = Dd::renorm(s, s * (-0.5 * defect));
    let fold = |a: f64, fa: Dd, b: f64, fb: Dd| fa.mul_f64(a).add(fb.mul_f64(b));
    [
        fold(p.x, cc, p.z, ss),
        Dd::from_f64(p.y),
        fold(-kv * p.x, ss, p.z, cc),
    ]
}

/// Geodesic distance between head/tail coordinate triples.
fn distance_dd(geometry: Geometry, a: [Dd; 3], b: [Dd; 3]) -> f64 {
    match geometry {
        Geometry::Euclidean => {
            let dx = a[0].add(b[0].neg()).value();
            let dy = a[1].add(b[1].neg()).value();
            dx.hypot(dy)
        }
        Geometry::Spherical => {
            let norms = dot3_dd(a, a, EUCLID_SIGNS) * dot3_dd(b, b, EUCLID_SIGNS);
            (dot3_dd(a, b, EUCLID_SIGNS) / norms.sqrt())
                .clamp(-1.0, 1.0)
                .acos()
        }
        Geometry::Hyperbolic => {
            let norms = dot3_dd(a, a, MINKOWSKI_SIGNS) * dot3_dd(b, b, MINKOWSKI_SIGNS);
            (-dot3_dd(a, b, MINKOWSKI_SIGNS) / norms.sqrt())
                .max(1.0)
                .acosh()
        }
    }
}

/// Residual `|d(p, q) − d(T_d p, T_d q)|` of the translation isometry.
///
/// The translated pair is evaluated in head/tail arithmetic so the
/// residual measures the identity itself rather than the roundoff of
/// re-embedding coordinates that can reach sinh(8) ≈ 1.5·10³.
pub fn translation_distance_residual(p: SurfacePoint, q: SurfacePoint, d: f64) -> Result<f64> {
    let before = distance(p, q)?;
    let tp = translate_dd(p, d);
    let tq = translate_dd(q, d);
    Ok((before - distance_dd(p.geometry, tp, tq)).abs())
}
