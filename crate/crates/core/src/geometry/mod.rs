//! Planar constructions: angles from point triples, congruence, arcs,
//! chords, and the chord integral `F(x) = ∫₀ˣ dt/√(1−t²)`.

mod quadrature;

use std::cmp::Ordering;

use thiserror::Error;

use crate::angle::{AngleError, AngleValue, Magnitude, Measure};
use crate::exact::ExactScalar;
use crate::trig;

pub use quadrature::{integrate, Integral};

/// Relative threshold below which a ray is considered to have no length, or
/// two rays to have the same direction.
pub const DEGENERACY_THRESHOLD: f64 = 1e-12;

/// Absolute error target for the chord integral.
pub const CHORD_INTEGRAL_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("point coordinates must be finite")]
    NonFinite,
    #[error("a side point coincides with the vertex; the ray is undefined")]
    DegenerateVertex,
    #[error("the rays coincide; there is no zero angle")]
    ZeroAngle,
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Angle(#[from] AngleError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub fn new(x: f64, y: f64) -> Result<Self, GeometryError> {
        if !x.is_finite() || !y.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        Ok(PlanarPoint { x, y })
    }
}

/// A circular arc of a given radius subtending a given measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcSpec {
    radius: f64,
    measure: Measure,
}

impl ArcSpec {
    pub fn new(radius: f64, measure: Measure) -> Result<Self, GeometryError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(GeometryError::Domain(format!(
                "radius must be positive, got {radius}"
            )));
        }
        // same interval as a magnitude
        Magnitude::new(measure)?;
        Ok(ArcSpec { radius, measure })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn measure(&self) -> Measure {
        self.measure
    }
}

/// The unsigned convex magnitude of `∠POQ`, with `φ ∈ (0, π]`.
///
/// Computed as `atan2(|u×v|, u·v)`. Exactly perpendicular rays give the
/// exact measure `π/2`, exactly opposite rays the exact straight angle.
pub fn angle_from_points(
    p: PlanarPoint,
    o: PlanarPoint,
    q: PlanarPoint,
) -> Result<Magnitude, GeometryError> {
    for pt in [p, o, q] {
        PlanarPoint::new(pt.x, pt.y)?;
    }
    let (ux, uy) = (p.x - o.x, p.y - o.y);
    let (vx, vy) = (q.x - o.x, q.y - o.y);
    let lu = ux.hypot(uy);
    let lv = vx.hypot(vy);
    let scale = lu.max(lv);
    if scale == 0.0 || lu <= DEGENERACY_THRESHOLD * scale || lv <= DEGENERACY_THRESHOLD * scale {
        return Err(GeometryError::DegenerateVertex);
    }
    let cross = (ux * vy - uy * vx).abs();
    let dot = ux * vx + uy * vy;
    if cross <= DEGENERACY_THRESHOLD * lu * lv && dot > 0.0 {
        return Err(GeometryError::ZeroAngle);
    }
    let phi = if cross == 0.0 {
        ExactScalar::PI
    } else if dot == 0.0 {
        ExactScalar::pi_multiple(1, 2).expect("constant")
    } else {
        ExactScalar::inexact(cross.atan2(dot))
    };
    Ok(Magnitude::new(Measure::new(phi))?)
}

/// Whether two magnitudes differ by at most `tol` in measure. With `tol = 0`
/// and exact measures this is exact equality. Negative tolerances act as 0.
pub fn congruent(a: &Magnitude, b: &Magnitude, tol: f64) -> bool {
    let tol = tol.max(0.0);
    let (x, y) = (a.phi(), b.phi());
    if x.is_exact() && y.is_exact() && tol == 0.0 {
        return x == y;
    }
    match x.checked_sub(&y) {
        Ok(d) if d.is_exact() => d.to_f64().abs() <= tol,
        _ => (x.to_f64() - y.to_f64()).abs() <= tol,
    }
}

/// `s = φ·r`.
pub fn arc_length(arc: &ArcSpec) -> f64 {
    arc.measure.to_f64() * arc.radius
}

/// `F(x) = ∫₀ˣ dt/√(1−t²)` on `[0, 1]`, by quadrature.
///
/// The substitution `t = 1 − w²` turns the integrand into the smooth
/// `2/√(2 − w²)` on `w ∈ [√(1−x), 1]`, which removes the endpoint
/// singularity at `t = 1`. No inverse sine is evaluated.
pub fn chord_integral(x: f64) -> Result<f64, GeometryError> {
    if !(0.0..=1.0).contains(&x) {
        return Err(GeometryError::Domain(format!(
            "the chord integral is defined on [0, 1], got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let lower = (1.0 - x).sqrt();
    let r = integrate(
        |w| 2.0 / (2.0 - w * w).sqrt(),
        lower,
        1.0,
        CHORD_INTEGRAL_TOLERANCE,
    );
    Ok(r.value)
}

/// `S`, the inverse of [`chord_integral`] on `[0, π/2]`; a restriction of
/// the sine.
pub fn inverse_chord_integral(y: f64) -> Result<f64, GeometryError> {
    if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&y) {
        return Err(GeometryError::Domain(format!(
            "the inverse chord integral is defined on [0, π/2], got {y}"
        )));
    }
    Ok(y.sin())
}

/// Chord subtending the arc of `value` on a circle of radius `radius`:
/// `2r·sin(φ/2)`, the analytic continuation of `2r·S(φ/2)`.
pub fn chord_length(value: &AngleValue, radius: f64) -> Result<f64, GeometryError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(GeometryError::Domain(format!(
            "radius must be positive, got {radius}"
        )));
    }
    let phi = value.measure()?.phi();
    if phi.signum() == Ordering::Less || phi.compare(&ExactScalar::TWO_PI) == Ordering::Greater {
        return Err(GeometryError::Domain(format!(
            "chord needs a measure in [0, 2π], got {phi}"
        )));
    }
    let half = phi
        .checked_mul(&ExactScalar::ratio(1, 2).expect("constant"))
        .map_err(AngleError::from)?;
    let sine = trig::sin_of_measure(half);
    Ok(2.0 * radius * sine)
}
