//! Trigonometric functions with principal period `p`.
//!
//! `Sin_p(x) = sin((2π/p)·x)` and likewise for cosine and tangent; with
//! `p = 2π` these are the ordinary functions. The argument is reduced modulo
//! `p` *before* scaling whenever that can be done exactly, so that
//! periodicity survives arguments far larger than `p`.

use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, PI};

use thiserror::Error;

use crate::angle::{AngleError, AngleValue, ReferenceAngle};
use crate::exact::{DoubleDouble, ExactScalar};

/// Distance, in scaled-argument radians, inside which tangent reports a pole.
pub const POLE_GUARD: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrigError {
    #[error("period must be exact and positive, got {0}")]
    InvalidPeriod(String),
    #[error("tangent has a pole at this argument")]
    Pole,
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Angle(#[from] AngleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigKind {
    Sin,
    Cos,
    Tan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseKind {
    Arcsin,
    Arccos,
}

/// `Sin_p`, `Cos_p` or `Tan_p` for a fixed principal period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodizedFunction {
    kind: TrigKind,
    period: ExactScalar,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitCirclePoint {
    pub re: f64,
    pub im: f64,
}

/// Argument after reduction.
#[derive(Debug, Clone, Copy)]
enum Reduced {
    /// Exact fraction `n/d` of the period, in `(-1/2, 1/2]`.
    Fraction(i128, i128),
    /// Scaled argument in radians, roughly in `[-π, π]`.
    Radians(f64),
}

fn validate_period(period: &ExactScalar) -> Result<(), TrigError> {
    if !period.is_exact() || period.signum() != Ordering::Greater {
        return Err(TrigError::InvalidPeriod(period.to_string()));
    }
    Ok(())
}

/// `x/p` modulo 1, shifted into `(-1/2, 1/2]`, when it is a plain rational.
fn exact_fraction(x: &ExactScalar, period: &ExactScalar) -> Option<(i128, i128)> {
    let t = x.checked_div(period).ok()?;
    let (n, d) = t.as_rational()?;
    let mut r = n.rem_euclid(d);
    // r/d in [0, 1); move the upper half below zero
    if r.checked_mul(2)? > d {
        r -= d;
    }
    Some((r, d))
}

fn reduce(x: &ExactScalar, period: &ExactScalar) -> Reduced {
    if let Some((n, d)) = exact_fraction(x, period) {
        return Reduced::Fraction(n, d);
    }
    // x/p = r/π: the argument 2π·x/p is the plain rational 2r radians
    if let Some(t) = x
        .checked_div(period)
        .ok()
        .filter(|t| matches!(t.parts(), Some((_, _, -1))))
    {
        if let Ok(radians) = t.checked_mul(&ExactScalar::TWO_PI) {
            return Reduced::Radians(reduce_radians(radians.to_dd()));
        }
    }
    let scale = ExactScalar::TWO_PI.checked_div(period).ok();
    match scale {
        // p = qπ: the scaled argument x·(2/q) has no π in it and has to be
        // reduced against 2π in extended precision
        Some(c) if c.as_rational().is_some() => {
            let xf = x.to_f64();
            if c == ExactScalar::ONE {
                return Reduced::Radians(reduce_radians(DoubleDouble::from_f64(xf)));
            }
            let t = x.to_dd().mul(c.to_dd());
            Reduced::Radians(reduce_radians(t))
        }
        _ => {
            let xf = x.to_f64();
            let pf = period.to_f64();
            // fmod is exact in binary floating point; with an integral p the
            // remainder is the exact residue and can re-enter the exact path
            if period.as_rational().map(|(_, d)| d == 1).unwrap_or(false) && xf.is_finite() {
                let r = xf % pf;
                if let Some(re) = ExactScalar::from_f64_exact(r) {
                    if let Some((n, d)) = exact_fraction(&re, period) {
                        return Reduced::Fraction(n, d);
                    }
                }
            }
            let t = (xf / pf).rem_euclid(1.0);
            let t = if t > 0.5 { t - 1.0 } else { t };
            Reduced::Radians(2.0 * PI * t)
        }
    }
}

/// `t` reduced against 2π in double-double, to `[-π, π]`. Large `t` are left
/// to the platform's own reduction.
fn reduce_radians(t: DoubleDouble) -> f64 {
    let ratio = t.div(crate::exact::dd_two_pi());
    if ratio.hi.abs() >= 2f64.powi(52) {
        return t.to_f64();
    }
    let n = ratio.round();
    if n == 0.0 {
        return t.to_f64();
    }
    t.sub(crate::exact::dd_two_pi().mul_f64(n)).to_f64()
}

/// Exactly known values at multiples of π/6 (sine and cosine) and π/4
/// (tangent), for a fraction `n/d` of the full turn.
fn special_value(kind: TrigKind, n: i128, d: i128) -> Option<f64> {
    let multiple = |k: i128| n.checked_mul(k).filter(|m| m % d == 0).map(|m| m / d);
    let twelfths = multiple(12);
    let eighths = multiple(8);
    match kind {
        TrigKind::Sin => match twelfths? {
            0 | 6 | -6 => Some(0.0),
            1 | 5 => Some(0.5),
            -1 | -5 => Some(-0.5),
            3 => Some(1.0),
            -3 => Some(-1.0),
            _ => None,
        },
        TrigKind::Cos => match twelfths? {
            0 => Some(1.0),
            2 | -2 => Some(0.5),
            3 | -3 => Some(0.0),
            4 | -4 => Some(-0.5),
            6 | -6 => Some(-1.0),
            _ => None,
        },
        TrigKind::Tan => match eighths? {
            0 | 4 | -4 => Some(0.0),
            1 | -3 => Some(1.0),
            -1 | 3 => Some(-1.0),
            _ => None,
        },
    }
}

fn evaluate(kind: TrigKind, reduced: Reduced) -> Result<f64, TrigError> {
    let radians = match reduced {
        Reduced::Fraction(n, d) => {
            if kind == TrigKind::Tan && n.checked_mul(4).map(|m| m.abs() == d).unwrap_or(false) {
                return Err(TrigError::Pole);
            }
            if let Some(v) = special_value(kind, n, d) {
                return Ok(v);
            }
            n.checked_mul(2)
                .and_then(|m| ExactScalar::pi_multiple(m, d).ok())
                .map(|s| s.to_f64())
                .unwrap_or_else(|| 2.0 * PI * (n as f64 / d as f64))
        }
        Reduced::Radians(r) => r,
    };
    Ok(match kind {
        TrigKind::Sin => radians.sin(),
        TrigKind::Cos => radians.cos(),
        TrigKind::Tan => {
            let r = radians.rem_euclid(PI);
            if (r - FRAC_PI_2).abs() < POLE_GUARD {
                return Err(TrigError::Pole);
            }
            radians.tan()
        }
    })
}

impl PeriodizedFunction {
    pub fn new(kind: TrigKind, period: ExactScalar) -> Result<Self, TrigError> {
        validate_period(&period)?;
        Ok(PeriodizedFunction { kind, period })
    }

    pub fn kind(&self) -> TrigKind {
        self.kind
    }

    pub fn period(&self) -> ExactScalar {
        self.period
    }

    /// Value at the float argument `x`. Finite floats are dyadic rationals,
    /// so reduction modulo a rational `p` is exact.
    pub fn eval(&self, x: f64) -> Result<f64, TrigError> {
        if !x.is_finite() {
            return Err(TrigError::Domain(format!(
                "argument must be finite, got {x}"
            )));
        }
        let arg = ExactScalar::from_f64_exact(x).unwrap_or(ExactScalar::inexact(x));
        self.eval_scalar(&arg)
    }

    /// Value at an exact (or inexact) scalar argument.
    pub fn eval_scalar(&self, x: &ExactScalar) -> Result<f64, TrigError> {
        evaluate(self.kind, reduce(x, &self.period))
    }
}

/// `Arcsin_p(x) = (p/2π)·arcsin x` or `Arccos_p(x) = (p/2π)·arccos x`,
/// returned as a value relative to the reference angle whose full circle is
/// `p`. Ranges are `[-p/4, p/4]` and `[0, p/2]`.
pub fn eval_inverse(
    kind: InverseKind,
    period: ExactScalar,
    x: f64,
) -> Result<AngleValue, TrigError> {
    validate_period(&period)?;
    if !(-1.0..=1.0).contains(&x) {
        return Err(TrigError::Domain(format!(
            "inverse functions are defined on [-1, 1], got {x}"
        )));
    }
    let reference = ReferenceAngle::for_full_circle(period)?;
    // fraction of the full turn at the exactly representable points
    let exact_turn = match (kind, x) {
        (InverseKind::Arcsin, -1.0) => Some((-1, 4)),
        (InverseKind::Arcsin, -0.5) => Some((-1, 12)),
        (InverseKind::Arcsin, 0.0) => Some((0, 1)),
        (InverseKind::Arcsin, 0.5) => Some((1, 12)),
        (InverseKind::Arcsin, 1.0) => Some((1, 4)),
        (InverseKind::Arccos, -1.0) => Some((1, 2)),
        (InverseKind::Arccos, -0.5) => Some((1, 3)),
        (InverseKind::Arccos, 0.0) => Some((1, 4)),
        (InverseKind::Arccos, 0.5) => Some((1, 6)),
        (InverseKind::Arccos, 1.0) => Some((0, 1)),
        _ => None,
    };
    let value = match exact_turn {
        Some((n, d)) => ExactScalar::ratio(n, d)
            .and_then(|t| t.checked_mul(&period))
            .map_err(AngleError::from)?,
        None => {
            let radians = match kind {
                InverseKind::Arcsin => x.asin(),
                InverseKind::Arccos => x.acos(),
            };
            let factor = period
                .checked_div(&ExactScalar::TWO_PI)
                .map_err(AngleError::from)?;
            ExactScalar::inexact(radians)
                .checked_mul(&factor)
                .map_err(AngleError::from)?
        }
    };
    Ok(AngleValue::new(value, reference))
}

/// `(Cos_p x)² + (Sin_p x)² − 1`.
pub fn pythagorean_residual(period: ExactScalar, x: f64) -> Result<f64, TrigError> {
    let s = PeriodizedFunction::new(TrigKind::Sin, period)?.eval(x)?;
    let c = PeriodizedFunction::new(TrigKind::Cos, period)?.eval(x)?;
    Ok(c * c + s * s - 1.0)
}

/// The point `exp(i·φ)` on the unit circle for the measure of `value`.
pub fn phase(value: &AngleValue) -> Result<UnitCirclePoint, TrigError> {
    let p = value.reference.full_circle();
    let reduced = reduce(&value.value, &p);
    Ok(UnitCirclePoint {
        re: evaluate(TrigKind::Cos, reduced)?,
        im: evaluate(TrigKind::Sin, reduced)?,
    })
}

/// `sin φ` for a measure, with the same exact reduction as `Sin_2π`.
pub(crate) fn sin_of_measure(phi: ExactScalar) -> f64 {
    evaluate(TrigKind::Sin, reduce(&phi, &ExactScalar::TWO_PI)).unwrap_or(f64::NAN)
}
