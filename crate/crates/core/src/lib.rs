//! Angular magnitudes, angular measures, reference angles and numerical
//! values as separate types.
//!
//! * [`Measure`] is a pure number `φ` with `s = φ·r`; it is the only
//!   argument the trigonometric functions accept and it never carries a unit
//!   symbol.
//! * [`AngleValue`] is a numerical value `{α}` stated relative to a
//!   [`ReferenceAngle`] (radian, degree, gon, ...), related to the measure by
//!   `φ = (2π/p)·{α}` where `p` is the full-circle count of the reference.
//! * [`Magnitude`] is the congruence class of an angle, stored canonically as
//!   its measure in `(0, 2π]`.
//!
//! Numbers are [`ExactScalar`]s, rationals times a power of π, so that
//! conversions between the builtin references are exact.

pub mod angle;
pub mod cli;
pub mod exact;
pub mod geometry;
pub mod lint;
pub mod textio;
pub mod trig;

pub use angle::{AngleClass, AngleError, AngleValue, Magnitude, Measure, ReferenceAngle};
pub use exact::{ArithmeticError, ExactScalar};
