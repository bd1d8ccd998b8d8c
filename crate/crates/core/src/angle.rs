//! Reference angles, numerical values, angular measures and angular
//! magnitudes.
//!
//! A reference angle `ε` is fixed by the number `p` assigned to the full
//! circle (`2ϖ = p·ε`). A numerical value `{α}` relative to it corresponds to
//! the measure `φ = (2π/p)·{α}`, which is the same for every reference, so
//! conversion is `{α}_target = (p_target/p_source)·{α}_source`.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::exact::{ArithmeticError, ExactScalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AngleError {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error("full-circle value of a reference angle must be exact and positive, got {0}")]
    InvalidReference(String),
    #[error("angular measure {0} is outside (0, 2π]; no angle has this magnitude")]
    NotAMagnitude(String),
    #[error("magnitude with measure {0} exceeds the straight angle; the modular sum is defined on (0, π]")]
    OutsideSemigroup(String),
    #[error("value {value} is outside the principal range [0, {full_circle}]")]
    OutsidePrincipalRange { value: String, full_circle: String },
}

/// A named fraction of the full circle, fixed by the full-circle count `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceAngle {
    name: Cow<'static, str>,
    symbol: Cow<'static, str>,
    ascii_symbol: Cow<'static, str>,
    full_circle: ExactScalar,
}

impl ReferenceAngle {
    pub const RADIAN: ReferenceAngle =
        ReferenceAngle::builtin("radian", "rad", "rad", ExactScalar::TWO_PI);
    pub const DEGREE: ReferenceAngle =
        ReferenceAngle::builtin("degree", "°", "deg", ExactScalar::from_canonical(360, 1, 0));
    pub const GON: ReferenceAngle =
        ReferenceAngle::builtin("gon", "gon", "gon", ExactScalar::from_canonical(400, 1, 0));
    pub const TURN: ReferenceAngle =
        ReferenceAngle::builtin("turn", "turn", "turn", ExactScalar::ONE);
    pub const ARCMINUTE: ReferenceAngle = ReferenceAngle::builtin(
        "arcminute",
        "′",
        "arcmin",
        ExactScalar::from_canonical(21_600, 1, 0),
    );
    pub const ARCSECOND: ReferenceAngle = ReferenceAngle::builtin(
        "arcsecond",
        "″",
        "arcsec",
        ExactScalar::from_canonical(1_296_000, 1, 0),
    );

    const fn builtin(
        name: &'static str,
        symbol: &'static str,
        ascii_symbol: &'static str,
        full_circle: ExactScalar,
    ) -> Self {
        ReferenceAngle {
            name: Cow::Borrowed(name),
            symbol: Cow::Borrowed(symbol),
            ascii_symbol: Cow::Borrowed(ascii_symbol),
            full_circle,
        }
    }

    /// The builtin registry, in a fixed order.
    pub fn builtins() -> [ReferenceAngle; 6] {
        [
            Self::RADIAN,
            Self::DEGREE,
            Self::GON,
            Self::TURN,
            Self::ARCMINUTE,
            Self::ARCSECOND,
        ]
    }

    /// A user-defined reference angle; `full_circle` must be exact and
    /// positive.
    pub fn custom(
        name: impl Into<String>,
        symbol: impl Into<String>,
        full_circle: ExactScalar,
    ) -> Result<Self, AngleError> {
        if !full_circle.is_exact() || full_circle.signum() != Ordering::Greater {
            return Err(AngleError::InvalidReference(full_circle.to_string()));
        }
        let symbol: String = symbol.into();
        Ok(ReferenceAngle {
            name: Cow::Owned(name.into()),
            ascii_symbol: Cow::Owned(symbol.clone()),
            symbol: Cow::Owned(symbol),
            full_circle,
        })
    }

    /// Looks up a builtin by its Unicode or ASCII symbol.
    pub fn from_symbol(symbol: &str) -> Option<Self> {
        Self::builtins()
            .into_iter()
            .find(|r| r.symbol == symbol || r.ascii_symbol == symbol)
    }

    /// The builtin whose full circle is `p`, or a custom reference `p` named
    /// after its value.
    pub fn for_full_circle(p: ExactScalar) -> Result<Self, AngleError> {
        if let Some(r) = Self::builtins()
            .into_iter()
            .find(|r| r.full_circle == p && p.is_exact())
        {
            return Ok(r);
        }
        let label = format!("(2π/{})", p.render(true));
        Self::custom(format!("reference with full circle {p}"), label, p)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn ascii_symbol(&self) -> &str {
        &self.ascii_symbol
    }

    pub fn symbol_in(&self, ascii: bool) -> &str {
        if ascii {
            &self.ascii_symbol
        } else {
            &self.symbol
        }
    }

    /// `p`, the numerical value of the full circle in this reference.
    pub fn full_circle(&self) -> ExactScalar {
        self.full_circle
    }
}

/// A numerical value `{α}` together with the reference angle it is stated in.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleValue {
    pub value: ExactScalar,
    pub reference: ReferenceAngle,
}

/// An angular measure `φ`: a pure number, never printed with a unit symbol.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Measure(ExactScalar);

impl Measure {
    pub fn new(phi: ExactScalar) -> Self {
        Measure(phi)
    }

    pub fn phi(&self) -> ExactScalar {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// An angular magnitude, represented by its measure `φ ∈ (0, 2π]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Magnitude {
    measure: Measure,
}

impl Magnitude {
    pub fn new(measure: Measure) -> Result<Self, AngleError> {
        let phi = measure.phi();
        if phi.signum() != Ordering::Greater
            || phi.compare(&ExactScalar::TWO_PI) == Ordering::Greater
        {
            return Err(AngleError::NotAMagnitude(phi.to_string()));
        }
        Ok(Magnitude { measure })
    }

    /// The straight angle `ϖ`.
    pub fn straight() -> Self {
        Magnitude {
            measure: Measure(ExactScalar::PI),
        }
    }

    pub fn measure(&self) -> Measure {
        self.measure
    }

    pub fn phi(&self) -> ExactScalar {
        self.measure.phi()
    }

    /// The coefficient `φ/π` of `α = (φ/π)·ϖ`.
    pub fn in_straight_angles(&self) -> Result<ExactScalar, AngleError> {
        Ok(self.phi().checked_div(&ExactScalar::PI)?)
    }

    /// Addition of angular magnitudes, modulo the straight angle. Both
    /// operands must lie in `(0, π]`; the result does too.
    pub fn semigroup_add(&self, other: &Magnitude) -> Result<Magnitude, AngleError> {
        for m in [self, other] {
            if m.phi().compare(&ExactScalar::PI) == Ordering::Greater {
                return Err(AngleError::OutsideSemigroup(m.phi().to_string()));
            }
        }
        let mut sum = self.phi().checked_add(&other.phi())?;
        if sum.compare(&ExactScalar::PI) == Ordering::Greater {
            sum = sum.checked_sub(&ExactScalar::PI)?;
        }
        Magnitude::new(Measure(sum))
    }
}

/// Names of angles by principal measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AngleClass {
    Zero,
    Acute,
    Right,
    Obtuse,
    Straight,
    Reflex,
    Perigon,
}

impl AngleClass {
    pub const ALL: [AngleClass; 7] = [
        AngleClass::Zero,
        AngleClass::Acute,
        AngleClass::Right,
        AngleClass::Obtuse,
        AngleClass::Straight,
        AngleClass::Reflex,
        AngleClass::Perigon,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AngleClass::Zero => "zero angle",
            AngleClass::Acute => "acute angle",
            AngleClass::Right => "right angle",
            AngleClass::Obtuse => "obtuse angle",
            AngleClass::Straight => "straight angle",
            AngleClass::Reflex => "reflex angle",
            AngleClass::Perigon => "perigon",
        }
    }
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Relative tolerance used to snap inexact values onto class boundaries.
pub const CLASSIFY_TOLERANCE: f64 = 1e-12;

impl AngleValue {
    pub fn new(value: ExactScalar, reference: ReferenceAngle) -> Self {
        AngleValue { value, reference }
    }

    /// The same magnitude stated relative to `target`.
    pub fn convert(&self, target: &ReferenceAngle) -> Result<AngleValue, AngleError> {
        if target.full_circle == self.reference.full_circle {
            return Ok(AngleValue::new(self.value, target.clone()));
        }
        let factor = target
            .full_circle
            .checked_div(&self.reference.full_circle)?;
        Ok(AngleValue::new(
            self.value.checked_mul(&factor)?,
            target.clone(),
        ))
    }

    /// `φ = (2π/p)·{α}`.
    pub fn measure(&self) -> Result<Measure, AngleError> {
        let factor = ExactScalar::TWO_PI.checked_div(&self.reference.full_circle)?;
        Ok(Measure(self.value.checked_mul(&factor)?))
    }

    /// `{α} = (p/2π)·φ`.
    pub fn from_measure(
        measure: Measure,
        target: &ReferenceAngle,
    ) -> Result<AngleValue, AngleError> {
        let factor = target.full_circle.checked_div(&ExactScalar::TWO_PI)?;
        Ok(AngleValue::new(
            measure.phi().checked_mul(&factor)?,
            target.clone(),
        ))
    }

    /// The congruent value in `[0, p)`.
    pub fn reduce_principal(&self) -> Result<AngleValue, AngleError> {
        let p = self.reference.full_circle;
        let ratio = self.value.checked_div(&p)?;
        let reduced = if let Some(k) = ratio.floor_rational() {
            self.value
                .checked_sub(&ExactScalar::integer(k).checked_mul(&p)?)?
        } else {
            reduce_approximately(self.value, p)?
        };
        Ok(AngleValue::new(reduced, self.reference.clone()))
    }

    /// Classification of a principal value in `[0, p]`.
    pub fn classify(&self) -> Result<AngleClass, AngleError> {
        let p = self.reference.full_circle;
        let out_of_range = || AngleError::OutsidePrincipalRange {
            value: self.value.to_string(),
            full_circle: p.to_string(),
        };
        let quarter = p.checked_mul(&ExactScalar::ratio(1, 4)?)?;
        let half = p.checked_mul(&ExactScalar::ratio(1, 2)?)?;
        let v = self.value;
        if v.is_exact() {
            use Ordering::*;
            if v.signum() == Less || v.compare(&p) == Greater {
                return Err(out_of_range());
            }
            return Ok(
                match (
                    v.signum(),
                    v.compare(&quarter),
                    v.compare(&half),
                    v.compare(&p),
                ) {
                    (Equal, ..) => AngleClass::Zero,
                    (_, Less, ..) => AngleClass::Acute,
                    (_, Equal, ..) => AngleClass::Right,
                    (_, Greater, Less, _) => AngleClass::Obtuse,
                    (_, _, Equal, _) => AngleClass::Straight,
                    (_, _, _, Less) => AngleClass::Reflex,
                    _ => AngleClass::Perigon,
                },
            );
        }
        let pf = p.to_f64();
        let tol = CLASSIFY_TOLERANCE * pf;
        let x = v.to_f64();
        if x.is_nan() || x < -tol || x > pf + tol {
            return Err(out_of_range());
        }
        let near = |b: f64| (x - b).abs() <= tol;
        let (qf, hf) = (quarter.to_f64(), half.to_f64());
        Ok(if near(0.0) {
            AngleClass::Zero
        } else if near(pf) {
            AngleClass::Perigon
        } else if near(qf) {
            AngleClass::Right
        } else if near(hf) {
            AngleClass::Straight
        } else if x < qf {
            AngleClass::Acute
        } else if x < hf {
            AngleClass::Obtuse
        } else {
            AngleClass::Reflex
        })
    }
}

/// `v mod p` when the quotient is not a plain rational (mixed π exponents
/// or inexact input). The integer quotient is settled with exact comparisons
/// where possible; the remainder itself is generally inexact.
fn reduce_approximately(v: ExactScalar, p: ExactScalar) -> Result<ExactScalar, AngleError> {
    let (vf, pf) = (v.to_f64(), p.to_f64());
    let q = (vf / pf).floor();
    if !q.is_finite() || q.abs() > 2f64.powi(100) {
        let r = vf.rem_euclid(pf);
        return Ok(ExactScalar::inexact(if r >= pf { 0.0 } else { r }));
    }
    let mut k = q as i128;
    // nudge k so that k·p <= v < (k+1)·p holds exactly
    for _ in 0..2 {
        let lower = ExactScalar::integer(k).checked_mul(&p)?;
        if v.compare(&lower) == Ordering::Less {
            k -= 1;
            continue;
        }
        let upper = ExactScalar::integer(k + 1).checked_mul(&p)?;
        if v.compare(&upper) != Ordering::Less {
            k += 1;
            continue;
        }
        break;
    }
    let r = v.checked_sub(&ExactScalar::integer(k).checked_mul(&p)?)?;
    if r.is_exact() {
        return Ok(r);
    }
    let rf = r.to_f64();
    // rounding can push r onto either end of [0, p)
    Ok(ExactScalar::inexact(if rf < 0.0 || rf >= pf {
        0.0
    } else {
        rf
    }))
}

impl fmt::Display for AngleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value, self.reference.symbol())
    }
}
