//! Exact scalars of the form `(n/d)·π^e` with `e ∈ {−1, 0, 1}`.
//!
//! Every conversion factor between the builtin reference angles is of this
//! form (`360/2π = 180·π⁻¹`, `400/360 = 10/9`, ...), so conversions stay
//! exact. Operations whose result leaves the representable set degrade to an
//! [`ExactScalar::inexact`] value, which is contagious. Integer overflow is
//! never silent: it is reported as [`ArithmeticError::Overflow`].

mod dd;
mod pi;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub(crate) use dd::DoubleDouble;

pub(crate) fn dd_two_pi() -> DoubleDouble {
    dd::TWO_PI
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("division by zero")]
    DivisionByZero,
}

/// A real number, exact as `(numerator/denominator)·π^pi_exponent` or an
/// inexact float approximation.
///
/// Exact values are always canonical: the fraction is reduced, the
/// denominator is positive and zero carries `pi_exponent = 0`. Equality
/// compares real values, so an exact `1/2` equals an inexact `0.5`; use
/// [`ExactScalar::is_exact`] where the representation matters.
#[derive(Debug, Clone, Copy)]
pub struct ExactScalar(Repr);

#[derive(Debug, Clone, Copy)]
enum Repr {
    Exact { num: i128, den: i128, pi: i8 },
    Inexact(f64),
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn gcd_i(a: i128, b: i128) -> i128 {
    // both callers pass values whose magnitude fits in i128 after reduction
    gcd(a.unsigned_abs(), b.unsigned_abs()) as i128
}

impl ExactScalar {
    pub const ZERO: ExactScalar = ExactScalar(Repr::Exact {
        num: 0,
        den: 1,
        pi: 0,
    });
    pub const ONE: ExactScalar = ExactScalar(Repr::Exact {
        num: 1,
        den: 1,
        pi: 0,
    });
    pub const PI: ExactScalar = ExactScalar(Repr::Exact {
        num: 1,
        den: 1,
        pi: 1,
    });
    pub const TWO_PI: ExactScalar = ExactScalar(Repr::Exact {
        num: 2,
        den: 1,
        pi: 1,
    });

    /// Builds a value from parts that are already canonical. Only for
    /// constants; the caller guarantees `gcd(num, den) = 1`, `den > 0`.
    pub(crate) const fn from_canonical(num: i128, den: i128, pi: i8) -> Self {
        ExactScalar(Repr::Exact { num, den, pi })
    }

    pub fn integer(n: i128) -> Self {
        ExactScalar(Repr::Exact {
            num: n,
            den: 1,
            pi: 0,
        })
    }

    pub fn ratio(num: i128, den: i128) -> Result<Self, ArithmeticError> {
        Self::with_pi_exponent(num, den, 0)
    }

    /// `(num/den)·π`.
    pub fn pi_multiple(num: i128, den: i128) -> Result<Self, ArithmeticError> {
        Self::with_pi_exponent(num, den, 1)
    }

    /// `(num/den)·π^pi_exponent`. Exponents outside `{−1, 0, 1}` degrade to
    /// an inexact value.
    pub fn with_pi_exponent(
        num: i128,
        den: i128,
        pi_exponent: i8,
    ) -> Result<Self, ArithmeticError> {
        if den == 0 {
            return Err(ArithmeticError::DivisionByZero);
        }
        if num == 0 {
            return Ok(Self::ZERO);
        }
        let negative = (num < 0) != (den < 0);
        let g = gcd(num.unsigned_abs(), den.unsigned_abs());
        let (n, d) = (num.unsigned_abs() / g, den.unsigned_abs() / g);
        if n > i128::MAX as u128 || d > i128::MAX as u128 {
            return Err(ArithmeticError::Overflow);
        }
        let num = if negative { -(n as i128) } else { n as i128 };
        let den = d as i128;
        if (-1..=1).contains(&pi_exponent) {
            Ok(ExactScalar(Repr::Exact {
                num,
                den,
                pi: pi_exponent,
            }))
        } else {
            let mut v = DoubleDouble::from_i128(num).div(DoubleDouble::from_i128(den));
            for _ in 0..pi_exponent.unsigned_abs() {
                v = if pi_exponent > 0 {
                    v.mul(dd::PI)
                } else {
                    v.div(dd::PI)
                };
            }
            Ok(Self::inexact(v.to_f64()))
        }
    }

    pub const fn inexact(value: f64) -> Self {
        ExactScalar(Repr::Inexact(value))
    }

    /// The exact dyadic rational equal to `value`, when it fits the bounded
    /// representation.
    pub fn from_f64_exact(value: f64) -> Option<Self> {
        if !value.is_finite() {
            return None;
        }
        if value == 0.0 {
            return Some(Self::ZERO);
        }
        let bits = value.to_bits();
        let negative = bits >> 63 == 1;
        let exp_bits = ((bits >> 52) & 0x7ff) as i32;
        let frac = bits & ((1u64 << 52) - 1);
        let (mut mantissa, mut exp) = if exp_bits == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp_bits - 1075)
        };
        let tz = mantissa.trailing_zeros() as i32;
        mantissa >>= tz;
        exp += tz;
        let m = if negative {
            -(mantissa as i128)
        } else {
            mantissa as i128
        };
        if exp >= 0 {
            if exp > 126 - 53 {
                return None;
            }
            Some(Self::integer(m << exp))
        } else {
            if -exp > 126 {
                return None;
            }
            Some(ExactScalar(Repr::Exact {
                num: m,
                den: 1i128 << -exp,
                pi: 0,
            }))
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.0, Repr::Exact { .. })
    }

    pub fn is_zero(&self) -> bool {
        match self.0 {
            Repr::Exact { num, .. } => num == 0,
            Repr::Inexact(v) => v == 0.0,
        }
    }

    /// `(numerator, denominator, pi_exponent)` of an exact value.
    pub fn parts(&self) -> Option<(i128, i128, i8)> {
        match self.0 {
            Repr::Exact { num, den, pi } => Some((num, den, pi)),
            Repr::Inexact(_) => None,
        }
    }

    /// The rational coefficient of an exact value with no π factor.
    pub fn as_rational(&self) -> Option<(i128, i128)> {
        match self.0 {
            Repr::Exact { num, den, pi: 0 } => Some((num, den)),
            _ => None,
        }
    }

    pub fn pi_exponent(&self) -> Option<i8> {
        self.parts().map(|(_, _, e)| e)
    }

    pub fn signum(&self) -> Ordering {
        match self.0 {
            Repr::Exact { num, .. } => num.cmp(&0),
            Repr::Inexact(v) => v.partial_cmp(&0.0).unwrap_or(Ordering::Greater),
        }
    }

    pub fn neg(&self) -> Result<Self, ArithmeticError> {
        match self.0 {
            Repr::Exact { num, den, pi } => {
                let num = num.checked_neg().ok_or(ArithmeticError::Overflow)?;
                Ok(ExactScalar(Repr::Exact { num, den, pi }))
            }
            Repr::Inexact(v) => Ok(Self::inexact(-v)),
        }
    }

    pub fn abs(&self) -> Result<Self, ArithmeticError> {
        if self.signum() == Ordering::Less {
            self.neg()
        } else {
            Ok(*self)
        }
    }

    pub fn recip(&self) -> Result<Self, ArithmeticError> {
        match self.0 {
            Repr::Exact { num, den, pi } => {
                if num == 0 {
                    return Err(ArithmeticError::DivisionByZero);
                }
                Self::with_pi_exponent(den, num, -pi)
            }
            Repr::Inexact(v) => Ok(Self::inexact(1.0 / v)),
        }
    }

    /// Product; exact unless the π exponent leaves `{−1, 0, 1}` or an operand
    /// is inexact.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithmeticError> {
        match (self.0, other.0) {
            (
                Repr::Exact {
                    num: n1,
                    den: d1,
                    pi: e1,
                },
                Repr::Exact {
                    num: n2,
                    den: d2,
                    pi: e2,
                },
            ) => {
                if n1 == 0 || n2 == 0 {
                    return Ok(Self::ZERO);
                }
                let g1 = gcd_i(n1, d2);
                let g2 = gcd_i(n2, d1);
                let num = (n1 / g1)
                    .checked_mul(n2 / g2)
                    .ok_or(ArithmeticError::Overflow)?;
                let den = (d1 / g2)
                    .checked_mul(d2 / g1)
                    .ok_or(ArithmeticError::Overflow)?;
                let pi = e1 + e2;
                if (-1..=1).contains(&pi) {
                    Ok(ExactScalar(Repr::Exact { num, den, pi }))
                } else {
                    Ok(Self::inexact(self.to_dd().mul(other.to_dd()).to_f64()))
                }
            }
            _ => Ok(Self::inexact(self.to_dd().mul(other.to_dd()).to_f64())),
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithmeticError> {
        if let Repr::Inexact(_) = other.0 {
            return Ok(Self::inexact(self.to_dd().div(other.to_dd()).to_f64()));
        }
        self.checked_mul(&other.recip()?)
    }

    /// Sum; exact when π exponents match or an operand is zero.
    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithmeticError> {
        match (self.0, other.0) {
            (Repr::Exact { num: 0, .. }, _) => Ok(*other),
            (_, Repr::Exact { num: 0, .. }) => Ok(*self),
            (
                Repr::Exact {
                    num: n1,
                    den: d1,
                    pi: e1,
                },
                Repr::Exact {
                    num: n2,
                    den: d2,
                    pi: e2,
                },
            ) if e1 == e2 => {
                let g = gcd_i(d1, d2);
                let l1 = d2 / g;
                let l2 = d1 / g;
                let den = d1.checked_mul(l1).ok_or(ArithmeticError::Overflow)?;
                let a = n1.checked_mul(l1).ok_or(ArithmeticError::Overflow)?;
                let b = n2.checked_mul(l2).ok_or(ArithmeticError::Overflow)?;
                let num = a.checked_add(b).ok_or(ArithmeticError::Overflow)?;
                Self::with_pi_exponent(num, den, e1)
            }
            _ => Ok(Self::inexact(self.to_dd().add(other.to_dd()).to_f64())),
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ArithmeticError> {
        self.checked_add(&other.neg()?)
    }

    /// Largest integer not above an exact value without π factor.
    pub fn floor_rational(&self) -> Option<i128> {
        let (n, d) = self.as_rational()?;
        Some(n.div_euclid(d))
    }

    pub(crate) fn to_dd(self) -> DoubleDouble {
        match self.0 {
            Repr::Exact { num, den, pi } => {
                let mut v = DoubleDouble::from_i128(num);
                if pi == 1 {
                    v = v.mul(dd::PI);
                }
                let mut d = DoubleDouble::from_i128(den);
                if pi == -1 {
                    d = d.mul(dd::PI);
                }
                if den == 1 && pi != -1 {
                    v
                } else {
                    v.div(d)
                }
            }
            Repr::Inexact(v) => DoubleDouble::from_f64(v),
        }
    }

    /// Nearest float. Exact values are evaluated in double-double with π
    /// applied before the division, then rounded once.
    pub fn to_f64(&self) -> f64 {
        self.to_dd().to_f64()
    }

    /// Total order consistent with the real numbers. Rational comparisons are
    /// decided exactly; values with different π exponents are separated with
    /// rational enclosures of π, refined until they decide.
    pub fn compare(&self, other: &Self) -> Ordering {
        match (self.0, other.0) {
            (Repr::Inexact(a), Repr::Inexact(b)) => {
                a.partial_cmp(&b).unwrap_or_else(|| a.total_cmp(&b))
            }
            (
                Repr::Exact {
                    num: n1,
                    den: d1,
                    pi: e1,
                },
                Repr::Exact {
                    num: n2,
                    den: d2,
                    pi: e2,
                },
            ) if e1 == e2 || n1 == 0 || n2 == 0 => {
                if n1 == 0 || n2 == 0 {
                    return n1.signum().cmp(&n2.signum());
                }
                match (n1.checked_mul(d2), n2.checked_mul(d1)) {
                    (Some(a), Some(b)) => a.cmp(&b),
                    _ => {
                        let a = BigInt::from(n1) * BigInt::from(d2);
                        let b = BigInt::from(n2) * BigInt::from(d1);
                        a.cmp(&b)
                    }
                }
            }
            _ => self.compare_transcendental(other),
        }
    }

    fn big_parts(&self) -> Result<(BigRational, i8), f64> {
        match self.0 {
            Repr::Exact { num, den, pi } => {
                Ok((BigRational::new(BigInt::from(num), BigInt::from(den)), pi))
            }
            Repr::Inexact(v) => BigRational::from_float(v).map(|r| (r, 0)).ok_or(v),
        }
    }

    fn compare_transcendental(&self, other: &Self) -> Ordering {
        let (a, ea) = match self.big_parts() {
            Ok(p) => p,
            // ±inf or NaN; exact values are finite
            Err(v) => return v.partial_cmp(&0.0).unwrap_or(Ordering::Greater),
        };
        let (b, eb) = match other.big_parts() {
            Ok(p) => p,
            Err(v) => return 0.0.partial_cmp(&v).unwrap_or(Ordering::Less),
        };
        if a.is_zero() || b.is_zero() || ea == eb {
            return a.cmp(&b);
        }
        // sign(a·π^ea − b·π^eb) = sign(a·π^k − b) with k = ea − eb
        let k = ea - eb;
        let mut digits = 40;
        loop {
            let (lo, hi) = pi::enclosure(digits);
            let (klo, khi) = match k {
                1 => (lo, hi),
                2 => (&lo * &lo, &hi * &hi),
                -1 => (hi.recip(), lo.recip()),
                -2 => ((&hi * &hi).recip(), (&lo * &lo).recip()),
                _ => unreachable!("π exponents are confined to {{-1, 0, 1}}"),
            };
            let (low, high) = if a.is_positive() {
                (&a * klo, &a * khi)
            } else {
                (&a * khi, &a * klo)
            };
            if b < low {
                return Ordering::Greater;
            }
            if b > high {
                return Ordering::Less;
            }
            if digits >= pi::MAX_DIGITS {
                return Ordering::Equal;
            }
            digits = if digits < pi::EMBEDDED_DIGITS {
                pi::EMBEDDED_DIGITS
            } else {
                digits * 2
            };
        }
    }

    /// Unicode rendering with the ASCII spelling `pi` substituted on request.
    pub fn render(&self, ascii: bool) -> String {
        match self.0 {
            Repr::Exact { num, den, pi } => {
                let p = if ascii { "pi" } else { "π" };
                match pi {
                    0 if den == 1 => num.to_string(),
                    0 => format!("{num}/{den}"),
                    1 => {
                        let coeff = match num {
                            1 => p.to_string(),
                            -1 => format!("-{p}"),
                            n => format!("{n}{p}"),
                        };
                        if den == 1 {
                            coeff
                        } else {
                            format!("{coeff}/{den}")
                        }
                    }
                    _ => {
                        if den == 1 {
                            format!("{num}/{p}")
                        } else {
                            format!("{num}/({den}{p})")
                        }
                    }
                }
            }
            Repr::Inexact(v) => format_significant(v, 17),
        }
    }
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        match (self.0, other.0) {
            (
                Repr::Exact {
                    num: n1,
                    den: d1,
                    pi: e1,
                },
                Repr::Exact {
                    num: n2,
                    den: d2,
                    pi: e2,
                },
            ) => n1 == n2 && d1 == d2 && e1 == e2,
            _ => self.compare(other) == Ordering::Equal,
        }
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl From<i32> for ExactScalar {
    fn from(n: i32) -> Self {
        Self::integer(n as i128)
    }
}

/// Decimal rendering with at most `digits` significant digits, trailing zeros
/// trimmed. Positional for moderate exponents, `me±x` otherwise.
pub fn format_significant(value: f64, digits: usize) -> String {
    if value.is_nan() {
        return "NaN".to_string();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if value == 0.0 {
        return "0".to_string();
    }
    let digits = digits.clamp(1, 40);
    let sci = format!("{:.*e}", digits - 1, value);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let mut mdigits: String = mantissa.chars().filter(|c| *c != '.').collect();
    while mdigits.len() > 1 && mdigits.ends_with('0') {
        mdigits.pop();
    }
    if !(-6..21).contains(&exp) {
        let (first, rest) = mdigits.split_at(1);
        return if rest.is_empty() {
            format!("{sign}{first}e{exp}")
        } else {
            format!("{sign}{first}.{rest}e{exp}")
        };
    }
    let point = exp + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), mdigits)
    } else if point as usize >= mdigits.len() {
        format!("{}{}", mdigits, "0".repeat(point as usize - mdigits.len()))
    } else {
        let (int, frac) = mdigits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}
