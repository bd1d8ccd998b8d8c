//! Angle literals and the small expression language.
//!
//! Angle literal grammar (whitespace `ws` is optional where shown):
//!
//! ```text
//! angle     := ws sign? (dms | number ws unit) ws
//! number    := numer (ws "/" ws denom)?
//! numer     := decimal (ws mul? ws pi)? | pi
//! denom     := integer (ws mul? ws pi)? | pi | "(" ws integer ws mul? ws pi ws ")"
//! pi        := "π" | "pi"
//! mul       := "·" | "*"
//! unit      := "rad" | "°" | "deg" | "gon" | "turn" | "′" | "arcmin" | "″" | "arcsec"
//! dms       := integer ("°"|"d") (integer ("′"|"m") (decimal ("″"|"s"))?)?
//! ```
//!
//! A `π` after an integer denominator multiplies (`1/2 pi = π/2`); a `π`
//! standing alone or parenthesised in the denominator divides
//! (`180/π`, `1/(2π)`). At most one `π` may appear.

mod expr;
mod scan;

use std::fmt;

use thiserror::Error;

use crate::angle::{AngleValue, ReferenceAngle};
use crate::exact::{format_significant, ArithmeticError, ExactScalar};

pub use expr::{
    parse_expression, parse_statement, DeclKind, Expr, ExprKind, Function, Span, Statement,
};
pub use scan::MAX_EXACT_DIGITS;

use scan::{exact_decimal, is_ident_continue, is_ident_start, Scanner};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown unit symbol `{0}`")]
    UnknownUnit(String),
    #[error("missing reference angle: a numerical value must be stated with the symbol of its reference angle")]
    MissingReferenceAngle,
    #[error("unexpected unit symbol `{0}`: an angular measure is a pure number")]
    UnexpectedUnit(String),
    #[error(transparent)]
    Arithmetic(ArithmeticError),
}

/// A parse failure at a character offset (0-based) into the input.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{kind} (at position {position})")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, position: usize) -> Self {
        ParseError { kind, position }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleForm {
    /// Plain decimal numbers.
    Decimal,
    /// Exact rationals and π-multiples, e.g. `3π/2 rad`, `1/3 °`.
    SymbolicPi,
    /// Sexagesimal degrees, arcminutes, arcseconds.
    Dms,
}

/// A parsed angle literal, with the text it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleLiteral {
    pub raw: String,
    pub parsed: AngleValue,
    pub form: AngleForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("sexagesimal form needs a value in degrees, got the reference `{0}`")]
    UnsupportedForm(String),
}

const UNIT_SYMBOLS: [(&str, &str); 9] = [
    ("rad", "rad"),
    ("°", "°"),
    ("deg", "°"),
    ("gon", "gon"),
    ("turn", "turn"),
    ("′", "′"),
    ("arcmin", "′"),
    ("″", "″"),
    ("arcsec", "″"),
];

/// Builtin reference angle for a symbol spelled in either charset.
pub fn unit_for_symbol(symbol: &str) -> Option<ReferenceAngle> {
    UNIT_SYMBOLS
        .iter()
        .find(|(s, _)| *s == symbol)
        .and_then(|(_, canonical)| ReferenceAngle::from_symbol(canonical))
}

fn arith(position: usize) -> impl Fn(ArithmeticError) -> ParseError {
    move |e| ParseError::new(ParseErrorKind::Arithmetic(e), position)
}

fn eat_mul(s: &mut Scanner) -> bool {
    let save = s.pos;
    s.skip_ws();
    if s.eat('·') || s.eat('*') {
        s.skip_ws();
        if s.at_pi() {
            return true;
        }
    }
    s.pos = save;
    false
}

/// Scans an unsigned number per the grammar above. Returns the value and
/// whether it was written symbolically (with `π` or `/`).
fn scan_number(s: &mut Scanner) -> Result<(ExactScalar, bool), ParseError> {
    let start = s.pos;
    let mut pi_up = 0i8;
    let mut pi_down = 0i8;
    let mut symbolic = false;
    let coeff = if s.eat_pi() {
        pi_up = 1;
        ExactScalar::ONE
    } else if s.at_decimal_start() {
        let c = s.decimal()?;
        let save = s.pos;
        if eat_mul(s) {
            s.eat_pi();
            pi_up = 1;
        } else {
            s.skip_ws();
            if s.eat_pi() {
                pi_up = 1;
            } else {
                s.pos = save;
            }
        }
        c
    } else {
        return Err(s.error_here(ParseErrorKind::Syntax("expected a number".into())));
    };
    let mut den = ExactScalar::ONE;
    let save = s.pos;
    s.skip_ws();
    if s.eat('/') {
        symbolic = true;
        s.skip_ws();
        if s.eat_pi() {
            pi_down = 1;
        } else if s.eat('(') {
            s.skip_ws();
            let d = s.integer()?;
            if !eat_mul(s) {
                s.skip_ws();
            }
            if !s.eat_pi() {
                return Err(s.error_here(ParseErrorKind::Syntax(
                    "expected `π` in parenthesised denominator".into(),
                )));
            }
            pi_down = 1;
            s.skip_ws();
            if !s.eat(')') {
                return Err(s.error_here(ParseErrorKind::Syntax("expected `)`".into())));
            }
            den = ExactScalar::integer(d);
        } else {
            let at = s.pos;
            let d = s.integer()?;
            if d == 0 {
                return Err(ParseError::new(
                    ParseErrorKind::Arithmetic(ArithmeticError::DivisionByZero),
                    at,
                ));
            }
            den = ExactScalar::integer(d);
            let save = s.pos;
            let trailing_pi = if eat_mul(s) {
                s.eat_pi()
            } else {
                s.skip_ws();
                s.eat_pi()
            };
            if trailing_pi {
                if pi_up == 1 {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax("π may appear only once in a number".into()),
                        save,
                    ));
                }
                pi_up = 1;
            } else {
                s.pos = save;
            }
        }
    } else {
        s.pos = save;
    }
    if pi_up == 1 && pi_down == 1 {
        return Err(ParseError::new(
            ParseErrorKind::Syntax("π may appear only once in a number".into()),
            start,
        ));
    }
    symbolic |= pi_up == 1;
    let pi_factor = ExactScalar::with_pi_exponent(1, 1, pi_up - pi_down).map_err(arith(start))?;
    let value = coeff
        .checked_div(&den)
        .and_then(|v| v.checked_mul(&pi_factor))
        .map_err(arith(start))?;
    Ok((value, symbolic))
}

fn scan_sign(s: &mut Scanner) -> bool {
    if s.eat('-') || s.eat('−') {
        true
    } else {
        s.eat('+');
        false
    }
}

fn apply_sign(v: ExactScalar, negative: bool, at: usize) -> Result<ExactScalar, ParseError> {
    if negative {
        v.neg().map_err(arith(at))
    } else {
        Ok(v)
    }
}

/// Reads a unit symbol: a word, or one of the symbol characters.
fn scan_unit(s: &mut Scanner) -> Result<ReferenceAngle, ParseError> {
    let start = s.pos;
    match s.peek() {
        None => Err(s.error_here(ParseErrorKind::MissingReferenceAngle)),
        Some(c @ ('°' | '′' | '″')) => {
            s.bump();
            Ok(unit_for_symbol(&c.to_string()).expect("symbol in registry"))
        }
        Some(c) if is_ident_start(c) => {
            while s.peek().map(is_ident_continue).unwrap_or(false) {
                s.bump();
            }
            let word = s.slice(start, s.pos);
            unit_for_symbol(&word)
                .ok_or_else(|| ParseError::new(ParseErrorKind::UnknownUnit(word), start))
        }
        Some(c) => Err(ParseError::new(
            ParseErrorKind::Syntax(format!("unexpected `{c}` where a unit symbol was expected")),
            start,
        )),
    }
}

fn expect_end(s: &mut Scanner) -> Result<(), ParseError> {
    s.skip_ws();
    if s.at_end() {
        Ok(())
    } else {
        Err(s.error_here(ParseErrorKind::Syntax("unexpected trailing input".into())))
    }
}

/// Whether the scanner sits at `integer ("d" | "°" digit)`, the start of a
/// sexagesimal literal.
fn at_dms(s: &Scanner) -> bool {
    let mut i = 0;
    while s.peek_at(i).map(|c| c.is_ascii_digit()).unwrap_or(false) {
        i += 1;
    }
    if i == 0 {
        return false;
    }
    match s.peek_at(i) {
        Some('d') => !s.peek_at(i + 1).map(|c| c.is_alphabetic()).unwrap_or(false),
        Some('°') => s
            .peek_at(i + 1)
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false),
        _ => false,
    }
}

fn scan_dms(s: &mut Scanner) -> Result<ExactScalar, ParseError> {
    let start = s.pos;
    let degrees = s.integer()?;
    s.bump(); // `°` or `d`, checked by at_dms
    let mut total = ExactScalar::integer(degrees);
    if s.at_digit() {
        let minutes = s.integer()?;
        if !(s.eat('′') || s.eat('m')) {
            return Err(s.error_here(ParseErrorKind::Syntax(
                "expected `′` or `m` after arcminutes".into(),
            )));
        }
        total = total
            .checked_add(&ExactScalar::ratio(minutes, 60).map_err(arith(start))?)
            .map_err(arith(start))?;
        if s.at_decimal_start() {
            let seconds = s.decimal()?;
            if !(s.eat('″') || s.eat('s')) {
                return Err(s.error_here(ParseErrorKind::Syntax(
                    "expected `″` or `s` after arcseconds".into(),
                )));
            }
            let part = seconds
                .checked_div(&ExactScalar::integer(3600))
                .map_err(arith(start))?;
            total = total.checked_add(&part).map_err(arith(start))?;
        }
    }
    Ok(total)
}

/// Parses an angle literal; a unit symbol is mandatory.
pub fn parse_angle(text: &str) -> Result<AngleLiteral, ParseError> {
    let mut s = Scanner::new(text);
    s.skip_ws();
    let sign_at = s.pos;
    let negative = scan_sign(&mut s);
    let (value, reference, form) = if at_dms(&s) {
        let v = scan_dms(&mut s)?;
        (v, ReferenceAngle::DEGREE, AngleForm::Dms)
    } else {
        let (v, symbolic) = scan_number(&mut s)?;
        s.skip_ws();
        let unit = scan_unit(&mut s)?;
        let form = if symbolic {
            AngleForm::SymbolicPi
        } else {
            AngleForm::Decimal
        };
        (v, unit, form)
    };
    expect_end(&mut s)?;
    Ok(AngleLiteral {
        raw: text.to_string(),
        parsed: AngleValue::new(apply_sign(value, negative, sign_at)?, reference),
        form,
    })
}

/// Parses a bare number (an angular measure or any other pure number).
pub fn parse_number(text: &str) -> Result<ExactScalar, ParseError> {
    let mut s = Scanner::new(text);
    s.skip_ws();
    let sign_at = s.pos;
    let negative = scan_sign(&mut s);
    let (value, _) = scan_number(&mut s)?;
    s.skip_ws();
    let after = s.pos;
    if !s.at_end() {
        if let Ok(unit) = scan_unit(&mut s) {
            return Err(ParseError::new(
                ParseErrorKind::UnexpectedUnit(unit.symbol().to_string()),
                after,
            ));
        }
        s.pos = after;
    }
    expect_end(&mut s)?;
    apply_sign(value, negative, sign_at)
}

/// Renders a value in the requested form with Unicode symbols.
pub fn format_angle(
    value: &AngleValue,
    form: AngleForm,
    digits: usize,
) -> Result<String, FormatError> {
    format_angle_styled(value, form, digits, false)
}

/// Renders a value; `digits` is the number of significant digits for
/// approximate numbers, or of arcsecond decimals in sexagesimal form.
pub fn format_angle_styled(
    value: &AngleValue,
    form: AngleForm,
    digits: usize,
    ascii: bool,
) -> Result<String, FormatError> {
    let unit = value.reference.symbol_in(ascii);
    match form {
        AngleForm::SymbolicPi => Ok(format!(
            "{} {}",
            format_scalar_symbolic(&value.value, digits, ascii),
            unit
        )),
        AngleForm::Decimal => Ok(format!(
            "{} {}",
            format_scalar_decimal(&value.value, digits),
            unit
        )),
        AngleForm::Dms => {
            if value.reference != ReferenceAngle::DEGREE {
                return Err(FormatError::UnsupportedForm(
                    value.reference.symbol().to_string(),
                ));
            }
            Ok(format_dms(&value.value, digits, ascii))
        }
    }
}

/// Exact rendering (`3π/2`, `1/3`, `180/π`), or a decimal for inexact values.
pub fn format_scalar_symbolic(v: &ExactScalar, digits: usize, ascii: bool) -> String {
    if v.is_exact() {
        v.render(ascii)
    } else {
        format_significant(v.to_f64(), digits)
    }
}

/// The exact decimal expansion of a rational value, if it terminates within
/// [`MAX_EXACT_DIGITS`] significant digits.
pub fn terminating_decimal(v: &ExactScalar) -> Option<String> {
    let (n, d) = v.as_rational()?;
    exact_decimal(n, d)
}

/// Decimal rendering: exact when the expansion terminates within
/// [`MAX_EXACT_DIGITS`] significant digits, else rounded to `digits`.
pub fn format_scalar_decimal(v: &ExactScalar, digits: usize) -> String {
    terminating_decimal(v).unwrap_or_else(|| format_significant(v.to_f64(), digits))
}

fn format_dms(v: &ExactScalar, digits: usize, ascii: bool) -> String {
    let (dm, mm, sm) = if ascii {
        ("d", "m", "s")
    } else {
        ("°", "′", "″")
    };
    let negative = v.signum() == std::cmp::Ordering::Less;
    let sign = if negative { "-" } else { "" };
    if let Some((n, d)) = v.as_rational() {
        let n = n.unsigned_abs() as i128;
        let degrees = n / d;
        let rem = n % d;
        // minutes and seconds as exact fractions over d
        let minutes = rem.checked_mul(60).map(|m| (m / d, m % d));
        if let Some((minutes, rem)) = minutes {
            if let Some(sec_num) = rem.checked_mul(60) {
                if let Ok(seconds) = ExactScalar::ratio(sec_num, d) {
                    let (sn, sd) = seconds.as_rational().expect("rational");
                    if let Some(sec) = exact_decimal(sn, sd) {
                        return format!("{sign}{degrees}{dm}{minutes}{mm}{sec}{sm}");
                    }
                }
            }
        }
    }
    let x = v.to_f64().abs();
    let digits = digits.min(15);
    let mut degrees = x.trunc();
    let mut minutes = ((x - degrees) * 60.0).trunc();
    let seconds = ((x - degrees) * 60.0 - minutes) * 60.0;
    let mut sec = format!("{:.*}", digits, seconds);
    if sec.contains('.') {
        sec = sec.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if sec.parse::<f64>().map(|s| s >= 60.0).unwrap_or(false) {
        sec = "0".to_string();
        minutes += 1.0;
    }
    if minutes >= 60.0 {
        minutes -= 60.0;
        degrees += 1.0;
    }
    format!("{sign}{degrees}{dm}{minutes}{mm}{sec}{sm}")
}

impl fmt::Display for AngleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AngleForm::Decimal => "decimal",
            AngleForm::SymbolicPi => "symbolic",
            AngleForm::Dms => "dms",
        })
    }
}
