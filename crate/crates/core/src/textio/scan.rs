//! Character scanner shared by the angle-literal and expression parsers.

use crate::exact::ExactScalar;

use super::{ParseError, ParseErrorKind};

/// Decimal literals with at most this many significant digits parse exactly.
pub const MAX_EXACT_DIGITS: usize = 15;

pub(crate) struct Scanner {
    chars: Vec<char>,
    pub pos: usize,
}

impl Scanner {
    pub fn new(text: &str) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    pub fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    pub fn skip_ws(&mut self) {
        while self.peek().map(char::is_whitespace).unwrap_or(false) {
            self.pos += 1;
        }
    }

    pub fn slice(&self, start: usize, end: usize) -> String {
        self.chars[start..end].iter().collect()
    }

    /// Consumes `word` if it appears next and is not followed by an
    /// identifier character.
    pub fn eat_word(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        let matches = word
            .chars()
            .enumerate()
            .all(|(i, c)| self.peek_at(i) == Some(c));
        let boundary = !self.peek_at(n).map(is_ident_continue).unwrap_or(false);
        if matches && boundary {
            self.pos += n;
            true
        } else {
            false
        }
    }

    /// `π` or the word `pi`.
    pub fn eat_pi(&mut self) -> bool {
        self.eat('π') || self.eat_word("pi")
    }

    pub fn at_pi(&self) -> bool {
        self.peek() == Some('π')
            || (self.peek() == Some('p')
                && self.peek_at(1) == Some('i')
                && !self.peek_at(2).map(is_ident_continue).unwrap_or(false))
    }

    pub fn at_digit(&self) -> bool {
        self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false)
    }

    pub fn at_decimal_start(&self) -> bool {
        self.at_digit()
            || (self.peek() == Some('.')
                && self.peek_at(1).map(|c| c.is_ascii_digit()).unwrap_or(false))
    }

    pub fn digits(&mut self) -> String {
        let start = self.pos;
        while self.at_digit() {
            self.pos += 1;
        }
        self.slice(start, self.pos)
    }

    /// An unsigned integer literal.
    pub fn integer(&mut self) -> Result<i128, ParseError> {
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error_here(ParseErrorKind::Syntax("expected an integer".into())));
        }
        digits.parse::<i128>().map_err(|_| {
            ParseError::new(
                ParseErrorKind::Syntax("integer literal too large".into()),
                start,
            )
        })
    }

    /// An unsigned decimal literal: `digits [. digits] [e [sign] digits]`
    /// or `. digits ...`.
    pub fn decimal(&mut self) -> Result<ExactScalar, ParseError> {
        let start = self.pos;
        if !self.at_decimal_start() {
            return Err(self.error_here(ParseErrorKind::Syntax("expected a number".into())));
        }
        let int_part = self.digits();
        let mut frac_part = String::new();
        if self.peek() == Some('.') && self.peek_at(1).map(|c| c.is_ascii_digit()).unwrap_or(true) {
            self.pos += 1;
            frac_part = self.digits();
        }
        let mut exponent: i64 = 0;
        if matches!(self.peek(), Some('e' | 'E')) {
            let (sign_len, negative) = match self.peek_at(1) {
                Some('+') => (1, false),
                Some('-') => (1, true),
                _ => (0, false),
            };
            if self
                .peek_at(1 + sign_len)
                .map(|c| c.is_ascii_digit())
                .unwrap_or(false)
            {
                self.pos += 1 + sign_len;
                let exp_start = self.pos;
                let e = self.digits();
                let e: i64 = e.parse().map_err(|_| {
                    ParseError::new(
                        ParseErrorKind::Syntax("exponent too large".into()),
                        exp_start,
                    )
                })?;
                exponent = if negative { -e } else { e };
            }
        }
        let text = self.slice(start, self.pos);
        Ok(decimal_value(&int_part, &frac_part, exponent)
            .unwrap_or_else(|| ExactScalar::inexact(text.parse::<f64>().unwrap_or(f64::NAN))))
    }

    pub fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        ParseError::new(kind, self.pos)
    }
}

pub(crate) fn is_ident_start(c: char) -> bool {
    (c.is_alphabetic() || c == '_') && c != 'π'
}

pub(crate) fn is_ident_continue(c: char) -> bool {
    (c.is_alphanumeric() || c == '_') && c != 'π'
}

/// Exact value of a decimal literal with few enough significant digits.
fn decimal_value(int_part: &str, frac_part: &str, exponent: i64) -> Option<ExactScalar> {
    let all: String = format!("{int_part}{frac_part}");
    let trimmed = all.trim_start_matches('0');
    if trimmed.is_empty() {
        return Some(ExactScalar::ZERO);
    }
    let significant = trimmed.trim_end_matches('0');
    if significant.len() > MAX_EXACT_DIGITS {
        return None;
    }
    // value = significant · 10^(shift)
    let dropped = (trimmed.len() - significant.len()) as i64;
    let shift = dropped - frac_part.len() as i64 + exponent;
    let mantissa: i128 = significant.parse().ok()?;
    if shift >= 0 {
        let scale = 10i128.checked_pow(u32::try_from(shift).ok()?)?;
        Some(ExactScalar::integer(mantissa.checked_mul(scale)?))
    } else {
        let scale = 10i128.checked_pow(u32::try_from(-shift).ok()?)?;
        ExactScalar::ratio(mantissa, scale).ok()
    }
}

/// Decimal expansion of `n/d` if it terminates and stays within
/// [`MAX_EXACT_DIGITS`] significant digits.
pub(crate) fn exact_decimal(n: i128, d: i128) -> Option<String> {
    let mut rest = d;
    let (mut twos, mut fives) = (0u32, 0u32);
    while rest % 2 == 0 {
        rest /= 2;
        twos += 1;
    }
    while rest % 5 == 0 {
        rest /= 5;
        fives += 1;
    }
    if rest != 1 {
        return None;
    }
    let places = twos.max(fives);
    let multiplier = 10i128.checked_pow(places)? / d;
    let scaled = n.checked_mul(multiplier)?;
    let digits = scaled.unsigned_abs().to_string();
    let significant = digits.trim_start_matches('0').trim_end_matches('0');
    if significant.len() > MAX_EXACT_DIGITS {
        return None;
    }
    let sign = if scaled < 0 { "-" } else { "" };
    let places = places as usize;
    if places == 0 {
        return Some(format!("{sign}{digits}"));
    }
    let padded = format!("{:0>width$}", digits, width = places + 1);
    let (int, frac) = padded.split_at(padded.len() - places);
    let frac = frac.trim_end_matches('0');
    Some(if frac.is_empty() {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(text: &str) -> ExactScalar {
        Scanner::new(text).decimal().unwrap()
    }

    #[test]
    fn short_decimals_are_exact() {
        assert_eq!(dec("0.5").parts(), Some((1, 2, 0)));
        assert_eq!(dec("56.7").parts(), Some((567, 10, 0)));
        assert_eq!(dec(".25").parts(), Some((1, 4, 0)));
        assert_eq!(dec("1200").parts(), Some((1200, 1, 0)));
        assert_eq!(dec("1.5e3").parts(), Some((1500, 1, 0)));
        assert_eq!(dec("25e-2").parts(), Some((1, 4, 0)));
        assert_eq!(dec("0.000").parts(), Some((0, 1, 0)));
        assert_eq!(dec("3.").parts(), Some((3, 1, 0)));
    }

    #[test]
    fn long_decimals_are_inexact() {
        let v = dec("3.1415926535897931");
        assert!(!v.is_exact());
        assert_eq!(v.to_f64(), std::f64::consts::PI);
        // fifteen significant digits still exact
        assert!(dec("123456789.012345").is_exact());
        assert!(!dec("1e400").is_exact());
    }

    #[test]
    fn exponent_needs_digits() {
        let mut s = Scanner::new("2e");
        assert_eq!(s.decimal().unwrap().parts(), Some((2, 1, 0)));
        assert_eq!(s.pos, 1);
    }

    #[test]
    fn terminating_expansions() {
        assert_eq!(exact_decimal(1, 2).as_deref(), Some("0.5"));
        assert_eq!(exact_decimal(-3, 8).as_deref(), Some("-0.375"));
        assert_eq!(exact_decimal(567, 10).as_deref(), Some("56.7"));
        assert_eq!(exact_decimal(1200, 1).as_deref(), Some("1200"));
        assert_eq!(exact_decimal(1, 3), None);
        assert_eq!(exact_decimal(1, 1 << 60), None);
    }
}
