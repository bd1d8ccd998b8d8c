//! Notation linter for the expression language in [`crate::textio`].
//!
//! Input is read line by line; `#` starts a comment. Lines may declare
//! identifiers as angle- or length-valued (`angle a`, `length r = 2`), or
//! state expressions and equations. Three misuses are reported:
//!
//! * `RAD-IN-TRIG-ARG`: a quantity with a unit symbol inside the argument
//!   of `sin`, `cos`, `tan`, `arcsin`, `arccos` or `exp`. Arguments are pure
//!   numbers.
//! * `MISSING-REFERENCE-SYMBOL`: an angle is given a bare number or
//!   π-expression, with no reference-angle symbol.
//! * `MAGNITUDE-AS-QUOTIENT`: an angle is equated to a quotient of two
//!   lengths, as in `α = s/r`.
//!
//! Lines that do not parse produce a finding without a rule.

use std::collections::HashMap;
use std::fmt;

use crate::angle::AngleValue;
use crate::textio::{parse_statement, DeclKind, Expr, ExprKind, Span, Statement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LintRule {
    RadInTrigArg,
    MissingReferenceSymbol,
    MagnitudeAsQuotient,
}

impl LintRule {
    pub const ALL: [LintRule; 3] = [
        LintRule::RadInTrigArg,
        LintRule::MissingReferenceSymbol,
        LintRule::MagnitudeAsQuotient,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            LintRule::RadInTrigArg => "RAD-IN-TRIG-ARG",
            LintRule::MissingReferenceSymbol => "MISSING-REFERENCE-SYMBOL",
            LintRule::MagnitudeAsQuotient => "MAGNITUDE-AS-QUOTIENT",
        }
    }
}

impl fmt::Display for LintRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LintFinding {
    /// `None` for lines that failed to parse.
    pub rule: Option<LintRule>,
    /// 1-based line number.
    pub line: usize,
    /// 1-based column, counted in characters.
    pub column: usize,
    pub message: String,
    pub excerpt: String,
}

impl fmt::Display for LintFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = self.rule.map(|r| r.code()).unwrap_or("syntax");
        write!(
            f,
            "{}:{}: {}: {} [{}]",
            self.line, self.column, rule, self.message, self.excerpt
        )
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Whether `e` is built only from numbers (π included) by arithmetic.
fn is_bare_number(e: &Expr) -> bool {
    match &e.kind {
        ExprKind::Number(_) => true,
        ExprKind::Negate(a) => is_bare_number(a),
        ExprKind::Product(a, b)
        | ExprKind::Quotient(a, b)
        | ExprKind::Sum(a, b)
        | ExprKind::Difference(a, b) => is_bare_number(a) && is_bare_number(b),
        _ => false,
    }
}

struct LineLinter<'a> {
    line_no: usize,
    chars: Vec<char>,
    declared: &'a HashMap<String, DeclKind>,
    findings: Vec<LintFinding>,
}

impl LineLinter<'_> {
    fn excerpt(&self, span: Span) -> String {
        let end = span.end.min(self.chars.len());
        let start = span.start.min(end);
        self.chars[start..end]
            .iter()
            .collect::<String>()
            .trim()
            .to_string()
    }

    fn report(&mut self, rule: LintRule, span: Span, message: String) {
        self.findings.push(LintFinding {
            rule: Some(rule),
            line: self.line_no,
            column: span.start + 1,
            message,
            excerpt: self.excerpt(span),
        });
    }

    fn is(&self, e: &Expr, kind: DeclKind) -> Option<String> {
        match &e.kind {
            ExprKind::Identifier(name) if self.declared.get(name) == Some(&kind) => {
                Some(name.clone())
            }
            _ => None,
        }
    }

    fn units_in_arguments(&mut self, e: &Expr) {
        let mut seen: Vec<Span> = Vec::new();
        for node in e.walk() {
            let ExprKind::Apply { function, argument } = &node.kind else {
                continue;
            };
            for inner in argument.walk() {
                let ExprKind::Quantity { value, unit } = &inner.kind else {
                    continue;
                };
                if seen.contains(&inner.span) {
                    continue;
                }
                seen.push(inner.span);
                let quantity = self.excerpt(inner.span);
                let hint = match AngleValue::new(*value, unit.clone()).measure() {
                    Ok(m) if m.phi().is_exact() => {
                        format!("; write the measure {} instead", m.phi())
                    }
                    _ => String::new(),
                };
                self.report(
                    LintRule::RadInTrigArg,
                    inner.span,
                    format!(
                        "the argument of {} is a pure number; `{quantity}` must not carry the unit symbol `{}`{hint}",
                        function.name(),
                        unit.symbol()
                    ),
                );
            }
        }
    }

    /// Checks the value assigned to the angle `name`.
    fn angle_assignment(&mut self, name: &str, value: &Expr) {
        if is_bare_number(value) {
            let hint = match &value.kind {
                ExprKind::Number(v) if v.is_exact() => format!(", e.g. `{v} rad`"),
                _ => String::new(),
            };
            self.report(
                LintRule::MissingReferenceSymbol,
                value.span,
                format!(
                    "the numerical value of angle `{name}` must be stated with the symbol of its reference angle{hint}"
                ),
            );
            return;
        }
        if let ExprKind::Quotient(a, b) = &value.kind {
            if let (Some(s), Some(r)) = (self.is(a, DeclKind::Length), self.is(b, DeclKind::Length))
            {
                self.report(
                    LintRule::MagnitudeAsQuotient,
                    value.span,
                    format!(
                        "the angle `{name}` is not the quotient of the lengths `{s}` and `{r}`; \
                         {s}/{r} is its measure, a pure number (φ = {s}/{r})"
                    ),
                );
            }
        }
    }

    fn equation(&mut self, e: &Expr) {
        if let ExprKind::Equality(a, b) = &e.kind {
            if let Some(name) = self.is(a, DeclKind::Angle) {
                self.angle_assignment(&name, b);
            } else if let Some(name) = self.is(b, DeclKind::Angle) {
                self.angle_assignment(&name, a);
            }
        }
    }
}

/// Lints a whole text.
pub fn lint(text: &str) -> Vec<LintFinding> {
    let mut declared: HashMap<String, DeclKind> = HashMap::new();
    let mut findings = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line = strip_comment(raw_line);
        if line.trim().is_empty() {
            continue;
        }
        let statement = match parse_statement(line) {
            Ok(s) => s,
            Err(e) => {
                findings.push(LintFinding {
                    rule: None,
                    line: i + 1,
                    column: e.position + 1,
                    message: e.kind.to_string(),
                    excerpt: line.trim().to_string(),
                });
                continue;
            }
        };
        if let Statement::Declaration { kind, name, .. } = &statement {
            declared.insert(name.clone(), *kind);
        }
        let mut linter = LineLinter {
            line_no: i + 1,
            chars: line.chars().collect(),
            declared: &declared,
            findings: Vec::new(),
        };
        match &statement {
            Statement::Declaration {
                kind,
                name,
                value: Some(value),
                ..
            } => {
                linter.units_in_arguments(value);
                if *kind == DeclKind::Angle {
                    linter.angle_assignment(name, value);
                }
            }
            Statement::Declaration { value: None, .. } => {}
            Statement::Expression(e) => {
                linter.units_in_arguments(e);
                linter.equation(e);
            }
        }
        findings.extend(linter.findings);
    }
    findings
}
