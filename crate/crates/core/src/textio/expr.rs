//! The expression language read by the linter.
//!
//! ```text
//! statement := ("angle" | "length") ident ("=" equality)? | equality
//! equality  := sum ("=" sum)?
//! sum       := term (("+" | "-") term)*
//! term      := unary (("*" | "·" | "/") unary | unary)*
//! unary     := ("-" | "+") unary | primary
//! primary   := number unit? | dms | ident | function "(" equality ")" | "(" equality ")"
//! function  := "sin" | "cos" | "tan" | "arcsin" | "arccos" | "exp"
//! ```
//!
//! Numbers follow the angle-literal number grammar, so `3π/2 rad` is one
//! quantity. Juxtaposition multiplies (`2 r`). Unit words are reserved and
//! may only follow a number.

use std::fmt;

use crate::angle::ReferenceAngle;
use crate::exact::ExactScalar;

use super::scan::{is_ident_continue, is_ident_start, Scanner};
use super::{
    at_dms, scan_dms, scan_number, unit_for_symbol, ParseError, ParseErrorKind, UNIT_SYMBOLS,
};

/// Character offsets `[start, end)` into the parsed text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    Sin,
    Cos,
    Tan,
    Arcsin,
    Arccos,
    Exp,
}

impl Function {
    pub const ALL: [Function; 6] = [
        Function::Sin,
        Function::Cos,
        Function::Tan,
        Function::Arcsin,
        Function::Arccos,
        Function::Exp,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Function::Sin => "sin",
            Function::Cos => "cos",
            Function::Tan => "tan",
            Function::Arcsin => "arcsin",
            Function::Arccos => "arccos",
            Function::Exp => "exp",
        }
    }

    pub fn from_name(name: &str) -> Option<Function> {
        Function::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    /// A pure number, possibly a π-multiple.
    Number(ExactScalar),
    Identifier(String),
    /// A number followed by a unit symbol.
    Quantity {
        value: ExactScalar,
        unit: ReferenceAngle,
    },
    Apply {
        function: Function,
        argument: Box<Expr>,
    },
    Negate(Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Equality(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    fn new(kind: ExprKind, start: usize, end: usize) -> Self {
        Expr {
            kind,
            span: Span { start, end },
        }
    }

    fn binary(make: fn(Box<Expr>, Box<Expr>) -> ExprKind, a: Expr, b: Expr) -> Self {
        let (start, end) = (a.span.start, b.span.end);
        Expr::new(make(Box::new(a), Box::new(b)), start, end)
    }

    /// Direct subexpressions, left to right.
    pub fn children(&self) -> Vec<&Expr> {
        match &self.kind {
            ExprKind::Number(_) | ExprKind::Identifier(_) | ExprKind::Quantity { .. } => vec![],
            ExprKind::Apply { argument, .. } => vec![argument],
            ExprKind::Negate(a) => vec![a],
            ExprKind::Product(a, b)
            | ExprKind::Quotient(a, b)
            | ExprKind::Sum(a, b)
            | ExprKind::Difference(a, b)
            | ExprKind::Equality(a, b) => vec![a, b],
        }
    }

    /// This node and all its descendants, in pre-order.
    pub fn walk(&self) -> Vec<&Expr> {
        let mut out = vec![self];
        let mut i = 0;
        while i < out.len() {
            let children = out[i].children();
            out.splice(i + 1..i + 1, children);
            i += 1;
        }
        out
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Number(v) => write!(f, "{v}"),
            ExprKind::Identifier(name) => f.write_str(name),
            ExprKind::Quantity { value, unit } => write!(f, "{value} {}", unit.symbol()),
            ExprKind::Apply { function, argument } => write!(f, "{}({argument})", function.name()),
            ExprKind::Negate(a) => write!(f, "-({a})"),
            ExprKind::Product(a, b) => write!(f, "({a} * {b})"),
            ExprKind::Quotient(a, b) => write!(f, "({a} / {b})"),
            ExprKind::Sum(a, b) => write!(f, "({a} + {b})"),
            ExprKind::Difference(a, b) => write!(f, "({a} - {b})"),
            ExprKind::Equality(a, b) => write!(f, "{a} = {b}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeclKind {
    Angle,
    Length,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Declaration {
        kind: DeclKind,
        name: String,
        name_span: Span,
        value: Option<Expr>,
    },
    Expression(Expr),
}

fn syntax(message: impl Into<String>, position: usize) -> ParseError {
    ParseError::new(ParseErrorKind::Syntax(message.into()), position)
}

fn is_unit_word(word: &str) -> bool {
    UNIT_SYMBOLS.iter().any(|(s, _)| *s == word)
}

struct Parser {
    s: Scanner,
}

impl Parser {
    fn identifier(&mut self) -> Option<(String, usize)> {
        self.s.skip_ws();
        let start = self.s.pos;
        match self.s.peek() {
            Some(c) if is_ident_start(c) && !self.s.at_pi() => {
                while self.s.peek().map(is_ident_continue).unwrap_or(false) {
                    self.s.bump();
                }
                Some((self.s.slice(start, self.s.pos), start))
            }
            _ => None,
        }
    }

    fn equality(&mut self) -> Result<Expr, ParseError> {
        let left = self.sum()?;
        self.s.skip_ws();
        if !self.s.eat('=') {
            return Ok(left);
        }
        let right = self.sum()?;
        self.s.skip_ws();
        if self.s.peek() == Some('=') {
            return Err(self
                .s
                .error_here(ParseErrorKind::Syntax("chained `=`".into())));
        }
        Ok(Expr::binary(ExprKind::Equality, left, right))
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.s.skip_ws();
            let make: fn(Box<Expr>, Box<Expr>) -> ExprKind = if self.s.eat('+') {
                ExprKind::Sum
            } else if self.s.eat('-') || self.s.eat('−') {
                ExprKind::Difference
            } else {
                return Ok(acc);
            };
            let right = self.term()?;
            acc = Expr::binary(make, acc, right);
        }
    }

    fn starts_primary(&self) -> bool {
        match self.s.peek() {
            Some('(') => true,
            Some(c) if is_ident_start(c) => true,
            _ => self.s.at_pi() || self.s.at_decimal_start(),
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            self.s.skip_ws();
            let make: fn(Box<Expr>, Box<Expr>) -> ExprKind = if self.s.eat('*') || self.s.eat('·')
            {
                ExprKind::Product
            } else if self.s.eat('/') {
                ExprKind::Quotient
            } else if self.starts_primary() {
                ExprKind::Product
            } else {
                return Ok(acc);
            };
            let right = self.unary()?;
            acc = Expr::binary(make, acc, right);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        self.s.skip_ws();
        let start = self.s.pos;
        if self.s.eat('-') || self.s.eat('−') {
            let inner = self.unary()?;
            let end = inner.span.end;
            return Ok(Expr::new(ExprKind::Negate(Box::new(inner)), start, end));
        }
        if self.s.eat('+') {
            return self.unary();
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        self.s.skip_ws();
        let start = self.s.pos;
        if self.s.eat('(') {
            let inner = self.equality()?;
            self.s.skip_ws();
            if !self.s.eat(')') {
                return Err(self
                    .s
                    .error_here(ParseErrorKind::Syntax("expected `)`".into())));
            }
            return Ok(Expr::new(inner.kind, start, self.s.pos));
        }
        if at_dms(&self.s) {
            let value = scan_dms(&mut self.s)?;
            return Ok(Expr::new(
                ExprKind::Quantity {
                    value,
                    unit: ReferenceAngle::DEGREE,
                },
                start,
                self.s.pos,
            ));
        }
        if self.s.at_pi() || self.s.at_decimal_start() {
            return self.number();
        }
        if let Some((name, at)) = self.identifier() {
            if let Some(function) = Function::from_name(&name) {
                self.s.skip_ws();
                if !self.s.eat('(') {
                    return Err(self.s.error_here(ParseErrorKind::Syntax(format!(
                        "expected `(` after `{name}`"
                    ))));
                }
                let argument = self.equality()?;
                self.s.skip_ws();
                if !self.s.eat(')') {
                    return Err(self
                        .s
                        .error_here(ParseErrorKind::Syntax("expected `)`".into())));
                }
                return Ok(Expr::new(
                    ExprKind::Apply {
                        function,
                        argument: Box::new(argument),
                    },
                    start,
                    self.s.pos,
                ));
            }
            if is_unit_word(&name) {
                return Err(syntax(
                    format!("unit symbol `{name}` must follow a number"),
                    at,
                ));
            }
            self.s.skip_ws();
            if self.s.peek() == Some('(') {
                return Err(syntax(format!("unknown function `{name}`"), at));
            }
            return Ok(Expr::new(ExprKind::Identifier(name), start, self.s.pos));
        }
        match self.s.peek() {
            None => Err(self
                .s
                .error_here(ParseErrorKind::Syntax("expected an expression".into()))),
            Some(c @ ('°' | '′' | '″')) => Err(syntax(
                format!("unit symbol `{c}` must follow a number"),
                start,
            )),
            Some(c) => Err(syntax(format!("unexpected `{c}`"), start)),
        }
    }

    /// A number, possibly followed by a unit symbol.
    fn number(&mut self) -> Result<Expr, ParseError> {
        let start = self.s.pos;
        let value = match scan_number(&mut self.s) {
            Ok((v, _)) => v,
            Err(_) => {
                // not a literal fraction: leave `/` to the term level
                self.s.pos = start;
                if self.s.eat_pi() {
                    ExactScalar::PI
                } else {
                    let v = self.s.decimal()?;
                    let save = self.s.pos;
                    self.s.skip_ws();
                    if self.s.eat_pi() {
                        v.checked_mul(&ExactScalar::PI)
                            .map_err(|e| ParseError::new(ParseErrorKind::Arithmetic(e), start))?
                    } else {
                        self.s.pos = save;
                        v
                    }
                }
            }
        };
        let end = self.s.pos;
        self.s.skip_ws();
        if let Some(unit) = self.unit() {
            return Ok(Expr::new(
                ExprKind::Quantity { value, unit },
                start,
                self.s.pos,
            ));
        }
        self.s.pos = end;
        Ok(Expr::new(ExprKind::Number(value), start, end))
    }

    fn unit(&mut self) -> Option<ReferenceAngle> {
        let start = self.s.pos;
        match self.s.peek() {
            Some(c @ ('°' | '′' | '″')) => {
                self.s.bump();
                unit_for_symbol(&c.to_string())
            }
            Some(c) if is_ident_start(c) => {
                while self.s.peek().map(is_ident_continue).unwrap_or(false) {
                    self.s.bump();
                }
                let word = self.s.slice(start, self.s.pos);
                let unit = unit_for_symbol(&word);
                if unit.is_none() {
                    self.s.pos = start;
                }
                unit
            }
            _ => None,
        }
    }
}

/// Parses one expression; the whole input must be consumed.
pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        s: Scanner::new(text),
    };
    let e = p.equality()?;
    p.s.skip_ws();
    if !p.s.at_end() {
        return Err(p
            .s
            .error_here(ParseErrorKind::Syntax("unexpected trailing input".into())));
    }
    Ok(e)
}

/// Parses a declaration (`angle a = …`, `length r`) or a bare expression.
pub fn parse_statement(text: &str) -> Result<Statement, ParseError> {
    let mut p = Parser {
        s: Scanner::new(text),
    };
    p.s.skip_ws();
    let kind = if p.s.eat_word("angle") {
        Some(DeclKind::Angle)
    } else if p.s.eat_word("length") {
        Some(DeclKind::Length)
    } else {
        None
    };
    if let Some(kind) = kind {
        if let Some((name, at)) = p.identifier() {
            if Function::from_name(&name).is_some() || is_unit_word(&name) {
                return Err(syntax(format!("`{name}` is reserved"), at));
            }
            let name_span = Span {
                start: at,
                end: p.s.pos,
            };
            p.s.skip_ws();
            let value = if p.s.eat('=') { Some(p.sum()?) } else { None };
            p.s.skip_ws();
            if !p.s.at_end() {
                return Err(p
                    .s
                    .error_here(ParseErrorKind::Syntax("unexpected trailing input".into())));
            }
            return Ok(Statement::Declaration {
                kind,
                name,
                name_span,
                value,
            });
        }
        // otherwise the keyword is an ordinary identifier
    }
    parse_expression(text).map(Statement::Expression)
}
