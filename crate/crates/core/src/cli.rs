//! The `refangle` command line.
//!
//! Exit codes: 0 success, 1 lint findings, 2 parse or usage error, 3 unknown
//! unit, 4 invalid radius, 5 value out of range, 6 domain error.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::angle::{AngleError, AngleValue, Magnitude, Measure, ReferenceAngle};
use crate::exact::{format_significant, ExactScalar};
use crate::geometry::{self, ArcSpec, GeometryError, PlanarPoint};
use crate::lint::{lint, LintRule};
use crate::textio::{
    format_angle_styled, format_scalar_symbolic, parse_angle, parse_number, terminating_decimal,
    unit_for_symbol, AngleForm, ParseError, ParseErrorKind,
};
use crate::trig::{eval_inverse, InverseKind, PeriodizedFunction, TrigError, TrigKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNIT: i32 = 3;
pub const EXIT_RADIUS: i32 = 4;
pub const EXIT_RANGE: i32 = 5;
pub const EXIT_DOMAIN: i32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// One line per result.
    Human,
    /// `key=value` lines, records separated by a blank line.
    Records,
}

#[derive(Debug, Parser)]
#[command(
    name = "refangle",
    version,
    about = "Angles, reference angles and angular measures"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,
    /// Write `pi`, `deg`, `arcmin`, `arcsec` instead of π, °, ′, ″.
    #[arg(long, global = true)]
    ascii: bool,
    /// Significant digits for approximate numbers.
    #[arg(long, global = true, default_value_t = 17, value_parser = clap::value_parser!(u8).range(1..=17))]
    digits: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TrigFunction {
    Sin,
    Cos,
    Tan,
    Arcsin,
    Arccos,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Restate an angle relative to another reference angle.
    Convert {
        #[arg(allow_hyphen_values = true)]
        literal: String,
        /// Target unit symbol or name (rad, °, deg, gon, turn, arcmin, arcsec, ...).
        target: String,
    },
    /// The angular measure of an angle, a pure number.
    Measure {
        #[arg(allow_hyphen_values = true)]
        literal: String,
    },
    /// Arc length s = φ·r; a bare number is taken as the measure φ.
    Arc {
        #[arg(allow_hyphen_values = true)]
        angle: String,
        #[arg(allow_hyphen_values = true)]
        radius: String,
    },
    /// Chord length 2r·sin(φ/2).
    Chord {
        #[arg(allow_hyphen_values = true)]
        angle: String,
        #[arg(allow_hyphen_values = true)]
        radius: String,
    },
    /// Sum of two magnitudes in (0, π], modulo the straight angle.
    Add {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// The angle ∠POQ from three points given as `x,y`.
    Points {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        o: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Trigonometric functions with principal period p.
    Trig {
        #[arg(value_enum)]
        function: TrigFunction,
        /// A pure number, or x ∈ [-1, 1] for the inverse functions.
        #[arg(allow_hyphen_values = true)]
        argument: String,
        /// Principal period p, a pure number such as 360 or 2π.
        #[arg(long, default_value = "2π", allow_hyphen_values = true)]
        period: String,
    },
    /// Name an angle in [0, p] (acute, right, ...).
    Classify {
        #[arg(allow_hyphen_values = true)]
        literal: String,
    },
    /// Conversion factors between the builtin reference angles.
    Table,
    /// Check notation in a file, or standard input when no path is given.
    Lint { path: Option<PathBuf> },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        let code = match e.kind {
            ParseErrorKind::UnknownUnit(_) => EXIT_UNIT,
            _ => EXIT_PARSE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<AngleError> for Failure {
    fn from(e: AngleError) -> Self {
        let code = match e {
            AngleError::Arithmetic(_) | AngleError::InvalidReference(_) => EXIT_DOMAIN,
            _ => EXIT_RANGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<TrigError> for Failure {
    fn from(e: TrigError) -> Self {
        Failure::new(EXIT_DOMAIN, e.to_string())
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Angle(a) => a.into(),
            other => Failure::new(EXIT_DOMAIN, other.to_string()),
        }
    }
}

type Record = Vec<(&'static str, String)>;

/// What a command prints: human lines, and the same content as records.
#[derive(Default)]
struct Output {
    lines: Vec<String>,
    records: Vec<Record>,
    code: i32,
}

impl Output {
    fn single(line: String, record: Record) -> Self {
        Output {
            lines: vec![line],
            records: vec![record],
            code: EXIT_OK,
        }
    }
}

struct Style {
    ascii: bool,
    digits: usize,
}

impl Style {
    /// Terminating decimals as decimals, other exact values symbolically.
    fn scalar(&self, v: &ExactScalar) -> String {
        terminating_decimal(v).unwrap_or_else(|| format_scalar_symbolic(v, self.digits, self.ascii))
    }

    fn decimal(&self, v: &ExactScalar) -> String {
        format_significant(v.to_f64(), self.digits)
    }

    fn number(&self, x: f64) -> String {
        format_significant(x, self.digits)
    }

    fn angle(&self, v: &AngleValue) -> String {
        let form = if terminating_decimal(&v.value).is_some() {
            AngleForm::Decimal
        } else {
            AngleForm::SymbolicPi
        };
        format_angle_styled(v, form, self.digits, self.ascii)
            .expect("decimal and symbolic forms always apply")
    }

    fn unit(&self, r: &ReferenceAngle) -> String {
        r.symbol_in(self.ascii).to_string()
    }

    fn angle_record(&self, v: &AngleValue) -> Record {
        vec![
            ("value", self.scalar(&v.value)),
            ("unit", self.unit(&v.reference)),
            ("exact", v.value.is_exact().to_string()),
            ("decimal", self.decimal(&v.value)),
        ]
    }
}

/// A target unit given by symbol (`rad`, `°`, `deg`, ...) or name (`degree`).
fn resolve_unit(text: &str) -> Result<ReferenceAngle, Failure> {
    let t = text.trim();
    unit_for_symbol(t)
        .or_else(|| {
            ReferenceAngle::builtins()
                .into_iter()
                .find(|r| r.name() == t || format!("{}s", r.name()) == t)
        })
        .ok_or_else(|| Failure::new(EXIT_UNIT, format!("unknown unit symbol `{t}`")))
}

/// An angle literal, or a bare number read as a measure.
fn angle_or_measure(text: &str) -> Result<Measure, Failure> {
    match parse_angle(text) {
        Ok(lit) => Ok(lit.parsed.measure()?),
        Err(ParseError {
            kind: ParseErrorKind::MissingReferenceAngle,
            ..
        }) => Ok(Measure::new(parse_number(text)?)),
        Err(e) => Err(e.into()),
    }
}

fn radius(text: &str) -> Result<ExactScalar, Failure> {
    let r = parse_number(text)?;
    let rf = r.to_f64();
    if !(rf > 0.0 && rf.is_finite()) {
        return Err(Failure::new(
            EXIT_RADIUS,
            format!("radius must be positive, got {text}"),
        ));
    }
    Ok(r)
}

fn point(text: &str) -> Result<PlanarPoint, Failure> {
    let Some((x, y)) = text.split_once(',') else {
        return Err(Failure::new(
            EXIT_PARSE,
            format!("expected a point `x,y`, got `{text}`"),
        ));
    };
    let x = parse_number(x)?.to_f64();
    let y = parse_number(y)?.to_f64();
    Ok(PlanarPoint::new(x, y)?)
}

fn magnitude(text: &str) -> Result<(AngleValue, Magnitude), Failure> {
    let v = parse_angle(text)?.parsed;
    let m = Magnitude::new(v.measure()?)?;
    Ok((v, m))
}

fn trig_argument(text: &str, function: &str) -> Result<ExactScalar, Failure> {
    parse_number(text).map_err(|e| match e.kind {
        ParseErrorKind::UnexpectedUnit(unit) => Failure::new(
            EXIT_DOMAIN,
            format!(
                "{}: the argument of {function} is a pure number (an angular measure); remove the unit symbol `{unit}`",
                LintRule::RadInTrigArg.code()
            ),
        ),
        _ => e.into(),
    })
}

fn execute(command: Command, style: &Style, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match command {
        Command::Convert { literal, target } => {
            let target = resolve_unit(&target)?;
            let v = parse_angle(&literal)?.parsed.convert(&target)?;
            Ok(Output::single(style.angle(&v), style.angle_record(&v)))
        }
        Command::Measure { literal } => {
            let phi = parse_angle(&literal)?.parsed.measure()?.phi();
            let record = vec![
                ("measure", style.scalar(&phi)),
                ("exact", phi.is_exact().to_string()),
                ("decimal", style.decimal(&phi)),
            ];
            Ok(Output::single(style.scalar(&phi), record))
        }
        Command::Arc { angle, radius: r } => {
            let measure = angle_or_measure(&angle)?;
            let r = radius(&r)?;
            let arc = ArcSpec::new(r.to_f64(), measure)?;
            let phi = measure.phi();
            let s = match phi.checked_mul(&r) {
                Ok(exact) if exact.is_exact() => exact.to_f64(),
                _ => geometry::arc_length(&arc),
            };
            let mut line = style.number(s);
            if matches!(phi.pi_exponent(), Some(e) if e != 0) {
                let dot = if style.ascii { "*" } else { "·" };
                line = format!("{line}  (s = {}{dot}r)", style.scalar(&phi));
            }
            let record = vec![
                ("length", style.number(s)),
                ("measure", style.scalar(&phi)),
                ("radius", style.scalar(&r)),
            ];
            Ok(Output::single(line, record))
        }
        Command::Chord { angle, radius: r } => {
            let measure = angle_or_measure(&angle)?;
            let r = radius(&r)?;
            let value = AngleValue::from_measure(measure, &ReferenceAngle::RADIAN)?;
            let c = geometry::chord_length(&value, r.to_f64())?;
            let record = vec![
                ("chord", style.number(c)),
                ("measure", style.scalar(&measure.phi())),
                ("radius", style.scalar(&r)),
            ];
            Ok(Output::single(style.number(c), record))
        }
        Command::Add { first, second } => {
            let (a, ma) = magnitude(&first)?;
            let (_, mb) = magnitude(&second)?;
            let sum = ma.semigroup_add(&mb)?;
            let v = AngleValue::from_measure(sum.measure(), &a.reference)?;
            let mut record = style.angle_record(&v);
            record.push(("measure", style.scalar(&sum.phi())));
            Ok(Output::single(style.angle(&v), record))
        }
        Command::Points { p, o, q } => {
            let m = geometry::angle_from_points(point(&p)?, point(&o)?, point(&q)?)?;
            let degrees = AngleValue::from_measure(m.measure(), &ReferenceAngle::DEGREE)?;
            let line = format!("{} (= {})", style.scalar(&m.phi()), style.angle(&degrees));
            let record = vec![
                ("measure", style.scalar(&m.phi())),
                ("exact", m.phi().is_exact().to_string()),
                ("decimal", style.decimal(&m.phi())),
                ("degrees", style.scalar(&degrees.value)),
            ];
            Ok(Output::single(line, record))
        }
        Command::Trig {
            function,
            argument,
            period,
        } => {
            let p = parse_number(&period)?;
            let name = function
                .to_possible_value()
                .expect("not skipped")
                .get_name()
                .to_string();
            let forward = match function {
                TrigFunction::Sin => Some(TrigKind::Sin),
                TrigFunction::Cos => Some(TrigKind::Cos),
                TrigFunction::Tan => Some(TrigKind::Tan),
                _ => None,
            };
            if let Some(kind) = forward {
                let x = trig_argument(&argument, &name)?;
                let y = PeriodizedFunction::new(kind, p)?.eval_scalar(&x)?;
                let record = vec![
                    ("function", name),
                    ("period", style.scalar(&p)),
                    ("argument", style.scalar(&x)),
                    ("value", style.number(y)),
                ];
                return Ok(Output::single(style.number(y), record));
            }
            let kind = if function == TrigFunction::Arcsin {
                InverseKind::Arcsin
            } else {
                InverseKind::Arccos
            };
            let x = trig_argument(&argument, &name)?;
            let v = eval_inverse(kind, p, x.to_f64())?;
            let mut record = vec![("function", name), ("period", style.scalar(&p))];
            record.extend(style.angle_record(&v));
            Ok(Output::single(style.angle(&v), record))
        }
        Command::Classify { literal } => {
            let v = parse_angle(&literal)?.parsed;
            let class = v.classify()?;
            let mut record = style.angle_record(&v);
            record.push(("class", class.name().to_string()));
            Ok(Output::single(class.name().to_string(), record))
        }
        Command::Table => {
            let refs = ReferenceAngle::builtins();
            let mut cells: Vec<Vec<String>> = vec![std::iter::once("from \\ to".to_string())
                .chain(refs.iter().map(|r| style.unit(r)))
                .collect()];
            let mut out = Output::default();
            for from in &refs {
                let mut row = vec![style.unit(from)];
                for to in &refs {
                    let f = to
                        .full_circle()
                        .checked_div(&from.full_circle())
                        .map_err(AngleError::from)?;
                    row.push(format_scalar_symbolic(&f, style.digits, style.ascii));
                    out.records.push(vec![
                        ("from", style.unit(from)),
                        ("to", style.unit(to)),
                        (
                            "factor",
                            format_scalar_symbolic(&f, style.digits, style.ascii),
                        ),
                    ]);
                }
                cells.push(row);
            }
            let widths: Vec<usize> = (0..cells[0].len())
                .map(|c| {
                    cells
                        .iter()
                        .map(|row| row[c].chars().count())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for row in &cells {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
                    .collect();
                out.lines.push(padded.join("  ").trim_end().to_string());
            }
            Ok(out)
        }
        Command::Lint { path } => {
            let mut text = String::new();
            match &path {
                Some(p) if p.as_os_str() != "-" => {
                    text = std::fs::read_to_string(p).map_err(|e| {
                        Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", p.display()))
                    })?;
                }
                _ => {
                    stdin.read_to_string(&mut text).map_err(|e| {
                        Failure::new(EXIT_PARSE, format!("cannot read standard input: {e}"))
                    })?;
                }
            }
            let findings = lint(&text);
            let mut out = Output {
                code: if findings.is_empty() {
                    EXIT_OK
                } else {
                    EXIT_FINDINGS
                },
                ..Output::default()
            };
            for f in findings {
                out.lines.push(f.to_string());
                out.records.push(vec![
                    (
                        "rule",
                        f.rule.map(|r| r.code()).unwrap_or("syntax").to_string(),
                    ),
                    ("line", f.line.to_string()),
                    ("column", f.column.to_string()),
                    ("message", f.message.clone()),
                    ("excerpt", f.excerpt.clone()),
                ]);
            }
            Ok(out)
        }
    }
}

fn emit(out: &Output, format: OutputFormat, stdout: &mut dyn Write) -> std::io::Result<()> {
    match format {
        OutputFormat::Human => {
            for line in &out.lines {
                writeln!(stdout, "{line}")?;
            }
        }
        OutputFormat::Records => {
            for (i, record) in out.records.iter().enumerate() {
                if i > 0 {
                    writeln!(stdout)?;
                }
                for (k, v) in record {
                    writeln!(stdout, "{k}={}", v.replace('\n', " "))?;
                }
            }
        }
    }
    Ok(())
}

/// Runs one invocation; `args` includes the program name. Returns the exit
/// code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_PARSE
                }
            };
        }
    };
    let style = Style {
        ascii: cli.ascii,
        digits: cli.digits as usize,
    };
    match execute(cli.command, &style, stdin) {
        Ok(out) => match emit(&out, cli.format, stdout) {
            Ok(()) => out.code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_PARSE
            }
        },
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
