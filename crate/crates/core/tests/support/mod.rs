//! Oracles, generators and fixtures shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use refangle::lint::LintRule;
use refangle::{ExactScalar, ReferenceAngle};

/// π to 60 decimals, written out independently of the library.
pub const PI_60: &str = "3.141592653589793238462643383279502884197169399375105820974944";

/// Runs the CLI in-process; returns (exit code, stdout, stderr).
pub fn cli(args: &[&str]) -> (i32, String, String) {
    cli_with_stdin(args, "")
}

pub fn cli_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["refangle"];
    argv.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = refangle::cli::run(argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 stdout"),
        String::from_utf8(err).expect("utf-8 stderr"),
    )
}

pub fn big(n: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// π as the exact rational given by [`PI_60`].
pub fn pi_rational() -> BigRational {
    let digits: String = PI_60.chars().filter(|c| c.is_ascii_digit()).collect();
    let scale = BigInt::from(10).pow((digits.len() - 1) as u32);
    BigRational::new(digits.parse::<BigInt>().unwrap(), scale)
}

/// The real value of an exact scalar as a big rational, with π replaced by
/// its 60-digit truncation.
pub fn approx_big(v: &ExactScalar) -> BigRational {
    let (n, d, e) = v.parts().expect("exact value");
    let r = BigRational::new(BigInt::from(n), BigInt::from(d));
    match e {
        0 => r,
        1 => r * pi_rational(),
        -1 => r / pi_rational(),
        _ => unreachable!(),
    }
}

/// Correctly rounded f64 of a big rational, through a 40-digit decimal
/// string and the standard library's float parser.
pub fn big_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let negative = x.is_negative();
    let x = x.abs();
    // find k with 10^k <= x < 10^(k+1), starting from a float estimate
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut k = x.to_f64().map(|f| f.log10().floor() as i32).unwrap_or(0);
    let power = |k: i32| {
        if k >= 0 {
            ten.pow(k)
        } else {
            ten.pow(-k).recip()
        }
    };
    while x < power(k) {
        k -= 1;
    }
    while x >= power(k + 1) {
        k += 1;
    }
    let y = &x / power(k);
    let scaled = y * BigRational::from_integer(BigInt::from(10).pow(40));
    let mantissa = scaled.round().to_integer().to_string();
    let text = format!(
        "{}{}.{}e{}",
        if negative { "-" } else { "" },
        &mantissa[..1],
        &mantissa[1..],
        k
    );
    text.parse().unwrap()
}

/// Distance in units in the last place.
pub fn ulps(a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let scale = a.abs().max(b.abs());
    let ulp = f64::EPSILON * 2f64.powi(scale.log2().floor() as i32);
    (a - b).abs() / ulp
}

/// The exact expected value of `value · p_to / p_from`, as parts, computed
/// with big rationals.
pub fn expected_conversion(
    value: &ExactScalar,
    from: &ReferenceAngle,
    to: &ReferenceAngle,
) -> (BigRational, i8) {
    let (n, d, e) = value.parts().unwrap();
    let (fn_, fd, fe) = from.full_circle().parts().unwrap();
    let (tn, td, te) = to.full_circle().parts().unwrap();
    let r = BigRational::new(BigInt::from(n), BigInt::from(d))
        * BigRational::new(BigInt::from(tn), BigInt::from(td))
        / BigRational::new(BigInt::from(fn_), BigInt::from(fd));
    (r, e + te - fe)
}

pub fn parts_big(v: &ExactScalar) -> (BigRational, i8) {
    let (n, d, e) = v.parts().expect("exact value");
    let r = BigRational::new(BigInt::from(n), BigInt::from(d));
    if r.is_zero() {
        (r, 0)
    } else {
        (r, e)
    }
}

/// A random exact rational `n/d` with `|n| <= max_num`, `1 <= d <= max_den`.
pub fn random_rational<R: Rng>(rng: &mut R, max_num: i128, max_den: i128) -> ExactScalar {
    let n = rng.gen_range(-max_num..=max_num);
    let d = rng.gen_range(1..=max_den);
    ExactScalar::ratio(n, d).unwrap()
}

/// A random exact value with π exponent −1, 0 or 1.
pub fn random_exact<R: Rng>(rng: &mut R) -> ExactScalar {
    let n = rng.gen_range(-100_000i128..=100_000);
    let d = rng.gen_range(1i128..=10_000);
    let e = rng.gen_range(-1i8..=1);
    ExactScalar::with_pi_exponent(n, d, e).unwrap()
}

/// A random magnitude measure `(n/d)·π` in `(0, π]`.
pub fn random_semigroup_measure<R: Rng>(rng: &mut R) -> ExactScalar {
    let d = rng.gen_range(1i128..=720);
    let n = rng.gen_range(1..=d);
    ExactScalar::pi_multiple(n, d).unwrap()
}

pub struct LintCase {
    pub name: &'static str,
    pub text: &'static str,
    /// Expected (rule, line, column) findings.
    pub expected: &'static [(LintRule, usize, usize)],
}

use LintRule::{MagnitudeAsQuotient as Maq, MissingReferenceSymbol as Mrs, RadInTrigArg as Rta};

/// Ten cases per rule, five that must fire and five that must stay quiet.
/// The first positive case of each rule is the canonical misuse pattern.
pub const LINT_CORPUS: [LintCase; 30] = [
    // RAD-IN-TRIG-ARG, positive
    LintCase {
        name: "sine of radian quantity",
        text: "x = sin(0.5 rad)",
        expected: &[(Rta, 1, 9)],
    },
    LintCase {
        name: "cosine of degree quantity",
        text: "y = cos(30°)",
        expected: &[(Rta, 1, 9)],
    },
    LintCase {
        name: "unit deep inside the argument",
        text: "z = tan(2 * (omega + 0.1 rad))",
        expected: &[(Rta, 1, 22)],
    },
    LintCase {
        name: "exponential of pi radians",
        text: "w = exp(π/2 rad)",
        expected: &[(Rta, 1, 9)],
    },
    LintCase {
        name: "nested function, one quantity",
        text: "v = sin(cos(100 gon))",
        expected: &[(Rta, 1, 13)],
    },
    // RAD-IN-TRIG-ARG, negative
    LintCase {
        name: "sine of a pure number",
        text: "x = sin(0.5)",
        expected: &[],
    },
    LintCase {
        name: "sine of pi over six",
        text: "y = sin(π/6)",
        expected: &[],
    },
    LintCase {
        name: "argument is a ratio of lengths",
        text: "length s\nlength r\nz = cos(s / r)",
        expected: &[],
    },
    LintCase {
        name: "quantity outside the function",
        text: "angle a = 30°\nq = sin(0.5) * 2",
        expected: &[],
    },
    LintCase {
        name: "unit word inside an identifier",
        text: "u = tan(radius / 2)",
        expected: &[],
    },
    // MISSING-REFERENCE-SYMBOL, positive
    LintCase {
        name: "angle equals pi",
        text: "angle a = pi",
        expected: &[(Mrs, 1, 11)],
    },
    LintCase {
        name: "angle equals bare ninety",
        text: "angle b = 90",
        expected: &[(Mrs, 1, 11)],
    },
    LintCase {
        name: "angle equals pi expression",
        text: "angle c = 3π/2",
        expected: &[(Mrs, 1, 11)],
    },
    LintCase {
        name: "later assignment of a bare number",
        text: "angle d\nd = 2 * pi",
        expected: &[(Mrs, 2, 5)],
    },
    LintCase {
        name: "reversed assignment",
        text: "angle e\n0.25 = e",
        expected: &[(Mrs, 2, 1)],
    },
    // MISSING-REFERENCE-SYMBOL, negative
    LintCase {
        name: "angle with radian symbol",
        text: "angle a = π rad",
        expected: &[],
    },
    LintCase {
        name: "angle in degrees",
        text: "angle b = 90°",
        expected: &[],
    },
    LintCase {
        name: "angle in sexagesimal form",
        text: "angle c = 12°34′56.7″",
        expected: &[],
    },
    LintCase {
        name: "measure is a pure number",
        text: "phi = pi",
        expected: &[],
    },
    LintCase {
        name: "length given a number",
        text: "length r = 2",
        expected: &[],
    },
    // MAGNITUDE-AS-QUOTIENT, positive
    LintCase {
        name: "angle equals s over r",
        text: "length s\nlength r\nangle a = s / r",
        expected: &[(Maq, 3, 11)],
    },
    LintCase {
        name: "declared then equated",
        text: "length s\nlength r\nangle alpha\nalpha = s/r",
        expected: &[(Maq, 4, 9)],
    },
    LintCase {
        name: "quotient on the left",
        text: "length arc\nlength radius\nangle theta\narc / radius = theta",
        expected: &[(Maq, 4, 1)],
    },
    LintCase {
        name: "unicode identifiers",
        text: "length s\nlength r\nangle α = s / r",
        expected: &[(Maq, 3, 11)],
    },
    LintCase {
        name: "comment after the equation",
        text: "length l\nlength h\nangle beta = l / h  # slope angle",
        expected: &[(Maq, 3, 14)],
    },
    // MAGNITUDE-AS-QUOTIENT, negative
    LintCase {
        name: "measure equals s over r",
        text: "length s\nlength r\nphi = s / r",
        expected: &[],
    },
    LintCase {
        name: "undeclared lengths",
        text: "angle a\na = s / r * 1 rad",
        expected: &[],
    },
    LintCase {
        name: "quotient of length and number",
        text: "length s\nangle a = s / 2 * 1 rad",
        expected: &[],
    },
    LintCase {
        name: "quotient of angles",
        text: "angle a = 90°\nangle b = 45°\nlength r\nk = a / b",
        expected: &[],
    },
    LintCase {
        name: "arc length from measure",
        text: "length s\nlength r\nangle a = 1 rad\ns = a * r",
        expected: &[],
    },
];

/// The three canonical misuse patterns, verbatim.
pub const MISUSE_PATTERNS: [&str; 3] = [
    "x = sin(0.5 rad)",
    "angle a = pi",
    "length s\nlength r\nangle a = s / r",
];
