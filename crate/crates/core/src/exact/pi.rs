//! Rational enclosures of π used to decide comparisons between scalars with
//! different π exponents.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

const PI_DIGITS: &str = "31415926535897932384626433832795028841971693993751\
05820974944592307816406286208998628034825342117067\
98214808651328230664709384460955058223172535940812\
84811174502841027019385211055596446229489549303819";

/// Number of fractional digits carried by the embedded constant.
pub(crate) const EMBEDDED_DIGITS: u32 = 199;

/// Upper limit for refinement before a comparison is declared undecidable.
pub(crate) const MAX_DIGITS: u32 = 12_800;

fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), n as usize)
}

/// `(lo, hi)` with `lo < π < hi` and `hi - lo = 2·10^-digits` (or `10^-digits`
/// for the embedded constant).
pub(crate) fn enclosure(digits: u32) -> (BigRational, BigRational) {
    if digits <= EMBEDDED_DIGITS {
        let truncated: BigInt = PI_DIGITS[..(digits as usize + 1)]
            .parse()
            .expect("embedded digits are decimal");
        let scale = pow10(digits);
        let lo = BigRational::new(truncated.clone(), scale.clone());
        let hi = BigRational::new(truncated + BigInt::one(), scale);
        return (lo, hi);
    }
    let guard = 10;
    let scale = pow10(digits + guard);
    let approx = machin(&scale);
    // each truncated division loses under one unit; the sum stays well under
    // 10^guard units
    let slack = pow10(guard);
    (
        BigRational::new(&approx - &slack, scale.clone()),
        BigRational::new(approx + slack, scale),
    )
}

/// π·scale via Machin's formula `π = 16·atan(1/5) − 4·atan(1/239)`.
fn machin(scale: &BigInt) -> BigInt {
    let a = arctan_inv(5, scale);
    let b = arctan_inv(239, scale);
    a * 16 - b * 4
}

/// atan(1/x)·scale by its alternating series, truncating each term.
fn arctan_inv(x: u32, scale: &BigInt) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = scale / &x;
    let mut sum = power.clone();
    let mut k: u64 = 1;
    loop {
        power /= &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}
