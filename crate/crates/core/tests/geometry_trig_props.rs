//! Planar geometry, the chord integral and the periodized trigonometric
//! functions.

use std::f64::consts::PI;

use proptest::prelude::*;

use refangle::geometry::{angle_from_points, chord_integral, chord_length, PlanarPoint};
use refangle::trig::{eval_inverse, phase, InverseKind, PeriodizedFunction, TrigKind};
use refangle::{AngleValue, ExactScalar, Measure, ReferenceAngle};

fn pt(x: f64, y: f64) -> PlanarPoint {
    PlanarPoint::new(x, y).unwrap()
}

fn reference() -> impl Strategy<Value = ReferenceAngle> {
    (0..6usize).prop_map(|i| ReferenceAngle::builtins()[i].clone())
}

fn period() -> impl Strategy<Value = ExactScalar> {
    prop_oneof![
        Just(ExactScalar::ONE),
        Just(ExactScalar::TWO_PI),
        Just(ExactScalar::integer(360)),
        Just(ExactScalar::integer(400)),
        Just(ExactScalar::integer(21600)),
        Just(ExactScalar::PI),
    ]
}

fn f(kind: TrigKind, p: ExactScalar) -> PeriodizedFunction {
    PeriodizedFunction::new(kind, p).unwrap()
}

fn coordinate() -> impl Strategy<Value = f64> {
    -100.0f64..100.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn points_angle_is_invariant_under_similarity(
        (px, py, ox, oy, qx, qy) in (coordinate(), coordinate(), coordinate(), coordinate(), coordinate(), coordinate()),
        theta in -PI..PI, scale in 0.01f64..100.0, dx in -1e3f64..1e3, dy in -1e3f64..1e3
    ) {
        let (p, o, q) = (pt(px, py), pt(ox, oy), pt(qx, qy));
        let Ok(m) = angle_from_points(p, o, q) else {
            return Ok(());
        };
        let phi = m.phi().to_f64();
        prop_assert!(phi > 0.0 && phi <= PI);
        let (s, c) = theta.sin_cos();
        let map = |a: PlanarPoint| pt(scale * (c * a.x - s * a.y) + dx, scale * (s * a.x + c * a.y) + dy);
        // rays of near-zero length relative to the translation lose digits
        let short = [p, q].iter().map(|a| (a.x - o.x).hypot(a.y - o.y)).fold(f64::MAX, f64::min);
        prop_assume!(short > 1e-3);
        let moved = angle_from_points(map(p), map(o), map(q)).unwrap().phi().to_f64();
        prop_assert!((moved - phi).abs() <= 1e-9, "{} vs {}", moved, phi);
        prop_assert_eq!(angle_from_points(q, o, p).unwrap(), m);
    }

    #[test]
    fn chord_integral_recovers_half_the_measure(n in 1i128..=10_000, r in 0.001f64..1000.0) {
        // φ = n/10000 · π in (0, π]
        let phi = ExactScalar::pi_multiple(n, 10_000).unwrap();
        let v = AngleValue::from_measure(Measure::new(phi), &ReferenceAngle::RADIAN).unwrap();
        let chord = chord_length(&v, r).unwrap();
        let half_arc = chord_integral((chord / (2.0 * r)).min(1.0)).unwrap();
        prop_assert!((half_arc - phi.to_f64() / 2.0).abs() <= 1e-8);
    }

    #[test]
    fn chord_integral_increases(x1 in 0.0f64..1.0, gap in 1e-9f64..=1.0) {
        let x2 = (x1 + gap).min(1.0);
        prop_assume!(x2 - x1 > 1e-9);
        prop_assert!(chord_integral(x1).unwrap() < chord_integral(x2).unwrap());
    }

    #[test]
    fn periodicity(p in period(), x in -1e4f64..1e4, k in -1000i32..=1000) {
        let pf = p.to_f64();
        let shifted = x + k as f64 * pf;
        for kind in [TrigKind::Sin, TrigKind::Cos] {
            let g = f(kind, p);
            prop_assert!((g.eval(shifted).unwrap() - g.eval(x).unwrap()).abs() <= 1e-9);
        }
    }

    #[test]
    fn inverse_round_trip(p in period(), x in -1.0f64..=1.0) {
        let v = eval_inverse(InverseKind::Arcsin, p, x).unwrap();
        prop_assert_eq!(v.reference.full_circle(), p);
        let back = f(TrigKind::Sin, p).eval_scalar(&v.value).unwrap();
        prop_assert!((back - x).abs() <= 1e-12, "{} -> {} -> {}", x, v, back);
        let w = eval_inverse(InverseKind::Arccos, p, x).unwrap();
        let back = f(TrigKind::Cos, p).eval_scalar(&w.value).unwrap();
        prop_assert!((back - x).abs() <= 1e-12, "{} -> {} -> {}", x, w, back);
    }

    #[test]
    fn phase_is_reference_independent(n in -100_000i128..=100_000, d in 1i128..=1_000, a in reference(), b in reference()) {
        let v = AngleValue::new(ExactScalar::ratio(n, d).unwrap(), a);
        let z = phase(&v).unwrap();
        let w = phase(&v.convert(&b).unwrap()).unwrap();
        prop_assert!((z.re - w.re).abs() <= 1e-12 && (z.im - w.im).abs() <= 1e-12);
        prop_assert!((z.re * z.re + z.im * z.im - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn chord_agrees_with_sin_p(n in 0i128..=1_000, a in reference(), r in 0.01f64..100.0) {
        // {α} = n/1000 of the full circle, so φ ∈ [0, 2π]
        let p = a.full_circle();
        let value = ExactScalar::ratio(n, 1_000).unwrap().checked_mul(&p).unwrap();
        let v = AngleValue::new(value, a);
        let half = value.checked_mul(&ExactScalar::ratio(1, 2).unwrap()).unwrap();
        let expected = 2.0 * r * f(TrigKind::Sin, p).eval_scalar(&half).unwrap();
        prop_assert!((chord_length(&v, r).unwrap() - expected).abs() <= 1e-12 * r.max(1.0));
    }

    #[test]
    fn angle_addition(p in period(), a in -1e3f64..1e3, b in -1e3f64..1e3) {
        let (s, c) = (f(TrigKind::Sin, p), f(TrigKind::Cos, p));
        let lhs = s.eval(a + b).unwrap();
        let rhs = s.eval(a).unwrap() * c.eval(b).unwrap() + c.eval(a).unwrap() * s.eval(b).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12, "{} vs {}", lhs, rhs);
    }
}

#[test]
fn angle_addition_on_exact_arguments() {
    for p in [
        ExactScalar::integer(360),
        ExactScalar::integer(400),
        ExactScalar::TWO_PI,
    ] {
        let (s, c) = (f(TrigKind::Sin, p), f(TrigKind::Cos, p));
        for i in -50..50 {
            for j in -50..50 {
                let a = ExactScalar::ratio(i * 7, 3).unwrap();
                let b = ExactScalar::ratio(j * 11, 5).unwrap();
                let ab = a.checked_add(&b).unwrap();
                let lhs = s.eval_scalar(&ab).unwrap();
                let rhs = s.eval_scalar(&a).unwrap() * c.eval_scalar(&b).unwrap()
                    + c.eval_scalar(&a).unwrap() * s.eval_scalar(&b).unwrap();
                assert!((lhs - rhs).abs() <= 1e-12, "p={p} a={a} b={b}");
            }
        }
    }
}
