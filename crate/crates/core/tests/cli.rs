//! Golden transcripts and exit codes for the command line.

mod support;

use std::io::Write;

use proptest::prelude::*;

use support::{cli, cli_with_stdin};

#[track_caller]
fn ok(args: &[&str], expected: &str) {
    let (code, out, err) = cli(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    assert_eq!(out, format!("{expected}\n"), "{args:?}");
}

#[track_caller]
fn fails(args: &[&str], code: i32) -> String {
    let (got, out, err) = cli(args);
    assert_eq!(got, code, "{args:?}: out={out} err={err}");
    assert!(out.is_empty(), "{args:?}: {out}");
    assert!(err.starts_with("error: "), "{args:?}: {err}");
    err
}

#[test]
fn conversions() {
    ok(&["convert", "180°", "rad"], "π rad");
    ok(&["convert", "180 deg", "radian"], "π rad");
    ok(&["convert", "1 turn", "gon"], "400 gon");
    ok(&["convert", "pi/6 rad", "°"], "30 °");
    ok(&["convert", "1 rad", "°"], "180/π °");
    ok(&["convert", "12°34′56.7″", "arcsec"], "45296.7 ″");
    ok(&["convert", "-90°", "turn"], "-0.25 turn");
    ok(&["--ascii", "convert", "180°", "rad"], "pi rad");
    ok(&["--ascii", "convert", "1 rad", "deg"], "180/pi deg");
}

#[test]
fn measures() {
    ok(&["measure", "180°"], "π");
    ok(&["measure", "100 gon"], "π/2");
    ok(&["measure", "0.5 rad"], "0.5");
    ok(&["measure", "1 turn"], "2π");
    ok(&["measure", "12°34′56.7″"], "150989π/2160000");
}

#[test]
fn lengths() {
    ok(&["arc", "180°", "1"], "3.1415926535897931  (s = π·r)");
    ok(&["arc", "360°", "2"], "12.566370614359172  (s = 2π·r)");
    ok(&["arc", "1", "5"], "5");
    ok(&["arc", "1 rad", "5"], "5");
    ok(&["chord", "60°", "1"], "1");
    ok(&["chord", "180°", "2"], "4");
}

#[test]
fn magnitudes_points_and_classes() {
    ok(&["add", "120°", "90°"], "30 °");
    ok(&["add", "90°", "90°"], "180 °");
    ok(&["points", "1,0", "0,0", "0,1"], "π/2 (= 90 °)");
    ok(&["classify", "90°"], "right angle");
    ok(&["classify", "45°"], "acute angle");
    ok(&["classify", "270°"], "reflex angle");
    ok(&["classify", "0 rad"], "zero angle");
}

#[test]
fn trigonometry() {
    ok(&["trig", "sin", "90", "--period", "360"], "1");
    ok(&["trig", "cos", "60", "--period", "360"], "0.5");
    ok(&["trig", "arccos", "0", "--period", "360"], "90 °");
    ok(&["trig", "arcsin", "0.5"], "π/6 rad");
    let err = fails(&["trig", "sin", "0.5 rad"], 6);
    assert!(err.contains("RAD-IN-TRIG-ARG"), "{err}");
    fails(&["trig", "tan", "90", "--period", "360"], 6);
    fails(&["trig", "arcsin", "2"], 6);
}

#[test]
fn table_lists_every_builtin() {
    let (code, out, _) = cli(&["table"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[1].starts_with("rad        1         180/π"));
    assert!(lines[4].starts_with("turn       2π        360     400     1"));
}

#[test]
fn records_format() {
    ok(
        &["--format", "records", "convert", "180°", "rad"],
        "value=π\nunit=rad\nexact=true\ndecimal=3.1415926535897931",
    );
    ok(
        &["--format", "records", "measure", "180°"],
        "measure=π\nexact=true\ndecimal=3.1415926535897931",
    );
    ok(
        &["--format", "records", "arc", "180°", "2"],
        "length=6.2831853071795862\nmeasure=π\nradius=2",
    );
    ok(
        &["--format", "records", "classify", "180°"],
        "value=180\nunit=°\nexact=true\ndecimal=180\nclass=straight angle",
    );
}

#[test]
fn digits_option_rounds_decimals() {
    ok(&["--digits", "5", "arc", "180°", "1"], "3.1416  (s = π·r)");
    fails(&["--digits", "0", "measure", "1 rad"], 2);
}

#[test]
fn exit_codes() {
    fails(&["convert", "90 rad", "grad"], 3);
    fails(&["convert", "180°", "grad"], 3);
    fails(&["convert", "90", "rad"], 2);
    fails(&["measure", "12°34"], 2);
    fails(&["arc", "90°", "-1"], 4);
    fails(&["chord", "90°", "0"], 4);
    fails(&["classify", "400°"], 5);
    fails(&["classify", "-10°"], 5);
    fails(&["add", "200°", "10°"], 5);
    fails(&["points", "1,0", "0,0", "1,0"], 6);
    fails(&["points", "1;0", "0,0", "1,0"], 2);
    fails(&["frobnicate"], 2);
    fails(&["convert", "180°"], 2);
}

#[test]
fn help_and_version_exit_zero() {
    for args in [&["--help"][..], &["convert", "--help"], &["--version"]] {
        let (code, out, _) = cli(args);
        assert_eq!(code, 0, "{args:?}");
        assert!(!out.is_empty());
    }
}

#[test]
fn lint_reads_standard_input() {
    let (code, out, _) = cli_with_stdin(&["lint"], "x = sin(0.5 rad)\n");
    assert_eq!(code, 1);
    assert!(out.starts_with("1:9: RAD-IN-TRIG-ARG: "), "{out}");
    assert!(out.trim_end().ends_with("[0.5 rad]"), "{out}");

    let (code, out, _) = cli_with_stdin(&["lint", "-"], "x = sin(0.5)\nangle a = 90°\n");
    assert_eq!((code, out.as_str()), (0, ""));

    let (code, out, _) = cli_with_stdin(&["lint"], "x = sin(\n");
    assert_eq!(code, 1);
    assert!(out.starts_with("1:9: syntax: "), "{out}");

    let (code, out, _) = cli_with_stdin(
        &["--format", "records", "lint"],
        "angle a = pi\nangle b = 90\n",
    );
    assert_eq!(code, 1);
    let records: Vec<&str> = out.trim_end().split("\n\n").collect();
    assert_eq!(records.len(), 2);
    assert!(records[0].starts_with("rule=MISSING-REFERENCE-SYMBOL\nline=1\ncolumn=11\n"));
    assert!(records[1].contains("line=2\n"));
    assert!(records[1].ends_with("excerpt=90"));
}

#[test]
fn lint_reads_files() {
    let dir = std::env::temp_dir().join(format!("refangle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    let good = dir.join("good.txt");
    std::fs::File::create(&bad)
        .unwrap()
        .write_all("length s\nlength r\nangle a = s / r\n".as_bytes())
        .unwrap();
    std::fs::File::create(&good)
        .unwrap()
        .write_all("length s\nlength r\nphi = s / r\n".as_bytes())
        .unwrap();
    let (code, out, _) = cli(&["lint", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("3:11: MAGNITUDE-AS-QUOTIENT: "), "{out}");
    assert_eq!(cli(&["lint", good.to_str().unwrap()]).0, 0);
    fails(&["lint", dir.join("missing.txt").to_str().unwrap()], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

const SYMBOLS: [&str; 9] = [
    "rad", "°", "deg", "gon", "turn", "′", "arcmin", "″", "arcsec",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn measure_never_shows_a_unit_and_convert_shows_exactly_one(
        n in -100_000i64..=100_000, d in 1i64..=1_000, from in 0..9usize, to in 0..9usize, ascii in any::<bool>()
    ) {
        let literal = format!("{n}/{d} {}", SYMBOLS[from]);
        let mut args = vec![];
        if ascii {
            args.push("--ascii");
        }
        let mut measure = args.clone();
        measure.extend(["measure", literal.as_str()]);
        let (code, out, _) = cli(&measure);
        prop_assert_eq!(code, 0);
        for s in SYMBOLS {
            prop_assert!(!out.contains(s), "{}", out);
        }
        let mut convert = args;
        convert.extend(["convert", literal.as_str(), SYMBOLS[to]]);
        let (code, out, _) = cli(&convert);
        prop_assert_eq!(code, 0);
        let (number, unit) = out.trim_end().rsplit_once(' ').unwrap();
        let canonical = refangle::textio::unit_for_symbol(SYMBOLS[to]).unwrap();
        prop_assert_eq!(unit, canonical.symbol_in(ascii));
        for s in SYMBOLS {
            prop_assert!(!number.contains(s), "{}", out);
        }
    }
}
