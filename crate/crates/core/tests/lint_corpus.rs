//! The labelled lint corpus, through the library and through the CLI.

mod support;

use refangle::lint::{lint, LintRule};
use support::{cli_with_stdin, LINT_CORPUS, MISUSE_PATTERNS};

fn found(text: &str) -> Vec<(LintRule, usize, usize)> {
    lint(text)
        .into_iter()
        .map(|f| {
            (
                f.rule
                    .unwrap_or_else(|| panic!("syntax finding in {text:?}: {f}")),
                f.line,
                f.column,
            )
        })
        .collect()
}

#[test]
fn corpus_findings_match_labels() {
    for case in &LINT_CORPUS {
        assert_eq!(found(case.text), case.expected, "{}", case.name);
    }
}

#[test]
fn corpus_is_balanced() {
    for rule in LintRule::ALL {
        let firing = LINT_CORPUS
            .iter()
            .filter(|c| c.expected.iter().any(|(r, _, _)| *r == rule))
            .count();
        assert_eq!(firing, 5, "{rule}");
    }
    assert_eq!(
        LINT_CORPUS.iter().filter(|c| c.expected.is_empty()).count(),
        15
    );
}

#[test]
fn the_three_misuse_patterns_each_fire_their_rule() {
    let rules: Vec<Vec<LintRule>> = MISUSE_PATTERNS
        .iter()
        .map(|p| found(p).into_iter().map(|(r, _, _)| r).collect())
        .collect();
    assert_eq!(
        rules,
        [
            vec![LintRule::RadInTrigArg],
            vec![LintRule::MissingReferenceSymbol],
            vec![LintRule::MagnitudeAsQuotient],
        ]
    );
}

#[test]
fn cli_reports_the_same_positions() {
    for case in &LINT_CORPUS {
        let (code, out, err) = cli_with_stdin(&["lint"], case.text);
        let expected_code = if case.expected.is_empty() { 0 } else { 1 };
        assert_eq!(code, expected_code, "{}: {err}", case.name);
        let positions: Vec<String> = out
            .lines()
            .map(|l| l.split(": ").next().unwrap().to_string())
            .collect();
        let labels: Vec<String> = case
            .expected
            .iter()
            .map(|(_, l, c)| format!("{l}:{c}"))
            .collect();
        assert_eq!(positions, labels, "{}", case.name);
        for ((rule, _, _), line) in case.expected.iter().zip(out.lines()) {
            assert!(line.contains(rule.code()), "{}: {line}", case.name);
        }
    }
}
