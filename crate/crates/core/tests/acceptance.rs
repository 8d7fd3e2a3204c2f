//! End-to-end reproduction criteria, one test and one output line each.

use std::time::Instant;

use edgering::checks::{run_one, FixtureSet, DEFAULT_MAX_DEGREE, SUITES};

fn criterion(suite: &'static str) {
    let id = SUITES.iter().position(|s| *s == suite).unwrap() + 1;
    let start = Instant::now();
    let result = run_one(&FixtureSet::bundled(), id, suite, DEFAULT_MAX_DEGREE);
    println!("{result} ({:.1}s)", start.elapsed().as_secs_f64());
    assert!(result.passed, "{result}");
}

#[test]
fn criterion_1_figure() {
    criterion("figure");
}

#[test]
fn criterion_2_normality() {
    criterion("normality");
}

#[test]
fn criterion_3_decomposition() {
    criterion("decomposition");
}

#[test]
fn criterion_4_lemmas() {
    criterion("lemmas");
}

#[test]
fn criterion_5_normalization() {
    criterion("normalization");
}

#[test]
fn criterion_6_doubling() {
    criterion("doubling");
}

#[test]
fn criterion_7_facets() {
    criterion("facets");
}

#[test]
fn criterion_8_taxonomy() {
    criterion("taxonomy");
}
