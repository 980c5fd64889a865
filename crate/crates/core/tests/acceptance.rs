//! Acceptance gate: the eight headline criteria, one test each, printing a
//! pass/fail line with the measured runtime and enforcing the budget.

use prlab_core::checks::{self, Session, Status};
use std::time::{Duration, Instant};

fn criterion(id: &str, what: &str, budget: Duration) {
    let mut s = Session::new();
    let start = Instant::now();
    let result = checks::run_claim(id, &mut s).expect(id);
    let elapsed = start.elapsed();
    let verdict = match result.status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::NotApplicable => "not-applicable",
    };
    println!("{id} {what}: {verdict} in {elapsed:.2?} (budget {budget:?})");
    assert_eq!(
        result.status,
        Status::Pass,
        "{id} failed with witness {:?}",
        result.witness
    );
    assert!(
        elapsed <= budget,
        "{id} took {elapsed:?}, over the {budget:?} budget"
    );
}

#[test]
fn a1_product_ring_counterexample_exact() {
    criterion("A1", "product ring counterexample", Duration::from_secs(10));
}

#[test]
fn a2_operator_laws_exhaustive() {
    criterion("A2", "enumerated operator laws", Duration::from_secs(300));
}

#[test]
fn a3_filter_correspondence() {
    criterion("A3", "filter correspondence", Duration::from_secs(60));
}

#[test]
fn a4_hull_correctness() {
    criterion("A4", "injective hull correctness", Duration::from_secs(120));
}

#[test]
fn a5_non_hereditary_torsion_class() {
    criterion("A5", "non-hereditary torsion class", Duration::from_secs(120));
}

#[test]
fn a6_relative_injectivity_equivalences() {
    criterion("A6", "relative injectivity equivalences", Duration::from_secs(300));
}

#[test]
fn a7_localization_biconditionals() {
    criterion("A7", "localization biconditionals", Duration::from_secs(300));
}

#[test]
fn a8_max_ring_proposition() {
    criterion("A8", "max ring proposition", Duration::from_secs(60));
}
