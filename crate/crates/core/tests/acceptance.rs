//! Acceptance suite: every headline claim of the crate, run end to end at
//! full strength and printed as one pass/fail line per criterion.
//!
//! The census checks cover orders 5 through 10; the order-10 run is the
//! expensive part (minutes, not hours). Run with `--nocapture` to watch the
//! lines as they complete.

use cographs::checks::{self, CensusCache};
use std::sync::OnceLock;

fn censuses() -> &'static CensusCache {
    static CACHE: OnceLock<CensusCache> = OnceLock::new();
    CACHE.get_or_init(|| checks::run_censuses(10, None))
}

fn assert_outcome(outcome: checks::CheckOutcome) {
    println!("{outcome}");
    assert!(outcome.passed, "{outcome}");
}

#[test]
fn criterion_01_census_counts() {
    assert_outcome(checks::check_census_counts(censuses()));
}

#[test]
fn criterion_02_no_members_below_order_five() {
    assert_outcome(checks::check_small_orders_all_2cographs());
}

#[test]
fn criterion_03_recognizer_matches_oracle() {
    assert_outcome(checks::check_recognizer_matches_oracle(7));
}

#[test]
fn criterion_04_one_step_minimality_matches_closure() {
    assert_outcome(checks::check_one_step_minimality_matches_closure(7));
}

#[test]
fn criterion_05_closure_laws() {
    assert_outcome(checks::check_closure_laws(7, 10_000));
}

#[test]
fn criterion_06_complement_biconnectivity() {
    assert_outcome(checks::check_complement_biconnectivity(7));
}

#[test]
fn criterion_07_cycle_complement_family() {
    assert_outcome(checks::check_cycle_complement_family());
}

#[test]
fn criterion_08_critically_two_connected_members() {
    assert_outcome(checks::check_critically_two_connected_members(censuses()));
}

#[test]
fn criterion_09_three_cograph_contraction() {
    assert_outcome(checks::check_three_cograph_contraction());
}

#[test]
fn criterion_10_certificate_soundness() {
    assert_outcome(checks::check_certificates(100_000, 9));
}

#[test]
fn criterion_11_generator_counts() {
    assert_outcome(checks::check_generator_class_counts(7));
}

#[test]
fn criterion_11_census_thread_invariance() {
    assert_outcome(checks::check_census_thread_invariance(9));
}
