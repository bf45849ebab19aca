//! The seeded verification batteries at reduced sizes. The acceptance
//! target runs them at full size.

use apg_core::verify::{self, Check};

fn assert_all_pass(checks: &[Check]) {
    for c in checks {
        assert!(c.passed(), "{}", c.report());
        assert!(c.assertions > 0, "{} checked nothing", c.name);
    }
}

#[test]
fn lemma_batteries() {
    assert_all_pass(&verify::lemmas(2, 300));
}

#[test]
fn union_and_delay_batteries() {
    assert_all_pass(&verify::union_batteries(2, 300));
    assert_all_pass(&verify::delay_battery(2, 100));
}

#[test]
fn poly22_random_battery() {
    let c = verify::poly22_random(2, 2000);
    assert_all_pass(std::slice::from_ref(&c));
    assert!(c.report().contains("agreement: 2000/2000"));
}

#[test]
fn outcome_legality_battery() {
    assert_all_pass(&verify::outcome_legality(2, 500));
}

#[test]
fn embedding_batteries() {
    assert_all_pass(&[verify::maker_maker_embedding(2, 50), verify::transversal_embedding()]);
}

#[test]
fn sat_batteries() {
    assert_all_pass(&[verify::sat23_battery(), verify::sat32_battery(), verify::qbf_battery()]);
}

#[test]
fn qbf_scripts_fail_only_on_tripled_literals() {
    let c = verify::qbf_scripts();
    let note = |k: &str| c.notes.iter().find(|(n, _)| n == k).map(|(_, v)| v.clone()).unwrap();
    assert_eq!(note("unit_clause_gadgets"), "78");
    assert_eq!(c.failures, 78);
    assert_eq!(note("unit_clause_gadgets_failing"), "78");
}

#[test]
fn reports_are_reproducible() {
    let a: Vec<String> = verify::lemmas(9, 50).iter().map(Check::report).collect();
    let b: Vec<String> = verify::lemmas(9, 50).iter().map(Check::report).collect();
    assert_eq!(a, b);
    assert!(a[0].starts_with("check: pick_monotonicity\n"));
}
