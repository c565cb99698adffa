//! The acceptance gate: every criterion runs at its stated tolerance and
//! prints one pass/fail line. The suite is deterministic for a fixed seed.

use vertexlab::suite::run_acceptance;

#[test]
fn acceptance_criteria() {
    let (outcomes, three_d, efp) = run_acceptance(1);
    for o in &outcomes {
        println!("{}", o.line());
    }
    assert_eq!(outcomes.len(), 12);
    let failed: Vec<_> = outcomes
        .iter()
        .filter(|o| o.passed == Some(false))
        .map(|o| o.id)
        .collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
    // the report-only criterion emits both artifacts
    assert!(three_d.contains("residual"));
    assert!(efp.contains("brute_probability"));
}

#[test]
fn acceptance_reports_match_committed_fixtures() {
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("reports");
    let committed_3d =
        std::fs::read_to_string(root.join("three_d_residuals.json")).expect("committed report");
    let committed_efp =
        std::fs::read_to_string(root.join("efp20v_deltas.json")).expect("committed report");
    assert_eq!(committed_3d, vertexlab::suite::three_d_report());
    assert_eq!(committed_efp, vertexlab::suite::efp20v_report());
}

#[test]
fn acceptance_is_deterministic() {
    let (a, _, _) = run_acceptance(1);
    let (b, _, _) = run_acceptance(1);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.detail, y.detail, "criterion {} drifted", x.id);
    }
}
