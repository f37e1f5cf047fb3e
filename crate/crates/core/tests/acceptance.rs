//! One line per acceptance criterion. Tolerances and corpus sizes are the
//! constants in `skewdet::reproduce`; every comparison is exact.

use std::io::Write;

use skewdet::reproduce::{criterion_ids, run_criterion};

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for id in criterion_ids() {
        let outcome = run_criterion(id).expect("known criterion");
        // Straight to stderr so the table shows even when output is captured.
        let _ = writeln!(std::io::stderr(), "{}", outcome.line());
        if !outcome.pass {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
