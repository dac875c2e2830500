//! Runs the complete law registry over the standard corpus and demands
//! a green board: every row of every suite must pass. Warnings (checks
//! skipped because an enumeration would exceed the caps) are allowed;
//! failures are not.

use quantakit::corpus::Corpus;
use quantakit::laws::{run_all, suites, SuiteCtx};
use quantakit::Caps;

#[test]
fn every_registered_suite_is_green_on_the_standard_corpus() {
    let corpus = Corpus::standard();
    let ctx = SuiteCtx { corpus: &corpus, caps: Caps::default(), seed: 1 };
    let rep = run_all(&ctx);

    let failures: Vec<String> = rep
        .failures()
        .map(|r| {
            format!(
                "{} [{}] {} — {}",
                r.law,
                r.instance,
                r.anchor,
                r.detail.clone().unwrap_or_default()
            )
        })
        .collect();
    assert!(failures.is_empty(), "{} failing rows:\n{}", failures.len(), failures.join("\n"));

    // Every suite contributed at least one row.
    for s in suites() {
        assert!(
            rep.rows.iter().any(|r| r.law == s.name || r.law.starts_with(&format!("{}.", s.name))),
            "suite {} produced no rows",
            s.name
        );
    }
}
