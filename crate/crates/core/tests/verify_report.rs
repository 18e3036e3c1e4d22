use braidmon::{verify_all, BraidEngine, VerifyOptions};

#[test]
fn default_report_passes() {
    let report = verify_all(&BraidEngine::default(), &VerifyOptions::default()).unwrap();
    let failures: Vec<_> = report.failures().map(|e| e.id.clone()).collect();
    assert!(report.all_passed(), "{failures:?}");
    assert_eq!(report.summary.total, report.entries.len());
    assert_eq!(report.summary.failed, 0);
    for id in [
        "word-problem/equivalence",
        "projection/worked-value",
        "garside/non-simple-divisor",
        "witness/k33-in-sb6",
        "planarity/sb/n=6",
        "graph/sigma4-core",
    ] {
        assert!(report.entry(id).is_some_and(|e| e.pass), "{id}");
    }
}

#[test]
fn report_is_deterministic() {
    let opts = VerifyOptions {
        lemma_cases: 100,
        ..VerifyOptions::default()
    };
    let a = verify_all(&BraidEngine::default(), &opts).unwrap();
    let b = verify_all(&BraidEngine::default(), &opts).unwrap();
    assert_eq!(a.to_string(), b.to_string());
}

fn off_by_one(k: u32) -> u64 {
    braidmon::fib(k) + u64::from(k == 5)
}

#[test]
fn tampered_fibonacci_is_caught() {
    let opts = VerifyOptions {
        fib: off_by_one,
        lemma_cases: 50,
        ..VerifyOptions::default()
    };
    let report = verify_all(&BraidEngine::default(), &opts).unwrap();
    assert!(!report.all_passed());
    assert!(!report.entry("simple-count/n=3").unwrap().pass);
    assert!(report.entry("simple-count/n=2").unwrap().pass);
    assert!(report.entry("word-problem/equivalence").unwrap().pass);
}

#[test]
fn smaller_bounds_give_a_subset() {
    let opts = VerifyOptions {
        max_n_braids: 3,
        max_n_perms: 3,
        max_n_simple: 3,
        lemma_cases: 50,
        ..VerifyOptions::default()
    };
    let small = verify_all(&BraidEngine::default(), &opts).unwrap();
    let full = verify_all(&BraidEngine::default(), &VerifyOptions::default()).unwrap();
    assert!(small.all_passed());
    assert!(small.entries.len() < full.entries.len());
    assert!(small.entry("planarity/sb/n=6").is_none());
    for e in &small.entries {
        assert!(full.entry(&e.id).is_some(), "{}", e.id);
    }
}
