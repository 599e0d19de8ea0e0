use koszul::numbers::ratio;
use koszul::verify::{self, CheckSpec, Mutation, Status};

fn quick() -> Vec<CheckSpec> {
    ["closed-forms", "bernoulli-identities", "left-right", "nonhereditary", "antibracket"]
        .iter()
        .map(|id| CheckSpec::new(id).with_seed(11).with_samples(6))
        .collect()
}

fn json(reports: &[verify::VerificationReport]) -> String {
    serde_json::to_string(reports).unwrap()
}

#[test]
fn identical_specs_give_identical_reports() {
    let a = verify::run_suite(&quick(), 1);
    let b = verify::run_suite(&quick(), 1);
    assert_eq!(json(&a), json(&b));
    assert!(verify::all_passed(&a));
}

#[test]
fn report_order_follows_spec_order() {
    let specs = quick();
    let seq = verify::run_suite(&specs, 1);
    let par = verify::run_suite(&specs, 4);
    assert_eq!(json(&seq), json(&par));
    let ids: Vec<_> = par.iter().map(|r| r.check_id.clone()).collect();
    let expected: Vec<_> = specs.iter().map(|s| s.check_id.clone()).collect();
    assert_eq!(ids, expected);
}

#[test]
fn failing_check_leaves_others_alone() {
    let mut specs = quick();
    specs.insert(
        1,
        CheckSpec::new("cross-formula")
            .with_max_arity(2)
            .with_samples(4)
            .with_mutation(Mutation::TwoIndex {
                i: 1,
                j: 1,
                delta: ratio(1, 3),
            }),
    );
    let mixed = verify::run_suite(&specs, 2);
    assert_eq!(mixed[1].status, Status::Fail);
    let c = mixed[1].counterexample.as_ref().unwrap();
    assert_ne!(c.lhs, c.rhs);
    let mut clean = mixed.clone();
    clean.remove(1);
    assert_eq!(json(&clean), json(&verify::run_suite(&quick(), 1)));
}

#[test]
fn every_seed_passes() {
    let spec = |seed| vec![CheckSpec::new("left-right").with_seed(seed).with_samples(3)];
    let a = verify::run_suite(&spec(1), 1);
    let b = verify::run_suite(&spec(2), 1);
    assert!(a[0].passed() && b[0].passed());
}

#[test]
fn empty_suite_passes_vacuously() {
    let reports = verify::run_suite(&[], 3);
    assert!(reports.is_empty());
    assert!(verify::all_passed(&reports));
}

#[test]
fn bad_specs_become_failed_reports() {
    let specs = vec![
        CheckSpec::new("no-such-check"),
        CheckSpec::new("jacobi").with_max_arity(9),
        CheckSpec::new("mu-table").with_samples(0),
    ];
    let reports = verify::run_suite(&specs, 1);
    for r in &reports {
        assert_eq!(r.status, Status::Fail);
        assert!(r.counterexample.is_none());
        assert!(r.error.is_some(), "{}", r.check_id);
    }
    assert!(reports[0].error.as_ref().unwrap().contains("no-such-check"));
    assert!(!verify::all_passed(&reports));
}

#[test]
fn suite_files_parse_with_defaults() {
    let specs = CheckSpec::parse_suite(
        r#"[{"checkId": "jacobi", "maxArity": 2}, {"checkId": "mu-table", "seed": 4, "samples": 3}]"#,
    )
    .unwrap();
    assert_eq!(specs[0], CheckSpec::new("jacobi").with_max_arity(2));
    assert_eq!(specs[1], CheckSpec::new("mu-table").with_seed(4).with_samples(3));
    let err = CheckSpec::parse_suite("[{\"checkId\": }]").unwrap_err();
    assert!(err.to_string().contains("column"), "{err}");
}

#[test]
fn default_suite_lists_every_check_once() {
    let suite = verify::default_suite(3, 5);
    let ids = verify::check_ids();
    assert_eq!(suite.len(), ids.len());
    for (spec, id) in suite.iter().zip(&ids) {
        assert_eq!(spec.check_id, *id);
        assert_eq!((spec.seed, spec.samples), (3, 5));
    }
}
