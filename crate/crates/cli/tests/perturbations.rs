use scalext_cli::run_suite;
use scalext_core::catalog::{all_instances, instance};
use scalext_core::check::CheckOptions;

fn failing(d: &scalext_core::catalog::InstanceDescriptor, suite: &str) -> Vec<String> {
    run_suite(d, suite, &CheckOptions::with_cap(2)).checks.failing().into_iter().map(String::from).collect()
}

#[test]
fn positives_pass_every_suite() {
    for d in all_instances() {
        let f = failing(&d, "all");
        assert!(f.is_empty(), "{}: {f:?}", d.name);
    }
}

#[test]
fn perturbations_fail_exactly_as_declared() {
    for d in all_instances() {
        assert!(d.perturbations.len() >= 3, "{} ships too few controls", d.name);
        for p in &d.perturbations {
            let q = d.perturbed(&p.name).unwrap();
            let mut got = failing(&q, &p.suite);
            let mut want = p.expected_failing.clone();
            got.sort();
            want.sort();
            assert_eq!(got, want, "{}+{} in suite {}", d.name, p.name, p.suite);
        }
    }
}

#[test]
fn every_instance_has_the_three_kinds_of_control() {
    for d in all_instances() {
        let names: Vec<&str> = d.perturbations.iter().map(|p| p.name.as_str()).collect();
        assert!(names.contains(&"antipode-sign"), "{}", d.name);
        assert!(names.iter().any(|n| n.starts_with("tau-")), "{}", d.name);
        assert!(names.iter().any(|n| n.starts_with("coaction-")), "{}", d.name);
    }
}

#[test]
fn perturbed_instances_never_abort_a_suite() {
    for d in all_instances() {
        for p in &d.perturbations {
            let q = d.perturbed(&p.name).unwrap();
            let run = run_suite(&q, "all", &CheckOptions::with_cap(1));
            assert!(run.checks.get("internal").is_none());
            assert!(run.checks.checks.iter().all(|c| !c.name.ends_with(".internal")), "{}+{}", d.name, p.name);
            assert!(!run.checks.passed(), "{}+{} passes everything", d.name, p.name);
        }
    }
}

#[test]
fn s3_coaction_twist_reports_witnesses_in_the_yd_suite() {
    let d = instance("s3").unwrap().perturbed("coaction-twisted").unwrap();
    let run = run_suite(&d, "yd", &CheckOptions::default());
    let yd = run.checks.get("yd.left.yd_condition").unwrap();
    assert!(!yd.passed);
    assert_eq!(yd.witnesses.len(), 10.min(yd.failures));
    assert!(run.checks.get("yd.right.yd_condition").unwrap().passed);
}

#[test]
fn unknown_perturbation_is_an_error() {
    assert!(instance("c2").unwrap().perturbed("nonsense").is_err());
}

#[test]
fn suite_sizes() {
    let d = instance("c2").unwrap();
    let o = CheckOptions::default();
    let all = run_suite(&d, "all", &o).checks.checks.len();
    let parts: usize = ["hopf", "yd", "bialgebroid", "lu", "symmetric", "theorems"].iter().map(|s| run_suite(&d, s, &o).checks.checks.len()).sum();
    assert_eq!(all, parts);
    assert_eq!(run_suite(&d, "hopf", &o).checks.checks.len(), 6);
    assert!(run_suite(&d, "nonsense", &o).checks.checks.is_empty());
}
