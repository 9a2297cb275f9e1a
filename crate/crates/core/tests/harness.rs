use nikulin_core::exactfield::BaseField;
use nikulin_core::harness::*;
use nikulin_core::tau_geometry::{sample_instance, TauInstance};

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/canonical_instance.json");

fn check<'a>(e: &'a Entry, name: &str) -> &'a Check {
    e.checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no check {name} in {e:?}"))
}

#[test]
fn genus_suite() {
    let r = run_suite(&SuiteConfig::new(&[Suite::Genus], 1, 0)).unwrap();
    assert_eq!(r.entries.len(), 1);
    let e = &r.entries[0];
    assert_eq!(check(e, "g_C2cover").computed, 2);
    assert_eq!(check(e, "g_C3cover").computed, 4);
    assert_eq!(check(e, "g_Z").computed, 13);
    assert!(e.checks.iter().all(|c| c.status == Status::Passed && !c.provenance.is_empty()));
    assert!(r.all_passed());
}

#[test]
fn fixed_points_suite() {
    let r = run_suite(&SuiteConfig::new(&[Suite::FixedPoints], 5, 1)).unwrap();
    assert_eq!(r.entries.len(), 5);
    for (i, e) in r.entries.iter().enumerate() {
        assert_eq!(e.instance_id, i);
        assert_eq!(check(e, "total").computed, 8);
    }
    assert!(r.all_passed(), "{:?}", r.summary);
}

#[test]
fn config_errors() {
    assert!(matches!(run_suite(&SuiteConfig::new(&[], 1, 0)), Err(HarnessError::Config(_))));
    assert!(matches!(run_suite(&SuiteConfig::new(&[Suite::Genus], 0, 0)), Err(HarnessError::Config(_))));
    let mut c = SuiteConfig::new(&[Suite::Genus], 1, 0);
    c.primes = vec![3];
    assert!(matches!(run_suite(&c), Err(HarnessError::Config(_))));
    c.primes = vec![15];
    assert!(matches!(run_suite(&c), Err(HarnessError::Config(_))));
    assert!(Suite::parse_list("genus,nope").is_err());
    assert_eq!(Suite::parse_list("all").unwrap(), Suite::ALL.to_vec());
    assert_eq!(Suite::parse_list("split, genus,split").unwrap(), vec![Suite::Genus, Suite::Split]);
}

#[test]
fn canonical_fixture_loads() {
    assert_eq!(load_instance(FIXTURE).unwrap(), TauInstance::canonical());
}

#[test]
fn instance_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inst.json");
    for seed in 0..3 {
        let inst = sample_instance(seed, 10).unwrap();
        save_instance(&inst, &path).unwrap();
        assert_eq!(load_instance(&path).unwrap(), inst);
    }
}

#[test]
fn zero_denominator_is_a_parse_error() {
    let text = std::fs::read_to_string(FIXTURE).unwrap();
    let bad = text.replacen("\"0\", \"1\", \"0\"", "\"0\", \"1/0\", \"0\"", 1);
    assert_ne!(bad, text);
    match parse_instance(&bad) {
        Err(HarnessError::InstanceParse { line, field, .. }) => {
            assert_eq!(line, 3);
            assert!(field.starts_with("l11"), "{field}");
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
    assert!(matches!(parse_instance("{\"l00\": [1, 2]"), Err(HarnessError::InstanceParse { .. })));
}

#[test]
fn reports_are_deterministic() {
    let mut c = SuiteConfig::new(&[Suite::Discriminant, Suite::FixedPoints, Suite::Quotient], 3, 42);
    c.primes = vec![10007];
    let a = run_suite(&c).unwrap();
    let b = run_suite(&c).unwrap();
    assert_eq!(a.canonical_json(), b.canonical_json());
    let order: Vec<(Suite, usize)> = a.entries.iter().map(|e| (e.suite, e.instance_id)).collect();
    let mut sorted = order.clone();
    sorted.sort();
    assert_eq!(order, sorted);
}

#[test]
fn failures_stay_in_their_entry() {
    // an instance without quadrics breaks every instance suite but not the structural ones
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inst.json");
    let mut inst = TauInstance::canonical();
    inst.quadrics.clear();
    save_instance(&inst, &path).unwrap();
    let mut c = SuiteConfig::new(&[Suite::Series, Suite::Genus], 1, 0);
    c.instance_path = Some(path);
    let r = run_suite(&c).unwrap();
    let series = r.entries_for(Suite::Series).next().unwrap();
    assert!(series.error.is_some());
    let genus = r.entries_for(Suite::Genus).next().unwrap();
    assert!(genus.passed());
    assert_eq!(r.summary.failed, 1);
}

#[test]
fn loaded_canonical_instance_passes_structural_checks() {
    let mut c = SuiteConfig::new(&[Suite::Series, Suite::BaseLocus, Suite::FixedPoints, Suite::Discriminant, Suite::Quotient], 1, 3);
    c.instance_path = Some(FIXTURE.into());
    let r = run_suite(&c).unwrap();
    for e in &r.entries {
        assert!(e.passed(), "{e:?}");
    }
}

#[test]
fn every_suite_over_a_prime_field() {
    let mut c = SuiteConfig::new(&Suite::ALL, 1, 7);
    c.field = BaseField::Prime(10007);
    let r = run_suite(&c).unwrap();
    for e in &r.entries {
        assert!(e.passed(), "{}", serde_json::to_string_pretty(e).unwrap());
    }
}

#[test]
fn report_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let r = run_suite(&SuiteConfig::new(&[Suite::Split], 1, 0)).unwrap();
    emit_report(&r, &path).unwrap();
    let back: VerificationReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn every_suite_over_the_rationals() {
    let r = run_suite(&SuiteConfig::new(&Suite::ALL, 2, 11)).unwrap();
    for e in &r.entries {
        assert!(e.passed(), "{}", serde_json::to_string_pretty(e).unwrap());
    }
    assert!(r.summary.passed > 100);
}
