use proptest::prelude::*;

use scalext_cli::{export_instance, load_instance, parse_instance, FormatError, InstanceFile};
use scalext_core::catalog::{all_instances, instance};
use scalext_core::{ExactScalar, LinMap};

fn c2_file() -> InstanceFile {
    InstanceFile::from_descriptor(&instance("c2").unwrap())
}

fn to_text(f: &InstanceFile) -> String {
    serde_json::to_string(f).unwrap()
}

#[test]
fn exports_are_canonical_and_stable() {
    for d in all_instances() {
        let a = export_instance(&d);
        assert_eq!(a, export_instance(&d));
        let f = parse_instance(&a).unwrap();
        for (r, c, v) in &f.hopf.mult {
            assert!(v.contains('/'), "{v} at ({r}, {c})");
        }
        let mut sorted = f.hopf.comult.clone();
        sorted.sort_by_key(|t| (t.0, t.1));
        assert_eq!(sorted, f.hopf.comult);
    }
}

#[test]
fn c2_export_has_expected_matrices() {
    let f = c2_file();
    assert_eq!(f.hopf.labels, ["e", "u"]);
    // u·u = e is column 3 of the multiplication
    assert!(f.hopf.mult.contains(&(0, 3, "1/1".into())));
    assert_eq!(f.hopf.counit, vec![(0, 0, "1/1".into()), (0, 1, "1/1".into())]);
    // ρ(u) = u⊗u sits at index u·2 + u
    assert!(f.left_yd.coaction.contains(&(3, 1, "1/1".into())));
}

#[test]
fn zero_denominator_is_a_parse_error() {
    let mut f = c2_file();
    f.hopf.antipode[0].2 = "1/0".into();
    match load_instance(&to_text(&f)) {
        Err(FormatError::Parse { location, .. }) => assert_eq!(location, "hopf.antipode[0]"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn malformed_rational_is_a_parse_error() {
    let mut f = c2_file();
    f.left_yd.action[1].2 = "one".into();
    assert!(matches!(load_instance(&to_text(&f)), Err(FormatError::Parse { location, .. }) if location == "left_yd.action[1]"));
}

#[test]
fn mult_index_past_dim_squared_is_a_dimension_mismatch() {
    let mut f = c2_file();
    f.hopf.mult.push((0, 4, "1/1".into()));
    match load_instance(&to_text(&f)) {
        Err(FormatError::DimensionMismatch { location, .. }) => assert!(location.starts_with("hopf.mult[")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn repeated_entry_is_rejected() {
    let mut f = c2_file();
    let first = f.hopf.antipode[0].clone();
    f.hopf.antipode.push(first);
    assert!(matches!(load_instance(&to_text(&f)), Err(FormatError::Parse { .. })));
}

#[test]
fn json_syntax_errors_carry_line_and_column() {
    match parse_instance("{\n  \"field\": \"Q\",\n  oops\n}") {
        Err(FormatError::Parse { location, .. }) => assert_eq!(location, "line 3 column 3"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_fields_and_fields_other_than_q_are_rejected() {
    let text = to_text(&c2_file()).replacen("{", "{\"extra\": 1, ", 1);
    assert!(matches!(load_instance(&text), Err(FormatError::Parse { .. })));
    let mut f = c2_file();
    f.field = "F2".into();
    assert!(matches!(load_instance(&to_text(&f)), Err(FormatError::Parse { location, .. }) if location == "field"));
}

#[test]
fn missing_right_block_is_derived() {
    for name in ["c2", "h4", "s3"] {
        let d = instance(name).unwrap();
        let mut f = InstanceFile::from_descriptor(&d);
        f.right_yd = None;
        f.phi = None;
        let back = load_instance(&to_text(&f)).unwrap();
        assert_eq!(back.right_yd, d.right_yd);
        assert_eq!(back.phi, d.phi);
    }
}

#[test]
fn theta_alone_fixes_phi() {
    let d = instance("h4").unwrap();
    let mut f = InstanceFile::from_descriptor(&d);
    f.phi = None;
    f.theta = Some(vec![(0, 0, "1".into()), (1, 1, "1".into())]);
    assert_eq!(load_instance(&to_text(&f)).unwrap().phi, LinMap::identity(2));
}

#[test]
fn broken_left_block_without_partner_is_structural() {
    let mut f = c2_file();
    f.right_yd = None;
    // ρ(e) = e⊗u
    f.left_yd.coaction = vec![(1, 0, "1/1".into()), (3, 1, "1/1".into())];
    assert!(matches!(load_instance(&to_text(&f)), Err(FormatError::Structure { .. })));
}

#[test]
fn perturbations_survive_the_round_trip() {
    let d = instance("s3").unwrap();
    let back = load_instance(&export_instance(&d)).unwrap();
    assert_eq!(back.perturbations, d.perturbations);
    assert_eq!(back.perturbed("coaction-twisted").unwrap(), d.perturbed("coaction-twisted").unwrap());
}

fn rational() -> impl Strategy<Value = ExactScalar> {
    (-50i64..50, 1i64..20).prop_map(|(p, q)| ExactScalar::new(p, q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tau_override_round_trips(entries in proptest::collection::vec((0usize..4, 0usize..4, rational()), 0..12)) {
        let mut d = instance("c2").unwrap();
        d.perturbations.clear();
        let t = LinMap::from_triples(4, 4, &entries).unwrap();
        d.tau_override = Some(t);
        let text = export_instance(&d);
        let back = load_instance(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(export_instance(&back), text);
    }

    #[test]
    fn rendered_scalars_parse_back(p in -10_000i64..10_000, q in 1i64..10_000) {
        let x = ExactScalar::new(p, q).unwrap();
        let s = format!("{}/{}", x.numer(), x.denom());
        prop_assert_eq!(s.parse::<ExactScalar>().unwrap(), x);
    }
}
