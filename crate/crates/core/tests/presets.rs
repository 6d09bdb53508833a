use albert_f4::gradings::{preset, preset_names, AlgebraKind, GradingReport};

#[test]
fn every_preset_is_a_closed_grading_filling_its_algebra() {
    for name in preset_names() {
        let p = preset(&name).unwrap();
        let g = p.grading().unwrap();
        g.check_closure(p.algebra.table()).unwrap();
        let t = g.grading_type();
        let sum: usize = t.0.iter().enumerate().map(|(i, h)| (i + 1) * h).sum();
        assert_eq!(sum, p.algebra.table().dim(), "{name}");
    }
}

#[test]
fn report_json_has_the_documented_fields() {
    let r = GradingReport::build(&preset("grad1").unwrap()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["algebra", "group", "components", "type", "toral", "provenance"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["algebra"], "J");
    assert_eq!(v["group"]["factors"], serde_json::json!([2, 2, 2]));
    assert_eq!(v["type"], serde_json::json!([0, 0, 7, 0, 0, 1]));
    assert_eq!(v["toral"], false);
    let dims: usize = v["components"].as_array().unwrap().iter().map(|c| c["dim"].as_u64().unwrap() as usize).sum();
    assert_eq!(dims, 27);
}

#[test]
fn algebra_kinds_and_dimensions() {
    assert_eq!(preset("A105").unwrap().algebra, AlgebraKind::F4);
    assert_eq!(preset("nt5").unwrap().algebra, AlgebraKind::Albert);
    assert_eq!(preset("gr1").unwrap().algebra, AlgebraKind::H3f);
    assert!(preset("A0").is_err());
    assert!(preset("A1153").is_err());
    assert!(preset("bogus").is_err());
}

#[test]
fn components_are_listed_in_label_order() {
    for name in ["A15", "II.3.2", "ztrescubo", "gr4"] {
        let g = preset(name).unwrap().grading().unwrap();
        assert!(g.components.windows(2).all(|w| w[0].label < w[1].label), "{name}");
    }
}
