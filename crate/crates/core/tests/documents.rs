use hopflab::schema::{hopf_document, parse_document, write_document, Document, HopfDoc};
use hopflab::{check_hopf, dagger, zoo, FieldSpec, FiniteGroup, HopfError};

#[test]
fn zoo_objects_survive_a_text_round_trip() {
    let docs = vec![
        hopf_document(&zoo::group_algebra(&FiniteGroup::cyclic(2), FieldSpec::Rationals)),
        hopf_document(&zoo::function_hopf(
            &FiniteGroup::cyclic(3),
            FieldSpec::prime(3).unwrap(),
        )),
        hopf_document(&zoo::exterior_super(2)),
        Document::GroupAlgebra(zoo::diagonal_group_algebra(
            &FiniteGroup::cyclic(3),
            FieldSpec::prime(3).unwrap(),
        )),
        Document::GroupCoalgebra(
            dagger(&zoo::diagonal_group_algebra(
                &FiniteGroup::symmetric(3),
                FieldSpec::Rationals,
            ))
            .unwrap(),
        ),
    ];
    for doc in docs {
        let text = write_document(&doc);
        assert!(text.ends_with("}\n"));
        let back = parse_document(&text).unwrap();
        assert_eq!(write_document(&back), text);
    }
}

#[test]
fn tampered_antipode_is_caught_with_a_witness() {
    let h = zoo::sweedler4(FieldSpec::Rationals).unwrap();
    let mut doc = HopfDoc::from(&h);
    let mut s = doc.antipode.clone().unwrap();
    s.set(0, 0, FieldSpec::Rationals.from_i64(2));
    doc.antipode = Some(s);
    let text = write_document(&Document::Hopf(doc));
    let Document::Hopf(parsed) = parse_document(&text).unwrap() else {
        panic!("kind")
    };
    let report = check_hopf(&parsed.to_hopf().unwrap());
    assert!(!report.passed());
    assert!(report.failures().all(|a| a.witness.is_some()));
}

#[test]
fn fp_coefficients_are_reduced_on_input() {
    let text = r#"{"schema":"hopf-sc/1","field":{"kind":"Fp","p":3},"dim":1,"basis_names":["1"],
        "mult":[[0,0,0,4]],"unit":[1],"comult":[[0,0,0,"7"]],"counit":[-2],"antipode":{"rows":1,"cols":1,"entries":[1]}}"#;
    let Document::Hopf(doc) = parse_document(text).unwrap() else {
        panic!("kind")
    };
    assert!(check_hopf(&doc.to_hopf().unwrap()).passed());
}

#[test]
fn malformed_documents_are_parse_errors() {
    for text in [
        "",
        "[]",
        r#"{"schema":"hopf-sc/1"}"#,
        r#"{"schema":"hopf-sc/1","field":{"kind":"Fp","p":4},"dim":1}"#,
        r#"{"schema":"hopf-sc/1","field":{"kind":"Q"},"dim":1,"basis_names":["a","b"]}"#,
    ] {
        assert!(parse_document(text).is_err(), "{text}");
    }
    let err = parse_document(r#"{"schema":"hopf-sc/1","field":{"kind":"Q"},"dim":"x"}"#).unwrap_err();
    assert!(matches!(err, HopfError::Parse(_)));
}
