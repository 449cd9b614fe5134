use super::*;
use crate::{corpus, lie};

fn field(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

#[test]
fn corpus_round_trips_through_json() {
    for p in [2, 3] {
        let f = field(p);
        let spec = corpus_document(f).unwrap();
        let text = serde_json::to_string(&spec).unwrap();
        assert!(!text.contains('\n'));
        let doc = load(&text).unwrap();
        for (name, cm) in corpus::crossed_modules(f).unwrap() {
            assert_eq!(doc.crossed_modules[&name], cm, "{name}");
        }
        for (name, e) in corpus::simplicial_objects(f).unwrap() {
            assert_eq!(doc.simplicial[&name], e, "{name}");
        }
        for (name, t) in corpus::two_crossed_modules(f).unwrap() {
            assert_eq!(doc.two_crossed_modules[&name], t, "{name}");
        }
        for (name, m) in lie::lie_chains(f).unwrap() {
            assert_eq!(doc.lie_three_crossed_modules[name], m, "{name}");
        }
        assert_eq!(
            doc.lie_algebras["heisenberg"],
            lie::LieAlgebra::heisenberg(f)
        );
        // the writer is deterministic
        let again = serde_json::to_string(&corpus_document(f).unwrap()).unwrap();
        assert_eq!(text, again);
    }
}

#[test]
fn hand_written_document_loads() {
    let text = r#"{
        "algebras": {
            "D": {"p": 3, "dim": 2, "basis": ["1", "t"],
                  "structure": [[0,0,0,1],[0,1,1,1],[1,0,1,1]], "identity": 0},
            "I": {"p": 3, "dim": 1}
        },
        "morphisms": {"incl": {"source": "I", "target": "D", "matrix": [[0],[-2]]}},
        "crossed_modules": {"pair": {"boundary": "incl", "action": [[0,0,0,1]]}}
    }"#;
    let doc = load(text).unwrap();
    let d = &doc.algebras["D"];
    assert_eq!(d.identity_index(), Some(0));
    assert_eq!(d.mul(&[0, 1], &[0, 1]).coeffs(), &[0, 0]);
    // −2 ≡ 1 mod 3
    assert_eq!(doc.morphisms["incl"].apply(&[1]).coeffs(), &[0, 1]);
    let cm = &doc.crossed_modules["pair"];
    assert!(crate::crossed::verify_cm(cm).passed());
}

#[test]
fn unknown_names_report_their_location() {
    let text = r#"{"algebras": {"A": {"p": 2, "dim": 1}},
        "morphisms": {"f": {"source": "A", "target": "B", "matrix": [[1]]}}}"#;
    match load(text) {
        Err(Error::UnknownName { name, location }) => {
            assert_eq!(name, "B");
            assert_eq!(location, "morphisms.f.target");
        }
        other => panic!("{other:?}"),
    }
    let text = r#"{"crossed_modules": {"x": {"boundary": "nope"}}}"#;
    assert!(matches!(load(text), Err(Error::UnknownName { .. })));
}

#[test]
fn malformed_documents_are_parse_errors() {
    for text in [
        "{",
        r#"{"algebras": {"A": {"p": 2, "dim": 1, "structur": []}}}"#,
        r#"{"algebras": {"A": {"p": 2, "dim": 1, "structure": [[0,0,1,1]]}}}"#,
        r#"{"lie_algebras": {"L": {"p": 3, "dim": 1, "structure": []}}}"#,
        r#"{"widgets": {}}"#,
    ] {
        assert!(matches!(load(text), Err(Error::Parse(_))), "{text}");
    }
    assert!(matches!(
        load(r#"{"algebras": {"A": {"p": 4, "dim": 1}}}"#),
        Err(Error::NotPrime(4))
    ));
}

#[test]
fn report_lines_are_skipped_and_documents_merged() {
    let text = r#"{"algebras": {"A": {"p": 2, "dim": 1}}}
{"check": "x", "status": "pass"}
{"morphisms": {"id": {"source": "A", "target": "A", "matrix": [[1]]}}}
{"summary": true}"#;
    let doc = load(text).unwrap();
    assert_eq!(doc.morphisms.len(), 1);
    let twice =
        r#"{"algebras": {"A": {"p": 2, "dim": 1}}} {"algebras": {"A": {"p": 2, "dim": 1}}}"#;
    assert!(matches!(load(twice), Err(Error::Parse(_))));
}

#[test]
fn sparse_and_dense_agree() {
    let t = vec![0, 3, 0, 0, 0, 1, 2, 0];
    let s = sparse(&t, [2, 2, 2]);
    assert_eq!(s, vec![[0, 0, 1, 3], [1, 0, 1, 1], [1, 1, 0, 2]]);
    assert_eq!(dense(&s, [2, 2, 2], 5, "t").unwrap(), t);
}
