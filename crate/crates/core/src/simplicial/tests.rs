use super::*;
use crate::corpus;
use crate::field::PrimeField;
use crate::supply::{elements, SupplyConfig};

fn f2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

fn dims(e: &TruncatedSimplicialAlgebra) -> Vec<usize> {
    e.levels().iter().map(|a| a.dim()).collect()
}

fn normal_dims(e: &TruncatedSimplicialAlgebra) -> Vec<usize> {
    (0..=e.k()).map(|n| e.normal_space(n).dim()).collect()
}

#[test]
fn constant_object_is_valid() {
    let e = constant(corpus::dual_numbers(f2()), 4).unwrap();
    assert!(validate_simplicial(&e).is_empty());
    assert_eq!(normal_dims(&e), vec![2, 0, 0, 0, 0]);
    for n in 1..=4 {
        assert!(degenerate_ideal(&e, n).unwrap().space().is_full());
    }
}

#[test]
fn ideal_pair_object() {
    let cm = corpus::ideal_pair(f2()).unwrap();
    let e = build_from_crossed(&cm, 4).unwrap();
    assert!(validate_simplicial(&e).is_empty());
    assert_eq!(e.level(1).dim(), 3);
    assert_eq!(normal_dims(&e), vec![2, 1, 0, 0, 0]);
    // E_n ≅ ⊕_α s_α NE: dims 2, 3, 2+2·1, 2+3·1, 2+4·1... for NE_1 of dim 1
    assert_eq!(dims(&e), vec![2, 3, 4, 5, 6]);
}

#[test]
fn corpus_objects_are_valid_with_expected_lengths() {
    for p in [2, 3] {
        let f = PrimeField::new(p).unwrap();
        for (name, e) in corpus::simplicial_objects(f).unwrap() {
            let v = validate_simplicial(&e);
            assert!(v.is_empty(), "{name} over Z/{p}: {}", v[0]);
            assert_eq!(e.k(), 4, "{name}");
        }
        let l2 = corpus::length_two(f, 4).unwrap();
        assert!(normal_dims(&l2)[2] > 0 && normal_dims(&l2)[3] == 0);
        let l3 = corpus::length_three(f, 4).unwrap();
        assert!(normal_dims(&l3)[3] > 0 && normal_dims(&l3)[4] == 0);
        let l4 = corpus::length_four(f).unwrap();
        assert!(normal_dims(&l4)[4] > 0);
    }
}

#[test]
fn swapped_faces_are_reported() {
    let cm = corpus::ideal_pair(f2()).unwrap();
    let e = build_from_crossed(&cm, 2).unwrap();
    assert_ne!(e.face(2, 0), e.face(2, 1));
    let bad = e
        .with_face(2, 0, e.face(2, 1).clone())
        .unwrap()
        .with_face(2, 1, e.face(2, 0).clone())
        .unwrap();
    assert!(!validate_simplicial(&bad).is_empty());
}

#[test]
fn truncation() {
    let cm = corpus::ideal_pair(f2()).unwrap();
    let e4 = build_from_crossed(&cm, 4).unwrap();
    assert_eq!(truncate(&e4, 4).unwrap(), e4);
    assert_eq!(
        truncate(&e4, 2).unwrap(),
        build_from_crossed(&cm, 2).unwrap()
    );
    let t0 = truncate(&e4, 0).unwrap();
    assert_eq!(t0.k(), 0);
    assert!(truncate(&e4, 5).is_err());
}

#[test]
fn decomposition_reassembles_exhaustively() {
    let cfg = SupplyConfig::default();
    for (name, e) in corpus::simplicial_objects(f2()).unwrap() {
        for n in 0..=e.k() {
            let ne = e.normal_space(n);
            for x in elements(e.level(n), &cfg) {
                let dec = decompose(&e, n, &x).unwrap();
                assert_eq!(dec.reassemble(&e), x, "{name} level {n}");
                assert!(ne.contains(&dec.normal_part), "{name} level {n}");
                for (alpha, v) in &dec.components {
                    let m = n - alpha.len();
                    assert!(e.normal_space(m).contains(v), "{name} {alpha}");
                }
            }
        }
    }
}

#[test]
fn decomposition_of_degenerate_and_normal_elements() {
    let cm = corpus::ideal_pair(f2()).unwrap();
    let e = build_from_crossed(&cm, 2).unwrap();
    let ne1 = e.normal_space(1).basis()[0].clone();
    let dec = decompose(&e, 1, &ne1).unwrap();
    assert_eq!(dec.normal_part.coeffs(), &ne1[..]);
    assert!(dec.components.values().all(|v| v.is_zero()));
    let a = e.level(0).basis_element(1);
    let dec = decompose(&e, 1, &e.s(1, 0, &a)).unwrap();
    let zero = SurjIndex::new(1, &[0]).unwrap();
    assert_eq!(dec.components[&zero], a);
    assert!(dec.normal_part.is_zero());
}

#[test]
fn degenerate_ideal_codimension() {
    let e = build_from_crossed(&corpus::ideal_pair(f2()).unwrap(), 2).unwrap();
    assert_eq!(
        degenerate_ideal(&e, 2).unwrap().dim(),
        e.level(2).dim() - e.normal_space(2).dim()
    );
    // the span of degeneracy images is always a complement of NE_n
    for (name, e) in corpus::simplicial_objects(f2()).unwrap() {
        for n in 1..=e.k() {
            let gens = (0..n)
                .flat_map(|i| {
                    e.level(n - 1)
                        .basis_elements()
                        .into_iter()
                        .map(move |b| (i, b))
                })
                .map(|(i, b)| e.s(n, i, &b).into_coeffs())
                .collect();
            let span = Subspace::from_spanning(e.level(n).field(), e.level(n).dim(), gens);
            let ne = e.normal_space(n);
            assert_eq!(span.dim() + ne.dim(), e.level(n).dim(), "{name} level {n}");
            assert!(span.intersection(&ne).is_zero(), "{name} level {n}");
            assert!(span.is_subspace_of(degenerate_ideal(&e, n).unwrap().space()));
        }
    }
    let zero_base = constant(std::sync::Arc::new(crate::algebra::Algebra::zero(f2())), 1).unwrap();
    assert!(degenerate_ideal(&zero_base, 1).unwrap().space().is_zero());
    assert!(degenerate_ideal(&e, 3).is_err());
}

#[test]
fn projection_lands_in_normal_space_and_is_idempotent() {
    let cfg = SupplyConfig::default();
    for (name, e) in corpus::simplicial_objects(f2()).unwrap() {
        for n in 1..=e.k() {
            let ne = e.normal_space(n);
            for x in elements(e.level(n), &cfg) {
                let p = e.project_normal(n, &x);
                assert!(ne.contains(&p), "{name} level {n}");
                assert_eq!(e.project_normal(n, &p), p);
            }
        }
    }
}
