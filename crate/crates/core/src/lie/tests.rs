use proptest::prelude::*;

use super::*;
use crate::report::Status;

fn field(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn failed(rep: &AxiomReport) -> Vec<String> {
    rep.failures().map(|r| r.check.clone()).collect()
}

#[test]
fn abelian_and_heisenberg_are_lie() {
    for p in [2, 3, 5] {
        for (name, l) in lie_algebras(field(p)) {
            let rep = validate_lie(&l);
            assert!(rep.passed(), "{name} p={p}: {:?}", failed(&rep));
            assert!(validate_lie_elements(&l, &SupplyConfig::default()).passed());
            require_lie(&l).unwrap();
        }
    }
}

#[test]
fn heisenberg_brackets_by_hand() {
    let h = LieAlgebra::heisenberg(field(3));
    let [x, y, z] = [0, 1, 2].map(|i| h.algebra().basis_element(i));
    assert_eq!(h.bracket(&x, &y).coeffs(), &[0, 0, 1]);
    assert_eq!(h.bracket(&y, &x).coeffs(), &[0, 0, 2]);
    assert!(h.bracket(&x, &z).is_zero() && h.bracket(&y, &z).is_zero());
    // every bracket lands in the centre, so each Jacobi term vanishes
    for a in [&x, &y, &z] {
        for b in [&x, &y, &z] {
            for c in [&x, &y, &z] {
                assert!(h.bracket(&h.bracket(a, b), c).is_zero());
            }
        }
    }
}

#[test]
fn alternating_mutant_is_rejected() {
    let rep = validate_lie(&alternating_mutant(field(3)));
    let r = rep.get("alternating").unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(r.witnesses[0].starts_with("[e0,e0]"));
    assert_eq!(rep.exit_code(), 1);
    assert!(require_lie(&alternating_mutant(field(3))).is_err());
    // over ℤ/2 antisymmetry alone would not catch it
    let rep2 = validate_lie(&alternating_mutant(field(2)));
    assert_eq!(rep2.get("alternating").unwrap().status, Status::Fail);
}

fn non_jacobi(f: PrimeField) -> LieAlgebra {
    // [e0,e1] = e0, [e0,e2] = e1, extended antisymmetrically
    let m = f.modulus();
    LieAlgebra::from_fn(f, names("e", 3), |i, j| match (i, j) {
        (0, 1) => vec![1, 0, 0],
        (1, 0) => vec![m - 1, 0, 0],
        (0, 2) => vec![0, 1, 0],
        (2, 0) => vec![0, m - 1, 0],
        _ => vec![0, 0, 0],
    })
}

#[test]
fn jacobi_failure_is_found_on_basis_and_elements() {
    let l = non_jacobi(field(3));
    let rep = validate_lie(&l);
    assert_eq!(failed(&rep), ["Jacobi"]);
    let els = validate_lie_elements(&l, &SupplyConfig::default());
    assert_eq!(failed(&els), ["Jacobi"]);
}

fn antisymmetric(p: u32, dim: usize, upper: &[u32]) -> LieAlgebra {
    let f = field(p);
    let mut t = vec![0u32; dim * dim * dim];
    let mut it = upper.iter();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in 0..dim {
                let c = it.next().copied().unwrap_or(0) % p;
                t[(i * dim + j) * dim + k] = c;
                t[(j * dim + i) * dim + k] = (p - c) % p;
            }
        }
    }
    LieAlgebra::new(f, names("e", dim), t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_and_element_sweeps_agree(dim in 1usize..=3, upper in prop::collection::vec(0u32..3, 9)) {
        let l = antisymmetric(3, dim, &upper);
        let basis = validate_lie(&l);
        let els = validate_lie_elements(&l, &SupplyConfig::default());
        prop_assert!(basis.get("alternating").unwrap().passed());
        prop_assert_eq!(basis.passed(), els.passed());
    }
}

#[test]
fn adjoint_action_is_a_lie_action() {
    let h = LieAlgebra::heisenberg(field(3));
    let a = h.algebra().clone();
    let ad = BilinearMap::multiplication(a);
    assert_eq!(lie_action_failure(&ad), None);
    let bad = ad.perturbed(0, 0, 0, 1);
    assert!(lie_action_failure(&bad).is_some());
}

#[test]
fn heisenberg_ideal_is_a_lie_crossed_module() {
    for p in [2, 3] {
        let cm = heisenberg_ideal_cm(field(p)).unwrap();
        let rep = verify_lie_cm(&cm);
        assert!(rep.passed(), "p={p}: {:?}", failed(&rep));
    }
    let cm = heisenberg_ideal_cm(field(3)).unwrap();
    // x·z = y breaks the equivariance of the inclusion
    let mutant =
        CrossedModule::new(cm.boundary().clone(), cm.action().perturbed(0, 1, 0, 1)).unwrap();
    let rep = verify_lie_cm(&mutant);
    assert!(!rep.passed());
    assert!(rep.failures().all(|r| !r.witnesses.is_empty()));
}

#[test]
fn corpus_chains_pass() {
    for p in [2, 3] {
        for (name, m) in lie_chains(field(p)).unwrap() {
            let rep = verify_lie_3cm(&m, &SupplyConfig::default());
            assert!(rep.passed(), "{name} p={p}: {:?}", failed(&rep));
            assert!(rep.get("3CM16").is_some());
            assert!(rep.get("3CM1: L2CM1").is_some());
        }
    }
}

#[test]
fn degenerate_chain_reads_zero_everywhere() {
    let m = LieThreeCrossedModule::from_lie_crossed(&heisenberg_ideal_cm(field(3)).unwrap());
    assert_eq!(m.l(2).dim(), 0);
    assert_eq!(m.l(3).dim(), 0);
    let rep = verify_lie_3cm(&m, &SupplyConfig::default());
    assert_eq!(rep.exit_code(), 0);
}

#[test]
fn lifting_mutant_fails_with_witness() {
    let m = heisenberg_lifting_mutant(field(3)).unwrap();
    let rep = verify_lie_3cm(&m, &SupplyConfig::default());
    let r = rep.get("3CM3").unwrap();
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.witnesses, ["x2=e0, y2=e0: lhs=[0] rhs=[1]"]);
    assert_eq!(rep.exit_code(), 1);
}

#[test]
fn lower_two_crossed_module_of_heisenberg_chain() {
    let m = heisenberg_chain(field(3)).unwrap();
    let t = m.inner();
    let lower = TwoCrossedModule {
        d2: t.d2.clone(),
        d1: t.d1.clone(),
        act01: t.action(0, 1).clone(),
        act02: t.action(0, 2).clone(),
        act12: t.action(1, 2).clone(),
        lifting: t.lifting(LiftingKey::Base).clone(),
    };
    assert!(verify_lie_2cm(&lower).passed());
    // {z, y} = w is invisible to the zero boundary but breaks L2CM4:
    // x·{y, y} = 0 while {x·y, y} + {y, x·y} = {z, y} + {y, z}
    let bumped = TwoCrossedModule {
        lifting: lower.lifting.perturbed(1, 0, 0, 1),
        ..lower
    };
    let rep = verify_lie_2cm(&bumped);
    assert_eq!(failed(&rep), ["L2CM4"]);
}
