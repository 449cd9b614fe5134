use super::*;
use crate::corpus;
use crate::field::PrimeField;
use crate::report::Status;
use crate::supply::SupplyConfig;

fn f(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

#[test]
fn corpus_crossed_modules_pass() {
    for p in [2, 3, 5] {
        for (name, cm) in corpus::crossed_modules(f(p)).unwrap() {
            let rep = verify_cm(&cm);
            assert!(
                rep.passed(),
                "{name} over Z/{p}: {:?}",
                rep.failures().next()
            );
        }
    }
}

#[test]
fn cm2_mutant_fails_with_witness() {
    let rep = verify_cm(&corpus::cm2_mutant(f(2)).unwrap());
    let cm2 = rep.get("CM2").unwrap();
    assert_eq!(cm2.status, Status::Fail);
    assert_eq!(cm2.witnesses.len(), 1);
    assert_eq!(rep.get("CM1").unwrap().status, Status::Pass);
    assert_eq!(rep.exit_code(), 1);
}

#[test]
fn multiplication_of_ground_field() {
    let k = Arc::new(Algebra::truncated_polynomial(f(2), 1));
    let cm = multiplication_cm(&k).unwrap();
    assert_eq!(cm.r().dim(), 1);
    assert!(cm.boundary().kernel_space().is_zero());
    assert!(cm.boundary().image().is_full());
}

#[test]
fn multiplication_of_cyclic_algebra() {
    let r = corpus::cyclic_two(f(3));
    let cm = multiplication_cm(&r).unwrap();
    // unital, so M(R) ≅ R and μ is an isomorphism
    assert_eq!(cm.r().dim(), 2);
    assert!(cm.boundary().kernel_space().is_zero());
    let one = r.identity().unwrap().clone();
    assert_eq!(&cm.boundary().apply(&one), cm.r().identity().unwrap());
}

#[test]
fn multiplication_needs_hypothesis() {
    // square-zero algebra: Ann = R and R² = 0
    let r = Arc::new(Algebra::square_zero(f(2), crate::algebra::names("v", 2)));
    assert!(multiplication_cm(&r).is_err());
}

#[test]
fn image_is_ideal_for_passing_modules() {
    for (name, cm) in corpus::crossed_modules(f(3)).unwrap() {
        let img = cm.boundary().image();
        for r in cm.r().basis_elements() {
            for v in img.basis() {
                assert!(img.contains(&cm.r().mul(&r, &v)), "{name}");
            }
        }
    }
}

#[test]
fn remark_one_two_three() {
    for (name, cm) in corpus::crossed_modules(f(2)).unwrap() {
        let t = TwoCrossedModule::from_crossed(&cm);
        let rep = verify_2cm(&t);
        assert!(rep.passed(), "{name}: {:?}", rep.failures().next());
        let induced = induced_cm(&t).unwrap();
        assert!(verify_cm(&induced).passed());
        // d2 = 0, so the quotient is C1 itself
        assert_eq!(induced.c().dim(), cm.c().dim());
        assert_eq!(induced.boundary().matrix(), cm.boundary().matrix());
    }
}

#[test]
fn degenerate_three_crossed_module_passes() {
    let cfg = SupplyConfig::default();
    for (name, cm) in corpus::crossed_modules(f(2)).unwrap() {
        let m = ThreeCrossedModule::from_two_crossed(&TwoCrossedModule::from_crossed(&cm));
        let rep = verify_3cm(&m, &cfg);
        assert!(rep.passed(), "{name}: {:?}", rep.failures().next());
    }
}

#[test]
fn lifting_keys_parse() {
    for k in LiftingKey::ALL {
        assert_eq!(k.name().parse::<LiftingKey>().unwrap(), k);
    }
    assert_eq!("(0)(2)".parse::<LiftingKey>().unwrap(), LiftingKey::L2_0);
    assert!("(3)(0)".parse::<LiftingKey>().is_err());
}
