use std::sync::Arc;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::ideal::{ideal_closure, quotient};
use crate::morphism::{BilinearMap, Morphism};
use crate::report::{expect_eq, sweep_basis, AxiomReport, CheckKind, CheckRecord};

use super::{action_record, check_bilinear, multiplicative_record, CrossedModule};

/// `C₂ → C₁ → C₀` with actions of `C₀` on `C₁`, `C₂`, of `C₁` on `C₂`, and
/// the Peiffer lifting `C₁ ⊗ C₁ → C₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCrossedModule {
    pub d2: Morphism,
    pub d1: Morphism,
    /// `C₀ × C₁ → C₁`
    pub act01: BilinearMap,
    /// `C₀ × C₂ → C₂`
    pub act02: BilinearMap,
    /// `C₁ × C₂ → C₂`
    pub act12: BilinearMap,
    /// `C₁ × C₁ → C₂`
    pub lifting: BilinearMap,
}

impl TwoCrossedModule {
    pub fn new(
        d2: Morphism,
        d1: Morphism,
        act01: BilinearMap,
        act02: BilinearMap,
        act12: BilinearMap,
        lifting: BilinearMap,
    ) -> Result<Self> {
        if d2.target().dim() != d1.source().dim() {
            return Err(Error::dim(
                "d2 target / d1 source",
                d1.source().dim(),
                d2.target().dim(),
            ));
        }
        let (c2, c1, c0) = (d2.source(), d1.source(), d1.target());
        check_bilinear(&act01, c0, c1, c1, "C0 action on C1")?;
        check_bilinear(&act02, c0, c2, c2, "C0 action on C2")?;
        check_bilinear(&act12, c1, c2, c2, "C1 action on C2")?;
        check_bilinear(&lifting, c1, c1, c2, "Peiffer lifting")?;
        Ok(TwoCrossedModule {
            d2,
            d1,
            act01,
            act02,
            act12,
            lifting,
        })
    }

    /// A crossed module with `C₂ = 0` and zero lifting.
    pub fn from_crossed(cm: &CrossedModule) -> Self {
        let zero = Arc::new(Algebra::zero(cm.r().field()));
        let (c1, c0) = (cm.c().clone(), cm.r().clone());
        TwoCrossedModule {
            d2: Morphism::zero(zero.clone(), c1.clone()),
            d1: cm.boundary().clone(),
            act01: cm.action().clone(),
            act02: BilinearMap::zero(c0, zero.clone(), zero.clone()),
            act12: BilinearMap::zero(c1.clone(), zero.clone(), zero.clone()),
            lifting: BilinearMap::zero(c1.clone(), c1, zero),
        }
    }

    pub fn c2(&self) -> &Arc<Algebra> {
        self.d2.source()
    }

    pub fn c1(&self) -> &Arc<Algebra> {
        self.d1.source()
    }

    pub fn c0(&self) -> &Arc<Algebra> {
        self.d1.target()
    }

    /// `{y ⊗ y′}`.
    pub fn lift(&self, y: &[u32], y2: &[u32]) -> Element {
        self.lifting.apply(y, y2)
    }

    /// The underlying `C₁ → C₀` with its action.
    pub fn bottom(&self) -> CrossedModule {
        CrossedModule {
            boundary: self.d1.clone(),
            action: self.act01.clone(),
        }
    }
}

/// d∘d = 0, the algebra structure of the actions, equivariance of the
/// boundaries and 2CM1–2CM5 as printed. All checks are multilinear, so
/// basis tuples are exhaustive.
pub fn verify_2cm(t: &TwoCrossedModule) -> AxiomReport {
    let (c2, c1, c0) = (t.c2(), t.c1(), t.c0());
    let (n2, n1, n0) = (c2.dim(), c1.dim(), c0.dim());
    let e2 = |i| c2.basis_element(i);
    let e1 = |i| c1.basis_element(i);
    let e0 = |i| c0.basis_element(i);
    let mut rep = AxiomReport::new("2-crossed module");
    let dd = t.d1.matrix().mul(t.d2.matrix());
    rep.push(CheckRecord::new(
        "d1∘d2 = 0",
        CheckKind::Invariant,
        1,
        (!dd.is_zero()).then(|| format!("{dd:?}")),
    ));
    rep.push(multiplicative_record("d1 multiplicative", &t.d1));
    rep.push(multiplicative_record("d2 multiplicative", &t.d2));
    rep.push(action_record("C0 acts on C1", &t.act01));
    rep.push(action_record("C0 acts on C2", &t.act02));
    rep.push(action_record("C1 acts on C2", &t.act12));
    rep.push(sweep_basis(
        "d1 equivariant",
        CheckKind::Axiom,
        &[n0, n1],
        |v| {
            let (z, y) = (e0(v[0]), e1(v[1]));
            expect_eq(
                || format!("z=e{}, y=e{}", v[0], v[1]),
                &t.d1.apply(&t.act01.apply(&z, &y)),
                &c0.mul(&z, &t.d1.apply(&y)),
            )
        },
    ));
    rep.push(sweep_basis(
        "d2 equivariant",
        CheckKind::Axiom,
        &[n0, n2],
        |v| {
            let (z, x) = (e0(v[0]), e2(v[1]));
            expect_eq(
                || format!("z=e{}, x=e{}", v[0], v[1]),
                &t.d2.apply(&t.act02.apply(&z, &x)),
                &t.act01.apply(&z, &t.d2.apply(&x)),
            )
        },
    ));
    rep.push(sweep_basis("2CM1", CheckKind::Axiom, &[n1, n1], |v| {
        let (y0, y1) = (e1(v[0]), e1(v[1]));
        let rhs = c1.sub(&c1.mul(&y0, &y1), &t.act01.apply(&t.d1.apply(&y1), &y0));
        expect_eq(
            || format!("y0=e{}, y1=e{}", v[0], v[1]),
            &t.d2.apply(&t.lift(&y0, &y1)),
            &rhs,
        )
    }));
    rep.push(sweep_basis("2CM2", CheckKind::Axiom, &[n2, n2], |v| {
        let (x1, x2) = (e2(v[0]), e2(v[1]));
        expect_eq(
            || format!("x1=e{}, x2=e{}", v[0], v[1]),
            &t.lift(&t.d2.apply(&x1), &t.d2.apply(&x2)),
            &c2.mul(&x1, &x2),
        )
    }));
    rep.push(sweep_basis("2CM3", CheckKind::Axiom, &[n1, n1, n1], |v| {
        let (y0, y1, y2) = (e1(v[0]), e1(v[1]), e1(v[2]));
        let lhs = t.lift(&y0, &c1.mul(&y1, &y2));
        let rhs = c2.add(
            &t.lift(&c1.mul(&y0, &y1), &y2),
            &t.act02.apply(&t.d1.apply(&y2), &t.lift(&y0, &y1)),
        );
        expect_eq(
            || format!("y0=e{}, y1=e{}, y2=e{}", v[0], v[1], v[2]),
            &lhs,
            &rhs,
        )
    }));
    rep.push(sweep_basis("2CM4(i)", CheckKind::Axiom, &[n2, n1], |v| {
        let (x, y) = (e2(v[0]), e1(v[1]));
        let rhs = c2.sub(&t.act12.apply(&y, &x), &t.act02.apply(&t.d1.apply(&y), &x));
        expect_eq(
            || format!("x=e{}, y=e{}", v[0], v[1]),
            &t.lift(&t.d2.apply(&x), &y),
            &rhs,
        )
    }));
    rep.push(sweep_basis("2CM4(ii)", CheckKind::Axiom, &[n2, n1], |v| {
        let (x, y) = (e2(v[0]), e1(v[1]));
        expect_eq(
            || format!("x=e{}, y=e{}", v[0], v[1]),
            &t.lift(&y, &t.d2.apply(&x)),
            &t.act12.apply(&y, &x),
        )
    }));
    rep.push(sweep_basis("2CM5", CheckKind::Axiom, &[n0, n1, n1], |v| {
        let (z, y0, y1) = (e0(v[0]), e1(v[1]), e1(v[2]));
        let a = t.act02.apply(&z, &t.lift(&y0, &y1));
        let b = t.lift(&t.act01.apply(&z, &y0), &y1);
        let c = t.lift(&y0, &t.act01.apply(&z, &y1));
        let vars = || format!("z=e{}, y0=e{}, y1=e{}", v[0], v[1], v[2]);
        expect_eq(vars, &a, &b).or_else(|| expect_eq(vars, &a, &c))
    }));
    rep
}

/// `C₁/(Im ∂₂) → C₀` with the induced boundary and action; the ideal
/// generated by `Im ∂₂` is used so the quotient is an algebra.
pub fn induced_cm(t: &TwoCrossedModule) -> Result<CrossedModule> {
    let c1 = t.c1();
    let gens: Vec<Element> = (0..t.c2().dim())
        .map(|i| t.d2.apply(&t.c2().basis_element(i)))
        .collect();
    let ideal = ideal_closure(c1, &gens);
    for v in ideal.space().basis() {
        if !t.d1.apply(&v).is_zero() {
            return Err(Error::Precondition(
                "d1 does not vanish on the ideal generated by Im d2".into(),
            ));
        }
        for z in t.c0().basis_elements() {
            if !ideal.contains(&t.act01.apply(&z, &v)) {
                return Err(Error::Precondition(
                    "C0 action does not preserve the ideal generated by Im d2".into(),
                ));
            }
        }
    }
    let keep = ideal.space().complement_indices();
    let (q, proj) = quotient(c1, &ideal)?;
    let lift = |v: &[u32]| {
        let mut out = vec![0u32; c1.dim()];
        for (i, &c) in v.iter().enumerate() {
            out[keep[i]] = c;
        }
        out
    };
    let boundary = Morphism::from_images(q.clone(), t.c0().clone(), |i| {
        t.d1.apply(&lift(&q.basis_element(i))).into_coeffs()
    });
    let action = BilinearMap::from_fn(t.c0().clone(), q.clone(), q.clone(), |z, y| {
        proj.apply(&t.act01.apply(z, &lift(y)))
    });
    CrossedModule::new(boundary, action)
}
