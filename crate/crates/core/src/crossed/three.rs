use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::morphism::{BilinearMap, Morphism};
use crate::report::{expect_eq, sweep, sweep_basis, AxiomReport, CheckKind, CheckRecord};
use crate::supply::{self, SupplyConfig};

use super::{
    action_record, check_bilinear, multiplicative_record, verify_cm, CrossedModule,
    TwoCrossedModule,
};

/// Names of the seven Peiffer liftings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LiftingKey {
    /// `{ ⊗ }: C₁ ⊗ C₁ → C₂`
    Base,
    /// `C₁ ⊗ C₂ → C₃`
    L10_2,
    /// `C₁ ⊗ C₂ → C₃`
    L20_1,
    /// `C₂ ⊗ C₁ → C₃`
    L0_21,
    /// `C₂ ⊗ C₂ → C₃`
    L1_0,
    /// `C₂ ⊗ C₂ → C₃`, also written `(0)(2)`
    L2_0,
    /// `C₂ ⊗ C₂ → C₃`
    L2_1,
}

impl LiftingKey {
    pub const ALL: [LiftingKey; 7] = [
        LiftingKey::Base,
        LiftingKey::L10_2,
        LiftingKey::L20_1,
        LiftingKey::L0_21,
        LiftingKey::L1_0,
        LiftingKey::L2_0,
        LiftingKey::L2_1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LiftingKey::Base => "{}",
            LiftingKey::L10_2 => "(1,0)(2)",
            LiftingKey::L20_1 => "(2,0)(1)",
            LiftingKey::L0_21 => "(0)(2,1)",
            LiftingKey::L1_0 => "(1)(0)",
            LiftingKey::L2_0 => "(2)(0)",
            LiftingKey::L2_1 => "(2)(1)",
        }
    }

    /// Levels of the two arguments and of the value.
    pub fn degrees(self) -> (usize, usize, usize) {
        match self {
            LiftingKey::Base => (1, 1, 2),
            LiftingKey::L10_2 | LiftingKey::L20_1 => (1, 2, 3),
            LiftingKey::L0_21 => (2, 1, 3),
            _ => (2, 2, 3),
        }
    }

    fn index(self) -> usize {
        LiftingKey::ALL.iter().position(|&k| k == self).unwrap()
    }
}

impl fmt::Display for LiftingKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LiftingKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let key = match s.as_str() {
            "{}" | "" | "base" => LiftingKey::Base,
            "(1,0)(2)" => LiftingKey::L10_2,
            "(2,0)(1)" => LiftingKey::L20_1,
            "(0)(2,1)" => LiftingKey::L0_21,
            "(1)(0)" => LiftingKey::L1_0,
            "(2)(0)" | "(0)(2)" => LiftingKey::L2_0,
            "(2)(1)" => LiftingKey::L2_1,
            _ => return Err(Error::Parse(format!("unknown lifting key {s:?}"))),
        };
        Ok(key)
    }
}

/// Keys of the six actions.
pub const ACTION_KEYS: [&str; 6] = ["0>1", "0>2", "0>3", "1>2", "1>3", "2>3"];

/// `C₃ → C₂ → C₁ → C₀` with six actions and seven liftings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeCrossedModule {
    pub d3: Morphism,
    pub d2: Morphism,
    pub d1: Morphism,
    /// Indexed like [`ACTION_KEYS`]: `Cᵢ × Cⱼ → Cⱼ`.
    pub actions: [BilinearMap; 6],
    /// Indexed like [`LiftingKey::ALL`].
    pub liftings: [BilinearMap; 7],
}

impl ThreeCrossedModule {
    pub fn new(
        d3: Morphism,
        d2: Morphism,
        d1: Morphism,
        actions: [BilinearMap; 6],
        liftings: [BilinearMap; 7],
    ) -> Result<Self> {
        if d3.target().dim() != d2.source().dim() || d2.target().dim() != d1.source().dim() {
            return Err(Error::Precondition("boundaries do not compose".into()));
        }
        let c = [
            d1.target().clone(),
            d1.source().clone(),
            d2.source().clone(),
            d3.source().clone(),
        ];
        for (key, a) in ACTION_KEYS.iter().zip(&actions) {
            let (i, j) = action_levels(key);
            check_bilinear(a, &c[i], &c[j], &c[j], &format!("action {key}"))?;
        }
        for (key, l) in LiftingKey::ALL.iter().zip(&liftings) {
            let (a, b, t) = key.degrees();
            check_bilinear(l, &c[a], &c[b], &c[t], &format!("lifting {key}"))?;
        }
        Ok(ThreeCrossedModule {
            d3,
            d2,
            d1,
            actions,
            liftings,
        })
    }

    /// `0 → C₂ → C₁ → C₀` with all new liftings zero.
    pub fn from_two_crossed(t: &TwoCrossedModule) -> Self {
        let zero = Arc::new(Algebra::zero(t.c0().field()));
        let (c0, c1, c2) = (t.c0().clone(), t.c1().clone(), t.c2().clone());
        let z = |a: &Arc<Algebra>, b: &Arc<Algebra>| {
            BilinearMap::zero(a.clone(), b.clone(), zero.clone())
        };
        ThreeCrossedModule {
            d3: Morphism::zero(zero.clone(), c2.clone()),
            d2: t.d2.clone(),
            d1: t.d1.clone(),
            actions: [
                t.act01.clone(),
                t.act02.clone(),
                z(&c0, &zero),
                t.act12.clone(),
                z(&c1, &zero),
                z(&c2, &zero),
            ],
            liftings: [
                t.lifting.clone(),
                z(&c1, &c2),
                z(&c1, &c2),
                z(&c2, &c1),
                z(&c2, &c2),
                z(&c2, &c2),
                z(&c2, &c2),
            ],
        }
    }

    pub fn c(&self, n: usize) -> &Arc<Algebra> {
        match n {
            0 => self.d1.target(),
            1 => self.d1.source(),
            2 => self.d2.source(),
            3 => self.d3.source(),
            _ => panic!("no C_{n} in a 3-crossed module"),
        }
    }

    pub fn lifting(&self, key: LiftingKey) -> &BilinearMap {
        &self.liftings[key.index()]
    }

    /// `Cᵢ × Cⱼ → Cⱼ` for `(i, j)` one of the six action pairs.
    pub fn action(&self, i: usize, j: usize) -> &BilinearMap {
        let key = format!("{i}>{j}");
        let idx = ACTION_KEYS
            .iter()
            .position(|k| *k == key)
            .expect("action pair");
        &self.actions[idx]
    }

    pub fn lift(&self, key: LiftingKey, a: &[u32], b: &[u32]) -> Element {
        self.lifting(key).apply(a, b)
    }

    fn act(&self, i: usize, j: usize, a: &[u32], b: &[u32]) -> Element {
        self.action(i, j).apply(a, b)
    }

    /// `C₃ → C₂ → C₁` with `C₁` acting on `C₂`, `C₃`, `C₂` acting on
    /// `C₃`, and lifting `(2)(1)`.
    pub fn upper(&self) -> TwoCrossedModule {
        TwoCrossedModule {
            d2: self.d3.clone(),
            d1: self.d2.clone(),
            act01: self.action(1, 2).clone(),
            act02: self.action(1, 3).clone(),
            act12: self.action(2, 3).clone(),
            lifting: self.lifting(LiftingKey::L2_1).clone(),
        }
    }
}

pub(crate) fn action_levels(key: &str) -> (usize, usize) {
    let b = key.as_bytes();
    ((b[0] - b'0') as usize, (b[2] - b'0') as usize)
}

/// Structural invariants, the crossed-module property of `∂₃`, 3CM1–3CM16
/// as printed and the `C₀`/`C₁`-equivariance of all seven liftings.
/// 3CM6 is not multilinear and is swept over the element supply; every
/// other check runs over basis tuples.
pub fn verify_3cm(m: &ThreeCrossedModule, cfg: &SupplyConfig) -> AxiomReport {
    let c: Vec<Arc<Algebra>> = (0..4).map(|n| m.c(n).clone()).collect();
    let (d1, d2, d3) = (&m.d1, &m.d2, &m.d3);
    let mut rep = AxiomReport::new("3-crossed module");

    for (name, a, b) in [("d1∘d2 = 0", d1, d2), ("d2∘d3 = 0", d2, d3)] {
        let dd = a.matrix().mul(b.matrix());
        rep.push(CheckRecord::new(
            name,
            CheckKind::Invariant,
            1,
            (!dd.is_zero()).then(|| format!("{dd:?}")),
        ));
    }
    for (name, d) in [("d1", d1), ("d2", d2), ("d3", d3)] {
        rep.push(multiplicative_record(&format!("{name} multiplicative"), d));
    }
    for key in ACTION_KEYS {
        let (i, j) = action_levels(key);
        rep.push(action_record(&format!("C{i} acts on C{j}"), m.action(i, j)));
    }
    rep.records.extend(boundary_equivariance(m));
    if let Ok(cm3) = CrossedModule::new(d3.clone(), m.action(2, 3).clone()) {
        let mut sub = verify_cm(&cm3);
        for r in &mut sub.records {
            r.kind = CheckKind::Audit;
        }
        rep.absorb("d3 crossed module: ", sub);
    }
    let mut upper = super::verify_2cm(&m.upper());
    for r in &mut upper.records {
        if r.kind == CheckKind::Axiom {
            r.kind = CheckKind::Audit;
        }
    }
    rep.absorb("3CM1: ", upper);

    rep.records.extend(printed_axioms(m, cfg, CheckKind::Audit));

    for actor in [0usize, 1] {
        for key in LiftingKey::ALL {
            rep.push(equivariance(m, &c, actor, key));
        }
    }
    rep
}

/// One row of the equivariance tables: `ᶻ{a⊗b} = {ᶻa⊗b} = {a⊗ᶻb}` for `z`
/// in `C₀` (Table 3) or `C₁` (Table 4).
fn equivariance(
    m: &ThreeCrossedModule,
    c: &[Arc<Algebra>],
    actor: usize,
    key: LiftingKey,
) -> CheckRecord {
    let (la, lb, lt) = key.degrees();
    let act = |n: usize, z: &[u32], x: &[u32]| -> Element {
        if n == actor {
            c[n].mul(z, x)
        } else {
            m.act(actor, n, z, x)
        }
    };
    let table = if actor == 0 { "Table 3" } else { "Table 4" };
    sweep_basis(
        format!("{table} {key}"),
        CheckKind::Audit,
        &[c[actor].dim(), c[la].dim(), c[lb].dim()],
        |t| {
            let z = c[actor].basis_element(t[0]);
            let (x, y) = (c[la].basis_element(t[1]), c[lb].basis_element(t[2]));
            let outer = act(lt, &z, &m.lift(key, &x, &y));
            let left = m.lift(key, &act(la, &z, &x), &y);
            let right = m.lift(key, &x, &act(lb, &z, &y));
            let vars = || format!("z=e{}, x=e{}, y=e{}", t[0], t[1], t[2]);
            expect_eq(vars, &outer, &left).or_else(|| expect_eq(vars, &outer, &right))
        },
    )
}

/// 3CM2–3CM16 as printed, each recorded with `kind`. Products are taken in
/// the `Cᵢ` themselves, so Lie algebras stored as [`Algebra`] values with the
/// bracket as product get the bracketed reading.
pub(crate) fn printed_axioms(
    m: &ThreeCrossedModule,
    cfg: &SupplyConfig,
    a: CheckKind,
) -> Vec<CheckRecord> {
    let c: Vec<Arc<Algebra>> = (0..4).map(|n| m.c(n).clone()).collect();
    let e = |n: usize, i: usize| c[n].basis_element(i);
    let (d1, d2, d3) = (&m.d1, &m.d2, &m.d3);
    use LiftingKey::*;
    let mut rep: Vec<CheckRecord> = Vec::new();
    let (n1, n2, n3) = (c[1].dim(), c[2].dim(), c[3].dim());
    let l = |k: LiftingKey, x: &[u32], y: &[u32]| m.lift(k, x, y);
    let (c1, c2, c3) = (&c[1], &c[2], &c[3]);

    rep.push(sweep_basis("3CM2", a, &[n1, n1], |t| {
        let (x1, y1) = (e(1, t[0]), e(1, t[1]));
        let rhs = c1.sub(&m.act(0, 1, &d1.apply(&y1), &x1), &c1.mul(&x1, &y1));
        expect_eq(
            || format!("x1=e{}, y1=e{}", t[0], t[1]),
            &d2.apply(&l(Base, &x1, &y1)),
            &rhs,
        )
    }));
    rep.push(sweep_basis("3CM3", a, &[n2, n2], |t| {
        let (x2, y2) = (e(2, t[0]), e(2, t[1]));
        let rhs = c3.sub(&l(L2_1, &x2, &y2), &l(L1_0, &x2, &y2));
        expect_eq(
            || format!("x2=e{}, y2=e{}", t[0], t[1]),
            &l(L0_21, &x2, &d2.apply(&y2)),
            &rhs,
        )
    }));
    rep.push(sweep_basis("3CM4", a, &[n2, n2], |t| {
        let (x2, y2) = (e(2, t[0]), e(2, t[1]));
        let rhs = c2.add(&l(Base, &d2.apply(&x2), &d2.apply(&y2)), &c2.mul(&x2, &y2));
        expect_eq(
            || format!("x2=e{}, y2=e{}", t[0], t[1]),
            &d3.apply(&l(L1_0, &x2, &y2)),
            &rhs,
        )
    }));
    rep.push(sweep_basis("3CM5", a, &[n1, n3], |t| {
        let (x1, y3) = (e(1, t[0]), e(3, t[1]));
        let dy = d3.apply(&y3);
        let rhs = c3.sub(
            &c3.add(&l(L0_21, &dy, &x1), &l(L10_2, &x1, &dy)),
            &m.act(0, 3, &d1.apply(&x1), &y3),
        );
        expect_eq(
            || format!("x1=e{}, y3=e{}", t[0], t[1]),
            &l(L20_1, &x1, &dy),
            &rhs,
        )
    }));
    let pairs22 = supply::pairs(c2, c2, cfg);
    rep.push(sweep("3CM6", a, &pairs22, |(x2, y2)| {
        let rhs = c3.add(
            &c3.sub(
                &m.act(2, 3, &c2.mul(x2, y2), &l(L2_1, x2, y2)),
                &l(L2_0, x2, y2),
            ),
            &l(L1_0, x2, y2),
        );
        expect_eq(
            || format!("x2={x2:?}, y2={y2:?}"),
            &l(L20_1, &d2.apply(x2), y2),
            &rhs,
        )
    }));
    rep.push(sweep_basis("3CM7", a, &[n3, n3], |t| {
        let (x3, y3) = (e(3, t[0]), e(3, t[1]));
        expect_eq(
            || format!("x3=e{}, y3=e{}", t[0], t[1]),
            &l(L1_0, &d3.apply(&x3), &d3.apply(&y3)),
            &c3.mul(&y3, &x3),
        )
    }));
    rep.push(sweep_basis("3CM8", a, &[n2, n3], |t| {
        let (x2, y3) = (e(2, t[0]), e(3, t[1]));
        let dx = d2.apply(&x2);
        expect_eq(
            || format!("x2=e{}, y3=e{}", t[0], t[1]),
            &l(L0_21, &d3.apply(&y3), &dx),
            &c3.neg(&m.act(1, 3, &dx, &y3)),
        )
    }));
    rep.push(sweep_basis("3CM9", a, &[n2, n3], |t| {
        let (x2, y3) = (e(2, t[0]), e(3, t[1]));
        let dy = d3.apply(&y3);
        expect_eq(
            || format!("x2=e{}, y3=e{}", t[0], t[1]),
            &l(L10_2, &d2.apply(&x2), &dy),
            &c3.neg(&l(L2_0, &x2, &dy)),
        )
    }));
    rep.push(sweep_basis("3CM10", a, &[n2, n3], |t| {
        let (x2, y3) = (e(2, t[0]), e(3, t[1]));
        let (dx, dy) = (d2.apply(&x2), d3.apply(&y3));
        let rhs = c3.sub(&m.act(1, 3, &dx, &y3), &l(L2_0, &x2, &dy));
        expect_eq(
            || format!("x2=e{}, y3=e{}", t[0], t[1]),
            &l(L20_1, &dx, &dy),
            &rhs,
        )
    }));
    rep.push(sweep_basis("3CM11", a, &[n1, n3], |t| {
        let (x1, y3) = (e(1, t[0]), e(3, t[1]));
        expect_eq(
            || format!("x1=e{}, y3=e{}", t[0], t[1]),
            &l(L0_21, &d3.apply(&y3), &x1),
            &c3.neg(&m.act(1, 3, &x1, &y3)),
        )
    }));
    rep.push(sweep_basis("3CM12", a, &[n2, n3], |t| {
        let (y2, x3) = (e(2, t[0]), e(3, t[1]));
        expect_eq(
            || format!("y2=e{}, x3=e{}", t[0], t[1]),
            &l(L1_0, &y2, &d3.apply(&x3)),
            &c3.neg(&m.act(2, 3, &y2, &x3)),
        )
    }));
    rep.push(sweep_basis("3CM13", a, &[n2, n3], |t| {
        let (y2, x3) = (e(2, t[0]), e(3, t[1]));
        expect_eq(
            || format!("y2=e{}, x3=e{}", t[0], t[1]),
            &l(L1_0, &d3.apply(&x3), &y2),
            &m.act(2, 3, &y2, &x3),
        )
    }));
    rep.push(sweep_basis("3CM14", a, &[n2, n3], |t| {
        let (y2, x3) = (e(2, t[0]), e(3, t[1]));
        let v = l(L2_0, &d3.apply(&x3), &y2);
        (!v.is_zero()).then(|| format!("y2=e{}, x3=e{}: lhs={v:?}", t[0], t[1]))
    }));
    rep.push(sweep_basis("3CM15", a, &[n1, n2], |t| {
        let (x1, y2) = (e(1, t[0]), e(2, t[1]));
        let rhs = c2.add(
            &c2.sub(
                &c2.add(
                    &d3.apply(&l(L10_2, &x1, &y2)),
                    &l(Base, &x1, &d2.apply(&y2)),
                ),
                &m.act(0, 2, &d1.apply(&x1), &y2),
            ),
            &m.act(1, 2, &x1, &y2),
        );
        expect_eq(
            || format!("x1=e{}, y2=e{}", t[0], t[1]),
            &d3.apply(&l(L20_1, &x1, &y2)),
            &rhs,
        )
    }));
    rep.push(sweep_basis("3CM16", a, &[n1, n2], |t| {
        let (x1, y2) = (e(1, t[0]), e(2, t[1]));
        let rhs = c2.sub(&l(Base, &x1, &d2.apply(&y2)), &m.act(1, 2, &x1, &y2));
        expect_eq(
            || format!("x1=e{}, y2=e{}", t[0], t[1]),
            &d3.apply(&l(L0_21, &y2, &x1)),
            &rhs,
        )
    }));
    rep
}

/// `∂ₙ` is `C₀`- and `C₁`-equivariant, `C₁` acting on itself by its product.
pub(crate) fn boundary_equivariance(m: &ThreeCrossedModule) -> Vec<CheckRecord> {
    let c: Vec<Arc<Algebra>> = (0..4).map(|n| m.c(n).clone()).collect();
    let dims: Vec<usize> = c.iter().map(|a| a.dim()).collect();
    let e = |n: usize, i: usize| c[n].basis_element(i);
    let mut rep = Vec::new();
    for (src, d) in [(1usize, &m.d1), (2, &m.d2), (3, &m.d3)] {
        for actor in [0usize, 1] {
            if actor >= src {
                continue;
            }
            let tgt = src - 1;
            rep.push(sweep_basis(
                format!("d{src} C{actor}-equivariant"),
                CheckKind::Invariant,
                &[dims[actor], dims[src]],
                |t| {
                    let (z, x) = (e(actor, t[0]), e(src, t[1]));
                    let rhs = if actor == tgt {
                        c[tgt].mul(&z, &d.apply(&x))
                    } else {
                        m.act(actor, tgt, &z, &d.apply(&x))
                    };
                    expect_eq(
                        || format!("z=e{}, x=e{}", t[0], t[1]),
                        &d.apply(&m.act(actor, src, &z, &x)),
                        &rhs,
                    )
                },
            ));
        }
    }
    rep
}
