//! Lie algebras over ℤ/p and Lie crossed, 2-crossed and 3-crossed modules.
//!
//! A Lie algebra is stored as an [`Algebra`] whose product is the bracket,
//! so morphisms, bilinear maps and the printed 3CM sweeps are shared with
//! the commutative case and read every product as a bracket.

use std::sync::Arc;

use crate::algebra::{names, Algebra, Element};
use crate::crossed::{
    action_levels, boundary_equivariance, printed_axioms, CrossedModule, LiftingKey,
    ThreeCrossedModule, TwoCrossedModule,
};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::morphism::{BilinearMap, Morphism};
use crate::report::{expect_eq, sweep, sweep_basis, AxiomReport, CheckKind, CheckRecord};
use crate::supply::{self, SupplyConfig};

/// A Lie algebra given by the structure constants of `[eᵢ, eⱼ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    inner: Arc<Algebra>,
}

impl LieAlgebra {
    /// Dense bracket tensor laid out as `[(i * dim + j) * dim + k]`. No
    /// axioms are checked; see [`validate_lie`].
    pub fn new(field: PrimeField, basis: Vec<String>, bracket: Vec<u32>) -> Result<Self> {
        Ok(LieAlgebra {
            inner: Arc::new(Algebra::new(field, basis, bracket)?),
        })
    }

    pub fn from_fn(
        field: PrimeField,
        basis: Vec<String>,
        bracket: impl FnMut(usize, usize) -> Vec<u32>,
    ) -> Self {
        LieAlgebra {
            inner: Arc::new(Algebra::from_fn(field, basis, bracket)),
        }
    }

    /// Zero bracket on `n` generators.
    pub fn abelian(field: PrimeField, basis: Vec<String>) -> Self {
        LieAlgebra {
            inner: Arc::new(Algebra::square_zero(field, basis)),
        }
    }

    /// `⟨x, y, z⟩` with `[x, y] = z` and every other basis bracket zero
    /// apart from `[y, x] = −z`.
    pub fn heisenberg(field: PrimeField) -> Self {
        let m = field.modulus();
        LieAlgebra::from_fn(
            field,
            vec!["x".into(), "y".into(), "z".into()],
            |i, j| match (i, j) {
                (0, 1) => vec![0, 0, 1],
                (1, 0) => vec![0, 0, m - 1],
                _ => vec![0, 0, 0],
            },
        )
    }

    pub fn zero(field: PrimeField) -> Self {
        LieAlgebra {
            inner: Arc::new(Algebra::zero(field)),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.inner.field()
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn basis_names(&self) -> &[String] {
        self.inner.basis_names()
    }

    /// The bracket tensor.
    pub fn structure(&self) -> &[u32] {
        self.inner.structure()
    }

    pub fn bracket(&self, a: &[u32], b: &[u32]) -> Element {
        self.inner.mul(a, b)
    }

    /// The underlying algebra with the bracket as product.
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.inner
    }
}

/// Alternating and Jacobi checks on basis pairs and triples.
pub fn validate_lie(l: &LieAlgebra) -> AxiomReport {
    let a = l.algebra();
    let n = a.dim();
    let e = |i| a.basis_element(i);
    let mut rep = AxiomReport::new("Lie algebra");
    rep.push(sweep_basis("alternating", CheckKind::Axiom, &[n], |t| {
        let v = a.mul(&e(t[0]), &e(t[0]));
        (!v.is_zero()).then(|| format!("[e{0},e{0}] = {v:?}", t[0]))
    }));
    rep.push(sweep_basis(
        "antisymmetry",
        CheckKind::Axiom,
        &[n, n],
        |t| {
            let (x, y) = (e(t[0]), e(t[1]));
            let v = a.add(&a.mul(&x, &y), &a.mul(&y, &x));
            (!v.is_zero()).then(|| format!("[e{0},e{1}] + [e{1},e{0}] = {v:?}", t[0], t[1]))
        },
    ));
    rep.push(sweep_basis("Jacobi", CheckKind::Axiom, &[n, n, n], |t| {
        let v = jacobiator(a, &e(t[0]), &e(t[1]), &e(t[2]));
        (!v.is_zero()).then(|| format!("x=e{}, y=e{}, z=e{}: {v:?}", t[0], t[1], t[2]))
    }));
    rep
}

fn jacobiator(a: &Algebra, x: &[u32], y: &[u32], z: &[u32]) -> Element {
    let b = |u: &[u32], v: &[u32]| a.mul(u, v);
    a.add(&a.add(&b(&b(x, y), z), &b(&b(y, z), x)), &b(&b(z, x), y))
}

/// Alternating and Jacobi over the element supply rather than the basis.
/// Multilinearity makes this redundant for accepted algebras; it is a
/// cross-check of the basis sweep.
pub fn validate_lie_elements(l: &LieAlgebra, cfg: &SupplyConfig) -> AxiomReport {
    let a = l.algebra();
    let els = supply::elements(a, cfg);
    let mut rep = AxiomReport::new("Lie algebra (elements)");
    rep.push(sweep("alternating", CheckKind::Axiom, &els, |x| {
        let v = a.mul(x, x);
        (!v.is_zero()).then(|| format!("x={x:?}: [x,x] = {v:?}"))
    }));
    let mut triples: Vec<(Element, Element, Element)> = Vec::new();
    'fill: for x in &els {
        for y in &els {
            for z in &els {
                if triples.len() as u64 >= cfg.pair_bound {
                    break 'fill;
                }
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    rep.push(sweep("Jacobi", CheckKind::Axiom, &triples, |(x, y, z)| {
        let v = jacobiator(a, x, y, z);
        (!v.is_zero()).then(|| format!("x={x:?}, y={y:?}, z={z:?}: {v:?}"))
    }));
    rep
}

/// `s·[a,b] = [s·a,b] + [a,s·b]` and `[s,s′]·a = s·(s′·a) − s′·(s·a)`
/// on basis triples.
pub fn lie_action_failure(action: &BilinearMap) -> Option<String> {
    let (s, n) = (action.left(), action.right());
    if action.target().dim() != n.dim() {
        return Some("action target differs from acted-on algebra".into());
    }
    let act = |x: &[u32], y: &[u32]| action.apply(x, y);
    for i in 0..s.dim() {
        let si = s.basis_element(i);
        for j in 0..n.dim() {
            let nj = n.basis_element(j);
            for l in 0..n.dim() {
                let nl = n.basis_element(l);
                let lhs = act(&si, &n.mul(&nj, &nl));
                let rhs = n.add(&n.mul(&act(&si, &nj), &nl), &n.mul(&nj, &act(&si, &nl)));
                if lhs != rhs {
                    return Some(format!(
                        "s{i}·[n{j},n{l}] != [s{i}·n{j},n{l}] + [n{j},s{i}·n{l}]"
                    ));
                }
            }
            for l in 0..s.dim() {
                let sl = s.basis_element(l);
                let lhs = act(&s.mul(&si, &sl), &nj);
                let rhs = n.sub(&act(&si, &act(&sl, &nj)), &act(&sl, &act(&si, &nj)));
                if lhs != rhs {
                    return Some(format!(
                        "[s{i},s{l}]·n{j} != s{i}·(s{l}·n{j}) − s{l}·(s{i}·n{j})"
                    ));
                }
            }
        }
    }
    None
}

fn lie_action_record(name: &str, action: &BilinearMap) -> CheckRecord {
    let (s, n) = (action.left().dim() as u64, action.right().dim() as u64);
    CheckRecord::new(
        name,
        CheckKind::Invariant,
        s * n * (n + s),
        lie_action_failure(action),
    )
}

fn morphism_record(name: &str, m: &Morphism) -> CheckRecord {
    let d = m.source().dim() as u64;
    CheckRecord::new(
        name,
        CheckKind::Invariant,
        d * d,
        m.multiplicativity_failure()
            .map(|(i, j)| format!("f([e{i},e{j}]) != [f(e{i}),f(e{j})]")),
    )
}

fn composite_zero(name: &str, a: &Morphism, b: &Morphism) -> CheckRecord {
    let dd = a.matrix().mul(b.matrix());
    CheckRecord::new(
        name,
        CheckKind::Invariant,
        1,
        (!dd.is_zero()).then(|| format!("{dd:?}")),
    )
}

/// `∂: M → L` with `L` acting on `M`: `∂(l·m) = [l, ∂m]` and the Peiffer
/// identity `∂m·m′ = [m, m′]`.
pub fn verify_lie_cm(cm: &CrossedModule) -> AxiomReport {
    let (c, r) = (cm.c(), cm.r());
    let d = &cm.boundary();
    let mut rep = AxiomReport::new("Lie crossed module");
    rep.push(morphism_record("boundary Lie morphism", d));
    rep.push(lie_action_record("L acts on M", cm.action()));
    rep.push(sweep_basis(
        "LCM1",
        CheckKind::Axiom,
        &[r.dim(), c.dim()],
        |t| {
            let (x, y) = (r.basis_element(t[0]), c.basis_element(t[1]));
            expect_eq(
                || format!("l=e{}, m=e{}", t[0], t[1]),
                &d.apply(&cm.act(&x, &y)),
                &r.mul(&x, &d.apply(&y)),
            )
        },
    ));
    rep.push(sweep_basis(
        "LCM2",
        CheckKind::Axiom,
        &[c.dim(), c.dim()],
        |t| {
            let (x, y) = (c.basis_element(t[0]), c.basis_element(t[1]));
            expect_eq(
                || format!("m=e{}, m'=e{}", t[0], t[1]),
                &cm.act(&d.apply(&x), &y),
                &c.mul(&x, &y),
            )
        },
    ));
    rep
}

/// `L₂ → L₁ → L₀` with lifting `{ , }: L₁ × L₁ → L₂`:
/// - L2CM1 `∂₂{a,b} = ^{∂₁b}a − [a,b]`
/// - L2CM2 `{∂₂x, ∂₂y} = [y,x]`
/// - L2CM3 `{∂₂x, b} + {b, ∂₂x} = ^{b}x`
/// - L2CM4 `z·{a,b} = {z·a, b} + {a, z·b}` for `z ∈ L₀`
pub fn verify_lie_2cm(t: &TwoCrossedModule) -> AxiomReport {
    let (c2, c1, c0) = (t.c2(), t.c1(), t.c0());
    let (n2, n1, n0) = (c2.dim(), c1.dim(), c0.dim());
    let e2 = |i| c2.basis_element(i);
    let e1 = |i| c1.basis_element(i);
    let e0 = |i| c0.basis_element(i);
    let mut rep = AxiomReport::new("Lie 2-crossed module");
    rep.push(composite_zero("d1∘d2 = 0", &t.d1, &t.d2));
    rep.push(morphism_record("d1 Lie morphism", &t.d1));
    rep.push(morphism_record("d2 Lie morphism", &t.d2));
    rep.push(lie_action_record("L0 acts on L1", &t.act01));
    rep.push(lie_action_record("L0 acts on L2", &t.act02));
    rep.push(lie_action_record("L1 acts on L2", &t.act12));
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
    rep.push(sweep_basis("L2CM1", CheckKind::Axiom, &[n1, n1], |v| {
        let (a, b) = (e1(v[0]), e1(v[1]));
        let rhs = c1.sub(&t.act01.apply(&t.d1.apply(&b), &a), &c1.mul(&a, &b));
        expect_eq(
            || format!("a=e{}, b=e{}", v[0], v[1]),
            &t.d2.apply(&t.lift(&a, &b)),
            &rhs,
        )
    }));
    rep.push(sweep_basis("L2CM2", CheckKind::Axiom, &[n2, n2], |v| {
        let (x, y) = (e2(v[0]), e2(v[1]));
        expect_eq(
            || format!("x=e{}, y=e{}", v[0], v[1]),
            &t.lift(&t.d2.apply(&x), &t.d2.apply(&y)),
            &c2.mul(&y, &x),
        )
    }));
    rep.push(sweep_basis("L2CM3", CheckKind::Axiom, &[n2, n1], |v| {
        let (x, b) = (e2(v[0]), e1(v[1]));
        let dx = t.d2.apply(&x);
        expect_eq(
            || format!("x=e{}, b=e{}", v[0], v[1]),
            &c2.add(&t.lift(&dx, &b), &t.lift(&b, &dx)),
            &t.act12.apply(&b, &x),
        )
    }));
    rep.push(sweep_basis("L2CM4", CheckKind::Axiom, &[n0, n1, n1], |v| {
        let (z, a, b) = (e0(v[0]), e1(v[1]), e1(v[2]));
        let lhs = t.act02.apply(&z, &t.lift(&a, &b));
        let rhs = c2.add(
            &t.lift(&t.act01.apply(&z, &a), &b),
            &t.lift(&a, &t.act01.apply(&z, &b)),
        );
        expect_eq(
            || format!("z=e{}, a=e{}, b=e{}", v[0], v[1], v[2]),
            &lhs,
            &rhs,
        )
    }));
    rep
}

/// `L₃ → L₂ → L₁ → L₀` with six actions and seven liftings, held as a
/// [`ThreeCrossedModule`] over the bracket algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieThreeCrossedModule {
    inner: ThreeCrossedModule,
}

impl LieThreeCrossedModule {
    /// Arguments as for [`ThreeCrossedModule::new`], with every algebra
    /// taken from a [`LieAlgebra`].
    pub fn new(
        d3: Morphism,
        d2: Morphism,
        d1: Morphism,
        actions: [BilinearMap; 6],
        liftings: [BilinearMap; 7],
    ) -> Result<Self> {
        Ok(LieThreeCrossedModule {
            inner: ThreeCrossedModule::new(d3, d2, d1, actions, liftings)?,
        })
    }

    /// `0 → 0 → M → L` over a Lie crossed module, every lifting zero.
    pub fn from_lie_crossed(cm: &CrossedModule) -> Self {
        let f = cm.r().field();
        let zero = Arc::new(Algebra::zero(f));
        let (c0, c1) = (cm.r().clone(), cm.c().clone());
        let z = |a: &Arc<Algebra>, b: &Arc<Algebra>, t: &Arc<Algebra>| {
            BilinearMap::zero(a.clone(), b.clone(), t.clone())
        };
        let two = TwoCrossedModule {
            d2: Morphism::zero(zero.clone(), c1.clone()),
            d1: cm.boundary().clone(),
            act01: cm.action().clone(),
            act02: z(&c0, &zero, &zero),
            act12: z(&c1, &zero, &zero),
            lifting: z(&c1, &c1, &zero),
        };
        LieThreeCrossedModule {
            inner: ThreeCrossedModule::from_two_crossed(&two),
        }
    }

    pub fn inner(&self) -> &ThreeCrossedModule {
        &self.inner
    }

    pub fn l(&self, n: usize) -> &Arc<Algebra> {
        self.inner.c(n)
    }

    /// Copy with `lifting[key]` replaced.
    pub fn with_lifting(&self, key: LiftingKey, map: BilinearMap) -> Result<Self> {
        let mut liftings = self.inner.liftings.clone();
        let idx = LiftingKey::ALL.iter().position(|&k| k == key).unwrap();
        liftings[idx] = map;
        LieThreeCrossedModule::new(
            self.inner.d3.clone(),
            self.inner.d2.clone(),
            self.inner.d1.clone(),
            self.inner.actions.clone(),
            liftings,
        )
    }
}

/// Structural invariants, 3CM1 through the Lie 2-crossed verifier on
/// `L₃ → L₂ → L₁`, 3CM2–3CM16 as printed with every product read as a
/// bracket, and `L₀`/`L₁`-equivariance of the liftings in derivation form.
/// The Lie crossed-module property of `∂₃` is reported as an audit.
pub fn verify_lie_3cm(m: &LieThreeCrossedModule, cfg: &SupplyConfig) -> AxiomReport {
    let t = &m.inner;
    let mut rep = AxiomReport::new("Lie 3-crossed module");
    rep.push(composite_zero("d1∘d2 = 0", &t.d1, &t.d2));
    rep.push(composite_zero("d2∘d3 = 0", &t.d2, &t.d3));
    for (name, d) in [("d1", &t.d1), ("d2", &t.d2), ("d3", &t.d3)] {
        rep.push(morphism_record(&format!("{name} Lie morphism"), d));
    }
    for key in crate::crossed::ACTION_KEYS {
        let (i, j) = action_levels(key);
        rep.push(lie_action_record(
            &format!("L{i} acts on L{j}"),
            t.action(i, j),
        ));
    }
    for mut r in boundary_equivariance(t) {
        r.check = r.check.replace('C', "L");
        rep.push(r);
    }
    if let Ok(cm3) = CrossedModule::new(t.d3.clone(), t.action(2, 3).clone()) {
        let mut sub = verify_lie_cm(&cm3);
        for r in &mut sub.records {
            r.kind = CheckKind::Audit;
        }
        rep.absorb("d3 crossed module: ", sub);
    }
    rep.absorb("3CM1: ", verify_lie_2cm(&t.upper()));
    rep.records.extend(printed_axioms(t, cfg, CheckKind::Axiom));
    for actor in [0usize, 1] {
        for key in LiftingKey::ALL {
            rep.push(equivariance(t, actor, key));
        }
    }
    rep
}

/// `z·{a,b} = {z·a, b} + {a, z·b}` with `L₁` acting on itself by bracket.
fn equivariance(m: &ThreeCrossedModule, actor: usize, key: LiftingKey) -> CheckRecord {
    let (la, lb, lt) = key.degrees();
    let c: Vec<&Arc<Algebra>> = (0..4).map(|n| m.c(n)).collect();
    let act = |n: usize, z: &[u32], x: &[u32]| -> Element {
        if n == actor {
            c[n].mul(z, x)
        } else {
            m.action(actor, n).apply(z, x)
        }
    };
    sweep_basis(
        format!("L{actor}-equivariant {key}"),
        CheckKind::Axiom,
        &[c[actor].dim(), c[la].dim(), c[lb].dim()],
        |t| {
            let z = c[actor].basis_element(t[0]);
            let (x, y) = (c[la].basis_element(t[1]), c[lb].basis_element(t[2]));
            let lhs = act(lt, &z, &m.lift(key, &x, &y));
            let rhs = c[lt].add(
                &m.lift(key, &act(la, &z, &x), &y),
                &m.lift(key, &x, &act(lb, &z, &y)),
            );
            expect_eq(
                || format!("z=e{}, a=e{}, b=e{}", t[0], t[1], t[2]),
                &lhs,
                &rhs,
            )
        },
    )
}

/// The ideal `⟨y, z⟩` of the Heisenberg algebra as a Lie crossed module
/// over it, acted on by the bracket.
pub fn heisenberg_ideal_cm(f: PrimeField) -> Result<CrossedModule> {
    let h = LieAlgebra::heisenberg(f);
    let hb = h.algebra().clone();
    let m = LieAlgebra::abelian(f, vec!["y".into(), "z".into()]);
    let ma = m.algebra().clone();
    let incl = Morphism::from_images(ma.clone(), hb.clone(), |i| {
        let mut v = vec![0u32; 3];
        v[i + 1] = 1;
        v
    });
    let action = BilinearMap::from_fn(hb.clone(), ma.clone(), ma, |x, y| {
        let v = hb.mul(x, &incl.apply(y));
        Element::new(v[1..].to_vec())
    });
    CrossedModule::new(incl, action)
}

/// Every level abelian of the given dimension, every map zero.
pub fn abelian_chain(f: PrimeField, dims: [usize; 4]) -> Result<LieThreeCrossedModule> {
    let l: Vec<Arc<Algebra>> = dims
        .iter()
        .enumerate()
        .map(|(n, &d)| {
            LieAlgebra::abelian(f, names(&format!("l{n}_"), d))
                .algebra()
                .clone()
        })
        .collect();
    zero_chain(&l)
}

fn zero_chain(l: &[Arc<Algebra>]) -> Result<LieThreeCrossedModule> {
    let z =
        |a: usize, b: usize, t: usize| BilinearMap::zero(l[a].clone(), l[b].clone(), l[t].clone());
    LieThreeCrossedModule::new(
        Morphism::zero(l[3].clone(), l[2].clone()),
        Morphism::zero(l[2].clone(), l[1].clone()),
        Morphism::zero(l[1].clone(), l[0].clone()),
        [
            z(0, 1, 1),
            z(0, 2, 2),
            z(0, 3, 3),
            z(1, 2, 2),
            z(1, 3, 3),
            z(2, 3, 3),
        ],
        [
            z(1, 1, 2),
            z(1, 2, 3),
            z(1, 2, 3),
            z(2, 1, 3),
            z(2, 2, 3),
            z(2, 2, 3),
            z(2, 2, 3),
        ],
    )
}

/// `⟨u⟩ → ⟨w⟩ → ⟨y, z⟩ → H` over the Heisenberg ideal crossed module, with
/// zero upper boundaries, trivial actions on `⟨w⟩, ⟨u⟩` and zero liftings.
pub fn heisenberg_chain(f: PrimeField) -> Result<LieThreeCrossedModule> {
    let cm = heisenberg_ideal_cm(f)?;
    let l = [
        cm.r().clone(),
        cm.c().clone(),
        LieAlgebra::abelian(f, vec!["w".into()]).algebra().clone(),
        LieAlgebra::abelian(f, vec!["u".into()]).algebra().clone(),
    ];
    let base = zero_chain(&l)?;
    let mut actions = base.inner.actions.clone();
    actions[0] = cm.action().clone();
    LieThreeCrossedModule::new(
        base.inner.d3.clone(),
        base.inner.d2.clone(),
        cm.boundary().clone(),
        actions,
        base.inner.liftings.clone(),
    )
}

/// Named Lie examples: algebras first, then 3-crossed chains.
pub fn lie_algebras(f: PrimeField) -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("abelian", LieAlgebra::abelian(f, names("a", 3))),
        ("heisenberg", LieAlgebra::heisenberg(f)),
    ]
}

pub fn lie_chains(f: PrimeField) -> Result<Vec<(&'static str, LieThreeCrossedModule)>> {
    Ok(vec![
        ("abelian-zero", abelian_chain(f, [2, 2, 1, 1])?),
        (
            "heisenberg-degenerate",
            LieThreeCrossedModule::from_lie_crossed(&heisenberg_ideal_cm(f)?),
        ),
        ("heisenberg-chain", heisenberg_chain(f)?),
    ])
}

/// `[e₀, e₀] = e₁` on two generators.
pub fn alternating_mutant(f: PrimeField) -> LieAlgebra {
    LieAlgebra::from_fn(f, names("e", 2), |i, j| {
        if i == 0 && j == 0 {
            vec![0, 1]
        } else {
            vec![0, 0]
        }
    })
}

/// The Heisenberg chain with `{w, w}_(2)(1) = u`.
pub fn heisenberg_lifting_mutant(f: PrimeField) -> Result<LieThreeCrossedModule> {
    let m = heisenberg_chain(f)?;
    let key = LiftingKey::L2_1;
    let map = m.inner.lifting(key).perturbed(0, 0, 0, 1);
    m.with_lifting(key, map)
}

/// Rejects a Lie algebra failing [`validate_lie`].
pub fn require_lie(l: &LieAlgebra) -> Result<()> {
    let rep = validate_lie(l);
    let failure = rep.failures().next().map(|r| {
        Error::Precondition(format!(
            "not a Lie algebra: {} ({})",
            r.check,
            r.witnesses.join("; ")
        ))
    });
    failure.map_or(Ok(()), Err)
}

#[cfg(test)]
mod tests;
