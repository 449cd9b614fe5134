//! From simplicial algebras to crossed modules, 2-crossed modules and
//! 3-crossed modules, the identity tables in the simplicial model, and
//! round trips through the builders.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::corpus;
use crate::crossed::{
    verify_2cm, verify_3cm, verify_cm, CrossedModule, LiftingKey, ThreeCrossedModule,
    TwoCrossedModule,
};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ideal::{quotient, Ideal};
use crate::linalg::Subspace;
use crate::moore::{moore, MooreComplex};
use crate::morphism::{BilinearMap, Morphism};
use crate::report::{AxiomReport, CheckKind, CheckRecord};
use crate::simplicial::{
    build_from_2crossed, build_from_crossed, degenerate_ideal, TruncatedSimplicialAlgebra,
};
use crate::supply::SupplyConfig;

/// Sign convention for the 2-dimensional Peiffer lifting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftingConvention {
    /// `{x ⊗ y} = s₁x(s₁y − s₀y)`, the one the builders invert.
    #[default]
    S1MinusS0,
    /// `{x ⊗ y} = s₁x(s₀y − s₁y)`
    S0MinusS1,
}

/// Where a functor output came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub moore_dims: Vec<usize>,
    /// Level whose Moore component was replaced by a quotient.
    pub quotient_level: usize,
    /// Dimension of the ideal divided out there.
    pub quotient_ideal_dim: usize,
    pub note: String,
    /// Liftings whose printed formula left the Moore component on some
    /// basis pair and was sent through the normalizing projection.
    pub normalized: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct FunctorOutput<T> {
    pub structure: T,
    pub provenance: Provenance,
    pub report: AxiomReport,
}

/// A Moore component, possibly divided by an ideal, with the maps to and
/// from `E_n`.
struct Comp {
    lvl: usize,
    alg: Arc<Algebra>,
    space: Subspace,
    quot: Option<(Morphism, Vec<usize>)>,
}

impl Comp {
    fn plain(e: &TruncatedSimplicialAlgebra, mc: &MooreComplex, n: usize) -> Comp {
        let alg = if n == 0 {
            e.level(0).clone()
        } else {
            mc.component(n).clone()
        };
        Comp {
            lvl: n,
            alg,
            space: mc.space(n).space().clone(),
            quot: None,
        }
    }

    /// `NE_n / ideal`, where `image` spans a subspace of `E_n` inside `NE_n`.
    fn divided(mc: &MooreComplex, n: usize, image: &Subspace) -> Result<(Comp, usize)> {
        let space = mc.space(n).space().clone();
        let comp = mc.component(n);
        let coords: Vec<Vec<u32>> = image
            .basis()
            .iter()
            .map(|v| {
                space
                    .coordinates(v)
                    .ok_or_else(|| Error::Simplicial(format!("image at level {n} leaves NE_{n}")))
            })
            .collect::<Result<_>>()?;
        let sub = Subspace::from_spanning(comp.field(), comp.dim(), coords);
        let dim = sub.dim();
        if dim == 0 {
            return Ok((
                Comp {
                    lvl: n,
                    alg: comp.clone(),
                    space,
                    quot: None,
                },
                0,
            ));
        }
        let ideal = Ideal::new(comp.clone(), sub.clone()).map_err(|err| {
            Error::Simplicial(format!("quotient at level {n} ill-defined: {err}"))
        })?;
        let keep = sub.complement_indices();
        let (q, proj) = quotient(comp, &ideal)?;
        Ok((
            Comp {
                lvl: n,
                alg: q,
                space,
                quot: Some((proj, keep)),
            },
            dim,
        ))
    }

    fn embed(&self, q: &[u32]) -> Element {
        let c = match &self.quot {
            None => q.to_vec(),
            Some((_, keep)) => {
                let mut c = vec![0u32; self.space.dim()];
                for (i, &v) in q.iter().enumerate() {
                    c[keep[i]] = v;
                }
                c
            }
        };
        Element::new(self.space.combine(&c))
    }

    fn read(&self, x: &[u32]) -> Option<Element> {
        let c = self.space.coordinates(x)?;
        Some(match &self.quot {
            None => Element::new(c),
            Some((proj, _)) => proj.apply(&c),
        })
    }
}

/// Tabulates a bilinear map whose value is computed in `E_{out.lvl}`;
/// values outside the Moore component are an error.
fn tabulate(
    what: &str,
    a: &Comp,
    b: &Comp,
    out: &Comp,
    rule: impl Fn(&Element, &Element) -> Element,
) -> Result<BilinearMap> {
    let (map, stray) = tabulate_with(a, b, out, None, rule);
    match stray {
        Some(v) => Err(Error::Simplicial(format!(
            "{what}: value {:?} not in NE_{}",
            v.coeffs(),
            out.lvl
        ))),
        None => Ok(map),
    }
}

/// Like [`tabulate`], but values outside `NE` are sent through the
/// normalizing projection (the identity on `NE`). Returns whether that
/// was needed.
fn tabulate_projected(
    e: &TruncatedSimplicialAlgebra,
    a: &Comp,
    b: &Comp,
    out: &Comp,
    rule: impl Fn(&Element, &Element) -> Element,
) -> (BilinearMap, bool) {
    let (map, stray) = tabulate_with(a, b, out, Some(e), rule);
    (map, stray.is_some())
}

fn tabulate_with(
    a: &Comp,
    b: &Comp,
    out: &Comp,
    repair: Option<&TruncatedSimplicialAlgebra>,
    rule: impl Fn(&Element, &Element) -> Element,
) -> (BilinearMap, Option<Element>) {
    let mut stray = None;
    let map = BilinearMap::from_fn(a.alg.clone(), b.alg.clone(), out.alg.clone(), |x, y| {
        let v = rule(&a.embed(x), &b.embed(y));
        if let Some(r) = out.read(&v) {
            return r;
        }
        let fixed = repair.and_then(|e| out.read(&e.project_normal(out.lvl, &v)));
        stray.get_or_insert(v);
        fixed.unwrap_or_else(|| out.alg.zero_element())
    });
    (map, stray)
}

fn boundary(e: &TruncatedSimplicialAlgebra, from: &Comp, to: &Comp) -> Result<Morphism> {
    let mut stray = false;
    let m = Morphism::from_images(from.alg.clone(), to.alg.clone(), |i| {
        let v = e.d(from.lvl, from.lvl, &from.embed(&from.alg.basis_element(i)));
        to.read(&v).map(Element::into_coeffs).unwrap_or_else(|| {
            stray = true;
            vec![0; to.alg.dim()]
        })
    });
    if stray {
        return Err(Error::Simplicial(format!(
            "∂_{} leaves NE_{}",
            from.lvl, to.lvl
        )));
    }
    Ok(m)
}

struct Ops<'a> {
    e: &'a TruncatedSimplicialAlgebra,
}

impl Ops<'_> {
    /// `s_{a}…s_{b}(x)` with the indices in printed order, `x ∈ E_lvl`.
    fn s(&self, lvl: usize, path: &[usize], x: &[u32]) -> Element {
        let mut cur = Element::new(x.to_vec());
        let mut l = lvl;
        for &i in path.iter().rev() {
            l += 1;
            cur = self.e.s(l, i, &cur);
        }
        cur
    }

    fn mul(&self, n: usize, a: &[u32], b: &[u32]) -> Element {
        self.e.level(n).mul(a, b)
    }

    fn sub(&self, n: usize, a: &[u32], b: &[u32]) -> Element {
        self.e.level(n).sub(a, b)
    }
}

fn action(ops: &Ops, a: &Comp, b: &Comp, path: &'static [usize]) -> Result<BilinearMap> {
    tabulate("action", a, b, b, |x, y| {
        ops.mul(b.lvl, &ops.s(a.lvl, path, x), y)
    })
}

fn lifting_2(ops: &Ops, c1: &Comp, c2: &Comp, conv: LiftingConvention) -> Result<BilinearMap> {
    tabulate("lifting", c1, c1, c2, |x, y| {
        let (s0y, s1y) = (ops.s(1, &[0], y), ops.s(1, &[1], y));
        let diff = match conv {
            LiftingConvention::S1MinusS0 => ops.sub(2, &s1y, &s0y),
            LiftingConvention::S0MinusS1 => ops.sub(2, &s0y, &s1y),
        };
        ops.mul(2, &ops.s(1, &[1], x), &diff)
    })
}

fn span_of_images(e: &TruncatedSimplicialAlgebra, n: usize, vs: &[Vec<u32>]) -> Subspace {
    let a = e.level(n - 1);
    Subspace::from_spanning(
        a.field(),
        a.dim(),
        vs.iter().map(|v| e.d(n, n, v).into_coeffs()).collect(),
    )
}

fn need_k(e: &TruncatedSimplicialAlgebra, k: usize) -> Result<()> {
    if e.k() < k {
        return Err(Error::Precondition(format!(
            "needs k ≥ {k}, object has k = {}",
            e.k()
        )));
    }
    Ok(())
}

/// `NE₁ → NE₀ = E₀` with `r·c = s₀(r)c`. When `∂₂(NE₂) ≠ 0` the top is
/// `NE₁/∂₂(NE₂)` instead.
pub fn cm_from_simplicial(e: &TruncatedSimplicialAlgebra) -> Result<FunctorOutput<CrossedModule>> {
    need_k(e, 1)?;
    let mc = moore(e)?;
    let c0 = Comp::plain(e, &mc, 0);
    let (c1, qdim) = if e.k() >= 2 {
        Comp::divided(&mc, 1, &span_of_images(e, 2, &mc.space(2).space().basis()))?
    } else {
        (Comp::plain(e, &mc, 1), 0)
    };
    let ops = Ops { e };
    let cm = CrossedModule::new(boundary(e, &c1, &c0)?, action(&ops, &c0, &c1, &[0])?)?;
    let report = verify_cm(&cm);
    Ok(FunctorOutput {
        structure: cm,
        provenance: Provenance {
            moore_dims: mc.dims(),
            quotient_level: 1,
            quotient_ideal_dim: qdim,
            normalized: Vec::new(),
            note: if qdim > 0 {
                "NE1 divided by ∂2(NE2)".into()
            } else {
                "no quotient".into()
            },
        },
        report,
    })
}

/// `NE₂ → NE₁ → NE₀` with actions through degeneracies and the chosen
/// lifting; `NE₂` is divided by `∂₃(NE₃)` when that is nonzero.
pub fn two_crossed_from_simplicial(
    e: &TruncatedSimplicialAlgebra,
    conv: LiftingConvention,
) -> Result<FunctorOutput<TwoCrossedModule>> {
    need_k(e, 2)?;
    let mc = moore(e)?;
    let c0 = Comp::plain(e, &mc, 0);
    let c1 = Comp::plain(e, &mc, 1);
    let (c2, qdim) = if e.k() >= 3 {
        Comp::divided(&mc, 2, &span_of_images(e, 3, &mc.space(3).space().basis()))?
    } else {
        (Comp::plain(e, &mc, 2), 0)
    };
    let ops = Ops { e };
    let t = TwoCrossedModule::new(
        boundary(e, &c2, &c1)?,
        boundary(e, &c1, &c0)?,
        action(&ops, &c0, &c1, &[0])?,
        action(&ops, &c0, &c2, &[1, 0])?,
        action(&ops, &c1, &c2, &[1])?,
        lifting_2(&ops, &c1, &c2, conv)?,
    )?;
    let report = verify_2cm(&t);
    Ok(FunctorOutput {
        structure: t,
        provenance: Provenance {
            moore_dims: mc.dims(),
            quotient_level: 2,
            quotient_ideal_dim: qdim,
            normalized: Vec::new(),
            note: if qdim > 0 {
                "NE2 divided by ∂3(NE3)".into()
            } else {
                "no quotient".into()
            },
        },
        report,
    })
}

struct ThreeParts {
    comps: [Comp; 4],
    qdim: usize,
    cap_dim: usize,
    mc: MooreComplex,
}

fn three_parts(e: &TruncatedSimplicialAlgebra) -> Result<ThreeParts> {
    if e.k() != 4 {
        return Err(Error::Precondition(format!(
            "needs k = 4, object has k = {}",
            e.k()
        )));
    }
    let mc = moore(e)?;
    let cap = mc
        .space(4)
        .space()
        .intersection(degenerate_ideal(e, 4)?.space());
    let (c3, qdim) = Comp::divided(&mc, 3, &span_of_images(e, 4, &cap.basis()))?;
    Ok(ThreeParts {
        comps: [
            Comp::plain(e, &mc, 0),
            Comp::plain(e, &mc, 1),
            Comp::plain(e, &mc, 2),
            c3,
        ],
        qdim,
        cap_dim: cap.dim(),
        mc,
    })
}

/// `NE₃/∂₄(NE₄∩D₄) → NE₂ → NE₁ → NE₀` with the six actions through
/// degeneracies and the seven coset liftings; the verifier report is
/// attached.
pub fn three_crossed_from_simplicial(
    e: &TruncatedSimplicialAlgebra,
    cfg: &SupplyConfig,
) -> Result<FunctorOutput<ThreeCrossedModule>> {
    three_crossed_with(e, LiftingConvention::S1MinusS0, cfg)
}

/// [`three_crossed_from_simplicial`] with a chosen sign for the
/// `C₁ ⊗ C₁ → C₂` lifting; the six upper liftings are unchanged.
pub fn three_crossed_with(
    e: &TruncatedSimplicialAlgebra,
    conv: LiftingConvention,
    cfg: &SupplyConfig,
) -> Result<FunctorOutput<ThreeCrossedModule>> {
    let parts = three_parts(e)?;
    let [c0, c1, c2, c3] = &parts.comps;
    let ops = Ops { e };
    let m = &|n: usize, a: &[u32], b: &[u32]| ops.mul(n, a, b);
    let s = |l: usize, p: &[usize], x: &[u32]| ops.s(l, p, x);
    let sub = |n: usize, a: &[u32], b: &[u32]| ops.sub(n, a, b);
    let actions = [
        action(&ops, c0, c1, &[0])?,
        action(&ops, c0, c2, &[1, 0])?,
        action(&ops, c0, c3, &[2, 1, 0])?,
        action(&ops, c1, c2, &[1])?,
        action(&ops, c1, c3, &[2, 1])?,
        action(&ops, c2, c3, &[2])?,
    ];
    type Rule<'r> = Box<dyn Fn(&Element, &Element) -> Element + 'r>;
    let specs: [(&str, &Comp, &Comp, Rule); 6] = [
        (
            "(1,0)(2)",
            c1,
            c2,
            Box::new(|x, y| {
                m(
                    3,
                    &sub(3, &s(1, &[2, 0], x), &s(1, &[1, 0], x)),
                    &s(2, &[2], y),
                )
            }),
        ),
        (
            "(2,0)(1)",
            c1,
            c2,
            Box::new(|x, y| {
                m(
                    3,
                    &sub(3, &s(1, &[2, 1], x), &s(1, &[2, 0], x)),
                    &sub(3, &s(2, &[1], y), &s(2, &[2], y)),
                )
            }),
        ),
        // stored on C₂ ⊗ C₁: (y₂, x₁)
        (
            "(0)(2,1)",
            c2,
            c1,
            Box::new(|y, x| {
                let t = sub(3, &sub(3, &s(2, &[1], y), &s(2, &[0], y)), &s(2, &[2], y));
                m(3, &s(1, &[2, 1], x), &t)
            }),
        ),
        (
            "(1)(0)",
            c2,
            c2,
            Box::new(|x, y| {
                let first = m(3, &sub(3, &s(2, &[1], x), &s(2, &[2], x)), &s(2, &[1], y));
                e.level(3).add(&first, &s(2, &[2], &m(2, x, y)))
            }),
        ),
        (
            "(2)(0)",
            c2,
            c2,
            Box::new(|x, y| e.level(3).neg(&m(3, &s(2, &[2], x), &s(2, &[0], y)))),
        ),
        (
            "(2)(1)",
            c2,
            c2,
            Box::new(|x, y| m(3, &s(2, &[2], x), &sub(3, &s(2, &[2], y), &s(2, &[1], y)))),
        ),
    ];
    let mut projected = Vec::new();
    let mut upper = Vec::new();
    for (name, a, b, rule) in specs {
        let (map, fixed) = tabulate_projected(e, a, b, c3, rule);
        if fixed {
            projected.push(name);
        }
        upper.push(map);
    }
    let mut upper = upper.into_iter();
    let mut next = || upper.next().expect("six liftings");
    let liftings = [
        lifting_2(&ops, c1, c2, conv)?,
        next(),
        next(),
        next(),
        next(),
        next(),
        next(),
    ];
    let structure = ThreeCrossedModule::new(
        boundary(e, c3, c2)?,
        boundary(e, c2, c1)?,
        boundary(e, c1, c0)?,
        actions,
        liftings,
    )?;
    let report = verify_3cm(&structure, cfg);
    Ok(FunctorOutput {
        structure,
        provenance: Provenance {
            moore_dims: parts.mc.dims(),
            quotient_level: 3,
            quotient_ideal_dim: parts.qdim,
            note: format!(
                "NE3 divided by ∂4(NE4 ∩ D4); dim NE4 ∩ D4 = {}",
                parts.cap_dim
            ),
            normalized: projected.iter().map(|s| s.to_string()).collect(),
        },
        report,
    })
}

mod tables;

pub use tables::{table_identities_check, TABLE2_ROWS};

/// Build, extract and compare on the nose for every corpus crossed module
/// (`level = 1`) or 2-crossed module (`level = 2`) over `f`.
pub fn roundtrip_check(level: usize, f: PrimeField) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(format!("roundtrip level {level} p={}", f.modulus()));
    match level {
        1 => {
            for (name, cm) in corpus::crossed_modules(f)? {
                for k in [1, 2] {
                    let e = build_from_crossed(&cm, k)?;
                    let out = cm_from_simplicial(&e)?.structure;
                    report.push(CheckRecord::new(
                        format!("{name} k={k}"),
                        CheckKind::Invariant,
                        1,
                        cm_difference(&cm, &out),
                    ));
                }
            }
        }
        2 => {
            let mut items = corpus::two_crossed_modules(f)?;
            let derived = two_crossed_from_simplicial(
                &corpus::length_two(f, 2)?,
                LiftingConvention::S1MinusS0,
            )?;
            items.push(("length-two extracted".into(), derived.structure));
            let peiffer = two_crossed_from_simplicial(
                &corpus::length_two_peiffer(f, 2)?,
                LiftingConvention::S1MinusS0,
            )?;
            items.push(("length-two-peiffer extracted".into(), peiffer.structure));
            for (name, t) in items {
                let e = build_from_2crossed(&t, 2)?;
                let out = two_crossed_from_simplicial(&e, LiftingConvention::S1MinusS0)?.structure;
                report.push(CheckRecord::new(
                    name,
                    CheckKind::Invariant,
                    1,
                    two_difference(&t, &out),
                ));
            }
        }
        _ => {
            return Err(Error::Range {
                what: "round-trip level",
                value: level,
                min: 1,
                max: 2,
            })
        }
    }
    Ok(report)
}

fn algebra_difference(what: &str, a: &Algebra, b: &Algebra) -> Option<String> {
    if a.dim() != b.dim() {
        return Some(format!("{what}: dim {} vs {}", a.dim(), b.dim()));
    }
    (a.structure() != b.structure()).then(|| format!("{what}: structure constants differ"))
}

fn map_difference(what: &str, a: &Morphism, b: &Morphism) -> Option<String> {
    (a.matrix() != b.matrix()).then(|| format!("{what}: matrices differ"))
}

fn bilinear_difference(what: &str, a: &BilinearMap, b: &BilinearMap) -> Option<String> {
    (a.tensor() != b.tensor()).then(|| format!("{what}: tensors differ"))
}

/// First difference between two crossed modules, ignoring basis names.
pub fn cm_difference(a: &CrossedModule, b: &CrossedModule) -> Option<String> {
    algebra_difference("C", a.c(), b.c())
        .or_else(|| algebra_difference("R", a.r(), b.r()))
        .or_else(|| map_difference("boundary", a.boundary(), b.boundary()))
        .or_else(|| bilinear_difference("action", a.action(), b.action()))
}

/// First difference between two 2-crossed modules, ignoring basis names.
pub fn two_difference(a: &TwoCrossedModule, b: &TwoCrossedModule) -> Option<String> {
    algebra_difference("C2", a.c2(), b.c2())
        .or_else(|| algebra_difference("C1", a.c1(), b.c1()))
        .or_else(|| algebra_difference("C0", a.c0(), b.c0()))
        .or_else(|| map_difference("d2", &a.d2, &b.d2))
        .or_else(|| map_difference("d1", &a.d1, &b.d1))
        .or_else(|| bilinear_difference("C0 on C1", &a.act01, &b.act01))
        .or_else(|| bilinear_difference("C0 on C2", &a.act02, &b.act02))
        .or_else(|| bilinear_difference("C1 on C2", &a.act12, &b.act12))
        .or_else(|| bilinear_difference("lifting", &a.lifting, &b.lifting))
}
