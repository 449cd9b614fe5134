//! Simplicial algebras with prescribed Moore complex, from crossed and
//! 2-crossed modules. Level 2 is written in the coordinates of
//! `E₂ = (NE₂ ⋊ s₁NE₁) ⋊ (s₀NE₁ ⋊ s₁s₀NE₀)`; higher levels are spanned by
//! degeneracies.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::crossed::{verify_2cm, verify_cm, CrossedModule, TwoCrossedModule};
use crate::error::{Error, Result};
use crate::ideal::semidirect;
use crate::morphism::Morphism;

use super::extend::degenerate_step;
use super::{validate_simplicial, TruncatedSimplicialAlgebra, MAX_LEVEL};

/// `E₀ = R`, `E₁ = C ⋊ R`, and degenerate levels above, so the Moore
/// complex is `C → R`.
pub fn build_from_crossed(cm: &CrossedModule, k: usize) -> Result<TruncatedSimplicialAlgebra> {
    if let Some(r) = verify_cm(cm).failures().next() {
        return Err(Error::Precondition(format!(
            "not a crossed module: {} ({})",
            r.check,
            r.witnesses.join("; ")
        )));
    }
    build_unchecked(&TwoCrossedModule::from_crossed(cm), k)
}

/// A simplicial algebra whose Moore complex is `C₂ → C₁ → C₀`, with
/// `NE_n = 0` for `n ≥ 3`. The lifting is read as
/// `{y ⊗ y′} = s₁y(s₁y′ − s₀y′)` and the `C₁`-action on `C₂` as `s₁y·x`.
pub fn build_from_2crossed(t: &TwoCrossedModule, k: usize) -> Result<TruncatedSimplicialAlgebra> {
    if let Some(r) = verify_2cm(t).failures().next() {
        return Err(Error::Precondition(format!(
            "not a 2-crossed module: {} ({})",
            r.check,
            r.witnesses.join("; ")
        )));
    }
    build_unchecked(t, k)
}

fn build_unchecked(t: &TwoCrossedModule, k: usize) -> Result<TruncatedSimplicialAlgebra> {
    if k > MAX_LEVEL {
        return Err(Error::Range {
            what: "truncation level",
            value: k,
            min: 0,
            max: MAX_LEVEL,
        });
    }
    let (c1, c0) = (t.c1().clone(), t.c0().clone());
    let n1 = c1.dim();
    let e0 = c0.clone();
    let mut e = TruncatedSimplicialAlgebra::new(vec![e0.clone()], vec![vec![]], vec![vec![]])?;
    if k == 0 {
        return Ok(e);
    }

    // E1 = C1 ⋊ C0 with basis [C1 | C0]
    let e1 = Arc::new(semidirect(&t.act01)?);
    let split1 = |v: &[u32]| (v[..n1].to_vec(), v[n1..].to_vec());
    let join1 = |c: &[u32], r: &[u32]| [c, r].concat();
    let d10 = Morphism::from_images(e1.clone(), e0.clone(), |i| split1(&e1.basis_element(i)).1);
    let d11 = Morphism::from_images(e1.clone(), e0.clone(), |i| {
        let (c, r) = split1(&e1.basis_element(i));
        c0.add(&t.d1.apply(&c), &r).into_coeffs()
    });
    let s10 = Morphism::from_images(e0.clone(), e1.clone(), |i| {
        join1(&vec![0; n1], &c0.basis_element(i))
    });
    e = TruncatedSimplicialAlgebra::new(
        vec![e0.clone(), e1.clone()],
        vec![vec![], vec![d10, d11]],
        vec![vec![], vec![s10]],
    )?;
    if k >= 2 {
        e = level_two(t, &e, &e1)?;
    }
    while e.k() < k {
        e = degenerate_step(&e)?;
    }
    if let Some(v) = validate_simplicial(&e).first() {
        return Err(Error::Simplicial(format!("built object is invalid: {v}")));
    }
    Ok(e)
}

fn level_two(
    t: &TwoCrossedModule,
    e: &TruncatedSimplicialAlgebra,
    e1: &Arc<Algebra>,
) -> Result<TruncatedSimplicialAlgebra> {
    let (c2, c1, c0) = (t.c2(), t.c1(), t.c0());
    let (n2, n1, n0) = (c2.dim(), c1.dim(), c0.dim());
    // blocks [a | s1 b | s0 c | s1s0 r]
    let split = |v: &[u32]| {
        (
            v[..n2].to_vec(),
            v[n2..n2 + n1].to_vec(),
            v[n2 + n1..n2 + 2 * n1].to_vec(),
            v[n2 + 2 * n1..].to_vec(),
        )
    };
    let join = |a: &[u32], b: &[u32], c: &[u32], r: &[u32]| [a, b, c, r].concat();
    let mut basis: Vec<String> = c2.basis_names().to_vec();
    basis.extend(c1.basis_names().iter().map(|s| format!("s1.{s}")));
    basis.extend(c1.basis_names().iter().map(|s| format!("s0.{s}")));
    basis.extend(c0.basis_names().iter().map(|s| format!("s1s0.{s}")));
    let dim = n2 + 2 * n1 + n0;
    let unit = |i: usize| {
        let mut v = vec![0u32; dim];
        v[i] = 1;
        v
    };
    let e2 = Algebra::from_fn(c2.field(), basis, |i, j| {
        let (a, b, c, r) = split(&unit(i));
        let (a_, b_, c_, r_) = split(&unit(j));
        let act12 = |y: &[u32], x: &[u32]| t.act12.apply(y, x);
        let act02 = |z: &[u32], x: &[u32]| t.act02.apply(z, x);
        let act01 = |z: &[u32], y: &[u32]| t.act01.apply(z, y);
        let sum2 = [
            c2.mul(&a, &a_),
            act12(&b, &a_),
            act12(&b_, &a),
            act02(&t.d1.apply(&c), &a_),
            act02(&t.d1.apply(&c_), &a),
            act02(&r, &a_),
            act02(&r_, &a),
        ]
        .iter()
        .fold(c2.zero_element(), |acc, x| c2.add(&acc, x));
        let pa = c2.sub(&c2.sub(&sum2, &t.lift(&b, &c_)), &t.lift(&b_, &c));
        let pb = [
            c1.mul(&b, &b_),
            c1.mul(&b, &c_),
            c1.mul(&b_, &c),
            act01(&r, &b_),
            act01(&r_, &b),
        ]
        .iter()
        .fold(c1.zero_element(), |acc, x| c1.add(&acc, x));
        let pc = [c1.mul(&c, &c_), act01(&r, &c_), act01(&r_, &c)]
            .iter()
            .fold(c1.zero_element(), |acc, x| c1.add(&acc, x));
        let pr = c0.mul(&r, &r_);
        join(&pa, &pb, &pc, &pr)
    });
    if let Some(v) = e2.validate().first() {
        return Err(Error::Simplicial(format!("level 2 is not an algebra: {v}")));
    }
    let e2 = Arc::new(e2);
    let zero1 = vec![0u32; n1];
    let zero0 = vec![0u32; n0];
    let in_e1 = |c: &[u32], r: &[u32]| [c, r].concat();
    let face = |which: usize| {
        Morphism::from_images(e2.clone(), e1.clone(), |i| {
            let (a, b, c, r) = split(&unit(i));
            let part_a = match which {
                2 => in_e1(&t.d2.apply(&a), &zero0),
                _ => in_e1(&zero1, &zero0),
            };
            let part_b = match which {
                0 => in_e1(&zero1, &zero0),
                _ => in_e1(&b, &zero0),
            };
            let part_c = match which {
                2 => in_e1(&zero1, &t.d1.apply(&c)),
                _ => in_e1(&c, &zero0),
            };
            let part_r = in_e1(&zero1, &r);
            [part_a, part_b, part_c, part_r]
                .iter()
                .fold(e1.zero_element(), |acc, x| e1.add(&acc, x))
                .into_coeffs()
        })
    };
    let zero2 = vec![0u32; n2];
    let s0 = Morphism::from_images(e1.clone(), e2.clone(), |i| {
        let v = e1.basis_element(i);
        join(&zero2, &zero1, &v[..n1], &v[n1..])
    });
    let s1 = Morphism::from_images(e1.clone(), e2.clone(), |i| {
        let v = e1.basis_element(i);
        join(&zero2, &v[..n1], &zero1, &v[n1..])
    });
    let new_faces = vec![face(0), face(1), face(2)];
    let mut levels = e.levels().to_vec();
    levels.push(e2);
    let mut faces = e.faces().to_vec();
    faces.push(new_faces);
    let mut degs = e.degeneracies().to_vec();
    degs.push(vec![s0, s1]);
    TruncatedSimplicialAlgebra::new(levels, faces, degs)
}
