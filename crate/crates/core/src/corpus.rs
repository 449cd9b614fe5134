//! Built-in example objects.

use std::sync::Arc;

use crate::algebra::{names, Algebra, Element};
use crate::crossed::{multiplication_cm, CrossedModule, TwoCrossedModule};
use crate::error::Result;
use crate::field::PrimeField;
use crate::ideal::ideal_closure;
use crate::morphism::{BilinearMap, Morphism};
use crate::simplicial::{
    augment_top, build_from_crossed, constant, coskeleton_step, degenerate_step,
    TruncatedSimplicialAlgebra,
};

/// `k[ε]/(ε²)`.
pub fn dual_numbers(f: PrimeField) -> Arc<Algebra> {
    Arc::new(Algebra::truncated_polynomial(f, 2).with_basis_names(vec!["1".into(), "ε".into()]))
}

/// The inclusion `(ε) ⊆ k[ε]/(ε²)`.
pub fn ideal_pair(f: PrimeField) -> Result<CrossedModule> {
    let r = dual_numbers(f);
    let ideal = ideal_closure(&r, &[Element::new(vec![0, 1])]);
    CrossedModule::ideal_pair(&r, &ideal)
}

/// The zero map `M → R` where `M` is `R` as a module with zero product.
pub fn zero_module(f: PrimeField) -> Result<CrossedModule> {
    let r = dual_numbers(f);
    let m = Arc::new(Algebra::square_zero(f, names("m", r.dim())));
    let action = BilinearMap::from_fn(r.clone(), m.clone(), m.clone(), |x, y| r.mul(x, y));
    CrossedModule::zero_map(action)
}

/// Like [`zero_module`] but `M = R` keeps its product, so CM2 fails.
pub fn cm2_mutant(f: PrimeField) -> Result<CrossedModule> {
    let r = dual_numbers(f);
    let action = BilinearMap::multiplication(r.clone());
    CrossedModule::zero_map(action)
}

/// `k[t]/(t² − 1)`.
pub fn cyclic_two(f: PrimeField) -> Arc<Algebra> {
    Arc::new(Algebra::cyclic_polynomial(f, 2, 1))
}

/// Named crossed modules of the corpus over `f`.
pub fn crossed_modules(f: PrimeField) -> Result<Vec<(String, CrossedModule)>> {
    let ground = Arc::new(Algebra::truncated_polynomial(f, 1));
    Ok(vec![
        ("ideal-pair".into(), ideal_pair(f)?),
        ("zero-module".into(), zero_module(f)?),
        ("mult-field".into(), multiplication_cm(&ground)?),
        ("mult-cyclic".into(), multiplication_cm(&cyclic_two(f))?),
        ("trivial".into(), CrossedModule::trivial(dual_numbers(f))),
    ])
}

/// A length-2 simplicial object truncated at `k ≥ 2`: the zero-module
/// crossed module has `ker ∂ = M`, which becomes `NE₂` under the
/// coskeleton step.
pub fn length_two(f: PrimeField, k: usize) -> Result<TruncatedSimplicialAlgebra> {
    let base = build_from_crossed(&zero_module(f)?, 1)?;
    let mut e = coskeleton_step(&base)?;
    while e.k() < k {
        e = degenerate_step(&e)?;
    }
    Ok(e)
}

/// A length-2 object whose Peiffer lifting is nonzero: the coskeleton of
/// `k[x]/(x³) ⇉ k` with both faces the augmentation, so `NE₁ = (x)` has
/// `∂ = 0` but nonzero products.
pub fn length_two_peiffer(f: PrimeField, k: usize) -> Result<TruncatedSimplicialAlgebra> {
    let e0 = Arc::new(Algebra::truncated_polynomial(f, 1));
    let e1 = Arc::new(Algebra::truncated_polynomial(f, 3));
    let aug = Morphism::from_images(e1.clone(), e0.clone(), |i| vec![u32::from(i == 0)]);
    let unit = Morphism::from_images(e0.clone(), e1.clone(), |_| vec![1, 0, 0]);
    let base = TruncatedSimplicialAlgebra::new(
        vec![e0, e1],
        vec![Vec::new(), vec![aug.clone(), aug]],
        vec![Vec::new(), vec![unit]],
    )?;
    let mut e = coskeleton_step(&base)?;
    while e.k() < k {
        e = degenerate_step(&e)?;
    }
    Ok(e)
}

/// A length-3 simplicial object at `k ≥ 3`: augment the top of the
/// ideal-pair object at level 2, then take the coskeleton step.
pub fn length_three(f: PrimeField, k: usize) -> Result<TruncatedSimplicialAlgebra> {
    let base = build_from_crossed(&ideal_pair(f)?, 2)?;
    let mut e = coskeleton_step(&augment_top(&base, 1)?)?;
    while e.k() < k {
        e = degenerate_step(&e)?;
    }
    Ok(e)
}

/// A k = 4 object with `NE₄ ≠ 0`.
pub fn length_four(f: PrimeField) -> Result<TruncatedSimplicialAlgebra> {
    let base = build_from_crossed(&ideal_pair(f)?, 3)?;
    coskeleton_step(&augment_top(&base, 1)?)
}

/// Named simplicial objects of the corpus over `f`, all at `k = 4`.
pub fn simplicial_objects(f: PrimeField) -> Result<Vec<(String, TruncatedSimplicialAlgebra)>> {
    let mut out = vec![("constant".to_string(), constant(dual_numbers(f), 4)?)];
    for (name, cm) in crossed_modules(f)? {
        out.push((name, build_from_crossed(&cm, 4)?));
    }
    out.push(("length-two".into(), length_two(f, 4)?));
    out.push(("length-two-peiffer".into(), length_two_peiffer(f, 4)?));
    out.push(("length-three".into(), length_three(f, 4)?));
    out.push(("length-four".into(), length_four(f)?));
    Ok(out)
}

/// Two-crossed modules of the corpus: remark-1 embeddings of the crossed
/// modules.
pub fn two_crossed_modules(f: PrimeField) -> Result<Vec<(String, TwoCrossedModule)>> {
    Ok(crossed_modules(f)?
        .into_iter()
        .map(|(n, cm)| (format!("{n}/c2=0"), TwoCrossedModule::from_crossed(&cm)))
        .collect())
}
