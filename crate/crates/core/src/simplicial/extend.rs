//! Adding a level on top of a truncated simplicial algebra through the
//! matching object, plus a few fixed constructions used as test material.

use std::sync::Arc;

use crate::algebra::{names, Algebra, Element};
use crate::error::{Error, Result};
use crate::ideal::subalgebra;
use crate::linalg::{Matrix, Subspace};
use crate::morphism::Morphism;

use super::TruncatedSimplicialAlgebra;

/// All levels equal to `a`, all faces and degeneracies the identity.
pub fn constant(a: Arc<Algebra>, k: usize) -> Result<TruncatedSimplicialAlgebra> {
    let levels = vec![a.clone(); k + 1];
    let id = Morphism::identity(a);
    let faces = (0..=k)
        .map(|n| {
            if n == 0 {
                Vec::new()
            } else {
                vec![id.clone(); n + 1]
            }
        })
        .collect();
    let degs = (0..=k).map(|n| vec![id.clone(); n]).collect();
    TruncatedSimplicialAlgebra::new(levels, faces, degs)
}

/// The product algebra `E^{m}` (componentwise multiplication).
fn power(a: &Algebra, m: usize) -> Algebra {
    let d = a.dim();
    let basis = (0..m)
        .flat_map(|c| a.basis_names().iter().map(move |s| format!("{s}#{c}")))
        .collect();
    Algebra::from_fn(a.field(), basis, |x, y| {
        let mut out = vec![0u32; m * d];
        if x / d == y / d {
            let c = x / d;
            out[c * d..(c + 1) * d].copy_from_slice(a.basis_product(x % d, y % d));
        }
        out
    })
}

/// The tuple `(d_0 s_j x, …, d_{k+1} s_j x)` forced by the simplicial
/// identities, for `x ∈ E_k`.
fn degenerate_tuple(e: &TruncatedSimplicialAlgebra, j: usize, x: &[u32]) -> Vec<u32> {
    let k = e.k();
    let mut out = Vec::with_capacity((k + 2) * x.len());
    for i in 0..=k + 1 {
        let part = if i == j || i == j + 1 {
            Element::new(x.to_vec())
        } else if i < j {
            e.s(k, j - 1, &e.d(k, i, x))
        } else {
            e.s(k, j, &e.d(k, i - 1, x))
        };
        out.extend_from_slice(&part);
    }
    out
}

/// `M_{k+1} = {(x_0..x_{k+1}) : d_i x_j = d_{j−1} x_i, i < j}` inside `E_k^{k+2}`.
fn matching_space(e: &TruncatedSimplicialAlgebra) -> Subspace {
    let k = e.k();
    let top = e.level(k);
    let d = top.dim();
    let width = (k + 2) * d;
    let field = top.field();
    if k == 0 {
        return Subspace::full(field, width);
    }
    let below = e.level(k - 1).dim();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for j in 0..=k + 1 {
        for i in 0..j {
            let (di, dj1) = (e.face(k, i).matrix(), e.face(k, j - 1).matrix());
            for r in 0..below {
                let mut row = vec![0u32; width];
                for c in 0..d {
                    row[j * d + c] = field.add(row[j * d + c], di.get(r, c));
                    row[i * d + c] = field.sub(row[i * d + c], dj1.get(r, c));
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(field, width, &rows).null_space()
}

/// Appends level `k+1` realised as the subalgebra `space` of `E_k^{k+2}`;
/// `space` must lie in the matching object and contain the degenerate
/// tuples.
fn extend_on(
    e: &TruncatedSimplicialAlgebra,
    space: &Subspace,
) -> Result<TruncatedSimplicialAlgebra> {
    let k = e.k();
    let top = e.level(k);
    let d = top.dim();
    let prod = Arc::new(power(top, k + 2));
    let (sub, incl) = subalgebra(&prod, space, "e")
        .map_err(|err| Error::Simplicial(format!("level {} not closed: {err}", k + 1)))?;
    let sub = Arc::new(
        Arc::try_unwrap(sub)
            .unwrap_or_else(|a| (*a).clone())
            .with_basis_names(names(&format!("E{}_", k + 1), space.dim())),
    );
    let mut levels = e.levels().to_vec();
    levels.push(sub.clone());
    let mut faces = e.faces().to_vec();
    faces.push(
        (0..=k + 1)
            .map(|i| {
                Morphism::from_images(sub.clone(), top.clone(), |b| {
                    let v = incl.matrix().column(b);
                    v[i * d..(i + 1) * d].to_vec()
                })
            })
            .collect(),
    );
    let mut degs = e.degeneracies().to_vec();
    let mut level_degs = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let mut missing = None;
        let m = Morphism::from_images(top.clone(), sub.clone(), |b| {
            let t = degenerate_tuple(e, j, &top.basis_element(b));
            space.coordinates(&t).unwrap_or_else(|| {
                missing.get_or_insert(b);
                vec![0; space.dim()]
            })
        });
        if let Some(b) = missing {
            return Err(Error::Simplicial(format!(
                "s_{j}(e{b}) outside the new level {}",
                k + 1
            )));
        }
        level_degs.push(m);
    }
    degs.push(level_degs);
    TruncatedSimplicialAlgebra::new(levels, faces, degs)
}

fn check_room(e: &TruncatedSimplicialAlgebra) -> Result<()> {
    if e.k() >= super::MAX_LEVEL {
        return Err(Error::Range {
            what: "truncation level",
            value: e.k() + 1,
            min: 0,
            max: super::MAX_LEVEL,
        });
    }
    Ok(())
}

/// Appends the full matching object as level `k+1`. The new Moore term is
/// the cycles `NE_k ∩ ker d_k` and the new boundary is their inclusion.
pub fn coskeleton_step(e: &TruncatedSimplicialAlgebra) -> Result<TruncatedSimplicialAlgebra> {
    check_room(e)?;
    extend_on(e, &matching_space(e))
}

/// Appends the span of the degenerate tuples as level `k+1`, so the new
/// Moore term vanishes. Fails when that span is not multiplicatively closed.
pub fn degenerate_step(e: &TruncatedSimplicialAlgebra) -> Result<TruncatedSimplicialAlgebra> {
    check_room(e)?;
    let top = e.level(e.k());
    let tuples = (0..=e.k())
        .flat_map(|j| top.basis_elements().into_iter().map(move |b| (j, b)))
        .map(|(j, b)| degenerate_tuple(e, j, &b))
        .collect();
    let space = Subspace::from_spanning(top.field(), (e.k() + 2) * top.dim(), tuples);
    extend_on(e, &space)
}

/// Replaces the top level `E_k` by `E_k × V` with `V` square-zero of
/// dimension `extra`, killed by every face. Adds `V` to `NE_k ∩ ker d_k`,
/// so it makes `∂_k` non-injective, and `V` is not in the degenerate ideal.
pub fn augment_top(
    e: &TruncatedSimplicialAlgebra,
    extra: usize,
) -> Result<TruncatedSimplicialAlgebra> {
    let k = e.k();
    if k == 0 {
        return Err(Error::Precondition("augmentation needs k ≥ 1".into()));
    }
    let top = e.level(k);
    let d = top.dim();
    let mut basis = top.basis_names().to_vec();
    basis.extend(names("v", extra));
    let big = Arc::new(Algebra::from_fn(top.field(), basis, |x, y| {
        let mut out = vec![0u32; d + extra];
        if x < d && y < d {
            out[..d].copy_from_slice(top.basis_product(x, y));
        }
        out
    }));
    let below = e.level(k - 1);
    let mut levels = e.levels().to_vec();
    levels[k] = big.clone();
    let mut faces = e.faces().to_vec();
    faces[k] = (0..=k)
        .map(|i| {
            Morphism::from_images(big.clone(), below.clone(), |b| {
                if b < d {
                    e.face(k, i).matrix().column(b)
                } else {
                    vec![0; below.dim()]
                }
            })
        })
        .collect();
    let mut degs = e.degeneracies().to_vec();
    degs[k] = (0..k)
        .map(|j| {
            Morphism::from_images(below.clone(), big.clone(), |b| {
                let mut v = e.degeneracy(k, j).matrix().column(b);
                v.resize(d + extra, 0);
                v
            })
        })
        .collect();
    TruncatedSimplicialAlgebra::new(levels, faces, degs)
}
