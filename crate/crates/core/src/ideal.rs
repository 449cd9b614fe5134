//! Ideals, quotients, kernels, subalgebras and semidirect products.

use std::sync::Arc;

use crate::algebra::{names, Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::morphism::{BilinearMap, Morphism};

/// A subspace of an algebra closed under multiplication by the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    parent: Arc<Algebra>,
    space: Subspace,
}

impl Ideal {
    /// Wraps `space` after checking closure under multiplication by `parent`.
    pub fn new(parent: Arc<Algebra>, space: Subspace) -> Result<Self> {
        if space.ambient() != parent.dim() {
            return Err(Error::dim("ideal ambient", parent.dim(), space.ambient()));
        }
        if let Some((v, i)) = closure_failure(&parent, &space) {
            return Err(Error::NotAnIdeal(format!(
                "basis vector {v:?} times e{i} leaves the subspace"
            )));
        }
        Ok(Ideal { parent, space })
    }

    pub fn zero(parent: Arc<Algebra>) -> Self {
        let space = Subspace::zero(parent.field(), parent.dim());
        Ideal { parent, space }
    }

    pub fn whole(parent: Arc<Algebra>) -> Self {
        let space = Subspace::full(parent.field(), parent.dim());
        Ideal { parent, space }
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.space.contains(x)
    }
}

/// First `(basis vector, i)` with `v·e_i ∉ space`.
fn closure_failure(a: &Algebra, space: &Subspace) -> Option<(Vec<u32>, usize)> {
    for v in space.basis() {
        for i in 0..a.dim() {
            let prod = a.mul(&v, &a.basis_element(i));
            if !space.contains(&prod) {
                return Some((v, i));
            }
        }
    }
    None
}

/// Whether `space` is closed under the product of `a` (a subalgebra).
pub fn is_subalgebra(a: &Algebra, space: &Subspace) -> bool {
    let basis = space.basis();
    basis
        .iter()
        .enumerate()
        .all(|(i, u)| basis[i..].iter().all(|w| space.contains(&a.mul(u, w))))
}

/// The smallest ideal containing `gens`: iterate span ∪ (basis × span) to a
/// fixed point.
pub fn ideal_closure(a: &Arc<Algebra>, gens: &[Element]) -> Ideal {
    let f = a.field();
    let mut space = Subspace::from_spanning(
        f,
        a.dim(),
        gens.iter().map(|g| g.coeffs().to_vec()).collect(),
    );
    loop {
        let mut vecs = space.basis();
        for v in space.basis() {
            for i in 0..a.dim() {
                vecs.push(a.mul(&v, &a.basis_element(i)).into_coeffs());
            }
        }
        let next = Subspace::from_spanning(f, a.dim(), vecs);
        if next.dim() == space.dim() {
            break;
        }
        space = next;
    }
    Ideal {
        parent: a.clone(),
        space,
    }
}

/// `A/I` on the complement basis of `I`'s pivots, with the projection.
pub fn quotient(a: &Arc<Algebra>, ideal: &Ideal) -> Result<(Arc<Algebra>, Morphism)> {
    if ideal.parent.dim() != a.dim() {
        return Err(Error::ParentMismatch("ideal of a different algebra".into()));
    }
    if let Some((v, i)) = closure_failure(a, &ideal.space) {
        return Err(Error::NotAnIdeal(format!(
            "basis vector {v:?} times e{i} leaves the subspace"
        )));
    }
    let keep = ideal.space.complement_indices();
    let project = |v: &[u32]| -> Vec<u32> {
        let r = ideal.space.reduce(v);
        keep.iter().map(|&j| r[j]).collect()
    };
    let names = keep
        .iter()
        .map(|&j| format!("[{}]", a.basis_names()[j]))
        .collect();
    let mut q = Algebra::from_fn(a.field(), names, |i, j| {
        project(a.basis_product(keep[i], keep[j]))
    });
    if let Some(e) = a.identity() {
        let e = project(e);
        if q.dim() > 0 {
            q = q.with_identity(Element::new(e))?;
        }
    }
    let q = Arc::new(q);
    let proj = Morphism::from_images(a.clone(), q.clone(), |i| project(&a.basis_element(i)));
    Ok((q, proj))
}

/// Null space of a morphism as an ideal of its source. Fails when the null
/// space is not closed under multiplication, which means `f` was not
/// multiplicative.
pub fn kernel(f: &Morphism) -> Result<Ideal> {
    let space = f.kernel_space();
    Ideal::new(f.source().clone(), space).map_err(|e| match e {
        Error::NotAnIdeal(w) => Error::NotMultiplicative(format!("kernel not an ideal: {w}")),
        other => other,
    })
}

/// The algebra structure on a multiplicatively closed subspace, using the
/// canonical basis of the subspace, together with the inclusion.
pub fn subalgebra(
    a: &Arc<Algebra>,
    space: &Subspace,
    prefix: &str,
) -> Result<(Arc<Algebra>, Morphism)> {
    let basis = space.basis();
    let mut failure = None;
    let sub = Algebra::from_fn(a.field(), names(prefix, basis.len()), |i, j| {
        let prod = a.mul(&basis[i], &basis[j]);
        match space.coordinates(&prod) {
            Some(c) => c,
            None => {
                failure.get_or_insert((i, j));
                vec![0; basis.len()]
            }
        }
    });
    if let Some((i, j)) = failure {
        return Err(Error::Precondition(format!(
            "subspace not closed under multiplication (basis pair {i}, {j})"
        )));
    }
    let sub = Arc::new(sub);
    let incl = Morphism::from_images(sub.clone(), a.clone(), |i| basis[i].clone());
    Ok((sub, incl))
}

/// First basis triple at which `action` fails to make `N` an `S`-algebra:
/// `s·(nn′) = (s·n)n′` and `(ss′)·n = s·(s′·n)`.
pub fn action_failure(action: &BilinearMap) -> Option<String> {
    let s = action.left();
    let n = action.right();
    if action.target().as_ref() != n.as_ref() {
        return Some("action target differs from acted-on algebra".into());
    }
    for i in 0..s.dim() {
        let si = s.basis_element(i);
        for j in 0..n.dim() {
            let nj = n.basis_element(j);
            for l in 0..n.dim() {
                let nl = n.basis_element(l);
                let lhs = action.apply(&si, &n.mul(&nj, &nl));
                let rhs = n.mul(&action.apply(&si, &nj), &nl);
                if lhs != rhs {
                    return Some(format!("s{i}·(n{j}n{l}) != (s{i}·n{j})n{l}"));
                }
            }
            for l in 0..s.dim() {
                let sl = s.basis_element(l);
                let lhs = action.apply(&s.mul(&si, &sl), &nj);
                let rhs = action.apply(&si, &action.apply(&sl, &nj));
                if lhs != rhs {
                    return Some(format!("(s{i}s{l})·n{j} != s{i}·(s{l}·n{j})"));
                }
            }
        }
    }
    None
}

/// The idealization `N ⋊ S` on `N ⊕ S` (basis of `N` first) with product
/// `(n,s)(n′,s′) = (nn′ + s·n′ + s′·n, ss′)`.
pub fn semidirect(action: &BilinearMap) -> Result<Algebra> {
    if let Some(w) = action_failure(action) {
        return Err(Error::Action(w));
    }
    let s = action.left();
    let n = action.right();
    let (dn, ds) = (n.dim(), s.dim());
    let f = s.field();
    let mut basis: Vec<String> = n.basis_names().to_vec();
    basis.extend(s.basis_names().iter().cloned());
    let split = |v: &[u32]| (v[..dn].to_vec(), v[dn..].to_vec());
    let a = Algebra::from_fn(f, basis, |i, j| {
        let (ni, si) = split(&Element::unit(dn + ds, i));
        let (nj, sj) = split(&Element::unit(dn + ds, j));
        let nn = n.mul(&ni, &nj);
        let sn = action.apply(&si, &nj);
        let ns = action.apply(&sj, &ni);
        let mut out = n.add(&n.add(&nn, &sn), &ns).into_coeffs();
        out.extend(s.mul(&si, &sj).into_coeffs());
        out
    });
    let issues = a.validate();
    if !issues.is_empty() {
        return Err(Error::InvalidAlgebra(format!(
            "semidirect product fails: {}",
            issues[0]
        )));
    }
    match (s.identity(), n.dim()) {
        (Some(e), _) => {
            let mut id = vec![0u32; dn];
            id.extend_from_slice(e);
            // (0,1)(n,s) = (1·n, s) is the identity iff S's unit acts trivially.
            a.clone().with_identity(Element::new(id)).or(Ok(a))
        }
        _ => Ok(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn closure_examples() {
        let d = Arc::new(Algebra::truncated_polynomial(f(2), 2));
        assert!(ideal_closure(&d, &[d.zero_element()]).space().is_zero());
        let eps = ideal_closure(&d, &[d.basis_element(1)]);
        assert_eq!(eps.space().basis(), vec![vec![0, 1]]);

        let cube = Arc::new(Algebra::truncated_polynomial(f(2), 3));
        let x = ideal_closure(&cube, &[cube.basis_element(1)]);
        assert_eq!(x.space().basis(), vec![vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn quotient_examples() {
        let d = Arc::new(Algebra::truncated_polynomial(f(2), 2));
        let (q0, p0) = quotient(&d, &Ideal::zero(d.clone())).unwrap();
        assert_eq!(*q0, *d);
        assert_eq!(p0, Morphism::identity(d.clone()));

        let eps = ideal_closure(&d, &[d.basis_element(1)]);
        let (q, _) = quotient(&d, &eps).unwrap();
        assert_eq!(*q, Algebra::truncated_polynomial(f(2), 1));

        let cube = Arc::new(Algebra::truncated_polynomial(f(2), 3));
        let x2 = ideal_closure(&cube, &[cube.basis_element(2)]);
        let (q, proj) = quotient(&cube, &x2).unwrap();
        assert_eq!(*q, *d);
        assert!(proj.is_multiplicative());
        assert_eq!(kernel(&proj).unwrap().space(), x2.space());
    }

    #[test]
    fn kernel_examples() {
        let d = Arc::new(Algebra::truncated_polynomial(f(2), 2));
        assert!(kernel(&Morphism::identity(d.clone()))
            .unwrap()
            .space()
            .is_zero());
        assert!(kernel(&Morphism::zero(d.clone(), d.clone()))
            .unwrap()
            .space()
            .is_full());
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let cube = Arc::new(Algebra::truncated_polynomial(f(2), 3));
        let bad = Ideal {
            parent: cube.clone(),
            space: Subspace::from_spanning(f(2), 3, vec![vec![0, 1, 0]]),
        };
        assert!(matches!(quotient(&cube, &bad), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn semidirect_zero_module() {
        let d = Arc::new(Algebra::truncated_polynomial(f(2), 2));
        let zero = Arc::new(Algebra::zero(f(2)));
        let act = BilinearMap::zero(d.clone(), zero.clone(), zero);
        let sd = semidirect(&act).unwrap();
        assert_eq!(sd, *d);
    }

    #[test]
    fn semidirect_ideal_of_dual_numbers() {
        let field = f(2);
        let d = Arc::new(Algebra::truncated_polynomial(field, 2));
        let (n, incl) = subalgebra(
            &d,
            &Subspace::from_spanning(field, 2, vec![vec![0, 1]]),
            "n",
        )
        .unwrap();
        let act = BilinearMap::from_fn(d.clone(), n.clone(), n.clone(), |s, x| {
            let prod = d.mul(s, &incl.apply(x));
            Element::new(vec![prod[1]])
        });
        let sd = semidirect(&act).unwrap();
        assert_eq!(sd.dim(), 3);
        // exhaustive associativity over all 8 elements, i.e. all triples
        let all: Vec<Element> = (0..8u32)
            .map(|m| Element::new(vec![m & 1, (m >> 1) & 1, (m >> 2) & 1]))
            .collect();
        for x in &all {
            for y in &all {
                assert_eq!(sd.mul(x, y), sd.mul(y, x));
                for z in &all {
                    assert_eq!(sd.mul(&sd.mul(x, y), z), sd.mul(x, &sd.mul(y, z)));
                }
            }
        }
    }
}
