//! Crossed modules, 2-crossed modules and 3-crossed modules of commutative
//! algebras, with axiom verifiers.

mod three;
mod two;

use std::sync::Arc;

use crate::algebra::{names, Algebra, Element};
use crate::error::{Error, Result};
use crate::ideal::{action_failure, subalgebra, Ideal};
use crate::linalg::{Matrix, Subspace};
use crate::morphism::{BilinearMap, Morphism};
use crate::report::{expect_eq, sweep_basis, AxiomReport, CheckKind, CheckRecord};

pub(crate) use three::{action_levels, boundary_equivariance, printed_axioms};
pub use three::{verify_3cm, LiftingKey, ThreeCrossedModule, ACTION_KEYS};
pub use two::{induced_cm, verify_2cm, TwoCrossedModule};

/// `∂: C → R` with an action of `R` on `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    boundary: Morphism,
    action: BilinearMap,
}

pub(crate) fn check_bilinear(
    m: &BilinearMap,
    left: &Algebra,
    right: &Algebra,
    target: &Algebra,
    what: &str,
) -> Result<()> {
    let ok = m.left().dim() == left.dim()
        && m.right().dim() == right.dim()
        && m.target().dim() == target.dim();
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what}: expected {}×{}→{}, found {}×{}→{}",
            left.dim(),
            right.dim(),
            target.dim(),
            m.left().dim(),
            m.right().dim(),
            m.target().dim()
        )))
    }
}

impl CrossedModule {
    pub fn new(boundary: Morphism, action: BilinearMap) -> Result<Self> {
        check_bilinear(
            &action,
            boundary.target(),
            boundary.source(),
            boundary.source(),
            "crossed module action",
        )?;
        Ok(CrossedModule { boundary, action })
    }

    /// The inclusion of an ideal `I ⊆ R`, acted on by multiplication.
    pub fn ideal_pair(r: &Arc<Algebra>, ideal: &Ideal) -> Result<Self> {
        let (c, incl) = subalgebra(r, ideal.space(), "i")?;
        let space = ideal.space().clone();
        let action = BilinearMap::from_fn(r.clone(), c.clone(), c.clone(), |x, y| {
            let prod = r.mul(x, &incl.apply(y));
            Element::new(space.coordinates(&prod).expect("ideal is closed"))
        });
        CrossedModule::new(incl, action)
    }

    /// The zero map `M → R` for an `R`-algebra `M` given by `action`.
    pub fn zero_map(action: BilinearMap) -> Result<Self> {
        let boundary = Morphism::zero(action.right().clone(), action.left().clone());
        CrossedModule::new(boundary, action)
    }

    /// `0 → R`.
    pub fn trivial(r: Arc<Algebra>) -> Self {
        let zero = Arc::new(Algebra::zero(r.field()));
        let action = BilinearMap::zero(r.clone(), zero.clone(), zero.clone());
        CrossedModule {
            boundary: Morphism::zero(zero, r),
            action,
        }
    }

    pub fn c(&self) -> &Arc<Algebra> {
        self.boundary.source()
    }

    pub fn r(&self) -> &Arc<Algebra> {
        self.boundary.target()
    }

    pub fn boundary(&self) -> &Morphism {
        &self.boundary
    }

    pub fn action(&self) -> &BilinearMap {
        &self.action
    }

    /// `r·c`.
    pub fn act(&self, r: &[u32], c: &[u32]) -> Element {
        self.action.apply(r, c)
    }
}

pub(crate) fn action_record(name: &str, action: &BilinearMap) -> CheckRecord {
    let (s, n) = (action.left().dim() as u64, action.right().dim() as u64);
    CheckRecord::new(
        name,
        CheckKind::Invariant,
        s * n * (n + s),
        action_failure(action),
    )
}

pub(crate) fn multiplicative_record(name: &str, m: &Morphism) -> CheckRecord {
    let d = m.source().dim() as u64;
    CheckRecord::new(
        name,
        CheckKind::Invariant,
        d * d,
        m.multiplicativity_failure()
            .map(|(i, j)| format!("f(e{i}e{j}) != f(e{i})f(e{j})")),
    )
}

/// CM1, CM2, the action axioms, and the two consequences: `∂(C)` is an
/// ideal of `R`, and `∂(C)` acts trivially on `ker ∂`. Every check is
/// multilinear, so it runs over basis tuples.
pub fn verify_cm(cm: &CrossedModule) -> AxiomReport {
    let (c, r) = (cm.c(), cm.r());
    let d = &cm.boundary;
    let mut rep = AxiomReport::new("crossed module");
    rep.push(multiplicative_record("boundary multiplicative", d));
    rep.push(action_record("R acts on C", &cm.action));
    rep.push(sweep_basis(
        "CM1",
        CheckKind::Axiom,
        &[r.dim(), c.dim()],
        |t| {
            let (x, y) = (r.basis_element(t[0]), c.basis_element(t[1]));
            expect_eq(
                || format!("r=e{}, c=e{}", t[0], t[1]),
                &d.apply(&cm.act(&x, &y)),
                &r.mul(&x, &d.apply(&y)),
            )
        },
    ));
    rep.push(sweep_basis(
        "CM2",
        CheckKind::Axiom,
        &[c.dim(), c.dim()],
        |t| {
            let (x, y) = (c.basis_element(t[0]), c.basis_element(t[1]));
            expect_eq(
                || format!("c=e{}, c'=e{}", t[0], t[1]),
                &cm.act(&d.apply(&x), &y),
                &c.mul(&x, &y),
            )
        },
    ));
    let image = d.image();
    let img_basis = image.basis();
    rep.push(sweep_basis(
        "image is an ideal",
        CheckKind::Audit,
        &[r.dim(), img_basis.len()],
        |t| {
            let v = r.mul(&r.basis_element(t[0]), &img_basis[t[1]]);
            (!image.contains(&v)).then(|| format!("r=e{} times image vector {}", t[0], t[1]))
        },
    ));
    let kernel = d.kernel_space().basis();
    rep.push(sweep_basis(
        "image acts trivially on kernel",
        CheckKind::Audit,
        &[c.dim(), kernel.len()],
        |t| {
            let v = cm.act(&d.apply(&c.basis_element(t[0])), &kernel[t[1]]);
            (!v.is_zero()).then(|| format!("∂(e{})·k{} = {v:?}", t[0], t[1]))
        },
    ));
    rep
}

/// The multiplication crossed module `μ: R → M(R)`, `μ(r) = δ_r`, where
/// `M(R)` is the algebra of multipliers `δ(rr′) = δ(r)r′` under
/// composition. Requires `Ann(R) = 0` or `R² = R`.
pub fn multiplication_cm(r: &Arc<Algebra>) -> Result<CrossedModule> {
    let f = r.field();
    let d = r.dim();
    // a ↦ (a e_j)_j
    let mut ann_rows = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            ann_rows.push((0..d).map(|i| r.constant(i, j, k)).collect::<Vec<_>>());
        }
    }
    let ann_zero = Matrix::from_rows(f, d, &ann_rows).null_space().is_zero();
    let squares = Subspace::from_spanning(
        f,
        d,
        (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| r.basis_product(i, j).to_vec())
            .collect(),
    );
    if !ann_zero && !squares.is_full() {
        return Err(Error::Precondition(
            "multiplication crossed module needs Ann(R) = 0 or R² = R".into(),
        ));
    }
    // unknown δ as a d×d matrix, variable k*d + i is the e_k coefficient of δ(e_i)
    let var = |k: usize, i: usize| k * d + i;
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut row = vec![0u32; d * d];
                for l in 0..d {
                    let c = r.constant(i, j, l);
                    if c != 0 {
                        row[var(k, l)] = f.add(row[var(k, l)], c);
                    }
                }
                for m in 0..d {
                    let c = r.constant(m, j, k);
                    if c != 0 {
                        row[var(m, i)] = f.sub(row[var(m, i)], c);
                    }
                }
                rows.push(row);
            }
        }
    }
    let space = Matrix::from_rows(f, d * d, &rows).null_space();
    let as_matrix =
        |v: &[u32]| Matrix::from_rows(f, d, &v.chunks(d).map(|c| c.to_vec()).collect::<Vec<_>>());
    let flat = |m: &Matrix| m.row_vecs().concat();
    let basis: Vec<Matrix> = space.basis().iter().map(|v| as_matrix(v)).collect();
    let mdim = basis.len();
    for a in 0..mdim {
        for b in a + 1..mdim {
            if basis[a].mul(&basis[b]) != basis[b].mul(&basis[a]) {
                return Err(Error::InvalidAlgebra(format!(
                    "multipliers {a} and {b} do not commute"
                )));
            }
        }
    }
    let mut closure_failure = None;
    let m_alg = Algebra::from_fn(f, names("δ", mdim), |a, b| {
        let prod = flat(&basis[a].mul(&basis[b]));
        space.coordinates(&prod).unwrap_or_else(|| {
            closure_failure.get_or_insert((a, b));
            vec![0; mdim]
        })
    });
    if let Some((a, b)) = closure_failure {
        return Err(Error::InvalidAlgebra(format!(
            "composite of multipliers {a}, {b} is not a multiplier"
        )));
    }
    let one = space
        .coordinates(&flat(&Matrix::identity(f, d)))
        .expect("identity is a multiplier");
    let m_alg = Arc::new(if mdim > 0 {
        m_alg.with_identity(Element::new(one))?
    } else {
        m_alg
    });
    // δ_r has (k, i) entry = e_k coefficient of r e_i
    let mu = Morphism::from_images(r.clone(), m_alg.clone(), |a| {
        let mut v = vec![0u32; d * d];
        for i in 0..d {
            for k in 0..d {
                v[var(k, i)] = r.constant(a, i, k);
            }
        }
        space
            .coordinates(&v)
            .expect("left multiplication is a multiplier")
    });
    let action = BilinearMap::from_fn(m_alg.clone(), r.clone(), r.clone(), |delta, x| {
        let mut mat = Matrix::zeros(f, d, d);
        for (a, &c) in delta.iter().enumerate() {
            if c != 0 {
                mat = mat.add(&Matrix::from_rows(
                    f,
                    d,
                    &basis[a]
                        .row_vecs()
                        .iter()
                        .map(|row| row.iter().map(|&e| f.mul(e, c)).collect())
                        .collect::<Vec<_>>(),
                ));
            }
        }
        Element::new(mat.apply(x))
    });
    CrossedModule::new(mu, action)
}

#[cfg(test)]
mod tests;
