//! Truncated simplicial algebras: validation against the simplicial
//! identities, truncation, degenerate ideals and the semidirect element
//! decomposition. Builders live in [`build`] and [`extend`].

pub mod build;
pub mod extend;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::ideal::{ideal_closure, Ideal};
use crate::linalg::{Matrix, Subspace};
use crate::morphism::Morphism;
use crate::poset::{s_set, SurjIndex};

pub use build::{build_from_2crossed, build_from_crossed};
pub use extend::{augment_top, constant, coskeleton_step, degenerate_step};

/// Highest supported truncation level.
pub const MAX_LEVEL: usize = 4;

/// Levels `E_0..E_k` with faces `d_i: E_n → E_{n−1}` (`0 ≤ i ≤ n`) and
/// degeneracies `s_i: E_{n−1} → E_n` (`0 ≤ i ≤ n−1`) for `1 ≤ n ≤ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSimplicialAlgebra {
    levels: Vec<Arc<Algebra>>,
    // faces[n][i]; faces[0] is empty
    faces: Vec<Vec<Morphism>>,
    // degeneracies[n][i]; degeneracies[0] is empty
    degeneracies: Vec<Vec<Morphism>>,
}

impl TruncatedSimplicialAlgebra {
    /// Checks shapes only; see [`validate_simplicial`] for the identities.
    pub fn new(
        levels: Vec<Arc<Algebra>>,
        faces: Vec<Vec<Morphism>>,
        degeneracies: Vec<Vec<Morphism>>,
    ) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Simplicial("no levels".into()));
        }
        let k = levels.len() - 1;
        if k > MAX_LEVEL {
            return Err(Error::Range {
                what: "truncation level",
                value: k,
                min: 0,
                max: MAX_LEVEL,
            });
        }
        if faces.len() != k + 1 || degeneracies.len() != k + 1 {
            return Err(Error::Simplicial(format!(
                "expected face and degeneracy lists for levels 0..={k}"
            )));
        }
        let field = levels[0].field();
        if levels.iter().any(|a| a.field() != field) {
            return Err(Error::ParentMismatch("levels over different fields".into()));
        }
        for n in 0..=k {
            let (nf, nd) = if n == 0 { (0, 0) } else { (n + 1, n) };
            if faces[n].len() != nf {
                return Err(Error::dim(
                    format!("faces at level {n}"),
                    nf,
                    faces[n].len(),
                ));
            }
            if degeneracies[n].len() != nd {
                return Err(Error::dim(
                    format!("degeneracies at level {n}"),
                    nd,
                    degeneracies[n].len(),
                ));
            }
            for (i, d) in faces[n].iter().enumerate() {
                check_shape(
                    d,
                    &levels[n],
                    &levels[n - 1],
                    &format!("d_{i} at level {n}"),
                )?;
            }
            for (i, s) in degeneracies[n].iter().enumerate() {
                check_shape(
                    s,
                    &levels[n - 1],
                    &levels[n],
                    &format!("s_{i} at level {n}"),
                )?;
            }
        }
        Ok(TruncatedSimplicialAlgebra {
            levels,
            faces,
            degeneracies,
        })
    }

    pub fn k(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &Arc<Algebra> {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Arc<Algebra>] {
        &self.levels
    }

    /// `d_i: E_n → E_{n−1}`.
    pub fn face(&self, n: usize, i: usize) -> &Morphism {
        &self.faces[n][i]
    }

    /// `s_i: E_{n−1} → E_n`.
    pub fn degeneracy(&self, n: usize, i: usize) -> &Morphism {
        &self.degeneracies[n][i]
    }

    pub fn faces(&self) -> &[Vec<Morphism>] {
        &self.faces
    }

    pub fn degeneracies(&self) -> &[Vec<Morphism>] {
        &self.degeneracies
    }

    /// Applies `d_i` to `x ∈ E_n`.
    pub fn d(&self, n: usize, i: usize, x: &[u32]) -> Element {
        self.faces[n][i].apply(x)
    }

    /// Applies `s_i` to `x ∈ E_{n−1}`, landing in `E_n`.
    pub fn s(&self, n: usize, i: usize, x: &[u32]) -> Element {
        self.degeneracies[n][i].apply(x)
    }

    /// `s_α(x)` for `x ∈ E_{n−#α}`, landing in `E_n`.
    pub fn s_alpha(&self, alpha: &SurjIndex, x: &[u32]) -> Element {
        let n = alpha.ambient();
        let mut level = n - alpha.len();
        let mut cur = Element::new(x.to_vec());
        for i in alpha.application_order() {
            level += 1;
            cur = self.s(level, i, &cur);
        }
        cur
    }

    /// Copy with one face replaced; used to build mutants.
    pub fn with_face(&self, n: usize, i: usize, d: Morphism) -> Result<Self> {
        let mut faces = self.faces.clone();
        faces[n][i] = d;
        Self::new(self.levels.clone(), faces, self.degeneracies.clone())
    }

    /// `NE_n = ∩_{i<n} ker d_i` as a subspace of `E_n` (all of `E_0` at `n = 0`).
    pub fn normal_space(&self, n: usize) -> Subspace {
        let a = &self.levels[n];
        let mut space = Subspace::full(a.field(), a.dim());
        for i in 0..n {
            space = space.intersection(&self.faces[n][i].kernel_space());
        }
        space
    }

    /// Applies `(1 − s_{n−1}d_{n−1})…(1 − s_0d_0)` to `x ∈ E_n`; the result
    /// lies in `NE_n`.
    pub fn project_normal(&self, n: usize, x: &[u32]) -> Element {
        let a = &self.levels[n];
        let mut cur = Element::new(x.to_vec());
        for j in 0..n {
            let back = self.s(n, j, &self.d(n, j, &cur));
            cur = a.sub(&cur, &back);
        }
        cur
    }
}

fn check_shape(m: &Morphism, src: &Algebra, tgt: &Algebra, what: &str) -> Result<()> {
    if m.source().dim() != src.dim() {
        return Err(Error::dim(
            format!("{what} source"),
            src.dim(),
            m.source().dim(),
        ));
    }
    if m.target().dim() != tgt.dim() {
        return Err(Error::dim(
            format!("{what} target"),
            tgt.dim(),
            m.target().dim(),
        ));
    }
    Ok(())
}

/// One failed identity, with the level and indices where it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialViolation {
    pub identity: &'static str,
    pub n: usize,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for SimplicialViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at n={}, i={}, j={}",
            self.identity, self.n, self.i, self.j
        )
    }
}

/// Every violated simplicial identity, every non-multiplicative structure
/// map and every invalid level. Empty iff `e` is a truncated simplicial
/// algebra.
pub fn validate_simplicial(e: &TruncatedSimplicialAlgebra) -> Vec<SimplicialViolation> {
    let mut out = Vec::new();
    let k = e.k();
    for n in 0..=k {
        if !e.levels[n].is_valid() {
            out.push(SimplicialViolation {
                identity: "level is a commutative algebra",
                n,
                i: 0,
                j: 0,
            });
        }
    }
    for n in 1..=k {
        for (i, d) in e.faces[n].iter().enumerate() {
            if !d.is_multiplicative() {
                out.push(SimplicialViolation {
                    identity: "d_i multiplicative",
                    n,
                    i,
                    j: i,
                });
            }
        }
        for (i, s) in e.degeneracies[n].iter().enumerate() {
            if !s.is_multiplicative() {
                out.push(SimplicialViolation {
                    identity: "s_i multiplicative",
                    n,
                    i,
                    j: i,
                });
            }
        }
    }
    let comp = |a: &Morphism, b: &Morphism| a.matrix().mul(b.matrix());
    // d_i d_j = d_{j-1} d_i on E_n, i < j
    for n in 2..=k {
        for j in 0..=n {
            for i in 0..j {
                let lhs = comp(&e.faces[n - 1][i], &e.faces[n][j]);
                let rhs = comp(&e.faces[n - 1][j - 1], &e.faces[n][i]);
                if lhs != rhs {
                    out.push(SimplicialViolation {
                        identity: "d_i d_j = d_{j-1} d_i",
                        n,
                        i,
                        j,
                    });
                }
            }
        }
    }
    // s_i s_j = s_{j+1} s_i on E_{n-1}, i <= j
    for n in 1..k {
        for j in 0..n {
            for i in 0..=j {
                let lhs = comp(&e.degeneracies[n + 1][i], &e.degeneracies[n][j]);
                let rhs = comp(&e.degeneracies[n + 1][j + 1], &e.degeneracies[n][i]);
                if lhs != rhs {
                    out.push(SimplicialViolation {
                        identity: "s_i s_j = s_{j+1} s_i",
                        n,
                        i,
                        j,
                    });
                }
            }
        }
    }
    // mixed identities on E_{n-1} → E_{n-1}
    for n in 1..=k {
        let field = e.levels[n - 1].field();
        for j in 0..n {
            for i in 0..=n {
                let lhs = comp(&e.faces[n][i], &e.degeneracies[n][j]);
                let (rhs, name) = if i < j {
                    (
                        comp(&e.degeneracies[n - 1][j - 1], &e.faces[n - 1][i]),
                        "d_i s_j = s_{j-1} d_i",
                    )
                } else if i == j || i == j + 1 {
                    (
                        Matrix::identity(field, e.levels[n - 1].dim()),
                        "d_i s_j = id",
                    )
                } else {
                    (
                        comp(&e.degeneracies[n - 1][j], &e.faces[n - 1][i - 1]),
                        "d_i s_j = s_j d_{i-1}",
                    )
                };
                if lhs != rhs {
                    out.push(SimplicialViolation {
                        identity: name,
                        n,
                        i,
                        j,
                    });
                }
            }
        }
    }
    out
}

/// Drops the levels above `m`.
pub fn truncate(e: &TruncatedSimplicialAlgebra, m: usize) -> Result<TruncatedSimplicialAlgebra> {
    if m > e.k() {
        return Err(Error::Range {
            what: "truncation level",
            value: m,
            min: 0,
            max: e.k(),
        });
    }
    TruncatedSimplicialAlgebra::new(
        e.levels[..=m].to_vec(),
        e.faces[..=m].to_vec(),
        e.degeneracies[..=m].to_vec(),
    )
}

/// `D_n`, the ideal of `E_n` generated by `s_i(E_{n−1})`, `0 ≤ i < n`.
pub fn degenerate_ideal(e: &TruncatedSimplicialAlgebra, n: usize) -> Result<Ideal> {
    if n == 0 || n > e.k() {
        return Err(Error::Range {
            what: "degenerate ideal level",
            value: n,
            min: 1,
            max: e.k(),
        });
    }
    let src = &e.levels[n - 1];
    let gens: Vec<Element> = (0..n)
        .flat_map(|i| src.basis_elements().into_iter().map(move |b| (i, b)))
        .map(|(i, b)| e.s(n, i, &b))
        .collect();
    Ok(ideal_closure(&e.levels[n], &gens))
}

/// `x = normal_part + Σ_α s_α(components[α])` with every piece normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub level: usize,
    pub normal_part: Element,
    /// Keyed by nonempty `α ∈ S(n)`; values are elements of `NE_{n−#α}`
    /// in the coordinates of `E_{n−#α}`.
    pub components: BTreeMap<SurjIndex, Element>,
}

impl Decomposition {
    /// `normal_part + Σ s_α(components[α])`.
    pub fn reassemble(&self, e: &TruncatedSimplicialAlgebra) -> Element {
        let a = &e.levels[self.level];
        let mut out = self.normal_part.clone();
        for (alpha, x) in &self.components {
            out = a.add(&out, &e.s_alpha(alpha, x));
        }
        out
    }
}

/// Splits `x ∈ E_n` along `E_n = ker d_0 ⋊ s_0E_{n−1}`, then inside
/// `ker d_0` along `s_1`, and so on, decomposing each peeled face
/// recursively.
pub fn decompose(e: &TruncatedSimplicialAlgebra, n: usize, x: &[u32]) -> Result<Decomposition> {
    if n > e.k() {
        return Err(Error::Range {
            what: "decomposition level",
            value: n,
            min: 0,
            max: e.k(),
        });
    }
    let a = &e.levels[n];
    if x.len() != a.dim() {
        return Err(Error::dim("decomposed element", a.dim(), x.len()));
    }
    let mut components: BTreeMap<SurjIndex, Element> = s_set(n)
        .into_iter()
        .filter(|al| !al.is_empty())
        .map(|al| {
            let d = e.levels[n - al.len()].dim();
            (al, Element::zero(d))
        })
        .collect();
    let mut cur = Element::new(x.to_vec());
    for j in 0..n {
        let z = e.d(n, j, &cur);
        cur = a.sub(&cur, &e.s(n, j, &z));
        let sub = decompose(e, n - 1, &z)?;
        // s_j s_β = s_{β+1} s_j because every entry of β is ≥ j here
        let mut pieces = vec![(Vec::new(), sub.normal_part)];
        pieces.extend(
            sub.components
                .into_iter()
                .map(|(b, v)| (b.entries().to_vec(), v)),
        );
        for (beta, v) in pieces {
            if v.is_zero() {
                continue;
            }
            debug_assert!(beta.iter().all(|&b| b >= j));
            let mut entries: Vec<usize> = beta.iter().map(|b| b + 1).collect();
            entries.push(j);
            let alpha = SurjIndex::new(n, &entries)?;
            let target = &e.levels[n - alpha.len()];
            let slot = components.get_mut(&alpha).expect("all indices present");
            *slot = target.add(slot, &v);
        }
    }
    Ok(Decomposition {
        level: n,
        normal_part: cur,
        components,
    })
}

#[cfg(test)]
mod tests;
