//! Linear and bilinear maps between algebras.

use std::sync::Arc;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// A linear map given by a `target.dim × source.dim` matrix. Whether it is
/// multiplicative is a checked property, see [`Morphism::multiplicativity_failure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    matrix: Matrix,
}

impl Morphism {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() {
            return Err(Error::dim("morphism rows", target.dim(), matrix.rows()));
        }
        if matrix.cols() != source.dim() {
            return Err(Error::dim("morphism columns", source.dim(), matrix.cols()));
        }
        if source.field() != target.field() || matrix.field() != source.field() {
            return Err(Error::ParentMismatch(
                "morphism between different fields".into(),
            ));
        }
        Ok(Morphism {
            source,
            target,
            matrix,
        })
    }

    /// Builds the map sending basis element `i` to `images(i)`.
    pub fn from_images(
        source: Arc<Algebra>,
        target: Arc<Algebra>,
        mut images: impl FnMut(usize) -> Vec<u32>,
    ) -> Self {
        let cols: Vec<Vec<u32>> = (0..source.dim()).map(&mut images).collect();
        let matrix = Matrix::from_columns(source.field(), target.dim(), &cols);
        Morphism {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let m = Matrix::identity(a.field(), a.dim());
        Morphism {
            source: a.clone(),
            target: a,
            matrix: m,
        }
    }

    pub fn zero(source: Arc<Algebra>, target: Arc<Algebra>) -> Self {
        let m = Matrix::zeros(source.field(), target.dim(), source.dim());
        Morphism {
            source,
            target,
            matrix: m,
        }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[u32]) -> Element {
        Element::new(self.matrix.apply(x))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Morphism) -> Result<Morphism> {
        if first.target.dim() != self.source.dim() {
            return Err(Error::dim(
                "morphism composition",
                self.source.dim(),
                first.target.dim(),
            ));
        }
        Ok(Morphism {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        })
    }

    /// First basis pair `(i, j)` with `f(e_i e_j) != f(e_i) f(e_j)`.
    pub fn multiplicativity_failure(&self) -> Option<(usize, usize)> {
        let s = &self.source;
        for i in 0..s.dim() {
            let fi = self.apply(&s.basis_element(i));
            for j in i..s.dim() {
                let fj = self.apply(&s.basis_element(j));
                let lhs = self.apply(s.basis_product(i, j));
                if lhs != self.target.mul(&fi, &fj) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicativity_failure().is_none()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }

    pub fn kernel_space(&self) -> Subspace {
        self.matrix.null_space()
    }
}

/// A bilinear map `left × right → target`,
/// `(e_i, f_j) ↦ Σ_k t[i][j][k] g_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearMap {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    target: Arc<Algebra>,
    tensor: Vec<u32>,
}

impl BilinearMap {
    pub fn new(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        target: Arc<Algebra>,
        tensor: Vec<u32>,
    ) -> Result<Self> {
        let n = left.dim() * right.dim() * target.dim();
        if tensor.len() != n {
            return Err(Error::dim("bilinear tensor", n, tensor.len()));
        }
        let p = left.field().modulus();
        Ok(BilinearMap {
            left,
            right,
            target,
            tensor: tensor.into_iter().map(|c| c % p).collect(),
        })
    }

    pub fn zero(left: Arc<Algebra>, right: Arc<Algebra>, target: Arc<Algebra>) -> Self {
        let n = left.dim() * right.dim() * target.dim();
        BilinearMap {
            left,
            right,
            target,
            tensor: vec![0; n],
        }
    }

    /// Tabulates `rule` on basis pairs.
    pub fn from_fn(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        target: Arc<Algebra>,
        mut rule: impl FnMut(&Element, &Element) -> Element,
    ) -> Self {
        let (dl, dr, dt) = (left.dim(), right.dim(), target.dim());
        let mut tensor = vec![0u32; dl * dr * dt];
        for i in 0..dl {
            let x = left.basis_element(i);
            for j in 0..dr {
                let y = right.basis_element(j);
                let v = rule(&x, &y);
                assert_eq!(v.len(), dt, "bilinear rule produced wrong length");
                tensor[(i * dr + j) * dt..(i * dr + j + 1) * dt].copy_from_slice(&v);
            }
        }
        BilinearMap {
            left,
            right,
            target,
            tensor,
        }
    }

    /// The multiplication map of an algebra.
    pub fn multiplication(a: Arc<Algebra>) -> Self {
        let tensor = a.structure().to_vec();
        BilinearMap {
            left: a.clone(),
            right: a.clone(),
            target: a,
            tensor,
        }
    }

    pub fn left(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn tensor(&self) -> &[u32] {
        &self.tensor
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize, k: usize) -> u32 {
        self.tensor[(i * self.right.dim() + j) * self.target.dim() + k]
    }

    pub fn apply(&self, x: &[u32], y: &[u32]) -> Element {
        let (dr, dt) = (self.right.dim(), self.target.dim());
        assert!(
            x.len() == self.left.dim() && y.len() == dr,
            "bilinear map applied to elements of the wrong algebras"
        );
        let f = self.left.field();
        let mut out = vec![0u32; dt];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                let slice = &self.tensor[(i * dr + j) * dt..(i * dr + j + 1) * dt];
                for (o, &t) in out.iter_mut().zip(slice) {
                    if t != 0 {
                        *o = f.add(*o, f.mul(ab, t));
                    }
                }
            }
        }
        Element::new(out)
    }

    /// The map `(y, x) ↦ self(x, y)`.
    pub fn swapped(&self) -> BilinearMap {
        BilinearMap::from_fn(
            self.right.clone(),
            self.left.clone(),
            self.target.clone(),
            |y, x| self.apply(x, y),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.iter().all(|&t| t == 0)
    }

    /// Copy with one tensor entry shifted by `delta`; used to build mutants.
    pub fn perturbed(&self, i: usize, j: usize, k: usize, delta: u32) -> BilinearMap {
        let mut out = self.clone();
        let idx = (i * self.right.dim() + j) * self.target.dim() + k;
        let f = self.left.field();
        out.tensor[idx] = f.add(out.tensor[idx], delta % f.modulus());
        out
    }
}
