//! Dense linear algebra over ℤ/p: matrices, reduced row echelon form,
//! null spaces and canonical subspaces.

use std::fmt;

use crate::field::PrimeField;

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1 % field.modulus());
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().map(|&x| x % field.modulus()));
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix columns");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x % field.modulus());
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        let f = self.field;
        let mut out = vec![0u32; self.rows];
        for (j, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if a != 0 {
                    *o = f.add(*o, f.mul(a, x));
                }
            }
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix { data, ..*self }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix { data, ..*self }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, piv);
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let x = m.get(r, j);
                m.set(r, j, f.mul(x, inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let x = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ v : self * v = 0 }` as a canonical subspace.
    pub fn null_space(&self) -> Subspace {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        Subspace::from_spanning(f, self.cols, basis)
    }

    /// Column space as a subspace of the target.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vec<u32>> = (0..self.cols).map(|j| self.column(j)).collect();
        Subspace::from_spanning(self.field, self.rows, cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A linear subspace of `(ℤ/p)^ambient` held in reduced row echelon form,
/// so two subspaces are equal exactly when their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_spanning(field: PrimeField, ambient: usize, vectors: Vec<Vec<u32>>) -> Self {
        let m = Matrix::from_rows(field, ambient, &vectors);
        let (basis, pivots) = m.rref();
        Subspace { basis, pivots }
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical basis rows (reduced row echelon form).
    pub fn basis(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    /// Reduces `v` against the basis; the result vanishes at every pivot and
    /// is the canonical representative of `v + self`.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.basis.get(row, j);
                if b != 0 {
                    *o = f.sub(*o, f.mul(c, b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` with respect to [`Subspace::basis`], if `v` lies in
    /// the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Inverse of [`Subspace::coordinates`].
    pub fn combine(&self, coords: &[u32]) -> Vec<u32> {
        assert_eq!(coords.len(), self.dim());
        let f = self.field();
        let mut out = vec![0u32; self.ambient()];
        for (row, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.basis.get(row, j);
                if b != 0 {
                    *o = f.add(*o, f.mul(c, b));
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis();
        rows.extend(other.basis());
        Subspace::from_spanning(self.field(), self.ambient(), rows)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // v = Σ a_i u_i = Σ b_j w_j  <=>  (a, -b) in the null space of [U^T | W^T].
        let f = self.field();
        let n = self.ambient();
        let (du, dw) = (self.dim(), other.dim());
        if du == 0 || dw == 0 {
            return Subspace::zero(f, n);
        }
        let mut m = Matrix::zeros(f, n, du + dw);
        for (i, u) in self.basis().iter().enumerate() {
            for (r, &x) in u.iter().enumerate() {
                m.set(r, i, x);
            }
        }
        for (j, w) in other.basis().iter().enumerate() {
            for (r, &x) in w.iter().enumerate() {
                m.set(r, du + j, x);
            }
        }
        let vecs = m
            .null_space()
            .basis()
            .into_iter()
            .map(|sol| self.combine(&sol[..du]))
            .collect();
        Subspace::from_spanning(f, n, vecs)
    }

    /// Standard basis indices outside the pivot set; the corresponding unit
    /// vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient())
            .filter(|j| !self.pivots.contains(j))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_small() {
        let m = Matrix::from_rows(f(5), 3, &[vec![2, 4, 1], vec![1, 2, 4]]);
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(r.row_vecs(), vec![vec![1, 2, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn null_space_of_identity_is_zero() {
        assert!(Matrix::identity(f(3), 4).null_space().is_zero());
        assert!(Matrix::zeros(f(3), 2, 4).null_space().is_full());
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::from_spanning(f(2), 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::from_spanning(f(2), 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let c = a.intersection(&b);
        assert_eq!(c.basis(), vec![vec![0, 1, 0]]);
    }

    fn vecs(p: u32, n: usize, k: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
        prop::collection::vec(prop::collection::vec(0..p, n), 0..k)
    }

    proptest! {
        #[test]
        fn null_space_is_annihilated(rows in vecs(5, 4, 5)) {
            let field = f(5);
            let m = Matrix::from_rows(field, 4, &rows);
            let ns = m.null_space();
            prop_assert_eq!(ns.dim() + m.rank(), 4);
            for v in ns.basis() {
                prop_assert!(m.apply(&v).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn dimension_formula(a in vecs(3, 4, 4), b in vecs(3, 4, 4)) {
            let field = f(3);
            let sa = Subspace::from_spanning(field, 4, a);
            let sb = Subspace::from_spanning(field, 4, b);
            let sum = sa.sum(&sb);
            let meet = sa.intersection(&sb);
            prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + meet.dim());
            prop_assert!(meet.is_subspace_of(&sa) && meet.is_subspace_of(&sb));
        }
    }
}
