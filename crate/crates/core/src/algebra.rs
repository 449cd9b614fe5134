//! Finite-dimensional commutative algebras over ℤ/p given by structure
//! constants, and their elements.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A coefficient vector with respect to the basis of some algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coeffs: Vec<u32>,
}

impl Element {
    pub fn new(coeffs: Vec<u32>) -> Self {
        Element { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Element {
            coeffs: vec![0; dim],
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[i] = 1;
        Element { coeffs }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl Deref for Element {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.coeffs
    }
}

impl From<Vec<u32>> for Element {
    fn from(coeffs: Vec<u32>) -> Self {
        Element { coeffs }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// A finite-dimensional algebra over ℤ/p. The product of basis elements is
/// `e_i e_j = Σ_k c[i][j][k] e_k`.
///
/// Equality compares the field, the structure constants and the identity;
/// basis labels are presentation only.
#[derive(Clone)]
pub struct Algebra {
    field: PrimeField,
    basis: Vec<String>,
    structure: Vec<u32>,
    identity: Option<Element>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim() == other.dim()
            && self.structure == other.structure
            && self.identity == other.identity
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over {}; ", self.dim(), self.field)?;
        let mut first = true;
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let prod = self.basis_product(i, j);
                if prod.iter().all(|&c| c == 0) {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{}*{}={:?}", self.basis[i], self.basis[j], prod)?;
            }
        }
        write!(f, ")")
    }
}

/// A single failure found by [`Algebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    Commutativity { i: usize, j: usize },
    Associativity { i: usize, j: usize, l: usize },
    Identity { i: usize },
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraViolation::Commutativity { i, j } => {
                write!(f, "e{i}*e{j} != e{j}*e{i}")
            }
            AlgebraViolation::Associativity { i, j, l } => {
                write!(f, "(e{i}*e{j})*e{l} != e{i}*(e{j}*e{l})")
            }
            AlgebraViolation::Identity { i } => write!(f, "identity fails on e{i}"),
        }
    }
}

impl Algebra {
    /// Builds an algebra from a dense tensor laid out as `[(i * dim + j) * dim + k]`.
    /// No axioms are checked; see [`Algebra::validate`].
    pub fn new(field: PrimeField, basis: Vec<String>, structure: Vec<u32>) -> Result<Self> {
        let dim = basis.len();
        if structure.len() != dim * dim * dim {
            return Err(Error::dim(
                "structure tensor",
                dim * dim * dim,
                structure.len(),
            ));
        }
        let p = field.modulus();
        let structure = structure.into_iter().map(|c| c % p).collect();
        Ok(Algebra {
            field,
            basis,
            structure,
            identity: None,
        })
    }

    /// Builds an algebra from a rule giving each basis product.
    pub fn from_fn(
        field: PrimeField,
        basis: Vec<String>,
        mut product: impl FnMut(usize, usize) -> Vec<u32>,
    ) -> Self {
        let dim = basis.len();
        let mut structure = vec![0u32; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                assert_eq!(v.len(), dim, "basis product has wrong length");
                for (k, c) in v.into_iter().enumerate() {
                    structure[(i * dim + j) * dim + k] = c % field.modulus();
                }
            }
        }
        Algebra {
            field,
            basis,
            structure,
            identity: None,
        }
    }

    /// The zero algebra over `field`.
    pub fn zero(field: PrimeField) -> Self {
        Algebra {
            field,
            basis: Vec::new(),
            structure: Vec::new(),
            identity: None,
        }
    }

    /// `ℤ/p[x]/(x^n)` with basis `1, x, …, x^{n-1}` and identity `1`.
    pub fn truncated_polynomial(field: PrimeField, n: usize) -> Self {
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let mut a = Algebra::from_fn(field, names, |i, j| {
            let mut v = vec![0; n];
            if i + j < n {
                v[i + j] = 1;
            }
            v
        });
        if n > 0 {
            a.identity = Some(Element::unit(n, 0));
        }
        a
    }

    /// `ℤ/p[t]/(t^n − c)` with basis `1, t, …, t^{n-1}`.
    pub fn cyclic_polynomial(field: PrimeField, n: usize, c: u32) -> Self {
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        let mut a = Algebra::from_fn(field, names, |i, j| {
            let mut v = vec![0; n];
            if i + j < n {
                v[i + j] = 1;
            } else {
                v[i + j - n] = c % field.modulus();
            }
            v
        });
        if n > 0 {
            a.identity = Some(Element::unit(n, 0));
        }
        a
    }

    /// A vector space with zero multiplication.
    pub fn square_zero(field: PrimeField, basis: Vec<String>) -> Self {
        let dim = basis.len();
        Algebra::from_fn(field, basis, |_, _| vec![0; dim])
    }

    /// Declares `e` to be the multiplicative identity after checking it.
    pub fn with_identity(mut self, e: Element) -> Result<Self> {
        if e.len() != self.dim() {
            return Err(Error::dim("identity element", self.dim(), e.len()));
        }
        for i in 0..self.dim() {
            let b = Element::unit(self.dim(), i);
            if self.mul(&e, &b) != b || self.mul(&b, &e) != b {
                return Err(Error::InvalidAlgebra(format!(
                    "declared identity fails on basis element {i}"
                )));
            }
        }
        self.identity = Some(e);
        Ok(self)
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim());
        self.basis = names;
        self
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn identity(&self) -> Option<&Element> {
        self.identity.as_ref()
    }

    /// Index of the identity when it is a basis vector.
    pub fn identity_index(&self) -> Option<usize> {
        let e = self.identity.as_ref()?;
        let nz: Vec<usize> = (0..e.len()).filter(|&i| e[i] != 0).collect();
        (nz.len() == 1 && e[nz[0]] == 1).then(|| nz[0])
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        let d = self.dim();
        self.structure[(i * d + j) * d + k]
    }

    pub fn structure(&self) -> &[u32] {
        &self.structure
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let d = self.dim();
        &self.structure[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.dim())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::unit(self.dim(), i)
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    /// Product, or an error when an operand has the wrong length.
    pub fn try_mul(&self, a: &[u32], b: &[u32]) -> Result<Element> {
        if a.len() != self.dim() {
            return Err(Error::ParentMismatch(format!(
                "left factor has {} coordinates, algebra has dimension {}",
                a.len(),
                self.dim()
            )));
        }
        if b.len() != self.dim() {
            return Err(Error::ParentMismatch(format!(
                "right factor has {} coordinates, algebra has dimension {}",
                b.len(),
                self.dim()
            )));
        }
        Ok(self.mul(a, b))
    }

    /// Product. Panics when an operand has the wrong length.
    pub fn mul(&self, a: &[u32], b: &[u32]) -> Element {
        let d = self.dim();
        assert!(
            a.len() == d && b.len() == d,
            "operand from a different algebra"
        );
        let f = self.field;
        let mut out = vec![0u32; d];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, o) in self.basis_product(i, j).iter().zip(out.iter_mut()) {
                    if *k != 0 {
                        *o = f.add(*o, f.mul(xy, *k));
                    }
                }
            }
        }
        Element::new(out)
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Element {
        let f = self.field;
        Element::new(a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect())
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Element {
        let f = self.field;
        Element::new(a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &[u32]) -> Element {
        let f = self.field;
        Element::new(a.iter().map(|&x| f.neg(x)).collect())
    }

    pub fn scale(&self, c: u32, a: &[u32]) -> Element {
        let f = self.field;
        Element::new(a.iter().map(|&x| f.mul(c, x)).collect())
    }

    /// Every commutativity and associativity failure on basis elements, plus
    /// identity failures. Empty exactly when the constants define a
    /// commutative associative algebra.
    pub fn validate(&self) -> Vec<AlgebraViolation> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    out.push(AlgebraViolation::Commutativity { i, j });
                }
            }
        }
        let basis = self.basis_elements();
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul(&basis[i], &basis[j]);
                for l in 0..d {
                    let left = self.mul(&ij, &basis[l]);
                    let jl = self.mul(&basis[j], &basis[l]);
                    let right = self.mul(&basis[i], &jl);
                    if left != right {
                        out.push(AlgebraViolation::Associativity { i, j, l });
                    }
                }
            }
        }
        if let Some(e) = &self.identity {
            for (i, b) in basis.iter().enumerate() {
                if self.mul(e, b) != *b || self.mul(b, e) != *b {
                    out.push(AlgebraViolation::Identity { i });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

/// Free-function form of [`Algebra::validate`].
pub fn validate_algebra(a: &Algebra) -> Vec<AlgebraViolation> {
    a.validate()
}

pub(crate) fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn dual_numbers_square_to_zero() {
        let d = Algebra::truncated_polynomial(f(2), 2);
        let eps = d.basis_element(1);
        assert!(d.mul(&eps, &eps).is_zero());
        assert!(d.mul(&eps, &d.zero_element()).is_zero());
        assert!(d.validate().is_empty());
    }

    #[test]
    fn t_squared_is_one_mod_three() {
        let a = Algebra::cyclic_polynomial(f(3), 2, 1);
        let t = a.basis_element(1);
        assert_eq!(a.mul(&t, &t), a.basis_element(0));
    }

    #[test]
    fn parent_mismatch_is_an_error() {
        let a = Algebra::truncated_polynomial(f(2), 2);
        assert!(matches!(
            a.try_mul(&[1, 0, 0], &[1, 0]),
            Err(Error::ParentMismatch(_))
        ));
    }

    #[test]
    fn asymmetric_constants_flagged() {
        let mut s = vec![0u32; 8];
        // c[0][1][0] = 1, c[1][0][0] = 0
        s[2] = 1;
        let a = Algebra::new(f(2), names("e", 2), s).unwrap();
        assert!(a
            .validate()
            .contains(&AlgebraViolation::Commutativity { i: 0, j: 1 }));
    }

    #[test]
    fn upper_triangular_matrices_not_commutative() {
        // basis E11, E12, E22
        let a = Algebra::from_fn(f(2), names("E", 3), |i, j| match (i, j) {
            (0, 0) => vec![1, 0, 0],
            (0, 1) => vec![0, 1, 0],
            (1, 2) => vec![0, 1, 0],
            (2, 2) => vec![0, 0, 1],
            _ => vec![0, 0, 0],
        });
        let v = a.validate();
        assert!(v.contains(&AlgebraViolation::Commutativity { i: 0, j: 1 }));
        assert!(v.contains(&AlgebraViolation::Commutativity { i: 1, j: 2 }));
        assert!(!v
            .iter()
            .any(|x| matches!(x, AlgebraViolation::Associativity { .. })));
    }

    #[test]
    fn identity_checked() {
        let a = Algebra::truncated_polynomial(f(3), 3);
        assert_eq!(a.identity_index(), Some(0));
        assert!(a.clone().with_identity(a.basis_element(1)).is_err());
    }
}
