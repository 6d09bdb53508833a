use crate::exactmath::{CycNum, ExactMatrix, Field, QMatrix};

use super::table::AlgebraTable;

/// Linear endomorphism of an algebra in its standard basis; columns are
/// images of basis vectors. The name records how the map was built.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMap {
    pub name: String,
    pub matrix: ExactMatrix,
}

impl AlgebraMap {
    pub fn new(name: impl Into<String>, matrix: ExactMatrix) -> Self {
        assert!(matrix.is_square(), "algebra maps are square");
        AlgebraMap { name: name.into(), matrix }
    }

    pub fn identity(dim: usize) -> Self {
        AlgebraMap::new("id", ExactMatrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[CycNum]) -> Vec<CycNum> {
        self.matrix.mul_vec(v)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &AlgebraMap) -> AlgebraMap {
        AlgebraMap::new(format!("{}*{}", self.name, other.name), self.matrix.mul(&other.matrix))
    }

    pub fn inverse(&self) -> Option<AlgebraMap> {
        self.matrix.inverse().map(|m| AlgebraMap::new(format!("{}^-1", self.name), m))
    }

    pub fn pow(&self, e: u64) -> AlgebraMap {
        AlgebraMap::new(format!("{}^{}", self.name, e), self.matrix.pow(e))
    }

    /// Multiplicative order, searched up to `bound`.
    pub fn order(&self, bound: u64) -> Option<u64> {
        let mut p = self.matrix.clone();
        for k in 1..=bound {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(&self.matrix);
        }
        None
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &AlgebraMap) -> AlgebraMap {
        let inv = self.matrix.inverse().expect("conjugating map must be invertible");
        AlgebraMap::new(format!("{}({})", self.name, other.name), self.matrix.mul(&other.matrix).mul(&inv))
    }

    pub fn commutes_with(&self, other: &AlgebraMap) -> bool {
        self.matrix.commutes_with(&other.matrix)
    }
}

fn is_multiplicative<F: Field>(alg: &AlgebraTable, m: &crate::exactmath::Matrix<F>) -> bool {
    let n = alg.dim();
    let cols = m.columns();
    let symmetric = matches!(alg.flavor(), super::Flavor::CommutativeJordan);
    for i in 0..n {
        for j in (if symmetric { i } else { 0 })..n {
            let mut lhs = vec![F::zero(); n];
            for &(k, c) in alg.basis_product(i, j) {
                for (l, &x) in lhs.iter_mut().zip(&cols[k]) {
                    if !x.is_zero() {
                        *l = *l + F::from_q(c) * x;
                    }
                }
            }
            if lhs != alg.mul(&cols[i], &cols[j]) {
                return false;
            }
        }
    }
    true
}

/// f(e_i e_j) = f(e_i) f(e_j) on all basis pairs and f invertible.
pub fn is_automorphism(alg: &AlgebraTable, f: &AlgebraMap) -> bool {
    f.dim() == alg.dim() && is_multiplicative(alg, &f.matrix) && f.matrix.rank() == alg.dim()
}

pub fn is_automorphism_q(alg: &AlgebraTable, f: &QMatrix) -> bool {
    f.rows() == alg.dim() && is_multiplicative(alg, f) && f.rank() == alg.dim()
}

/// d(e_i e_j) = d(e_i) e_j + e_i d(e_j) on all basis pairs.
pub fn is_derivation<F: Field>(alg: &AlgebraTable, d: &crate::exactmath::Matrix<F>) -> bool {
    let n = alg.dim();
    if d.rows() != n || d.cols() != n {
        return false;
    }
    let cols = d.columns();
    let e = |i: usize| alg.unit_vector::<F>(i);
    for i in 0..n {
        for j in 0..n {
            let mut lhs = vec![F::zero(); n];
            for &(k, c) in alg.basis_product(i, j) {
                for (l, &x) in lhs.iter_mut().zip(&cols[k]) {
                    *l = *l + F::from_q(c) * x;
                }
            }
            let a = alg.mul(&cols[i], &e(j));
            let b = alg.mul(&e(i), &cols[j]);
            let rhs: Vec<F> = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Left multiplication operator L_v: x -> v x.
pub fn left_mult(alg: &AlgebraTable, v: &[crate::exactmath::Q]) -> QMatrix {
    let n = alg.dim();
    let cols: Vec<Vec<_>> = (0..n).map(|j| alg.mul(v, &alg.unit_vector(j))).collect();
    QMatrix::from_columns(n, &cols)
}

/// Right multiplication operator R_v: x -> x v.
pub fn right_mult(alg: &AlgebraTable, v: &[crate::exactmath::Q]) -> QMatrix {
    let n = alg.dim();
    let cols: Vec<Vec<_>> = (0..n).map(|j| alg.mul(&alg.unit_vector(j), v)).collect();
    QMatrix::from_columns(n, &cols)
}

pub fn commutator<F: Field>(
    a: &crate::exactmath::Matrix<F>,
    b: &crate::exactmath::Matrix<F>,
) -> crate::exactmath::Matrix<F> {
    a.mul(b).sub(&b.mul(a))
}
