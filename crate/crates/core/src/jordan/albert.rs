//! The Albert algebra as Hermitian 3x3 octonion matrices.
//!
//! Coordinates follow the standard basis B: the three diagonal entries,
//! then the coefficients of o1, o2, o3 (each in octonion basis order) where
//! the matrix is [[a, o1, o2], [o1*, b, o3], [o2*, o3*, c]]. The usual
//! signed ^(2) entries make the middle block exactly the coefficients of o2.

use std::sync::OnceLock;

use crate::algcore::{AlgebraTable, Flavor};
use crate::exactmath::{CycNum, Q};
use crate::octonion::{Octonion, BASIS_NAMES};

pub const DIM: usize = 27;

/// Offset of the block holding o_k (k = 1, 2, 3).
pub const fn block(k: usize) -> usize {
    3 + 8 * (k - 1)
}

/// Diagonal entries and off-diagonal octonions (o1, o2, o3).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlbertParts {
    pub diag: [CycNum; 3],
    pub off: [Octonion; 3],
}

impl AlbertParts {
    pub fn zero() -> Self {
        AlbertParts { diag: [CycNum::ZERO; 3], off: [Octonion::zero(); 3] }
    }

    pub fn from_coords(v: &[CycNum]) -> Self {
        assert_eq!(v.len(), DIM);
        AlbertParts {
            diag: [v[0], v[1], v[2]],
            off: std::array::from_fn(|k| Octonion::from_slice(&v[block(k + 1)..block(k + 1) + 8])),
        }
    }

    pub fn coords(&self) -> Vec<CycNum> {
        let mut v = self.diag.to_vec();
        for o in &self.off {
            v.extend_from_slice(&o.coeffs);
        }
        v
    }

    /// Full 3x3 matrix over C; scalars sit on the diagonal as multiples of 1.
    fn matrix(&self) -> [[Octonion; 3]; 3] {
        let d = |i: usize| Octonion::one().scale(self.diag[i]);
        let [o1, o2, o3] = self.off;
        [[d(0), o1, o2], [o1.conj(), d(1), o3], [o2.conj(), o3.conj(), d(2)]]
    }

    fn from_matrix(m: &[[Octonion; 3]; 3]) -> Self {
        let scalar = |o: &Octonion| {
            debug_assert!(o.is_scalar(), "diagonal entry is not a scalar");
            o.coeffs[crate::octonion::E1]
        };
        AlbertParts { diag: [scalar(&m[0][0]), scalar(&m[1][1]), scalar(&m[2][2])], off: [m[0][1], m[0][2], m[1][2]] }
    }
}

fn mat_mul(x: &[[Octonion; 3]; 3], y: &[[Octonion; 3]; 3]) -> [[Octonion; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(Octonion::zero(), |acc, k| acc + x[i][k].mul(&y[k][j])))
    })
}

/// Jordan product (XY + YX) / 2 in the matrix model.
pub fn jordan_product(x: &[CycNum], y: &[CycNum]) -> Vec<CycNum> {
    let (a, b) = (AlbertParts::from_coords(x).matrix(), AlbertParts::from_coords(y).matrix());
    let (ab, ba) = (mat_mul(&a, &b), mat_mul(&b, &a));
    let half = CycNum::rational(1, 2);
    let sum: [[Octonion; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| (ab[i][j] + ba[i][j]).scale(half)));
    AlbertParts::from_matrix(&sum).coords()
}

/// p X p^t for a scalar 3x3 matrix p.
pub fn congruence(p: &[[CycNum; 3]; 3], x: &[CycNum]) -> Vec<CycNum> {
    let m = AlbertParts::from_coords(x).matrix();
    let out: [[Octonion; 3]; 3] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = Octonion::zero();
            for (k, row) in m.iter().enumerate() {
                for (l, entry) in row.iter().enumerate() {
                    let c = p[i][k] * p[j][l];
                    if !c.is_zero() {
                        acc = acc + entry.scale(c);
                    }
                }
            }
            acc
        })
    });
    AlbertParts::from_matrix(&out).coords()
}

fn basis_names() -> Vec<String> {
    let mut names: Vec<String> = vec!["E1".into(), "E2".into(), "E3".into()];
    names.extend(BASIS_NAMES.iter().map(|n| format!("{n}^3")));
    // o2 = conj(a) for a^(2): e1 <-> e2 swap and the rest change sign
    for (k, n) in BASIS_NAMES.iter().enumerate() {
        names.push(match k {
            0 => "e2^2".to_string(),
            1 => "e1^2".to_string(),
            _ => format!("-{n}^2"),
        });
    }
    names.extend(BASIS_NAMES.iter().map(|n| format!("{n}^1")));
    names
}

/// The Albert algebra J in the basis B (cached).
pub fn build_albert() -> &'static AlgebraTable {
    static J: OnceLock<AlgebraTable> = OnceLock::new();
    J.get_or_init(|| {
        let e = |i: usize| {
            let mut v = vec![CycNum::ZERO; DIM];
            v[i] = CycNum::ONE;
            v
        };
        AlgebraTable::from_fn("J", basis_names(), Flavor::CommutativeJordan, |i, j| {
            jordan_product(&e(i), &e(j))
                .into_iter()
                .map(|c| c.as_rational().expect("rational structure constants"))
                .collect::<Vec<Q>>()
        })
    })
}

/// E_i (i = 1, 2, 3).
pub fn idempotent(i: usize) -> Vec<CycNum> {
    let mut v = vec![CycNum::ZERO; DIM];
    v[i - 1] = CycNum::ONE;
    v
}

pub fn unit() -> Vec<CycNum> {
    let mut v = vec![CycNum::ZERO; DIM];
    v[..3].fill(CycNum::ONE);
    v
}

/// a^(i): o3 = a for i = 1, o2 = conj(a) for i = 2, o1 = a for i = 3.
pub fn embed(i: usize, a: &Octonion) -> Vec<CycNum> {
    let mut p = AlbertParts::zero();
    match i {
        1 => p.off[2] = *a,
        2 => p.off[1] = a.conj(),
        3 => p.off[0] = *a,
        _ => panic!("embedding index must be 1, 2 or 3"),
    }
    p.coords()
}

/// Inverse of [`embed`] on the i-th off-diagonal block.
pub fn embedded_part(i: usize, x: &[CycNum]) -> Octonion {
    let p = AlbertParts::from_coords(x);
    match i {
        1 => p.off[2],
        2 => p.off[1].conj(),
        3 => p.off[0],
        _ => panic!("embedding index must be 1, 2 or 3"),
    }
}

/// Tr(x) = a + b + c.
pub fn trace(x: &[CycNum]) -> CycNum {
    x[0] + x[1] + x[2]
}

/// Q(x) = ab + bc + ca - n(o1) - n(o2) - n(o3).
pub fn quadratic(x: &[CycNum]) -> CycNum {
    let p = AlbertParts::from_coords(x);
    let [a, b, c] = p.diag;
    a * b + b * c + c * a - p.off[0].norm() - p.off[1].norm() - p.off[2].norm()
}

/// Generic norm N(x) = abc - a n(o3) - b n(o2) - c n(o1) + tr((o1 o3) o2*).
pub fn norm(x: &[CycNum]) -> CycNum {
    let p = AlbertParts::from_coords(x);
    let [a, b, c] = p.diag;
    let [o1, o2, o3] = p.off;
    a * b * c - a * o3.norm() - b * o2.norm() - c * o1.norm() + o1.mul(&o3).mul(&o2.conj()).trace()
}

/// Torus weights of the basis B as exponent vectors in (x, y, z, u).
pub const TORUS_WEIGHTS: [[i64; 4]; DIM] = [
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [1, 0, 0, 0],
    [-1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [-1, -1, -1, 2],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [1, 1, 1, -2],
    [0, 0, 0, 1],
    [0, 0, 0, -1],
    [1, 1, 0, -1],
    [1, 0, 1, -1],
    [0, -1, -1, 1],
    [-1, -1, 0, 1],
    [-1, 0, -1, 1],
    [0, 1, 1, -1],
    [-1, 0, 0, 1],
    [1, 0, 0, -1],
    [0, 1, 0, -1],
    [0, 0, 1, -1],
    [-1, -1, -1, 1],
    [0, -1, 0, 1],
    [0, 0, -1, 1],
    [1, 1, 1, -1],
];
