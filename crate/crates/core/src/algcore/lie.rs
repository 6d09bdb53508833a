use thiserror::Error;

use crate::exactmath::{rank_lower_bound, CycNum, ExactMatrix, Matrix, QMatrix, Q};

use super::linear::{MatrixCoordinates, SparseEchelon, Subspace};
use super::maps::{commutator, AlgebraMap};
use super::table::{AlgebraTable, Flavor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("span is not closed under the bracket")]
    NotClosedUnderBracket,
    #[error("family of {0} matrices is linearly dependent")]
    DependentBasis(usize),
    #[error("bracket leaves the span of the given matrices")]
    NotLieClosed,
}

/// Lie algebra realized by matrices, with its bracket table and a way to
/// read coordinates of further matrices.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    pub table: AlgebraTable,
    pub basis: Vec<QMatrix>,
    pub coordinates: MatrixCoordinates,
}

impl MatrixLieAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Element of the algebra with the given coordinates, as a matrix.
    pub fn element(&self, coords: &[CycNum]) -> ExactMatrix {
        let n = self.basis[0].rows();
        let mut out = ExactMatrix::zeros(n, n);
        for (b, &c) in self.basis.iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let x = b[(i, j)];
                    if !x.is_zero() {
                        out[(i, j)] += c * CycNum::from_q(x);
                    }
                }
            }
        }
        out
    }
}

/// Bracket table of the matrix family `basis` under [a, b] = ab - ba.
pub fn lie_from_matrices(
    name: &str,
    basis: Vec<QMatrix>,
    basis_names: Vec<String>,
) -> Result<MatrixLieAlgebra, AlgError> {
    let n = basis.len();
    let coordinates = MatrixCoordinates::new(&basis).ok_or(AlgError::DependentBasis(n))?;
    let mut products = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in i + 1..n {
            let c = commutator(&basis[i], &basis[j]);
            let coords = coordinates.coords_q(&c).ok_or(AlgError::NotLieClosed)?;
            let sparse: Vec<(usize, Q)> =
                coords.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, &x)| (k, x)).collect();
            products[j * n + i] = sparse.iter().map(|&(k, x)| (k, -x)).collect();
            products[i * n + j] = sparse;
        }
    }
    let table = AlgebraTable::from_sparse(name, basis_names, Flavor::Lie, products);
    Ok(MatrixLieAlgebra { table, basis, coordinates })
}

/// Solves d(e_i e_j) = d(e_i) e_j + e_i d(e_j) for all basis pairs and
/// returns a basis of the derivation algebra as matrices.
pub fn derivation_basis(alg: &AlgebraTable) -> Vec<QMatrix> {
    let n = alg.dim();
    // unknown d_{a,b} (coefficient of e_a in d(e_b)) lives at b * n + a
    let var = |a: usize, b: usize| b * n + a;
    let mut system = SparseEchelon::new(n * n);
    let symmetric = matches!(alg.flavor(), Flavor::CommutativeJordan | Flavor::Lie);
    for i in 0..n {
        for j in (if symmetric { i } else { 0 })..n {
            let mut eqs: Vec<Vec<(usize, Q)>> = vec![Vec::new(); n];
            for &(m, c) in alg.basis_product(i, j) {
                for (k, eq) in eqs.iter_mut().enumerate() {
                    eq.push((var(k, m), c));
                }
            }
            for a in 0..n {
                for &(k, c) in alg.basis_product(a, j) {
                    eqs[k].push((var(a, i), -c));
                }
                for &(k, c) in alg.basis_product(i, a) {
                    eqs[k].push((var(a, j), -c));
                }
            }
            for eq in eqs {
                if !eq.is_empty() {
                    system.insert(eq);
                }
            }
        }
    }
    system.kernel().into_iter().map(|v| QMatrix::from_fn(n, n, |a, b| v[var(a, b)])).collect()
}

/// Der(A) with its bracket table.
pub fn derivation_algebra(alg: &AlgebraTable) -> Result<MatrixLieAlgebra, AlgError> {
    let basis = derivation_basis(alg);
    let names = (0..basis.len()).map(|k| format!("d{}", k + 1)).collect();
    lie_from_matrices(&format!("Der({})", alg.name()), basis, names)
}

/// Coordinates of [x, y] for two elements of a subspace, relative to it.
fn relative_bracket(lie: &AlgebraTable, sub: &Subspace, a: usize, b: usize) -> Option<Vec<CycNum>> {
    let v = lie.mul(&sub.basis()[a], &sub.basis()[b]);
    sub.coords(&v)
}

/// Bracket table of a subalgebra in its echelon basis; errors when the
/// span is not closed.
pub fn subalgebra_structure(lie: &AlgebraTable, sub: &Subspace) -> Result<Vec<Vec<Vec<CycNum>>>, AlgError> {
    let d = sub.dim();
    let mut table = vec![vec![vec![CycNum::ZERO; d]; d]; d];
    for a in 0..d {
        for b in a + 1..d {
            let c = relative_bracket(lie, sub, a, b).ok_or(AlgError::NotClosedUnderBracket)?;
            table[b][a] = c.iter().map(|&x| -x).collect();
            table[a][b] = c;
        }
    }
    Ok(table)
}

pub fn is_bracket_closed(lie: &AlgebraTable, sub: &Subspace) -> bool {
    subalgebra_structure(lie, sub).is_ok()
}

/// The three deterministic sample coefficient vectors used for ranks.
fn rank_samples(d: usize) -> [Vec<CycNum>; 3] {
    [
        (1..=d as i64).map(CycNum::int).collect(),
        (1..=d as i64).map(|k| CycNum::int(k * k)).collect(),
        (0..d).map(|k| CycNum::int(1 << (k % 12))).collect(),
    ]
}

/// Rank of a reductive Lie algebra (or subalgebra span): the minimum of
/// dim ker(ad x) over three structured sample elements x. Ranks of ad x
/// are taken modulo large primes, which can only overestimate the kernel,
/// so the result is an upper bound like the sampling itself.
pub fn lie_rank(lie: &AlgebraTable, sub: &Subspace) -> Result<usize, AlgError> {
    let table = subalgebra_structure(lie, sub)?;
    let d = sub.dim();
    if d == 0 {
        return Ok(0);
    }
    let mut best = d;
    for s in rank_samples(d) {
        // ad x: column b = sum_a s_a [y_a, y_b]
        let ad = Matrix::from_fn(d, d, |k, b| {
            let mut acc = CycNum::ZERO;
            for (a, &sa) in s.iter().enumerate() {
                let t = table[a][b][k];
                if !t.is_zero() {
                    acc += sa * t;
                }
            }
            acc
        });
        best = best.min(d - rank_lower_bound(&ad));
    }
    Ok(best)
}

/// Common fixed space of a set of automorphisms, certified bracket-closed.
pub fn fixed_subalgebra(lie: &AlgebraTable, maps: &[AlgebraMap]) -> Result<Subspace, AlgError> {
    let n = lie.dim();
    let mut rows: Vec<Vec<CycNum>> = Vec::new();
    for f in maps {
        let m = f.matrix.sub(&ExactMatrix::identity(n));
        rows.extend(m.row_vecs().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    let kernel = if rows.is_empty() { Subspace::full(n).basis().to_vec() } else { Matrix::from_rows(&rows).kernel() };
    let sub = Subspace::from_vectors(&kernel, n);
    if !is_bracket_closed(lie, &sub) {
        return Err(AlgError::NotClosedUnderBracket);
    }
    Ok(sub)
}
