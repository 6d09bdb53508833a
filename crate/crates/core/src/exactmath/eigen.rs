use thiserror::Error;

use super::cyclotomic::CycNum;
use super::matrix::{span_canonical, ExactMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EigenError {
    #[error("maps {0} and {1} do not commute")]
    CommutatorNonzero(usize, usize),
    #[error("map {map}: eigenspaces over the candidates cover {found} of {expected} dimensions")]
    EigenvalueOutsideCandidates { map: usize, found: usize, expected: usize },
}

/// One joint eigenspace: eigenvalue of each map plus an echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenComponent {
    /// Index into the candidate list, one entry per map.
    pub candidate_indices: Vec<usize>,
    pub eigenvalues: Vec<CycNum>,
    pub basis: Vec<Vec<CycNum>>,
}

impl EigenComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// All 24th roots of unity, z^0 .. z^23.
pub fn roots_of_unity() -> Vec<CycNum> {
    (0..24).map(CycNum::zeta).collect()
}

fn combine(vectors: &[Vec<CycNum>], coeffs: &[CycNum], n: usize) -> Vec<CycNum> {
    let mut out = vec![CycNum::ZERO; n];
    for (v, &c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

/// Splits span(`basis`) (an A-invariant subspace) into eigenspaces of `a`.
fn split(a: &ExactMatrix, basis: &[Vec<CycNum>], candidates: &[CycNum]) -> Vec<(usize, Vec<Vec<CycNum>>)> {
    let n = a.rows();
    let d = basis.len();
    let images: Vec<Vec<CycNum>> = basis.iter().map(|v| a.mul_vec(v)).collect();
    let mut out = Vec::new();
    let mut found = 0;
    for (ci, &lambda) in candidates.iter().enumerate() {
        if found == d {
            break;
        }
        // columns: A v_k - lambda v_k
        let m = ExactMatrix::from_fn(n, d, |i, k| images[k][i] - lambda * basis[k][i]);
        let ker = m.kernel();
        if ker.is_empty() {
            continue;
        }
        found += ker.len();
        let vecs = ker.iter().map(|c| combine(basis, c, n)).collect();
        out.push((ci, vecs));
    }
    out
}

/// Joint eigenspace decomposition of pairwise commuting diagonalizable maps.
///
/// Components come back sorted by their candidate-index tuples, each with a
/// reduced echelon basis, so the output is canonical for a given input.
pub fn simultaneous_eigenspaces(
    maps: &[ExactMatrix],
    candidates: &[CycNum],
) -> Result<Vec<EigenComponent>, EigenError> {
    let n = maps.first().map_or(0, |m| m.rows());
    for (i, a) in maps.iter().enumerate() {
        assert!(a.is_square() && a.rows() == n, "map {i} has the wrong shape");
        for (j, b) in maps.iter().enumerate().skip(i + 1) {
            if !a.commutes_with(b) {
                return Err(EigenError::CommutatorNonzero(i, j));
            }
        }
    }
    simultaneous_eigenspaces_on(maps, candidates, n, None)
}

/// Same as [`simultaneous_eigenspaces`] but without the commutation check and
/// starting from an optional invariant subspace instead of the whole space.
pub fn simultaneous_eigenspaces_on(
    maps: &[ExactMatrix],
    candidates: &[CycNum],
    n: usize,
    start: Option<Vec<Vec<CycNum>>>,
) -> Result<Vec<EigenComponent>, EigenError> {
    let start = start.unwrap_or_else(|| {
        (0..n)
            .map(|i| {
                let mut v = vec![CycNum::ZERO; n];
                v[i] = CycNum::ONE;
                v
            })
            .collect()
    });
    let mut parts: Vec<(Vec<usize>, Vec<Vec<CycNum>>)> = vec![(vec![], start)];
    for (mi, a) in maps.iter().enumerate() {
        let mut next = Vec::new();
        for (label, basis) in parts {
            let d = basis.len();
            let pieces = split(a, &basis, candidates);
            let found: usize = pieces.iter().map(|(_, v)| v.len()).sum();
            if found != d {
                return Err(EigenError::EigenvalueOutsideCandidates { map: mi, found, expected: d });
            }
            for (ci, vecs) in pieces {
                let mut l = label.clone();
                l.push(ci);
                next.push((l, vecs));
            }
        }
        parts = next;
    }
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(parts
        .into_iter()
        .map(|(idx, basis)| EigenComponent {
            eigenvalues: idx.iter().map(|&i| candidates[i]).collect(),
            candidate_indices: idx,
            basis: span_canonical(&basis, n),
        })
        .collect())
}
