use std::collections::HashMap;

use crate::exactmath::{rref_in_place, CycNum, ExactMatrix, Field, QMatrix, Q};

/// Incremental sparse row echelon form over Q, used for the large
/// derivation systems (hundreds of unknowns, thousands of equations).
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    ncols: usize,
    rows: HashMap<usize, Vec<(usize, Q)>>,
}

fn axpy(row: &[(usize, Q)], f: Q, pivot: &[(usize, Q)]) -> Vec<(usize, Q)> {
    // row - f * pivot, both sorted by column
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot.len() {
        let ca = row.get(a).map_or(usize::MAX, |x| x.0);
        let cb = pivot.get(b).map_or(usize::MAX, |x| x.0);
        if ca < cb {
            out.push(row[a]);
            a += 1;
        } else if cb < ca {
            out.push((cb, -(f * pivot[b].1)));
            b += 1;
        } else {
            let v = row[a].1 - f * pivot[b].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon { ncols, rows: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds an equation given as (column, coefficient) pairs in any order.
    /// Returns true when it was independent of the previous ones.
    pub fn insert(&mut self, mut row: Vec<(usize, Q)>) -> bool {
        row.retain(|(_, c)| !c.is_zero());
        row.sort_by_key(|x| x.0);
        // merge duplicate columns
        let mut merged: Vec<(usize, Q)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        let mut row = merged;
        loop {
            let Some(&(lead, lv)) = row.first() else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(p) => row = axpy(&row, lv, p),
                None => {
                    let inv = lv.inv();
                    for x in row.iter_mut() {
                        x.1 *= inv;
                    }
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Basis of the solution space of the homogeneous system.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut pivots: Vec<usize> = self.rows.keys().copied().collect();
        pivots.sort_unstable_by(|a, b| b.cmp(a));
        (0..self.ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|free| {
                let mut x = vec![Q::ZERO; self.ncols];
                x[free] = Q::ONE;
                for &p in &pivots {
                    let mut acc = Q::ZERO;
                    for &(c, v) in &self.rows[&p][1..] {
                        if !x[c].is_zero() {
                            acc += v * x[c];
                        }
                    }
                    x[p] = -acc;
                }
                x
            })
            .collect()
    }
}

/// Subspace of F^n held as reduced echelon rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<CycNum>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(vectors: &[Vec<CycNum>], ambient: usize) -> Self {
        let mut rows = vectors.to_vec();
        let pivots = rref_in_place(&mut rows, ambient);
        Subspace { ambient, rows, pivots }
    }

    pub fn full(ambient: usize) -> Self {
        let rows: Vec<Vec<CycNum>> = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { CycNum::ONE } else { CycNum::ZERO }).collect())
            .collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<CycNum>] {
        &self.rows
    }

    /// Coordinates in the echelon basis, or None if `v` is outside.
    pub fn coords(&self, v: &[CycNum]) -> Option<Vec<CycNum>> {
        let c: Vec<CycNum> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut r = v.to_vec();
        for (row, &k) in self.rows.iter().zip(&c) {
            if k.is_zero() {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= k * y;
                }
            }
        }
        r.iter().all(CycNum::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }
}

/// Coordinates of matrices with respect to a linearly independent family.
#[derive(Clone, Debug)]
pub struct MatrixCoordinates {
    positions: Vec<usize>,
    solve: QMatrix,
    flat: Vec<Vec<(usize, Q)>>,
    len: usize,
}

impl MatrixCoordinates {
    /// None when the family is linearly dependent.
    pub fn new(family: &[QMatrix]) -> Option<Self> {
        let len = family.first().map_or(0, |m| m.rows() * m.cols());
        let dense: Vec<Vec<Q>> = family.iter().map(|m| m.row_vecs().concat()).collect();
        let mut rows = dense.clone();
        let positions = rref_in_place(&mut rows, len);
        if positions.len() != family.len() {
            return None;
        }
        let n = family.len();
        let sub = QMatrix::from_fn(n, n, |k, r| dense[r][positions[k]]);
        let solve = sub.inverse()?;
        let flat = dense
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, &x)| (i, x)).collect())
            .collect();
        Some(MatrixCoordinates { positions, solve, flat, len })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    fn coords_generic<F: Field>(&self, flat: &[F]) -> Option<Vec<F>> {
        assert_eq!(flat.len(), self.len);
        let rhs: Vec<F> = self.positions.iter().map(|&p| flat[p]).collect();
        let n = self.positions.len();
        let c: Vec<F> = (0..n)
            .map(|r| {
                let mut acc = F::zero();
                for (k, &b) in rhs.iter().enumerate() {
                    let s = self.solve[(r, k)];
                    if !s.is_zero() && !b.is_zero() {
                        acc = acc + F::from_q(s) * b;
                    }
                }
                acc
            })
            .collect();
        let mut rec = flat.to_vec();
        for (r, &cr) in c.iter().enumerate() {
            if cr.is_zero() {
                continue;
            }
            for &(i, x) in &self.flat[r] {
                rec[i] = rec[i] - cr * F::from_q(x);
            }
        }
        rec.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn coords_q(&self, m: &QMatrix) -> Option<Vec<Q>> {
        self.coords_generic(&m.row_vecs().concat())
    }

    pub fn coords(&self, m: &ExactMatrix) -> Option<Vec<CycNum>> {
        self.coords_generic(&m.row_vecs().concat())
    }
}
