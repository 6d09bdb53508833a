use std::fmt;
use std::ops::{Index, IndexMut};

use super::cyclotomic::CycNum;
use super::field::Field;
use super::rational::Q;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Matrix over Q(z24), the carrier of every eigen-computation.
pub type ExactMatrix = Matrix<CycNum>;
pub type QMatrix = Matrix<Q>;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn diagonal(entries: &[F]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.concat() }
    }

    /// Builds the matrix whose j-th column is `cols[j]`.
    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        assert!(cols.iter().all(|c| c.len() == rows), "column length mismatch");
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn map<G: Field>(&self, f: impl Fn(F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(&a, &b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(&a, &b)| a - b).collect() }
    }

    pub fn scale(&self, c: F) -> Self {
        self.map(|x| x * c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = o.row(k);
                let base = i * o.cols;
                for (j, &b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + j] = out.data[base + j] + a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (&a, &b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)])
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows = self.row_vecs();
        let pivots = rref_in_place(&mut rows, self.cols);
        let m = if rows.is_empty() { Self::zeros(0, self.cols) } else { Self::from_rows(&rows) };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vecs();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut rows = self.row_vecs();
        let pivots = rref_in_place(&mut rows, self.cols);
        kernel_from_rref(&rows, &pivots, self.cols)
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = choose_pivot(&a, c, c) else {
                return F::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pv = a[c][c];
            det = det * pv;
            let inv = pv.inv();
            for r in c + 1..n {
                let f = a[r][c];
                if f.is_zero() {
                    continue;
                }
                let f = f * inv;
                for k in c..n {
                    let v = a[c][k];
                    if !v.is_zero() {
                        a[r][k] = a[r][k] - f * v;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut rows: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| rows[i][n + j]))
    }

    /// Some solution x of self * x = b, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut rows: Vec<Vec<F>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i]);
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rows[r][self.cols];
        }
        Some(x)
    }

    pub fn commutes_with(&self, o: &Self) -> bool {
        self.mul(o) == o.mul(self)
    }
}

fn choose_pivot<F: Field>(rows: &[Vec<F>], col: usize, start: usize) -> Option<usize> {
    let mut fallback = None;
    for (r, row) in rows.iter().enumerate().skip(start) {
        let v = &row[col];
        if v.is_zero() {
            continue;
        }
        if v.is_simple() {
            return Some(r);
        }
        fallback.get_or_insert(r);
    }
    fallback
}

/// Row-reduces `rows` (each of length `ncols`) in place and truncates the
/// zero rows. Returns the pivot columns in increasing order.
pub fn rref_in_place<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = choose_pivot(rows, c, r) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        if !inv.is_one() {
            for v in rows[r][c..].iter_mut() {
                if !v.is_zero() {
                    *v = *v * inv;
                }
            }
        }
        let support: Vec<usize> = (c..ncols).filter(|&k| !rows[r][k].is_zero()).collect();
        let (head, tail) = rows.split_at_mut(r);
        let (prow, after) = tail.split_first_mut().expect("pivot row present");
        for other in head.iter_mut().chain(after.iter_mut()) {
            let f = other[c];
            if f.is_zero() {
                continue;
            }
            for &k in &support {
                other[k] = other[k] - f * prow[k];
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn kernel_from_rref<F: Field>(rows: &[Vec<F>], pivots: &[usize], ncols: usize) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][free];
            }
            v
        })
        .collect()
}

/// Canonical basis (reduced echelon rows) of the span of `vectors`.
pub fn span_canonical<F: Field>(vectors: &[Vec<F>], dim: usize) -> Vec<Vec<F>> {
    let mut rows = vectors.to_vec();
    rref_in_place(&mut rows, dim);
    rows
}

pub fn span_rank<F: Field>(vectors: &[Vec<F>], dim: usize) -> usize {
    let mut rows = vectors.to_vec();
    rref_in_place(&mut rows, dim).len()
}

impl<F: Field> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl QMatrix {
    pub fn to_cyc(&self) -> ExactMatrix {
        self.map(CycNum::from_q)
    }
}

impl ExactMatrix {
    /// Returns the rational matrix if every entry is rational.
    pub fn to_rational(&self) -> Option<QMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            data.push(x.as_rational()?);
        }
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> ExactMatrix {
        let v: Vec<Vec<CycNum>> = rows.iter().map(|r| r.iter().map(|&x| CycNum::int(x)).collect()).collect();
        Matrix::from_rows(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qm(rows: &[&[i64]]) -> QMatrix {
        let v: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| Q::int(x)).collect()).collect();
        Matrix::from_rows(&v)
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(QMatrix::identity(3).kernel().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        assert_eq!(QMatrix::zeros(2, 2).kernel().len(), 2);
    }

    #[test]
    fn inverse_and_determinant() {
        let m = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.determinant(), Q::int(18));
        assert!(qm(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = qm(&[&[1, 1], &[2, 2]]);
        let x = m.solve(&[Q::int(3), Q::int(6)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![Q::int(3), Q::int(6)]);
        assert!(m.solve(&[Q::int(1), Q::int(1)]).is_none());
    }

    #[test]
    fn cyclotomic_rank() {
        let w = CycNum::omega();
        let m = Matrix::from_rows(&[vec![CycNum::ONE, w], vec![w * w, CycNum::ONE]]);
        // det = 1 - w^3 = 0
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel().len(), 1);
        let k = &m.kernel()[0];
        assert!(m.mul_vec(k).iter().all(|x| x.is_zero()));
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in prop::collection::vec(-3i64..4, 20)) {
            let m = Matrix::from_fn(4, 5, |i, j| Q::int(entries[i * 5 + j]));
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.len(), 5);
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }
    }
}
