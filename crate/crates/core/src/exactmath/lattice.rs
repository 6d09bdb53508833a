use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use super::matrix::QMatrix;
use super::rational::Q;

/// Dense integer matrix (Weyl matrices, root coordinates, exponent lattices).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == c), "ragged rows");
        IntMatrix { rows: rows.len(), cols: c, data: rows.concat() }
    }

    pub fn from_array<const R: usize, const C: usize>(a: [[i64; C]; R]) -> Self {
        IntMatrix { rows: R, cols: C, data: a.iter().flatten().copied().collect() }
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Row-major entries, the order used for lexicographic comparison.
    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let v = a.checked_mul(o[(k, j)]).expect("integer overflow");
                    out[(i, j)] = out[(i, j)].checked_add(v).expect("integer overflow");
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.rows, v.len());
        (0..self.cols).map(|j| (0..self.rows).map(|i| v[i] * self[(i, j)]).sum()).collect()
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn to_rational(&self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| Q::int(self[(i, j)]))
    }

    pub fn determinant(&self) -> i64 {
        let d = self.to_rational().determinant();
        assert!(d.is_integer());
        d.numer()
    }

    /// Inverse of a unimodular matrix.
    pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
        let inv = self.to_rational().inverse()?;
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let q = inv[(i, j)];
                if !q.is_integer() {
                    return None;
                }
                out[(i, j)] = q.numer();
            }
        }
        Some(out)
    }

    pub fn pow(&self, e: u32) -> IntMatrix {
        (0..e).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i64) {
        for j in 0..self.cols {
            let v = self[(src, j)].checked_mul(k).expect("integer overflow");
            self[(dst, j)] = self[(dst, j)].checked_add(v).expect("integer overflow");
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: i64) {
        for i in 0..self.rows {
            let v = self[(i, src)].checked_mul(k).expect("integer overflow");
            self[(i, dst)] = self[(i, dst)].checked_add(v).expect("integer overflow");
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)];
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows).map(|i| format!("{:?}", self.row(i))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Result of `smith_normal_form`: `s = u * m * v`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s[(i, i)]).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&d| d != 0).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (rows, cols) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        'pivot: loop {
            // smallest nonzero entry of the trailing block goes to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = s[(i, j)].abs();
                    if x != 0 && best.is_none_or(|(bi, bj)| x < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'pivot };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = s[(t, t)];
            let mut clean = true;
            for i in t + 1..rows {
                let q = s[(i, t)].div_euclid(p);
                if q != 0 {
                    s.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                clean &= s[(i, t)] == 0;
            }
            for j in t + 1..cols {
                let q = s[(t, j)].div_euclid(p);
                if q != 0 {
                    s.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                clean &= s[(t, j)] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| s[(i, j)] % p != 0));
            if let Some(i) = offender {
                s.add_row(t, i, 1);
                u.add_row(t, i, 1);
                continue;
            }
            if p < 0 {
                s.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }
    Smith { s, u, v }
}

/// Abelian group (F^x)^torus_rank x Z_{d_1} x ... x Z_{d_k} with d_i | d_{i+1}.
///
/// The same descriptor doubles as Z^rank x (finite part) for universal
/// grading groups; only the rendering differs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroupDescriptor {
    pub torus_rank: usize,
    pub invariant_factors: Vec<i64>,
}

impl AbelianGroupDescriptor {
    pub fn trivial() -> Self {
        AbelianGroupDescriptor { torus_rank: 0, invariant_factors: vec![] }
    }

    /// Normalizes an arbitrary product of cyclic groups into invariant factors.
    pub fn from_cyclic_orders(torus_rank: usize, orders: &[i64]) -> Self {
        let smith = smith_normal_form(&IntMatrix::diagonal(orders));
        let invariant_factors = smith.diagonal().into_iter().filter(|&d| d > 1).collect();
        AbelianGroupDescriptor { torus_rank, invariant_factors }
    }

    pub fn is_trivial(&self) -> bool {
        self.torus_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.torus_rank == 0
    }

    pub fn order(&self) -> Option<i64> {
        self.is_finite().then(|| self.invariant_factors.iter().product())
    }

    /// Primary decomposition as a multiset of prime powers, sorted.
    pub fn elementary_divisors(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for &d in &self.invariant_factors {
            let mut n = d;
            let mut p = 2;
            while n > 1 {
                if n % p == 0 {
                    let mut q = 1;
                    while n % p == 0 {
                        n /= p;
                        q *= p;
                    }
                    out.push(q);
                }
                p += 1;
            }
        }
        out.sort_unstable();
        out
    }

    fn render(&self, free: &str) -> String {
        let mut parts = Vec::new();
        match self.torus_rank {
            0 => {}
            1 => parts.push(free.to_string()),
            r => parts.push(format!("{free}^{r}")),
        }
        let ed = self.elementary_divisors();
        let mut i = 0;
        while i < ed.len() {
            let mut j = i;
            while j < ed.len() && ed[j] == ed[i] {
                j += 1;
            }
            if j - i == 1 {
                parts.push(format!("Z{}", ed[i]));
            } else {
                parts.push(format!("Z{}^{}", ed[i], j - i));
            }
            i = j;
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" x ")
        }
    }

    /// Rendering with multiplicative torus factors, e.g. `F* x Z2^2`.
    pub fn multiplicative(&self) -> String {
        self.render("F*")
    }

    /// Rendering with free abelian factors, e.g. `Z x Z2^3`.
    pub fn additive(&self) -> String {
        self.render("Z")
    }
}

/// Structure of `{ t in (F^x)^n : prod_j t_j^{m_ij} = 1 for every row i }`.
pub fn multiplicative_kernel_structure(m: &IntMatrix) -> AbelianGroupDescriptor {
    let smith = smith_normal_form(m);
    let rank = smith.rank();
    let invariant_factors = smith.diagonal().into_iter().filter(|&d| d > 1).collect();
    AbelianGroupDescriptor { torus_rank: m.cols - rank, invariant_factors }
}

/// Generators of the solution group of `t^m = 1` in exponent form.
///
/// Writing `t_j = exp(2 pi i theta_j)`, solutions are `theta = v * phi` with
/// `phi_k` in `(1/d_k) Z` for the nonzero Smith entries and free otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGenerators {
    /// (order d, integer vector w): generator t_j = zeta_d^{w_j}.
    pub finite: Vec<(i64, Vec<i64>)>,
    /// integer direction w: one-parameter subgroup t_j = s^{w_j}.
    pub free: Vec<Vec<i64>>,
}

pub fn multiplicative_kernel_generators(m: &IntMatrix) -> KernelGenerators {
    let smith = smith_normal_form(m);
    let diag = smith.diagonal();
    let n = m.cols;
    let column = |k: usize| (0..n).map(|j| smith.v[(j, k)]).collect::<Vec<_>>();
    let mut finite = Vec::new();
    let mut free = Vec::new();
    for k in 0..n {
        let d = diag.get(k).copied().unwrap_or(0);
        match d {
            0 => free.push(column(k)),
            1 => {}
            d => finite.push((d, column(k))),
        }
    }
    KernelGenerators { finite, free }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_smith(m: &IntMatrix) {
        let sm = smith_normal_form(m);
        assert_eq!(sm.u.mul(m).mul(&sm.v), sm.s);
        assert_eq!(sm.u.determinant().abs(), 1);
        assert_eq!(sm.v.determinant().abs(), 1);
        for i in 0..sm.s.rows() {
            for j in 0..sm.s.cols() {
                if i != j {
                    assert_eq!(sm.s[(i, j)], 0);
                }
            }
        }
        let d = sm.diagonal();
        for w in d.windows(2) {
            if w[1] != 0 {
                assert!(w[0] != 0 && w[1] % w[0] == 0, "chain broken: {d:?}");
            } else {
                assert!(w[0] >= 0);
            }
        }
        assert!(d.iter().all(|&x| x >= 0));
    }

    #[test]
    fn identity_is_its_own_form() {
        let sm = smith_normal_form(&IntMatrix::identity(2));
        assert!(sm.s.is_identity());
    }

    #[test]
    fn diagonal_chain_kept() {
        let sm = smith_normal_form(&IntMatrix::diagonal(&[2, 4]));
        assert_eq!(sm.diagonal(), vec![2, 4]);
        let sm = smith_normal_form(&IntMatrix::diagonal(&[4, 6]));
        assert_eq!(sm.diagonal(), vec![2, 12]);
    }

    #[test]
    fn zero_matrix_gives_full_torus() {
        let g = multiplicative_kernel_structure(&IntMatrix::zeros(4, 4));
        assert_eq!(g, AbelianGroupDescriptor { torus_rank: 4, invariant_factors: vec![] });
        assert_eq!(g.multiplicative(), "F*^4");
    }

    #[test]
    fn minus_two_identity() {
        let g = multiplicative_kernel_structure(&IntMatrix::diagonal(&[-2, -2, -2, -2]));
        assert_eq!(g.invariant_factors, vec![2, 2, 2, 2]);
        assert_eq!(g.additive(), "Z2^4");
    }

    #[test]
    fn cyclic_orders_normalize() {
        let g = AbelianGroupDescriptor::from_cyclic_orders(0, &[2, 2, 2, 3]);
        assert_eq!(g.invariant_factors, vec![2, 2, 6]);
        assert_eq!(g.additive(), "Z2^3 x Z3");
    }

    #[test]
    fn generators_solve_the_system() {
        let m = IntMatrix::from_array([[2, 1], [0, 3]]);
        let gens = multiplicative_kernel_generators(&m);
        assert!(gens.free.is_empty());
        for (d, w) in &gens.finite {
            // m * (w / d) must be integral
            for x in m.mul_vec(w) {
                assert_eq!(x.rem_euclid(*d), 0);
            }
        }
        let order: i64 = gens.finite.iter().map(|(d, _)| d).product();
        assert_eq!(order, 6);
    }

    proptest! {
        #[test]
        fn smith_is_valid(entries in prop::collection::vec(-6i64..7, 12), rows in 1usize..4) {
            let cols = 12 / rows.max(1);
            let rows = 12 / cols;
            let m = IntMatrix::from_rows(&entries.chunks(cols).take(rows).map(<[i64]>::to_vec).collect::<Vec<_>>());
            check_smith(&m);
        }

        #[test]
        fn kernel_structure_is_unimodular_invariant(
            entries in prop::collection::vec(-4i64..5, 9),
            a in -3i64..4, b in -3i64..4,
        ) {
            let m = IntMatrix::from_rows(&entries.chunks(3).map(<[i64]>::to_vec).collect::<Vec<_>>());
            let u = IntMatrix::from_array([[1, a, 0], [0, 1, 0], [0, 0, 1]]);
            let v = IntMatrix::from_array([[1, 0, 0], [b, 1, 0], [0, 0, -1]]);
            prop_assert_eq!(
                multiplicative_kernel_structure(&m),
                multiplicative_kernel_structure(&u.mul(&m).mul(&v))
            );
        }
    }
}
