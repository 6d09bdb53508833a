use std::fmt;

use serde::Serialize;

use crate::exactmath::{Field, Q};

/// Identity class a structure-constant table is expected to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Flavor {
    CommutativeJordan,
    Associative,
    Alternative,
    Lie,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Flavor::CommutativeJordan => "commutative-Jordan",
            Flavor::Associative => "associative",
            Flavor::Alternative => "alternative",
            Flavor::Lie => "anticommutative-Lie",
        };
        f.write_str(s)
    }
}

/// Finite-dimensional algebra over Q given by structure constants
/// `e_i e_j = sum_k c_ijk e_k`, stored sparsely per basis pair.
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    name: String,
    basis_names: Vec<String>,
    flavor: Flavor,
    products: Vec<Vec<(usize, Q)>>,
}

impl AlgebraTable {
    /// Builds a table from a closure returning the coordinates of `e_i e_j`.
    pub fn from_fn(
        name: impl Into<String>,
        basis_names: Vec<String>,
        flavor: Flavor,
        mut product: impl FnMut(usize, usize) -> Vec<Q>,
    ) -> Self {
        let dim = basis_names.len();
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                assert_eq!(v.len(), dim, "product e{i}*e{j} has the wrong length");
                products.push(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, &c)| (k, c)).collect());
            }
        }
        AlgebraTable { name: name.into(), basis_names, flavor, products }
    }

    pub fn from_sparse(
        name: impl Into<String>,
        basis_names: Vec<String>,
        flavor: Flavor,
        products: Vec<Vec<(usize, Q)>>,
    ) -> Self {
        let dim = basis_names.len();
        assert_eq!(products.len(), dim * dim);
        AlgebraTable { name: name.into(), basis_names, flavor, products }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Nonzero coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.products[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Q {
        self.basis_product(i, j).iter().find(|(kk, _)| *kk == k).map_or(Q::ZERO, |&(_, c)| c)
    }

    pub fn mul<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "vector length mismatch");
        let mut out = vec![F::zero(); n];
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for &(k, c) in self.basis_product(i, j) {
                    out[k] = out[k] + ab * F::from_q(c);
                }
            }
        }
        out
    }

    pub fn unit_vector<F: Field>(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    /// Two-sided identity element, if any.
    pub fn unit(&self) -> Option<Vec<Q>> {
        let n = self.dim();
        // solve sum_i u_i e_i e_j = e_j for all j (left identity), then check right
        let rows: Vec<Vec<Q>> = (0..n * n)
            .map(|r| {
                let (j, k) = (r / n, r % n);
                (0..n).map(|i| self.structure_constant(i, j, k)).collect()
            })
            .collect();
        let rhs: Vec<Q> = (0..n * n).map(|r| if r / n == r % n { Q::ONE } else { Q::ZERO }).collect();
        let m = crate::exactmath::QMatrix::from_rows(&rows);
        let u = m.solve(&rhs)?;
        (0..n).all(|j| self.mul(&self.unit_vector(j), &u) == self.unit_vector::<Q>(j)).then_some(u)
    }

    /// Exhaustively checks the identities of the declared flavor on basis
    /// elements; returns a description of the first violation.
    pub fn check_flavor(&self) -> Result<(), String> {
        let n = self.dim();
        let e = |i: usize| self.unit_vector::<Q>(i);
        let neg = |v: Vec<Q>| v.into_iter().map(|x| -x).collect::<Vec<_>>();
        let add = |a: Vec<Q>, b: Vec<Q>| a.into_iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
        let is_zero = |v: &[Q]| v.iter().all(Q::is_zero);
        let assoc = |i: usize, j: usize, k: usize| {
            let l = self.mul(&self.mul(&e(i), &e(j)), &e(k));
            let r = self.mul(&e(i), &self.mul(&e(j), &e(k)));
            add(l, neg(r))
        };
        match self.flavor {
            Flavor::CommutativeJordan => {
                for i in 0..n {
                    for j in 0..n {
                        if self.basis_product(i, j) != self.basis_product(j, i) {
                            return Err(format!("not commutative at ({i},{j})"));
                        }
                    }
                }
            }
            Flavor::Lie => {
                for i in 0..n {
                    for j in 0..n {
                        let s = add(self.mul(&e(i), &e(j)), self.mul(&e(j), &e(i)));
                        if !is_zero(&s) {
                            return Err(format!("not anticommutative at ({i},{j})"));
                        }
                    }
                }
                for i in 0..n {
                    for j in i + 1..n {
                        let eij = self.mul(&e(i), &e(j));
                        for k in j + 1..n {
                            let a = self.mul(&eij, &e(k));
                            let b = self.mul(&self.mul(&e(j), &e(k)), &e(i));
                            let c = self.mul(&self.mul(&e(k), &e(i)), &e(j));
                            if !is_zero(&add(add(a, b), c)) {
                                return Err(format!("Jacobi fails at ({i},{j},{k})"));
                            }
                        }
                    }
                }
            }
            Flavor::Associative => {
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            if !is_zero(&assoc(i, j, k)) {
                                return Err(format!("not associative at ({i},{j},{k})"));
                            }
                        }
                    }
                }
            }
            Flavor::Alternative => {
                // linearized: the associator is alternating
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            if !is_zero(&add(assoc(i, j, k), assoc(j, i, k))) {
                                return Err(format!("not left alternative at ({i},{j},{k})"));
                            }
                            if !is_zero(&add(assoc(i, j, k), assoc(i, k, j))) {
                                return Err(format!("not right alternative at ({i},{j},{k})"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Human-readable multiplication table (nonzero products only).
    pub fn dump(&self) -> String {
        let mut out = format!("# {} (dim {}, {})\n", self.name, self.dim(), self.flavor);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let p = self.basis_product(i, j);
                if p.is_empty() {
                    continue;
                }
                let terms: Vec<String> = p.iter().map(|(k, c)| format!("{}*{}", c, self.basis_names[*k])).collect();
                out.push_str(&format!("{} . {} = {}\n", self.basis_names[i], self.basis_names[j], terms.join(" + ")));
            }
        }
        out
    }
}
