//! Univariate polynomials over an exact field and minimal polynomials of
//! square matrices.

use std::fmt;

use super::field::Field;
use super::matrix::Matrix;

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F: Field>(Vec<F>);

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> Option<F> {
        self.0.last().copied()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => {
                let inv = l.inv();
                Poly(self.0.iter().map(|&c| c * inv).collect())
            }
            None => Poly::zero(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.lead().expect("division by the zero polynomial");
        let dinv = dl.inv();
        let dd = d.0.len() - 1;
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), Poly::new(r));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd] * dinv;
            q[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in d.0.iter().enumerate() {
                r[k + j] = r[k + j] - c * b;
            }
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        self.mul(o).div_rem(&self.gcd(o)).0.monic()
    }

    pub fn derivative(&self) -> Self {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(k, &c)| F::from_q(super::Q::int(k as i64)) * c).collect())
    }

    /// True iff the polynomial has no repeated factor (characteristic zero).
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: F) -> F {
        self.0.iter().rev().fold(F::zero(), |acc, &c| acc * x + c)
    }

    /// p(A) v by Horner's rule.
    pub fn apply(&self, a: &Matrix<F>, v: &[F]) -> Vec<F> {
        let mut acc = vec![F::zero(); v.len()];
        for &c in self.0.iter().rev() {
            acc = a.mul_vec(&acc);
            for (x, &y) in acc.iter_mut().zip(v) {
                *x = *x + c * y;
            }
        }
        acc
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c}) x"),
                _ => format!("({c}) x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Monic polynomial of least degree with p(A) v = 0.
pub fn local_minimal_polynomial<F: Field>(a: &Matrix<F>, v: &[F]) -> Poly<F> {
    // Krylov vectors v, Av, ... kept in echelon form alongside the
    // combination of powers producing each reduced row
    let n = v.len();
    let mut rows: Vec<(usize, Vec<F>, Vec<F>)> = Vec::new();
    let mut w = v.to_vec();
    for k in 0..=n {
        let mut x = w.clone();
        let mut comb = vec![F::zero(); k + 1];
        comb[k] = F::one();
        for (p, r, c) in &rows {
            let f = x[*p];
            if f.is_zero() {
                continue;
            }
            for (xi, &ri) in x.iter_mut().zip(r) {
                *xi = *xi - f * ri;
            }
            for (ci, &cj) in comb.iter_mut().zip(c) {
                *ci = *ci - f * cj;
            }
        }
        match x.iter().position(|c| !c.is_zero()) {
            None => return Poly::new(comb).monic(),
            Some(p) => {
                let inv = x[p].inv();
                x.iter_mut().for_each(|c| *c = *c * inv);
                comb.iter_mut().for_each(|c| *c = *c * inv);
                rows.push((p, x, comb));
            }
        }
        w = a.mul_vec(&w);
    }
    unreachable!("n + 1 Krylov vectors are dependent")
}

/// Minimal polynomial of a square matrix, as the lcm of the local
/// minimal polynomials of the standard basis vectors.
pub fn minimal_polynomial<F: Field>(a: &Matrix<F>) -> Poly<F> {
    assert!(a.is_square(), "minimal polynomial of a non-square matrix");
    let n = a.rows();
    let mut p = Poly::one();
    for i in 0..n {
        let e: Vec<F> = (0..n).map(|k| if k == i { F::one() } else { F::zero() }).collect();
        if p.apply(a, &e).iter().all(|c| c.is_zero()) {
            continue;
        }
        p = p.lcm(&local_minimal_polynomial(a, &e));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{CycNum, Q};
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> Poly<Q> {
        Poly::new(c.iter().map(|&x| Q::int(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x - 1)^2 (x + 2) and (x - 1)(x + 3)
        let a = qp(&[1, -2, 1]).mul(&qp(&[2, 1]));
        let b = qp(&[-1, 1]).mul(&qp(&[3, 1]));
        assert_eq!(a.gcd(&b), qp(&[-1, 1]));
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).coeffs().len(), a.coeffs().len());
        let back = Poly::new(
            q.mul(&b)
                .coeffs()
                .iter()
                .zip(r.coeffs().iter().chain(std::iter::repeat(&Q::ZERO)))
                .map(|(&x, &y)| x + y)
                .collect(),
        );
        assert_eq!(back, a);
        assert!(!a.is_squarefree());
        assert!(b.is_squarefree());
    }

    #[test]
    fn jordan_block_is_not_semisimple() {
        let j = Matrix::from_rows(&[vec![Q::int(2), Q::ONE], vec![Q::ZERO, Q::int(2)]]);
        let p = minimal_polynomial(&j);
        assert_eq!(p, qp(&[4, -4, 1]));
        assert!(!p.is_squarefree());
        let d = Matrix::diagonal(&[Q::int(2), Q::int(2), Q::int(-1)]);
        assert_eq!(minimal_polynomial(&d), qp(&[-2, -1, 1]));
    }

    #[test]
    fn rotation_by_omega_over_the_cyclotomic_field() {
        // a 3-cycle permutation matrix has minimal polynomial x^3 - 1
        let z = CycNum::ZERO;
        let o = CycNum::ONE;
        let c = Matrix::from_rows(&[vec![z, z, o], vec![o, z, z], vec![z, o, z]]);
        let p = minimal_polynomial(&c);
        assert_eq!(p.coeffs(), &[-o, z, z, o]);
        assert!(p.is_squarefree());
        assert!(p.eval(CycNum::omega()).is_zero());
    }

    proptest! {
        #[test]
        fn minimal_polynomial_annihilates(v in proptest::collection::vec(-3i64..=3, 16)) {
            let a = Matrix::from_fn(4, 4, |i, j| Q::int(v[4 * i + j]));
            let p = minimal_polynomial(&a);
            for i in 0..4 {
                let e: Vec<Q> = (0..4).map(|k| if k == i { Q::ONE } else { Q::ZERO }).collect();
                prop_assert!(p.apply(&a, &e).iter().all(|c| c.is_zero()));
            }
            prop_assert!(p.degree().unwrap() <= 4);
        }
    }
}
