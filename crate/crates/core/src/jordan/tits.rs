//! The Tits model A x A x A of the Albert algebra over A = M3(F), its cubic
//! norm, the lift f -> f^bullet of automorphisms of A, and the Z3^3 grading
//! built from the Pauli pair.

use std::sync::OnceLock;

use crate::algcore::{AlgebraMap, AlgebraTable, Flavor};
use crate::exactmath::{CycNum, ExactMatrix, Field, Matrix, Q};
use crate::gradings::{grading_from_automorphisms, Grading, GradingError};

pub const TITS_DIM: usize = 27;

/// Index of entry (i, j) of part k in the flat basis.
pub fn tits_index(part: usize, i: usize, j: usize) -> usize {
    9 * part + 3 * i + j
}

pub fn tr_a<F: Field>(x: &Matrix<F>) -> F {
    x[(0, 0)] + x[(1, 1)] + x[(2, 2)]
}

/// Sum of the principal 2x2 minors.
pub fn q_a<F: Field>(x: &Matrix<F>) -> F {
    let m = |i: usize, j: usize| x[(i, i)] * x[(j, j)] - x[(i, j)] * x[(j, i)];
    m(0, 1) + m(0, 2) + m(1, 2)
}

pub fn n_a<F: Field>(x: &Matrix<F>) -> F {
    let e = |i: usize, j: usize| x[(i, j)];
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

/// x^# = x^2 - Tr(x) x + Q(x) 1, the adjugate.
pub fn sharp<F: Field>(x: &Matrix<F>) -> Matrix<F> {
    x.mul(x).sub(&x.scale(tr_a(x))).add(&Matrix::scalar(3, q_a(x)))
}

pub fn cross<F: Field>(x: &Matrix<F>, y: &Matrix<F>) -> Matrix<F> {
    sharp(&x.add(y)).sub(&sharp(x)).sub(&sharp(y))
}

/// x* = (Tr(x) 1 - x) / 2.
pub fn star<F: Field>(x: &Matrix<F>) -> Matrix<F> {
    let half = F::from_q(Q::new(1, 2));
    Matrix::scalar(3, tr_a(x)).sub(x).scale(half)
}

fn jordan_dot<F: Field>(x: &Matrix<F>, y: &Matrix<F>) -> Matrix<F> {
    x.mul(y).add(&y.mul(x)).scale(F::from_q(Q::new(1, 2)))
}

/// Element (a, b, c) of A^3.
#[derive(Clone, Debug, PartialEq)]
pub struct TitsElement<F: Field> {
    pub parts: [Matrix<F>; 3],
}

impl<F: Field> TitsElement<F> {
    pub fn new(a: Matrix<F>, b: Matrix<F>, c: Matrix<F>) -> Self {
        TitsElement { parts: [a, b, c] }
    }

    pub fn from_coords(v: &[F]) -> Self {
        let part = |k: usize| Matrix::from_fn(3, 3, |i, j| v[tits_index(k, i, j)]);
        TitsElement::new(part(0), part(1), part(2))
    }

    pub fn coords(&self) -> Vec<F> {
        self.parts.iter().flat_map(|m| m.row_vecs().concat()).collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [a1, b1, c1] = &self.parts;
        let [a2, b2, c2] = &o.parts;
        let half = F::from_q(Q::new(1, 2));
        let a = jordan_dot(a1, a2).add(&star(&b1.mul(c2))).add(&star(&b2.mul(c1)));
        let b = star(a1).mul(b2).add(&star(a2).mul(b1)).add(&cross(c1, c2).scale(half));
        let c = c2.mul(&star(a1)).add(&c1.mul(&star(a2))).add(&cross(b1, b2).scale(half));
        TitsElement::new(a, b, c)
    }

    /// N(a,b,c) = N_A(a) + N_A(b) + N_A(c) - Tr_A(abc).
    pub fn norm(&self) -> F {
        let [a, b, c] = &self.parts;
        n_a(a) + n_a(b) + n_a(c) - tr_a(&a.mul(b).mul(c))
    }
}

pub fn build_tits() -> &'static AlgebraTable {
    static T: OnceLock<AlgebraTable> = OnceLock::new();
    T.get_or_init(|| {
        let names =
            (0..TITS_DIM).map(|k| format!("{}{}{}", ["a", "b", "c"][k / 9], (k % 9) / 3 + 1, k % 3 + 1)).collect();
        let e = |k: usize| {
            let mut v = vec![Q::ZERO; TITS_DIM];
            v[k] = Q::ONE;
            TitsElement::from_coords(&v)
        };
        AlgebraTable::from_fn("TITS", names, Flavor::CommutativeJordan, |i, j| e(i).mul(&e(j)).coords())
    })
}

/// The 9-dimensional associative algebra M3(F) with basis e11..e33.
pub fn build_m3() -> &'static AlgebraTable {
    static T: OnceLock<AlgebraTable> = OnceLock::new();
    T.get_or_init(|| {
        let names = (0..9).map(|k| format!("e{}{}", k / 3 + 1, k % 3 + 1)).collect();
        AlgebraTable::from_fn("M3", names, Flavor::Associative, |a, b| {
            let mut v = vec![Q::ZERO; 9];
            if a % 3 == b / 3 {
                v[3 * (a / 3) + b % 3] = Q::ONE;
            }
            v
        })
    })
}

/// Matrix of x -> p x p^-1 on M3(F) in the basis e11..e33.
pub fn inner_on_m3(p: &ExactMatrix) -> ExactMatrix {
    let inv = p.inverse().expect("inner automorphisms need an invertible matrix");
    let mut cols = Vec::with_capacity(9);
    for k in 0..9 {
        let mut e = ExactMatrix::zeros(3, 3);
        e[(k / 3, k % 3)] = CycNum::ONE;
        cols.push(p.mul(&e).mul(&inv).row_vecs().concat());
    }
    Matrix::from_columns(9, &cols)
}

pub fn inner_m3(name: &str, p: &ExactMatrix) -> AlgebraMap {
    AlgebraMap::new(name, inner_on_m3(p))
}

/// f^bullet(x, y, z) = (f(x), f(y), f(z)) for an automorphism f of M3(F).
pub fn bullet_lift(f: &AlgebraMap) -> AlgebraMap {
    assert_eq!(f.dim(), 9);
    let m = Matrix::from_fn(
        TITS_DIM,
        TITS_DIM,
        |r, c| {
            if r / 9 == c / 9 {
                f.matrix[(r % 9, c % 9)]
            } else {
                CycNum::ZERO
            }
        },
    );
    AlgebraMap::new(format!("{}^bullet", f.name), m)
}

/// p = diag(1, w, w^2).
pub fn pauli_p() -> ExactMatrix {
    let w = CycNum::omega();
    ExactMatrix::diagonal(&[CycNum::ONE, w, w * w])
}

/// The cyclic permutation matrix q.
pub fn pauli_q() -> ExactMatrix {
    ExactMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
}

pub fn pauli_pair() -> [AlgebraMap; 2] {
    [inner_m3("In(p)", &pauli_p()), inner_m3("In(q)", &pauli_q())]
}

/// phi(a0, a1, a2) = (a0, w a1, w^2 a2).
pub fn tits_phi() -> AlgebraMap {
    let w = CycNum::omega();
    let d: Vec<CycNum> = (0..TITS_DIM).map(|k| w.pow((k / 9) as u64)).collect();
    AlgebraMap::new("phi", ExactMatrix::diagonal(&d))
}

/// The Z3^2 grading of M3(F) by the Pauli pair.
pub fn pauli_grading() -> Result<Grading, GradingError> {
    grading_from_automorphisms(build_m3(), &pauli_pair())
}

pub fn tits_z3_cube_generators() -> Vec<AlgebraMap> {
    let [f, g] = pauli_pair();
    vec![bullet_lift(&f), bullet_lift(&g), tits_phi()]
}

/// The Z3^3 grading of A^3 by f^bullet, g^bullet and phi.
pub fn tits_z3_cube_grading() -> Result<Grading, GradingError> {
    grading_from_automorphisms(build_tits(), &tits_z3_cube_generators())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::{derivation_basis, is_automorphism};
    use crate::gradings::GradingType;
    use proptest::prelude::*;

    fn qm(v: &[i64]) -> Matrix<Q> {
        Matrix::from_fn(3, 3, |i, j| Q::int(v[3 * i + j]))
    }

    #[test]
    fn unit_and_norm_of_unit() {
        let t = build_tits();
        assert!(t.check_flavor().is_ok());
        let one = t.unit().expect("A^3 is unital");
        let expected = TitsElement::new(Matrix::identity(3), Matrix::zeros(3, 3), Matrix::zeros(3, 3));
        assert_eq!(TitsElement::from_coords(&one), expected);
        assert_eq!(expected.norm(), Q::ONE);
    }

    #[test]
    fn sharp_is_adjugate() {
        let x = qm(&[2, -1, 0, 3, 1, 4, 0, 5, -2]);
        assert_eq!(x.mul(&sharp(&x)), Matrix::scalar(3, n_a(&x)));
        assert_eq!(star(&Matrix::<Q>::identity(3)), Matrix::identity(3));
    }

    #[test]
    fn derivation_algebra_has_dimension_52() {
        assert_eq!(derivation_basis(build_tits()).len(), 52);
    }

    #[test]
    fn pauli_grading_has_nine_lines() {
        let g = pauli_grading().unwrap();
        assert_eq!(g.grading_type(), GradingType(vec![9]));
        assert!(g.check_closure(build_m3()).is_ok());
        let unit: Vec<CycNum> = build_m3().unit().unwrap().into_iter().map(CycNum::from_q).collect();
        assert!(g.zero_component().unwrap().basis.len() == 1);
        let z = &g.zero_component().unwrap().basis[0];
        // the zero component is spanned by the identity matrix
        let k = z[0];
        assert!(z.iter().zip(&unit).all(|(&a, &b)| a == k * b));
    }

    /// The listed spans in the basis e11..e33, with `w` standing for the
    /// scalar written as omega in their coefficients.
    fn listed_pauli_spans(w: CycNum) -> Vec<Vec<CycNum>> {
        let w2 = w * w;
        let (o, z) = (CycNum::ONE, CycNum::ZERO);
        let row = |d: [CycNum; 3], pos: [usize; 3]| {
            let mut v = vec![z; 9];
            for (c, p) in d.into_iter().zip(pos) {
                v[p] = c;
            }
            v
        };
        let diag = [0, 4, 8];
        let sub = [2, 3, 7]; // e13, e21, e32
        let sup = [1, 5, 6]; // e12, e23, e31
        let mut out = Vec::new();
        for pos in [diag, sub, sup] {
            out.push(row([o, o, o], pos));
            out.push(row([w2, -w, o], pos));
            out.push(row([-w, w2, o], pos));
        }
        out
    }

    fn in_some_component(g: &Grading, v: &[CycNum]) -> bool {
        g.components.iter().any(|c| crate::algcore::Subspace::from_vectors(&c.basis, 9).contains(v))
    }

    #[test]
    fn pauli_components_match_listed_spans() {
        let g = pauli_grading().unwrap();
        // with a cube root of unity only the spans free of omega are homogeneous
        let cube = listed_pauli_spans(CycNum::omega());
        let hits: Vec<bool> = cube.iter().map(|v| in_some_component(&g, v)).collect();
        assert_eq!(hits, [true, false, false].repeat(3));
        // all nine are homogeneous when omega in the coefficients is read as -omega
        for v in listed_pauli_spans(-CycNum::omega()) {
            assert!(in_some_component(&g, &v));
        }
    }

    #[test]
    fn lifted_maps_are_commuting_automorphisms() {
        let gens = tits_z3_cube_generators();
        for f in &gens {
            assert!(is_automorphism(build_tits(), f));
            assert_eq!(f.order(10), Some(3));
        }
        for a in &gens {
            for b in &gens {
                assert!(a.commutes_with(b));
            }
        }
    }

    #[test]
    fn z3_cube_grading_is_fine_with_invertible_lines() {
        let g = tits_z3_cube_grading().unwrap();
        assert_eq!(g.grading_type(), GradingType(vec![27]));
        assert!(g.check_closure(build_tits()).is_ok());
        for c in &g.components {
            assert!(!TitsElement::from_coords(&c.basis[0]).norm().is_zero());
        }
    }

    /// Coefficients (T, S, N) with x^3 - T x^2 + S x - N 1 = 0, found by
    /// solving the linear system on the powers of x.
    fn generic_minimal_coefficients(x: &TitsElement<Q>) -> Option<(Q, Q, Q)> {
        let one = TitsElement::new(Matrix::identity(3), Matrix::zeros(3, 3), Matrix::zeros(3, 3));
        let x2 = x.mul(x);
        let x3 = x.mul(&x2);
        // columns: x^2, -x, 1 ; rhs x^3
        let cols = [x2.coords(), x.coords().iter().map(|&c| -c).collect(), one.coords()];
        let rhs = x3.coords();
        let rows: Vec<Vec<Q>> = (0..TITS_DIM).map(|r| vec![cols[0][r], cols[1][r], cols[2][r], rhs[r]]).collect();
        let mut m = rows;
        let piv = crate::exactmath::rref_in_place(&mut m, 4);
        if piv != vec![0, 1, 2] {
            return None;
        }
        Some((m[0][3], m[1][3], m[2][3]))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn norm_formula_matches_minimal_polynomial(v in proptest::collection::vec(-3i64..=3, 27)) {
            let x = TitsElement::from_coords(&v.iter().map(|&k| Q::int(k)).collect::<Vec<_>>());
            if let Some((_, _, n)) = generic_minimal_coefficients(&x) {
                prop_assert_eq!(n, x.norm());
            }
        }

        #[test]
        fn product_is_commutative(a in proptest::collection::vec(-3i64..=3, 27), b in proptest::collection::vec(-3i64..=3, 27)) {
            let x = TitsElement::from_coords(&a.iter().map(|&k| Q::int(k)).collect::<Vec<_>>());
            let y = TitsElement::from_coords(&b.iter().map(|&k| Q::int(k)).collect::<Vec<_>>());
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }
    }
}
