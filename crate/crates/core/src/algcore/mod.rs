//! Structure-constant algebras, maps between them, derivations and Lie
//! subalgebra invariants.

mod lie;
mod linear;
mod maps;
mod table;

pub use lie::{
    derivation_algebra, derivation_basis, fixed_subalgebra, is_bracket_closed, lie_from_matrices, lie_rank,
    subalgebra_structure, AlgError, MatrixLieAlgebra,
};
pub use linear::{MatrixCoordinates, SparseEchelon, Subspace};
pub use maps::{commutator, is_automorphism, is_automorphism_q, is_derivation, left_mult, right_mult, AlgebraMap};
pub use table::{AlgebraTable, Flavor};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{CycNum, ExactMatrix, QMatrix, Q};

    /// 2x2 matrices as an associative algebra, basis e11, e12, e21, e22.
    fn mat2() -> AlgebraTable {
        let names = ["e11", "e12", "e21", "e22"].iter().map(|s| s.to_string()).collect();
        AlgebraTable::from_fn("M2", names, Flavor::Associative, |a, b| {
            let (i, j) = (a / 2, a % 2);
            let (k, l) = (b / 2, b % 2);
            let mut v = vec![Q::ZERO; 4];
            if j == k {
                v[2 * i + l] = Q::ONE;
            }
            v
        })
    }

    fn one_dim() -> AlgebraTable {
        AlgebraTable::from_fn("F", vec!["1".into()], Flavor::CommutativeJordan, |_, _| vec![Q::ONE])
    }

    #[test]
    fn matrix_algebra_is_associative_with_unit() {
        let m = mat2();
        assert!(m.check_flavor().is_ok());
        assert_eq!(m.unit().unwrap(), vec![Q::ONE, Q::ZERO, Q::ZERO, Q::ONE]);
    }

    #[test]
    fn derivations_of_m2_are_inner() {
        // Der(M2) = sl2 acting by commutators
        let der = derivation_algebra(&mat2()).unwrap();
        assert_eq!(der.dim(), 3);
        assert!(der.table.check_flavor().is_ok());
        for d in &der.basis {
            assert!(is_derivation(&mat2(), d));
        }
    }

    #[test]
    fn field_has_no_derivations() {
        assert!(derivation_basis(&one_dim()).is_empty());
    }

    #[test]
    fn automorphism_predicate() {
        let m = mat2();
        assert!(is_automorphism(&m, &AlgebraMap::identity(4)));
        // transpose is an anti-automorphism, not an automorphism
        let t = ExactMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        assert!(!is_automorphism(&m, &AlgebraMap::new("t", t)));
        // conjugation by diag(1, 2)
        let c = ExactMatrix::diagonal(&[CycNum::ONE, CycNum::rational(1, 2), CycNum::int(2), CycNum::ONE]);
        assert!(is_automorphism(&m, &AlgebraMap::new("c", c)));
    }

    #[test]
    fn ranks_of_small_lie_algebras() {
        let der = derivation_algebra(&mat2()).unwrap();
        assert_eq!(lie_rank(&der.table, &Subspace::full(3)).unwrap(), 1);
        // an abelian algebra has rank equal to its dimension
        let ab = AlgebraTable::from_fn("ab", (0..4).map(|k| format!("x{k}")).collect(), Flavor::Lie, |_, _| {
            vec![Q::ZERO; 4]
        });
        assert_eq!(lie_rank(&ab, &Subspace::full(4)).unwrap(), 4);
    }

    #[test]
    fn fixed_subalgebra_of_identity_is_everything() {
        let der = derivation_algebra(&mat2()).unwrap();
        let fixed = fixed_subalgebra(&der.table, &[AlgebraMap::identity(3)]).unwrap();
        assert_eq!(fixed.dim(), 3);
    }

    #[test]
    fn non_subalgebra_is_rejected() {
        let der = derivation_algebra(&mat2()).unwrap();
        // find two basis elements whose bracket leaves their span
        let e = |i: usize| der.table.unit_vector::<CycNum>(i);
        let mut found = false;
        for i in 0..3 {
            for j in i + 1..3 {
                let sub = Subspace::from_vectors(&[e(i), e(j)], 3);
                if lie_rank(&der.table, &sub).is_err() {
                    found = true;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn sparse_echelon_matches_dense_kernel() {
        let rows: Vec<Vec<Q>> = vec![
            vec![1, 2, 0, -1, 3].into_iter().map(Q::int).collect(),
            vec![0, 1, 1, 1, 0].into_iter().map(Q::int).collect(),
            vec![1, 3, 1, 0, 3].into_iter().map(Q::int).collect(),
        ];
        let mut ech = SparseEchelon::new(5);
        for r in &rows {
            ech.insert(r.iter().enumerate().map(|(i, &x)| (i, x)).collect());
        }
        assert_eq!(ech.rank(), 2);
        let m = QMatrix::from_rows(&rows);
        for v in ech.kernel() {
            assert!(m.mul_vec(&v).iter().all(Q::is_zero));
        }
        assert_eq!(ech.kernel().len(), m.kernel().len());
    }
}
