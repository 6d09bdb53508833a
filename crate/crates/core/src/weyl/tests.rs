use super::*;
use crate::exactmath::ExactMatrix;

fn z(k: i64) -> CycNum {
    CycNum::zeta(k)
}

#[test]
fn group_has_order_1152_and_is_sorted() {
    let w = weyl();
    assert_eq!(w.len(), WEYL_ORDER);
    let all = generate_weyl();
    assert!(all.windows(2).all(|p| p[0].entries() < p[1].entries()));
    assert_eq!(w.identity_index(), 748);
}

#[test]
fn simple_reflections_are_involutions_with_coxeter_relations() {
    let s = simple_reflections();
    let order = |m: &IntMatrix| {
        let mut p = m.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.mul(m);
            k += 1;
        }
        k
    };
    for (i, si) in s.iter().enumerate() {
        assert_eq!(order(si), 2);
        for (j, sj) in s.iter().enumerate().skip(i + 1) {
            let expected = match (i, j) {
                (0, 1) | (2, 3) => 3,
                (1, 2) => 4,
                _ => 2,
            };
            assert_eq!(order(&si.mul(sj)), expected, "s{} s{}", i + 1, j + 1);
        }
    }
}

#[test]
fn class_representatives_and_order_counts() {
    let w = weyl();
    let classes = w.conjugacy_classes();
    assert_eq!(classes.len(), 25);
    let reps: Vec<usize> = classes.iter().map(|c| c.representative).collect();
    let mut sorted = CLASS_REPRESENTATIVES.to_vec();
    sorted.sort_unstable();
    assert_eq!(reps, sorted);
    assert_eq!(classes.iter().map(ConjugacyClass::size).sum::<usize>(), WEYL_ORDER);
    assert_eq!(w.order_counts(), vec![(1, 1), (2, 139), (3, 80), (4, 228), (6, 464), (8, 144), (12, 96)]);
    let reps_of_order =
        |o: usize| -> Vec<usize> { classes.iter().filter(|c| c.order == o).map(|c| c.representative).collect() };
    assert_eq!(reps_of_order(2), vec![28, 42, 55, 103, 105, 142, 405]);
    assert_eq!(reps_of_order(3), vec![7, 15, 114]);
    assert_eq!(reps_of_order(4), vec![1, 3, 56, 104, 110]);
    assert_eq!(reps_of_order(6), vec![4, 8, 9, 14, 30, 78, 106]);
    assert_eq!(reps_of_order(8), vec![2]);
    assert_eq!(reps_of_order(12), vec![10]);
}

#[test]
fn minus_identity_is_central() {
    let w = weyl();
    let m = w.element(405).unwrap();
    assert_eq!(*m, IntMatrix::identity(4).neg());
    assert_eq!(w.centralizer(405).unwrap().len(), WEYL_ORDER);
}

#[test]
fn products_of_indexed_elements() {
    let w = weyl();
    assert_eq!(w.product(405, 105).unwrap(), 1048);
    assert_eq!(w.product(105, 403).unwrap(), 1050);
    assert_eq!(w.product(15, 15).unwrap(), 1075);
    assert_eq!(w.inverse(748).unwrap(), 748);
}

fn expected_fixed(j: usize) -> AbelianGroupDescriptor {
    let (rank, orders): (usize, &[i64]) = match j {
        1 => (1, &[2]),
        2 => (0, &[2]),
        3 => (0, &[4, 2]),
        4 | 8 | 9 | 30 => (1, &[]),
        7 | 28 | 56 | 114 => (2, &[]),
        10 | 78 => (0, &[]),
        14 | 106 | 110 => (0, &[2, 2]),
        15 => (0, &[3, 3]),
        42 | 105 => (1, &[2, 2]),
        55 | 142 => (3, &[]),
        103 => (2, &[2]),
        104 => (1, &[2]),
        405 => (0, &[2, 2, 2, 2]),
        748 => (4, &[]),
        _ => unreachable!(),
    };
    AbelianGroupDescriptor::from_cyclic_orders(rank, orders)
}

#[test]
fn fixed_subgroups_of_all_classes() {
    let w = weyl();
    for j in CLASS_REPRESENTATIVES {
        assert_eq!(w.fixed_subgroup_structure(j).unwrap(), expected_fixed(j), "sigma_{j}");
    }
    assert_eq!(w.fixed_subgroup_structure(3).unwrap().multiplicative(), "Z2 x Z4");
    assert_eq!(w.fixed_subgroup_structure(105).unwrap().multiplicative(), "F* x Z2^2");
}

/// Sample members of the generic fixed families, parametrized by
/// (x, y, z, u) with any constraints already imposed.
fn generic_points(j: usize) -> Vec<TorusPoint> {
    let p = |a: [CycNum; 4]| TorusPoint(a);
    let (x, y, zz, u) = (z(5), z(7), z(11), z(13));
    let (m1, w, i) = (CycNum::int(-1), CycNum::omega(), CycNum::i());
    let one = CycNum::ONE;
    let inv = |a: CycNum| a.inv();
    match j {
        1 => vec![p([u * u * m1, m1, m1, u])],
        2 => vec![p([m1, m1, m1, one])],
        3 => vec![p([i * i * m1, m1, i * i, i]), p([one, one, m1 * m1, m1])],
        4 => vec![p([x, inv(x), one, inv(x)])],
        7 => vec![p([u * u * inv(y * y * y), y, y, u])],
        8 => vec![p([x, x, x, x * x])],
        // u^{2/3} realized by u = s^3
        9 => vec![p([one, x * x, x * x, x * x * x])],
        14 => vec![p([m1, m1, m1, one]), p([one, one, one, m1])],
        15 => vec![p([w, one, w * w, w * w]), p([one, w, w, one])],
        28 => vec![p([x, inv(x), zz, inv(x)])],
        30 => vec![p([one, one, zz, one])],
        42 => vec![p([m1, m1, zz, m1]), p([one, one, zz, one])],
        55 => vec![p([x, y, y, u])],
        56 => vec![p([x, y, y, x * y])],
        103 => vec![p([x, m1, m1, u])],
        104 => vec![p([x, m1, m1, m1 * x])],
        105 => vec![p([m1, m1, one, u]), p([m1, one, m1, u])],
        106 => vec![p([m1, m1, one, m1])],
        110 => vec![p([m1, m1, m1, m1])],
        114 => vec![p([x, one, zz, one])],
        142 => vec![p([x, one, zz, u])],
        748 => vec![p([x, y, zz, u])],
        _ => vec![],
    }
}

#[test]
fn generic_fixed_elements_are_fixed() {
    let w = weyl();
    for j in CLASS_REPRESENTATIVES {
        for t in generic_points(j) {
            assert_eq!(w.torus_action(j, &t).unwrap(), t, "sigma_{j} on {t}");
        }
    }
}

#[test]
fn stabilizers_of_special_points() {
    let w = weyl();
    let (om, o2) = (CycNum::omega(), CycNum::omega() * CycNum::omega());
    let one = CycNum::ONE;
    let a15 = [TorusPoint([om, one, o2, o2]), TorusPoint([one, om, om, one])];
    assert_eq!(w.stabilizer_indices(&a15), vec![15, 748, 1075]);
    let m1 = CycNum::int(-1);
    let a105 = [TorusPoint([m1, one, m1, one]), TorusPoint([one, m1, m1, one]), TorusPoint([one, one, one, z(1)])];
    assert_eq!(w.stabilizer_indices(&a105), vec![105, 748]);
    assert_eq!(w.stabilizer_indices(&[TorusPoint::identity()]).len(), WEYL_ORDER);
}

fn is_monomial_on_roots(m: &ExactMatrix, sigma: &IntMatrix) -> bool {
    (4..F4_DIM).all(|k| {
        let target = root_position(act_on_root(sigma, basis_root(k).unwrap())).unwrap();
        (0..F4_DIM).all(|r| (r == target) != m[(r, k)].is_zero())
    })
}

#[test]
fn lifts_of_class_representatives() {
    let w = weyl();
    for j in CLASS_REPRESENTATIVES {
        let f = lift(j).unwrap();
        let sigma = w.element(j).unwrap();
        assert!(is_monomial_on_roots(&f.matrix, sigma), "sigma_{j}~ permutes root spaces");
    }
    assert!(lift(748).unwrap().matrix.is_identity());
    assert_eq!(lift(3).unwrap().order(64), Some(8));
    assert_eq!(lift(405).unwrap().order(64), Some(2));
    assert_eq!(lift(15).unwrap().order(64), Some(3));
}

fn is_sign_torus(m: &ExactMatrix) -> bool {
    let (one, minus) = (CycNum::ONE, CycNum::int(-1));
    m.nnz() == F4_DIM && (0..F4_DIM).all(|k| m[(k, k)] == one || m[(k, k)] == minus)
}

#[test]
fn lifts_of_powers_of_sigma_15_agree_up_to_signs() {
    let s = lift(15).unwrap();
    assert!(s.pow(3).matrix.is_identity());
    let d = s.pow(2).compose(&lift(1075).unwrap().inverse().unwrap());
    assert!(is_sign_torus(&d.matrix));
}

#[test]
fn every_lift_normalizes_the_lift_of_minus_identity() {
    // conjugation moves sigma_405~ only by an element of T^{sigma_405}
    let c = lift(405).unwrap();
    let ci = c.inverse().unwrap();
    let mut exact = 0;
    for j in 1..=WEYL_ORDER {
        let f = lift(j).unwrap();
        let d = f.compose(&c).compose(&f.inverse().unwrap()).compose(&ci);
        assert!(is_sign_torus(&d.matrix), "sigma_{j}~");
        exact += d.matrix.is_identity() as usize;
    }
    assert_eq!(exact, 96);
}

#[test]
fn lift_of_product_differs_from_product_of_lifts_by_torus() {
    let w = weyl();
    for (a, b) in [(1, 2), (3, 15), (105, 403), (405, 105), (28, 748), (114, 9)] {
        let ab = w.product(a, b).unwrap();
        // row-vector matrices compose in reverse: sigma_a sigma_b acts as b after a
        let d = lift(b).unwrap().compose(&lift(a).unwrap()).compose(&lift(ab).unwrap().inverse().unwrap());
        assert_eq!(d.matrix.nnz(), F4_DIM, "{a} {b}");
        assert!((0..F4_DIM).all(|k| !d.matrix[(k, k)].is_zero()));
    }
}

#[test]
fn lift_conjugates_torus_by_inverse_weyl_action() {
    // with row-vector matrices, sigma~ t' sigma~^-1 is sigma^-1 . t'
    let w = weyl();
    let t = TorusPoint([z(1), z(2), z(5), z(7)]);
    for j in [1, 2, 3, 15, 105, 405] {
        let f = lift(j).unwrap();
        let lhs = f.compose(&t.map()).compose(&f.inverse().unwrap());
        let rhs = w.torus_action(w.inverse(j).unwrap(), &t).unwrap().map();
        assert_eq!(lhs.matrix, rhs.matrix, "sigma_{j}");
    }
}

#[test]
fn fixed_torus_generators_are_fixed() {
    let w = weyl();
    for j in CLASS_REPRESENTATIVES {
        for t in fixed_torus_generators(j).unwrap() {
            assert_eq!(w.torus_action(j, &t).unwrap(), t, "sigma_{j}");
        }
    }
}

#[test]
fn bad_index_is_reported() {
    assert_eq!(weyl().element(0).unwrap_err(), WeylError::BadIndex(0));
    assert_eq!(weyl().element(1153).unwrap_err(), WeylError::BadIndex(1153));
}

#[test]
fn order_lemma_for_finite_fixed_subgroups() {
    let samples: Vec<TorusPoint> =
        (0..10).map(|k| TorusPoint::from_exponents([k, 2 * k + 1, 5 * k + 3, 7 * k + 2])).collect();
    for j in CLASS_REPRESENTATIVES {
        if weyl().fixed_subgroup_structure(j).unwrap().is_finite() {
            assert!(order_lemma_holds(j, &samples).unwrap(), "sigma_{j}");
        }
    }
    // an infinite fixed subgroup breaks the condition
    assert!(!order_lemma_holds(748, &samples).unwrap());
}

#[test]
fn appendix_rows_agree_on_the_torus() {
    let rows = appendix_table().unwrap();
    for r in &rows {
        assert!(r.fixes_u, "sigma_{}", r.j);
    }
    let exact: Vec<usize> = rows.iter().filter(|r| r.exact()).map(|r| r.j).collect();
    assert_eq!(exact, vec![94, 103]);
    let modulo: Vec<usize> = rows.iter().filter(|r| r.agrees_modulo_torus()).map(|r| r.j).collect();
    assert_eq!(modulo, vec![94, 103, 468, 491]);
}

#[test]
fn psi_is_not_in_the_searched_set() {
    assert!(search_psi().unwrap().is_none());
}
