use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::algcore::{derivation_basis, is_automorphism, is_derivation};
use crate::gradings::GradingType;
use crate::jordan::{albert_torus, fixtures::z3_cube_generators, hat_extend, tau, theta};
use crate::octonion::f0;

/// The printed eigenvalue list of t'_{xyzu}, as exponent vectors in (x,y,z,u).
const PRINTED_EIGENVALUES: [[i64; 4]; 52] = [
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 0, -1],
    [0, 1, 1, 0],
    [-1, -2, -1, 2],
    [1, 0, 0, -1],
    [0, 1, 1, -1],
    [-1, -1, 0, 2],
    [-1, -1, 0, 1],
    [1, 1, 1, -1],
    [0, 1, 1, -2],
    [0, -1, 0, 1],
    [1, 1, 1, -2],
    [-1, -1, 0, 0],
    [0, -1, 0, 0],
    [2, 1, 1, -2],
    [-1, 0, 1, 0],
    [0, 0, 1, 0],
    [1, -1, 0, 0],
    [0, 0, 1, -1],
    [1, 0, 1, 0],
    [1, 0, 1, -1],
    [1, 0, 1, -2],
    [1, 1, 2, -2],
    [0, -1, 1, 0],
    [-1, 0, 0, 0],
    [0, 0, 0, 1],
    [0, -1, -1, 0],
    [1, 2, 1, -2],
    [-1, 0, 0, 1],
    [0, -1, -1, 1],
    [1, 1, 0, -2],
    [1, 1, 0, -1],
    [-1, -1, -1, 1],
    [0, -1, -1, 2],
    [0, 1, 0, -1],
    [-1, -1, -1, 2],
    [1, 1, 0, 0],
    [0, 1, 0, 0],
    [-2, -1, -1, 2],
    [1, 0, -1, 0],
    [0, 0, -1, 0],
    [-1, 1, 0, 0],
    [0, 0, -1, 1],
    [-1, 0, -1, 0],
    [-1, 0, -1, 1],
    [-1, 0, -1, 2],
    [-1, -1, -2, 2],
    [0, 1, -1, 0],
];

#[test]
fn basis_has_dimension_52_and_is_the_derivation_algebra() {
    let b = f4();
    assert_eq!(b.dim(), 52);
    assert!(b.table().check_flavor().is_ok());
    assert_eq!(derivation_basis(build_albert()).len(), 52);
    for d in &b.lie.basis {
        assert!(is_derivation(build_albert(), d));
    }
}

#[test]
fn torus_eigenvalues_match_the_printed_list() {
    let computed: Vec<[i64; 4]> = (0..F4_DIM).map(|k| basis_root(k).map_or([0; 4], root_to_weight)).collect();
    assert_eq!(computed, PRINTED_EIGENVALUES.to_vec());
    assert_eq!(computed.iter().filter(|w| **w == [0; 4]).count(), 4);
}

#[test]
fn eigenvalues_are_characters_of_the_root_system() {
    let mut printed: Vec<[i64; 4]> = PRINTED_EIGENVALUES.to_vec();
    let mut from_roots: Vec<[i64; 4]> = vec![[0; 4]; 4];
    for r in POSITIVE_ROOTS {
        from_roots.push(root_to_weight(r));
        from_roots.push(root_to_weight(r.map(|x| -x)));
    }
    printed.sort();
    from_roots.sort();
    assert_eq!(printed, from_roots);
}

#[test]
fn gnrd_order_lists_the_positive_roots() {
    let a: BTreeSet<[i64; 4]> = POSITIVE_ROOT_ORDER.into_iter().collect();
    let b: BTreeSet<[i64; 4]> = POSITIVE_ROOTS.into_iter().collect();
    assert_eq!(a, b);
    assert_eq!(basis_root(4 + 23), Some([2, 3, 4, 2]));
}

#[test]
fn positive_roots_are_closed_under_reflection() {
    // independent check of the printed list: it is the orbit of the simple
    // roots under the simple reflections, intersected with the positive cone
    let reflect = |x: [i64; 4], i: usize| {
        let c: i64 = (0..4).map(|k| x[k] * CARTAN_MATRIX[k][i]).sum();
        let mut y = x;
        y[i] -= c;
        y
    };
    let mut all: BTreeSet<[i64; 4]> = (0..4).map(|i| std::array::from_fn(|k| (k == i) as i64)).collect();
    loop {
        let next: BTreeSet<[i64; 4]> =
            all.iter().flat_map(|&x| (0..4).map(move |i| reflect(x, i))).chain(all.iter().copied()).collect();
        if next.len() == all.len() {
            break;
        }
        all = next;
    }
    assert_eq!(all.len(), 48);
    let positive: BTreeSet<[i64; 4]> = all.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect();
    assert_eq!(positive, POSITIVE_ROOTS.into_iter().collect());
}

#[test]
fn simple_roots_have_the_printed_cartan_matrix() {
    assert_eq!(computed_cartan_matrix(), CARTAN_MATRIX);
}

#[test]
fn cartan_basis_is_dual_to_the_roots_under_the_normalized_killing_form() {
    // t_{a_i} satisfies a(h) = k(t_{a_i}, h) for k = tr(ad ad) / 18, the
    // form giving long roots squared length 2
    let v = simple_root_values();
    for i in 0..4 {
        for jdx in 0..4 {
            assert_eq!(v[jdx][i], killing_form(i, jdx) / Q::int(18), "alpha_{} on h_{}", jdx + 1, i + 1);
        }
    }
}

#[test]
fn root_spaces_bracket_additively() {
    let t = f4().table();
    for a in 0..F4_DIM {
        for b in 0..F4_DIM {
            let ra = basis_root(a).unwrap_or([0; 4]);
            let rb = basis_root(b).unwrap_or([0; 4]);
            let sum: [i64; 4] = std::array::from_fn(|k| ra[k] + rb[k]);
            for &(c, _) in t.basis_product(a, b) {
                assert_eq!(basis_root(c).unwrap_or([0; 4]), sum);
            }
        }
    }
}

#[test]
fn nonzero_pair_count() {
    let s = nonzero_pairs();
    // products of torus weights over the ordered pairs in S
    assert_eq!(2 * s.len(), 456);
    assert_eq!(s.len(), 228);
}

#[test]
fn ad_of_identity_and_torus() {
    assert!(ad_transfer(&AlgebraMap::identity(27)).matrix.is_identity());
    let (x, y, z, u) = (CycNum::zeta(1), CycNum::zeta(2), CycNum::zeta(5), CycNum::zeta(7));
    let ad = ad_transfer(&albert_torus(x, y, z, u));
    assert_eq!(ad.matrix, torus_prime(x, y, z, u).matrix);
    // b7 spans the root a1 + a2, with eigenvalue XY = u^2/(xy)
    assert_eq!(ad.matrix[(4 + 6, 4 + 6)], u * u * (x * y).inv());
    // and it is the torus element Psi_{XYZU}
    let big_x = u * u * (x * y * y * z).inv();
    let psi = root_torus(big_x, y * z, u.inv(), x);
    assert_eq!(ad.matrix, psi.matrix);
}

#[test]
fn ad_transfer_is_a_homomorphism_into_aut_f4() {
    let maps =
        [hat_extend(&f0()).unwrap(), theta(), tau(CycNum::ZERO, CycNum::ONE), z3_cube_generators().unwrap()[2].clone()];
    for f in &maps {
        let ad = ad_transfer(f);
        assert!(is_automorphism(f4().table(), &ad), "{}", f.name);
        // d -> f d f^-1 computed directly on one derivation
        let d = f4().lie.basis[7].map(CycNum::from_q);
        let direct = f.matrix.mul(&d).mul(&f.matrix.inverse().unwrap());
        let coords = f4().lie.coordinates.coords(&direct).unwrap();
        assert_eq!(coords, ad.matrix.column(7));
    }
    let lhs = ad_transfer(&maps[0].compose(&maps[1]));
    let rhs = ad_transfer(&maps[0]).compose(&ad_transfer(&maps[1]));
    assert_eq!(lhs.matrix, rhs.matrix);
}

#[test]
fn cartan_gradings() {
    let j = cartan_grading_albert();
    assert_eq!(j.grading_type(), GradingType(vec![24, 0, 1]));
    assert!(j.check_closure(build_albert()).is_ok());
    let label = |m: [i64; 4]| Label(m.iter().map(|&k| Slot::Free(k)).collect());
    // u2^(3) is basis slot 6 (0-based), weight z
    let c = j.component(&label([1, 2, 2, 1])).unwrap();
    assert_eq!(c.basis, vec![unit_vector(27, 5 + 1)]);
    assert_eq!(j.zero_dim(), 3);
    let f = cartan_grading_f4();
    assert_eq!(f.grading_type(), GradingType(vec![48, 0, 0, 1]));
    assert!(f.check_closure(f4().table()).is_ok());
    assert_eq!(j.universal_group(build_albert()).unwrap().additive(), "Z^4");
}

#[test]
fn printed_albert_labels() {
    // the listed Z^4 decomposition of J, by basis position; the slots of the
    // second block carry e2, e1, then u1..v3 (up to sign)
    let printed: [[i64; 4]; 24] = [
        [0, 0, 0, 1],
        [0, 0, 0, -1],
        [-1, -1, -2, -1],
        [1, 2, 2, 1],
        [0, -1, -2, -1],
        [1, 1, 2, 1],
        [-1, -2, -2, -1],
        [0, 1, 2, 1],
        [0, 0, -1, 0],
        [0, 0, 1, 0],
        [-1, -1, -1, 0],
        [1, 2, 3, 2],
        [0, -1, -1, 0],
        [1, 1, 1, 0],
        [-1, -2, -3, -2],
        [0, 1, 1, 0],
        [0, 0, -1, -1],
        [0, 0, 1, 1],
        [-1, -1, -1, -1],
        [1, 2, 3, 1],
        [0, -1, -1, -1],
        [1, 1, 1, 1],
        [-1, -2, -3, -1],
        [0, 1, 1, 1],
    ];
    assert_eq!(albert_roots()[3..].to_vec(), printed.to_vec());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn weight_conversion_round_trips(m in proptest::array::uniform4(-4i64..=4)) {
        prop_assert_eq!(weight_to_root(root_to_weight(m)), m);
    }
}
