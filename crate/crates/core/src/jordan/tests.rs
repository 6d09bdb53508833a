use proptest::prelude::*;

use super::fixtures::{albert_fixtures, fixture, h3f_fixtures, AlbertResolver, H3fResolver};
use super::*;
use crate::algcore::{is_automorphism, AlgebraMap};
use crate::exactmath::{CycNum, ExactMatrix};
use crate::gradings::{corrected_fixture, validate_fixture, GradingType};
use crate::octonion::{f0, g2_torus, z23_generators, Octonion, BASIS_NAMES, U, V};

fn j() -> &'static crate::algcore::AlgebraTable {
    build_albert()
}

fn add(x: &[CycNum], y: &[CycNum]) -> Vec<CycNum> {
    x.iter().zip(y).map(|(&a, &b)| a + b).collect()
}

fn scale(c: CycNum, x: &[CycNum]) -> Vec<CycNum> {
    x.iter().map(|&a| c * a).collect()
}

fn zero() -> Vec<CycNum> {
    vec![CycNum::ZERO; DIM]
}

#[test]
fn idempotent_relations() {
    for i in 1..=3 {
        assert_eq!(j().mul(&idempotent(i), &idempotent(i)), idempotent(i));
        for k in (1..=3).filter(|&k| k != i) {
            assert_eq!(j().mul(&idempotent(i), &idempotent(k)), zero());
        }
        for a in 0..8 {
            let o = Octonion::basis(a);
            for k in 1..=3 {
                let expected = if k == i { zero() } else { scale(CycNum::rational(1, 2), &embed(k, &o)) };
                assert_eq!(j().mul(&idempotent(i), &embed(k, &o)), expected);
            }
        }
    }
}

#[test]
fn same_slot_products_use_the_polar_form() {
    // f(a, b) from the octonion norm, independently of the matrix model
    for i in 1..=3 {
        let (jj, kk) = (i % 3 + 1, (i + 1) % 3 + 1);
        let ek = add(&idempotent(jj), &idempotent(kk));
        for a in 0..8 {
            for b in 0..8 {
                let (x, y) = (Octonion::basis(a), Octonion::basis(b));
                let f = (x + y).norm() - x.norm() - y.norm();
                let expected = scale(f * CycNum::rational(1, 2), &ek);
                assert_eq!(j().mul(&embed(i, &x), &embed(i, &y)), expected);
            }
        }
    }
    let u1v1 = j().mul(&embed(1, &Octonion::basis(U[0])), &embed(1, &Octonion::basis(V[0])));
    assert_eq!(u1v1, scale(CycNum::rational(-1, 2), &add(&idempotent(2), &idempotent(3))));
}

#[test]
fn cross_slot_products_follow_the_conjugate_rule() {
    // a^(i) b^(j) = 1/2 (conj(b) conj(a))^(k) for cyclic (i, j, k)
    for (i, jj, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        for a in 0..8 {
            for b in 0..8 {
                let (x, y) = (Octonion::basis(a), Octonion::basis(b));
                let expected = scale(CycNum::rational(1, 2), &embed(k, &y.conj().mul(&x.conj())));
                assert_eq!(j().mul(&embed(i, &x), &embed(jj, &y)), expected);
            }
        }
    }
}

#[test]
fn algebra_is_unital_commutative_jordan() {
    assert!(j().check_flavor().is_ok());
    let one: Vec<CycNum> = j().unit().unwrap().into_iter().map(CycNum::from_q).collect();
    assert_eq!(one, unit());
    assert_eq!(j().basis_names()[11], "e2^2");
    assert_eq!(j().basis_names()[13], "-u1^2");
}

fn cubic_residual(x: &[CycNum]) -> Vec<CycNum> {
    let x2 = jordan_product(x, x);
    let x3 = jordan_product(x, &x2);
    let mut r = add(&x3, &scale(-trace(x), &x2));
    r = add(&r, &scale(quadratic(x), x));
    add(&r, &scale(-norm(x), &unit()))
}

#[test]
fn basis_elements_satisfy_the_cubic_equation() {
    for k in 0..DIM {
        let mut e = zero();
        e[k] = CycNum::ONE;
        assert!(cubic_residual(&e).iter().all(CycNum::is_zero), "basis slot {k}");
    }
    assert_eq!(norm(&unit()), CycNum::ONE);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn elements_satisfy_the_cubic_equation(v in proptest::collection::vec(-3i64..=3, DIM)) {
        let x: Vec<CycNum> = v.into_iter().map(CycNum::int).collect();
        prop_assert!(cubic_residual(&x).iter().all(CycNum::is_zero));
    }

    #[test]
    fn torus_elements_are_automorphisms(e in proptest::collection::vec(0i64..24, 4)) {
        let z: Vec<CycNum> = e.iter().map(|&k| CycNum::zeta(k)).collect();
        let t = albert_torus(z[0], z[1], z[2], z[3]);
        prop_assert!(is_automorphism(j(), &t));
    }

    #[test]
    fn torus_weights_are_additive(a in 0usize..DIM, b in 0usize..DIM) {
        // nonzero products of basis vectors have the sum of the weights
        for &(k, _) in j().basis_product(a, b) {
            for s in 0..4 {
                prop_assert_eq!(TORUS_WEIGHTS[k][s], TORUS_WEIGHTS[a][s] + TORUS_WEIGHTS[b][s]);
            }
        }
    }
}

#[test]
fn torus_identity_and_twelfth_entry() {
    let one = CycNum::ONE;
    assert!(albert_torus(one, one, one, one).matrix.is_identity());
    let d = CycNum::zeta(5);
    let t = albert_torus(CycNum::zeta(1), CycNum::zeta(2), CycNum::zeta(7), d);
    assert_eq!(t.matrix[(11, 11)], d);
    let w = CycNum::omega();
    for t in [albert_torus(w * w, w * w, w * w, one), albert_torus(w * w, w, one, w * w)] {
        assert!(is_automorphism(j(), &t));
        assert_eq!(t.order(10), Some(3));
    }
}

#[test]
fn hat_is_functorial_and_fixes_idempotents() {
    let maps = [f0(), g2_torus(CycNum::zeta(1), CycNum::zeta(5))];
    for f in &maps {
        let h = hat_extend(f).unwrap();
        assert!(is_automorphism(j(), &h));
        for i in 1..=3 {
            assert_eq!(h.apply(&idempotent(i)), idempotent(i));
        }
    }
    let fg = maps[0].compose(&maps[1]);
    let lhs = hat_extend(&fg).unwrap();
    let rhs = hat_extend(&maps[0]).unwrap().compose(&hat_extend(&maps[1]).unwrap());
    assert_eq!(lhs.matrix, rhs.matrix);
    assert!(hat_extend(&AlgebraMap::identity(8)).unwrap().matrix.is_identity());
    let bad = AlgebraMap::new("2id", ExactMatrix::scalar(8, CycNum::int(2)));
    assert!(matches!(hat_extend(&bad), Err(JordanError::NotAutomorphism(_))));
}

#[test]
fn hat_and_tilde_commute() {
    let mut hats: Vec<AlgebraMap> = z23_generators().iter().map(|f| hat_extend(f).unwrap()).collect();
    hats.push(hat_extend(&g2_torus(CycNum::zeta(3), CycNum::zeta(2))).unwrap());
    let half = CycNum::rational(1, 2);
    let tildes = [
        tau(-CycNum::ONE, CycNum::ZERO),
        tau(-half, CycNum::sqrt3() * half),
        tau(CycNum::ZERO, CycNum::ONE),
        tau_root(CycNum::zeta(3)),
        in_s(),
    ];
    for t in &tildes {
        assert!(is_automorphism(j(), t));
        for h in &hats {
            assert!(h.commutes_with(t), "{} and {}", h.name, t.name);
        }
    }
}

#[test]
fn so3_extension_checks_its_input() {
    let id: Scalar3 = std::array::from_fn(|i| std::array::from_fn(|k| if i == k { CycNum::ONE } else { CycNum::ZERO }));
    assert!(so3_extend("id", &id).unwrap().matrix.is_identity());
    let mut bad = id;
    bad[0][0] = -CycNum::ONE;
    assert_eq!(so3_extend("bad", &bad), Err(JordanError::NotSpecialOrthogonal));
    assert!(is_special_orthogonal(&so3_swap()));
}

#[test]
fn theta_cycles_the_idempotents() {
    let t = theta();
    assert!(is_automorphism(j(), &t));
    assert_eq!(t.order(10), Some(3));
    assert_eq!(t.apply(&idempotent(1)), idempotent(2));
    let a = Octonion::basis(U[1]);
    assert_eq!(t.apply(&embed(3, &a)), embed(1, &a));
}

#[test]
fn triality_extension_is_an_automorphism() {
    let (phi, _) = fixtures::z3_cube_third_generator().unwrap();
    assert!(is_automorphism(j(), &phi));
    assert_eq!(phi.order(30), Some(3));
    let gens = z3_cube_generators().unwrap();
    for a in &gens {
        for b in &gens {
            assert!(a.commutes_with(b));
        }
    }
}

#[test]
fn h3f_is_a_six_dimensional_jordan_algebra() {
    let h = build_h3f();
    assert_eq!(h.dim(), 6);
    assert!(h.check_flavor().is_ok());
    assert_eq!(h3f_basis().len(), 6);
    assert!(h3f_coords(&embed(1, &Octonion::basis(U[0]))).is_none());
}

#[test]
fn h3f_grading_types() {
    let expected: [(&str, &[usize]); 5] =
        [("gr1", &[4, 1]), ("gr2", &[0, 1, 0, 1]), ("gr3", &[0, 3]), ("gr4", &[2, 2]), ("gr5", &[3, 0, 1])];
    let gs = h3f_gradings().unwrap();
    for ((name, g), (en, ty)) in gs.iter().zip(expected) {
        assert_eq!(*name, en);
        assert_eq!(g.grading_type(), GradingType(ty.to_vec()), "{name}");
        assert!(g.check_closure(build_h3f()).is_ok());
    }
}

#[test]
fn h3f_fixtures_match_the_computed_gradings() {
    let gs = h3f_gradings().unwrap();
    for (name, g) in &gs {
        let f = fixture(h3f_fixtures(), name).unwrap();
        let report = validate_fixture(f, build_h3f(), &H3fResolver);
        assert!(report.closed, "{name}: {:?}", report.failure);
        let fg = f.to_grading(build_h3f(), &H3fResolver).unwrap();
        assert!(fg.same_decomposition(g), "{name}");
    }
    let iso = fixture(h3f_fixtures(), "gr5iso").unwrap();
    let g = iso.to_grading(build_h3f(), &H3fResolver).unwrap();
    assert!(g.check_closure(build_h3f()).is_ok());
    assert_eq!(g.grading_type(), GradingType(vec![3, 0, 1]));
}

#[test]
fn resolver_names_every_octonion() {
    for (k, n) in BASIS_NAMES.iter().enumerate() {
        let atom = crate::gradings::spans::Atom::Octonion { terms: vec![(1, n.to_string())], slot: 2 };
        use crate::gradings::AtomResolver;
        assert_eq!(AlbertResolver.resolve(&atom).unwrap(), embed(2, &Octonion::basis(k)));
    }
}

fn preset_types() -> Vec<(&'static str, Vec<usize>)> {
    vec![
        ("nt1", vec![25, 1]),
        ("nt2", vec![7, 8, 0, 1]),
        ("nt3", vec![21, 3]),
        ("nt4", vec![23, 2]),
        ("nt5", vec![24, 0, 1]),
        ("grad1", vec![0, 0, 7, 0, 0, 1]),
        ("coar", vec![0, 12, 1]),
        ("ztrescubo", vec![27]),
    ]
}

#[test]
fn presets_have_the_expected_types_and_match_fixtures() {
    let presets = albert_grading_presets().unwrap();
    for (p, (name, ty)) in presets.iter().zip(preset_types()) {
        assert_eq!(p.name, name);
        for f in &p.automorphisms {
            assert!(is_automorphism(j(), f), "{name}: {}", f.name);
        }
        let g = crate::gradings::grading_from_automorphisms(j(), &p.automorphisms).unwrap();
        assert_eq!(g.grading_type(), GradingType(ty.clone()), "{name}");
        assert!(g.check_closure(j()).is_ok());
        let report = validate_fixture(&p.fixture, j(), &AlbertResolver);
        let f = if report.closed { p.fixture.clone() } else { corrected_fixture(&p.fixture, &report).unwrap() };
        let fg = f.to_grading(j(), &AlbertResolver).unwrap();
        assert_eq!(fg.grading_type(), GradingType(ty), "{name} fixture");
        assert!(fg.same_decomposition(&g), "{name} fixture spans");
    }
}

#[test]
fn transcription_errata_are_flagged() {
    for f in albert_fixtures() {
        let r = validate_fixture(f, j(), &AlbertResolver);
        match f.name.as_str() {
            "ztrescubo" => {
                assert!(!r.closed);
                assert!(r.errata.iter().any(|e| e.printed == "e2^3 - u1^2 + v1^2" && e.corrected.contains("v1^1")));
            }
            "nt3" => {
                assert!(!r.closed);
                assert!(r.errata.iter().any(|e| e.corrected.contains("u1+v1")), "{:?}", r.errata);
            }
            _ => assert!(r.closed, "{}: {:?}", f.name, r.failure),
        }
    }
}
