//! The subalgebra H3(F) spanned by E1, E2, E3, 1^(1), 1^(2), 1^(3), and the
//! gradings induced by SO(3).

use std::sync::OnceLock;

use super::albert::{build_albert, embed, idempotent};
use super::auts::{so3_extend, so3_swap, so3_torus, so3_torus_from_root};
use crate::algcore::{AlgebraMap, AlgebraTable, Flavor};
use crate::exactmath::{CycNum, ExactMatrix, Q};
use crate::gradings::{grading_from_automorphisms, Grading, GradingError};
use crate::octonion::Octonion;

pub const H3F_NAMES: [&str; 6] = ["E1", "E2", "E3", "1^1", "1^2", "1^3"];

/// The six spanning vectors inside J.
pub fn h3f_basis() -> Vec<Vec<CycNum>> {
    let one = Octonion::one();
    vec![idempotent(1), idempotent(2), idempotent(3), embed(1, &one), embed(2, &one), embed(3, &one)]
}

fn cached_basis() -> &'static Vec<Vec<CycNum>> {
    static S: OnceLock<Vec<Vec<CycNum>>> = OnceLock::new();
    S.get_or_init(h3f_basis)
}

/// Coordinates of a vector of J lying in H3(F), relative to the six
/// spanning vectors.
pub fn h3f_coords(v: &[CycNum]) -> Option<Vec<CycNum>> {
    let basis = cached_basis();
    let m = ExactMatrix::from_columns(27, basis);
    // rows where the six columns are independent
    let (_, rows) = m.transpose().rref();
    let sq = ExactMatrix::from_fn(6, 6, |r, c| m[(rows[r], c)]);
    let rhs: Vec<CycNum> = rows.iter().map(|&r| v[r]).collect();
    let x = sq.solve(&rhs)?;
    (m.mul_vec(&x) == v).then_some(x)
}

/// H3(F) as a 6-dimensional Jordan algebra (cached).
pub fn build_h3f() -> &'static AlgebraTable {
    static H: OnceLock<AlgebraTable> = OnceLock::new();
    H.get_or_init(|| {
        let basis = cached_basis();
        let j = build_albert();
        let names = H3F_NAMES.iter().map(|s| s.to_string()).collect();
        AlgebraTable::from_fn("H3F", names, Flavor::CommutativeJordan, |a, b| {
            let p = j.mul(&basis[a], &basis[b]);
            h3f_coords(&p)
                .expect("H3(F) is a subalgebra")
                .into_iter()
                .map(|c| c.as_rational().expect("rational"))
                .collect::<Vec<Q>>()
        })
    })
}

/// Restriction of an automorphism of J leaving H3(F) invariant.
pub fn restrict_to_h3f(f: &AlgebraMap) -> Option<AlgebraMap> {
    let basis = cached_basis();
    let cols = basis.iter().map(|v| h3f_coords(&f.apply(v))).collect::<Option<Vec<_>>>()?;
    Some(AlgebraMap::new(f.name.clone(), ExactMatrix::from_columns(6, &cols)))
}

/// In(p) on J for the torus element with eigenvalue z.
pub fn tau_root(z: CycNum) -> AlgebraMap {
    let (a, b) = so3_torus_from_root(z);
    so3_extend(&format!("tau[{z}]"), &so3_torus(a, b)).expect("torus elements are special orthogonal")
}

pub fn tau(a: CycNum, b: CycNum) -> AlgebraMap {
    so3_extend(&format!("tau[{a},{b}]"), &so3_torus(a, b)).expect("point on the circle")
}

pub fn in_s() -> AlgebraMap {
    so3_extend("In(s)", &so3_swap()).expect("s is special orthogonal")
}

/// Automorphism sets on J inducing the five gradings of H3(F); the first
/// uses the 8th root of unity as a generic torus parameter.
pub fn h3f_generators() -> Vec<(&'static str, Vec<AlgebraMap>)> {
    let one = CycNum::ONE;
    let half = CycNum::rational(1, 2);
    vec![
        ("gr1", vec![tau_root(CycNum::zeta(3))]),
        ("gr2", vec![tau(-one, CycNum::ZERO)]),
        ("gr3", vec![tau(-half, CycNum::sqrt3() * half)]),
        ("gr4", vec![tau(CycNum::ZERO, one)]),
        ("gr5", vec![tau(-one, CycNum::ZERO), in_s()]),
    ]
}

/// The gradings gr1..gr5 on H3(F) from the restricted automorphisms.
pub fn h3f_gradings() -> Result<Vec<(&'static str, Grading)>, GradingError> {
    h3f_generators()
        .into_iter()
        .map(|(name, maps)| {
            let restricted: Vec<AlgebraMap> =
                maps.iter().map(|m| restrict_to_h3f(m).expect("H3(F) is invariant")).collect();
            Ok((name, grading_from_automorphisms(build_h3f(), &restricted)?))
        })
        .collect()
}
