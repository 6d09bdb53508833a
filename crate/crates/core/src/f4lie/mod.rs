//! f4 = Der(J) in the basis B' of Cartan elements and root vectors
//! b_k = [R_{w_i}, R_{w_j}], the torus weights, the transfer Ad(f) and the
//! Cartan Z^4 grading.

use std::sync::OnceLock;

use thiserror::Error;

mod fixtures;

pub use fixtures::{f4_fixtures, F4Resolver, F4_FIXTURES};

use crate::algcore::{commutator, lie_from_matrices, right_mult, AlgError, AlgebraMap, AlgebraTable, MatrixLieAlgebra};
use crate::exactmath::{CycNum, ExactMatrix, IntMatrix, QMatrix, Q};
use crate::gradings::{
    grading_from_components, toral_report, Component, Grading, Label, Provenance, Slot, ToralReport,
};
use crate::jordan::{build_albert, TORUS_WEIGHTS};

pub const F4_DIM: usize = 52;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum F4Error {
    #[error("the 52 chosen derivations are linearly dependent")]
    DependentBasis,
    #[error("b{0} vanishes")]
    ZeroRootVector(usize),
    #[error("b{0} is not a root vector for the Cartan span")]
    NotRootVector(usize),
    #[error("root of b{0} is {1:?}, expected {2:?}")]
    UnexpectedRoot(usize, [i64; 4], [i64; 4]),
}

/// b_k = [R_{w_i}, R_{w_j}] with (i, j) 1-based indices into B.
pub const ROOT_PAIRS: [(usize, usize); 48] = [
    (1, 4),
    (1, 13),
    (6, 7),
    (8, 9),
    (2, 21),
    (1, 19),
    (7, 8),
    (1, 17),
    (2, 27),
    (5, 11),
    (2, 25),
    (1, 11),
    (5, 9),
    (1, 9),
    (4, 11),
    (5, 7),
    (1, 7),
    (4, 9),
    (2, 23),
    (4, 7),
    (1, 15),
    (9, 11),
    (7, 11),
    (7, 9),
    (1, 5),
    (1, 12),
    (9, 10),
    (6, 11),
    (2, 20),
    (1, 16),
    (10, 11),
    (1, 14),
    (2, 24),
    (4, 8),
    (2, 22),
    (1, 8),
    (4, 6),
    (1, 6),
    (5, 8),
    (4, 10),
    (1, 10),
    (5, 6),
    (2, 26),
    (5, 10),
    (1, 18),
    (6, 8),
    (8, 10),
    (6, 10),
];

/// Cartan elements c[b_a, b_b], in order t_{a1}, ..., t_{a4}.
pub const CARTAN_PAIRS: [(usize, usize, i64); 4] = [(4, 28, 4), (27, 3, 4), (26, 2, 8), (25, 1, 8)];

/// Roots of b_1..b_24 in the simple-root basis; b_{k+24} has the negative.
pub const POSITIVE_ROOT_ORDER: [[i64; 4]; 24] = [
    [0, 0, 0, 1],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 1, 1],
    [0, 1, 1, 0],
    [1, 1, 0, 0],
    [1, 1, 1, 0],
    [0, 1, 1, 1],
    [0, 1, 2, 0],
    [1, 1, 1, 1],
    [0, 1, 2, 1],
    [1, 1, 2, 0],
    [1, 1, 2, 1],
    [0, 1, 2, 2],
    [1, 2, 2, 0],
    [1, 2, 2, 1],
    [1, 1, 2, 2],
    [1, 2, 3, 1],
    [1, 2, 2, 2],
    [1, 2, 3, 2],
    [1, 2, 4, 2],
    [1, 3, 4, 2],
    [2, 3, 4, 2],
];

/// The printed list of positive roots, in its display order.
pub const POSITIVE_ROOTS: [[i64; 4]; 24] = [
    [0, 0, 0, 1],
    [0, 1, 1, 1],
    [1, 2, 2, 1],
    [0, 0, 1, 0],
    [0, 1, 2, 0],
    [1, 1, 2, 2],
    [0, 1, 0, 0],
    [1, 1, 1, 1],
    [1, 2, 3, 1],
    [1, 0, 0, 0],
    [0, 1, 2, 1],
    [1, 2, 2, 2],
    [0, 0, 1, 1],
    [1, 1, 2, 0],
    [1, 2, 3, 2],
    [0, 1, 1, 0],
    [1, 1, 2, 1],
    [1, 2, 4, 2],
    [1, 1, 0, 0],
    [0, 1, 2, 2],
    [1, 3, 4, 2],
    [1, 1, 1, 0],
    [1, 2, 2, 0],
    [2, 3, 4, 2],
];

/// Cartan matrix of (a1, a2, a3, a4).
pub const CARTAN_MATRIX: [[i64; 4]; 4] = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]];

/// X, Y, Z, U as exponent vectors in (x, y, z, u):
/// X = u^2/(x y^2 z), Y = y z, Z = 1/u, U = x.
pub const SIMPLE_ROOT_WEIGHTS: [[i64; 4]; 4] = [[-1, -2, -1, 2], [0, 1, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0]];

/// Exponents in (x, y, z, u) of the character X^m1 Y^m2 Z^m3 U^m4.
pub fn root_to_weight(m: [i64; 4]) -> [i64; 4] {
    let mut w = [0; 4];
    for (k, mk) in m.iter().enumerate() {
        for s in 0..4 {
            w[s] += mk * SIMPLE_ROOT_WEIGHTS[k][s];
        }
    }
    w
}

fn weight_inverse() -> &'static IntMatrix {
    static M: OnceLock<IntMatrix> = OnceLock::new();
    M.get_or_init(|| {
        // columns are the weights of X, Y, Z, U
        IntMatrix::from_array(SIMPLE_ROOT_WEIGHTS).transpose().unimodular_inverse().expect("unimodular change of basis")
    })
}

/// Inverse of [`root_to_weight`].
pub fn weight_to_root(w: [i64; 4]) -> [i64; 4] {
    let m = weight_inverse().mul_vec(&w);
    [m[0], m[1], m[2], m[3]]
}

/// Z^4 label of each basis element of J.
pub fn albert_roots() -> [[i64; 4]; 27] {
    std::array::from_fn(|i| weight_to_root(TORUS_WEIGHTS[i]))
}

pub fn is_root(m: [i64; 4]) -> bool {
    POSITIVE_ROOTS.iter().any(|r| *r == m || r.map(|x| -x) == m)
}

/// Root of basis element k of B' (0..52); None for the Cartan part.
pub fn basis_root(k: usize) -> Option<[i64; 4]> {
    match k {
        0..=3 => None,
        4..=27 => Some(POSITIVE_ROOT_ORDER[k - 4]),
        _ => Some(POSITIVE_ROOT_ORDER[k - 28].map(|x| -x)),
    }
}

/// Position in B' of the root vector for `m`.
pub fn root_position(m: [i64; 4]) -> Option<usize> {
    (4..F4_DIM).find(|&k| basis_root(k) == Some(m))
}

pub fn basis_names() -> Vec<String> {
    (1..=4).map(|k| format!("h{k}")).chain((1..=48).map(|k| format!("b{k}"))).collect()
}

/// f4 with the basis B' and the coordinates of every [R_p, R_q].
#[derive(Debug)]
pub struct F4Basis {
    pub lie: MatrixLieAlgebra,
    /// [R_{w_p}, R_{w_q}] (0-based p, q) in B' coordinates.
    pub pair_coords: Vec<Vec<Vec<(usize, Q)>>>,
}

impl F4Basis {
    pub fn table(&self) -> &AlgebraTable {
        &self.lie.table
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }
}

fn right_mults() -> Vec<QMatrix> {
    let j = build_albert();
    (0..27).map(|i| right_mult(j, &j.unit_vector(i))).collect()
}

fn root_of_pair(i: usize, jdx: usize) -> [i64; 4] {
    let w: [i64; 4] = std::array::from_fn(|s| TORUS_WEIGHTS[i][s] + TORUS_WEIGHTS[jdx][s]);
    weight_to_root(w)
}

/// Builds B', checking that every b_k is a nonzero root vector for the
/// expected root and that the 52 elements are independent.
pub fn build_f4_basis() -> Result<F4Basis, F4Error> {
    let r = right_mults();
    let mut roots_b: Vec<QMatrix> = Vec::with_capacity(48);
    for (k, &(i, jdx)) in ROOT_PAIRS.iter().enumerate() {
        let b = commutator(&r[i - 1], &r[jdx - 1]);
        if b.is_zero() {
            return Err(F4Error::ZeroRootVector(k + 1));
        }
        let got = root_of_pair(i - 1, jdx - 1);
        let want = basis_root(k + 4).expect("root vector");
        if got != want {
            return Err(F4Error::UnexpectedRoot(k + 1, got, want));
        }
        roots_b.push(b);
    }
    let cartan: Vec<QMatrix> =
        CARTAN_PAIRS.iter().map(|&(a, b, c)| commutator(&roots_b[a - 1], &roots_b[b - 1]).scale(Q::int(c))).collect();
    // root-vector property against the Cartan span
    for (k, b) in roots_b.iter().enumerate() {
        for h in &cartan {
            let c = commutator(h, b);
            if !is_multiple(&c, b) {
                return Err(F4Error::NotRootVector(k + 1));
            }
        }
    }
    let basis: Vec<QMatrix> = cartan.into_iter().chain(roots_b).collect();
    let lie = lie_from_matrices("F4", basis, basis_names()).map_err(|_| F4Error::DependentBasis)?;
    let mut pair_coords = vec![vec![Vec::new(); 27]; 27];
    for p in 0..27 {
        for q in p + 1..27 {
            let c = commutator(&r[p], &r[q]);
            let v = lie.coordinates.coords_q(&c).ok_or(F4Error::DependentBasis)?;
            let sparse: Vec<(usize, Q)> =
                v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, &x)| (k, x)).collect();
            pair_coords[q][p] = sparse.iter().map(|&(k, x)| (k, -x)).collect();
            pair_coords[p][q] = sparse;
        }
    }
    Ok(F4Basis { lie, pair_coords })
}

/// Scalar c with a = c b, if any.
fn multiple_of(a: &QMatrix, b: &QMatrix) -> Option<Q> {
    let (ra, rb) = (a.row_vecs().concat(), b.row_vecs().concat());
    let k = rb.iter().position(|x| !x.is_zero())?;
    let c = ra[k] / rb[k];
    ra.iter().zip(&rb).all(|(&x, &y)| x == c * y).then_some(c)
}

fn is_multiple(a: &QMatrix, b: &QMatrix) -> bool {
    a.is_zero() || multiple_of(a, b).is_some()
}

/// The cached basis B'.
pub fn f4() -> &'static F4Basis {
    static F: OnceLock<F4Basis> = OnceLock::new();
    F.get_or_init(|| build_f4_basis().expect("the root-vector pairs give a basis of f4"))
}

/// Pairs (i, j), i < j, 1-based, with [R_{w_i}, R_{w_j}] != 0.
pub fn nonzero_pairs() -> Vec<(usize, usize)> {
    let c = &f4().pair_coords;
    let mut out = Vec::new();
    for p in 0..27 {
        for q in p + 1..27 {
            if !c[p][q].is_empty() {
                out.push((p + 1, q + 1));
            }
        }
    }
    out
}

/// Value alpha_i(h_j) of the simple roots on the Cartan basis.
pub fn simple_root_values() -> [[Q; 4]; 4] {
    let t = f4().table();
    let mut out = [[Q::ZERO; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        let simple = root_position(std::array::from_fn(|k| (k == i) as i64)).expect("simple root");
        for (jdx, v) in row.iter_mut().enumerate() {
            // [h_j, x] = alpha(h_j) x
            let br = t.basis_product(jdx, simple);
            *v = br.iter().find(|(k, _)| *k == simple).map_or(Q::ZERO, |(_, c)| *c);
        }
    }
    out
}

/// Cartan integers 2 (a_i, a_j) / (a_j, a_j), read from the action of the
/// Cartan elements, which are proportional to the coroots.
pub fn computed_cartan_matrix() -> [[i64; 4]; 4] {
    let v = simple_root_values();
    std::array::from_fn(|i| {
        std::array::from_fn(|jdx| {
            let c = Q::int(2) * v[i][jdx] / v[jdx][jdx];
            assert!(c.is_integer(), "Cartan entries are integers");
            c.numer()
        })
    })
}

/// Killing form k(x, y) = tr(ad x ad y) on basis elements.
pub fn killing_form(a: usize, b: usize) -> Q {
    let t = f4().table();
    let ad = |x: usize| QMatrix::from_fn(F4_DIM, F4_DIM, |r, c| t.structure_constant(x, c, r));
    ad(a).mul(&ad(b)).trace()
}

/// Ad(f): d -> f d f^-1 on f4 for an automorphism f of J, via
/// f [R_a, R_b] f^-1 = [R_{f(a)}, R_{f(b)}].
pub fn ad_transfer(f: &AlgebraMap) -> AlgebraMap {
    let basis = f4();
    let m = &f.matrix;
    let mut cols: Vec<Vec<CycNum>> = vec![Vec::new(); F4_DIM];
    for (k, &(i, jdx)) in ROOT_PAIRS.iter().enumerate() {
        let (ci, cj) = (m.column(i - 1), m.column(jdx - 1));
        let mut v = vec![CycNum::ZERO; F4_DIM];
        for (p, &a) in ci.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (q, &b) in cj.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for &(s, c) in &basis.pair_coords[p][q] {
                    v[s] += ab.scale(c);
                }
            }
        }
        cols[k + 4] = v;
    }
    let t = basis.table();
    for (h, &(a, b, c)) in CARTAN_PAIRS.iter().enumerate() {
        let br = t.mul(&cols[a + 3], &cols[b + 3]);
        cols[h] = br.into_iter().map(|x| x.scale(Q::int(c))).collect();
    }
    AlgebraMap::new(format!("Ad({})", f.name), ExactMatrix::from_columns(F4_DIM, &cols))
}

/// The torus element of Aut(f4) acting on L_alpha by X^m1 Y^m2 Z^m3 U^m4.
pub fn root_torus(x: CycNum, y: CycNum, z: CycNum, u: CycNum) -> AlgebraMap {
    let d: Vec<CycNum> = (0..F4_DIM)
        .map(|k| match basis_root(k) {
            None => CycNum::ONE,
            Some(m) => x.powi(m[0]) * y.powi(m[1]) * z.powi(m[2]) * u.powi(m[3]),
        })
        .collect();
    AlgebraMap::new(format!("Psi[{x},{y},{z},{u}]"), ExactMatrix::diagonal(&d))
}

/// t'_{xyzu} = Ad(t_{xyzu}) written directly from the torus weights.
pub fn torus_prime(x: CycNum, y: CycNum, z: CycNum, u: CycNum) -> AlgebraMap {
    let d: Vec<CycNum> = (0..F4_DIM)
        .map(|k| match basis_root(k) {
            None => CycNum::ONE,
            Some(m) => {
                let w = root_to_weight(m);
                x.powi(w[0]) * y.powi(w[1]) * z.powi(w[2]) * u.powi(w[3])
            }
        })
        .collect();
    AlgebraMap::new(format!("t'[{x},{y},{z},{u}]"), ExactMatrix::diagonal(&d))
}

fn free_label(m: [i64; 4]) -> Label {
    Label(m.iter().map(|&k| Slot::Free(k)).collect())
}

fn unit_vector(n: usize, k: usize) -> Vec<CycNum> {
    let mut v = vec![CycNum::ZERO; n];
    v[k] = CycNum::ONE;
    v
}

fn group_by_label(n: usize, labels: impl Iterator<Item = [i64; 4]>) -> Vec<Component> {
    let mut comps: Vec<Component> = Vec::new();
    for (k, m) in labels.enumerate() {
        let label = free_label(m);
        match comps.iter_mut().find(|c| c.label == label) {
            Some(c) => c.basis.push(unit_vector(n, k)),
            None => comps.push(Component { label, basis: vec![unit_vector(n, k)] }),
        }
    }
    comps.sort_by(|a, b| a.label.cmp(&b.label));
    comps
}

/// The Z^4 grading of J by the maximal torus, labelled in root coordinates.
pub fn cartan_grading_albert() -> Grading {
    grading_from_components(build_albert(), "cartan", group_by_label(27, albert_roots().into_iter()))
}

/// The root space decomposition of f4.
pub fn cartan_grading_f4() -> Grading {
    let labels = (0..F4_DIM).map(|k| basis_root(k).unwrap_or([0; 4]));
    grading_from_components(f4().table(), "cartan", group_by_label(F4_DIM, labels))
}

/// Torality of the grading of f4 induced by commuting automorphisms of f4.
pub fn f4_toral_report(maps: &[AlgebraMap]) -> Result<ToralReport, AlgError> {
    toral_report(f4().table(), maps, 4)
}

/// Torality of the grading of J induced by commuting automorphisms of J,
/// read on f4 through Ad.
pub fn albert_toral_report(maps: &[AlgebraMap]) -> Result<ToralReport, AlgError> {
    let transferred: Vec<AlgebraMap> = maps.iter().map(ad_transfer).collect();
    f4_toral_report(&transferred)
}

/// Torality of a grading of J or f4 from its generating automorphisms;
/// None when the grading does not record them.
pub fn grading_toral_report(g: &Grading) -> Option<Result<ToralReport, AlgError>> {
    let Provenance::Automorphisms(maps) = &g.provenance else {
        return None;
    };
    match g.dim {
        F4_DIM => Some(f4_toral_report(maps)),
        27 => Some(albert_toral_report(maps)),
        _ => None,
    }
}

#[cfg(test)]
mod tests;
