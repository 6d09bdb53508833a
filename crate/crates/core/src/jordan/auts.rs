//! Automorphisms of J: the diagonal torus, extensions from C and from
//! H3(F), the cyclic shift and the maps fixing the three idempotents.

use thiserror::Error;

use super::albert::{build_albert, congruence, embed, embedded_part, DIM, TORUS_WEIGHTS};
use crate::algcore::{is_automorphism, AlgebraMap};
use crate::exactmath::{CycNum, ExactMatrix};
use crate::octonion::{find_monomial_triality, is_cayley_automorphism, Octonion};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JordanError {
    #[error("{0} is not an automorphism")]
    NotAutomorphism(String),
    #[error("matrix is not special orthogonal")]
    NotSpecialOrthogonal,
    #[error("no triality pair found for {0}")]
    NoTriality(String),
}

pub type Scalar3 = [[CycNum; 3]; 3];

/// Diagonal automorphism with entries x^a y^b z^c u^d along the weights of B.
pub fn albert_torus(x: CycNum, y: CycNum, z: CycNum, u: CycNum) -> AlgebraMap {
    let d: Vec<CycNum> =
        TORUS_WEIGHTS.iter().map(|w| x.powi(w[0]) * y.powi(w[1]) * z.powi(w[2]) * u.powi(w[3])).collect();
    AlgebraMap::new(format!("t[{x},{y},{z},{u}]"), ExactMatrix::diagonal(&d))
}

/// Which embedding a^(i) the basis slot `k` of B belongs to, with a.
fn split_basis(k: usize) -> Option<(usize, Octonion)> {
    let mut e = vec![CycNum::ZERO; DIM];
    e[k] = CycNum::ONE;
    let i = match k {
        0..=2 => return None,
        3..=10 => 3,
        11..=18 => 2,
        _ => 1,
    };
    Some((i, embedded_part(i, &e)))
}

/// Linear map permuting the idempotents by `perm` (E_i -> E_perm[i]) and
/// sending a^(i) to the image given by `act`.
fn from_embedded_action(
    name: String,
    perm: [usize; 3],
    act: impl Fn(usize, &Octonion) -> (usize, Octonion),
) -> AlgebraMap {
    let cols: Vec<Vec<CycNum>> = (0..DIM)
        .map(|k| match split_basis(k) {
            None => {
                let mut v = vec![CycNum::ZERO; DIM];
                v[perm[k]] = CycNum::ONE;
                v
            }
            Some((i, a)) => {
                let (j, b) = act(i, &a);
                embed(j, &b)
            }
        })
        .collect();
    AlgebraMap::new(name, ExactMatrix::from_columns(DIM, &cols))
}

fn apply_oct(m: &ExactMatrix, a: &Octonion) -> Octonion {
    Octonion::from_slice(&m.mul_vec(&a.coeffs))
}

/// Map fixing each E_i with a^(i) -> f_i(a)^(i).
pub fn psi(name: &str, f1: &ExactMatrix, f2: &ExactMatrix, f3: &ExactMatrix) -> AlgebraMap {
    let fs = [f1, f2, f3];
    from_embedded_action(name.to_string(), [0, 1, 2], |i, a| (i, apply_oct(fs[i - 1], a)))
}

/// Extension of an automorphism of C acting on every off-diagonal slot.
pub fn hat_extend(f: &AlgebraMap) -> Result<AlgebraMap, JordanError> {
    if !is_cayley_automorphism(f) {
        return Err(JordanError::NotAutomorphism(f.name.clone()));
    }
    Ok(psi(&format!("hat({})", f.name), &f.matrix, &f.matrix, &f.matrix))
}

/// Cyclic shift E_i -> E_{i+1}, a^(i) -> a^(i+1).
pub fn theta() -> AlgebraMap {
    from_embedded_action("theta".into(), [1, 2, 0], |i, a| (i % 3 + 1, *a))
}

fn det3(p: &Scalar3) -> CycNum {
    p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1]) - p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0])
        + p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0])
}

pub fn is_special_orthogonal(p: &Scalar3) -> bool {
    let orth = (0..3).all(|i| {
        (0..3).all(|j| {
            let s = (0..3).fold(CycNum::ZERO, |acc, k| acc + p[i][k] * p[j][k]);
            s == if i == j { CycNum::ONE } else { CycNum::ZERO }
        })
    });
    orth && det3(p) == CycNum::ONE
}

/// x -> p x p^-1 for p in SO(3), with products in M3(C).
pub fn so3_extend(name: &str, p: &Scalar3) -> Result<AlgebraMap, JordanError> {
    if !is_special_orthogonal(p) {
        return Err(JordanError::NotSpecialOrthogonal);
    }
    let cols: Vec<Vec<CycNum>> = (0..DIM)
        .map(|k| {
            let mut e = vec![CycNum::ZERO; DIM];
            e[k] = CycNum::ONE;
            congruence(p, &e)
        })
        .collect();
    Ok(AlgebraMap::new(name, ExactMatrix::from_columns(DIM, &cols)))
}

/// The torus of SO(3): [[1,0,0],[0,a,b],[0,-b,a]] with a^2 + b^2 = 1.
pub fn so3_torus(a: CycNum, b: CycNum) -> Scalar3 {
    let (o, l) = (CycNum::ZERO, CycNum::ONE);
    [[l, o, o], [o, a, b], [o, -b, a]]
}

/// The reflection-like element [[-1,0,0],[0,0,1],[0,1,0]] of SO(3).
pub fn so3_swap() -> Scalar3 {
    let (o, l) = (CycNum::ZERO, CycNum::ONE);
    [[-l, o, o], [o, o, l], [o, l, o]]
}

/// Parameters (a, b) of the torus element with eigenvalue z = a + ib.
pub fn so3_torus_from_root(z: CycNum) -> (CycNum, CycNum) {
    let half = CycNum::rational(1, 2);
    let a = (z + z.inv()) * half;
    let b = (z - z.inv()) * half * CycNum::i().inv();
    (a, b)
}

/// Automorphisms Psi_U fixing the idempotents, built from an orthogonal U
/// and a triality pair found by monomial search. The pair is only fixed up
/// to a common sign and conjugation by the standard involution, and the
/// slots it occupies depend on the embedding conventions, so every
/// combination giving an automorphism is returned with a description.
pub fn triality_extensions(u: &ExactMatrix) -> Result<Vec<(AlgebraMap, String)>, JordanError> {
    let (u1, u2) = find_monomial_triality(u).ok_or_else(|| JordanError::NoTriality("U".into()))?;
    let s = crate::octonion::conjugation_matrix();
    let bar = |m: &ExactMatrix| s.mul(m).mul(&s);
    let forms = [("U'", u1.clone()), ("U''", u2.clone()), ("sU's", bar(&u1)), ("sU''s", bar(&u2))];
    let mut out = Vec::new();
    for sign in [1, -1] {
        for (n2, f2) in &forms {
            for (n3, f3) in &forms {
                let c = CycNum::int(sign);
                let m = psi("Psi_U", u, &f2.scale(c), &f3.scale(c));
                if is_automorphism(build_albert(), &m) {
                    let pm = if sign < 0 { "-" } else { "" };
                    out.push((m, format!("U, {pm}{n2}, {pm}{n3}")));
                }
            }
        }
    }
    if out.is_empty() {
        return Err(JordanError::NotAutomorphism("Psi_U".into()));
    }
    Ok(out)
}
