//! Transcribed gradings of J and H3(F) and the automorphism sets meant to
//! produce them.
//!
//! Labels with multiplicative signs (+1, -1) are written additively (0, 1).

use std::sync::OnceLock;

use super::albert::{build_albert, embed, idempotent};
use super::auts::{albert_torus, hat_extend, theta, triality_extensions, JordanError};
use super::h3f::{build_h3f, h3f_coords, in_s, tau, tau_root};
use crate::algcore::{AlgebraMap, AlgebraTable};
use crate::exactmath::CycNum;
use crate::gradings::spans::{parse_fixtures, Atom, AtomResolver, Fixture};
use crate::octonion::{f0, g2_torus, pauli_triality_u, Octonion, BASIS_NAMES};

pub const ALBERT_FIXTURES: &str = r#"
grading grad1 slots 2 2 2
0 0 0 : E1 ; E2 ; E3 ; 1^3 ; 1^2 ; 1^1
0 0 1 : (-e1+e2)^3 ; (-e1+e2)^2 ; (-e1+e2)^1
0 1 0 : (u2+v2)^3 ; (u2+v2)^2 ; (u2+v2)^1
1 0 0 : (u1+v1)^3 ; (u1+v1)^2 ; (u1+v1)^1
0 1 1 : (-u2+v2)^3 ; (-u2+v2)^2 ; (-u2+v2)^1
1 0 1 : (-u1+v1)^3 ; (-u1+v1)^2 ; (-u1+v1)^1
1 1 0 : (-u3+v3)^3 ; (-u3+v3)^2 ; (-u3+v3)^1
1 1 1 : (u3+v3)^3 ; (u3+v3)^2 ; (u3+v3)^1

grading nt1 slots 2 2 2 Z
0 0 0 0 : E1 ; E2 + E3
0 0 0 e : -i e 1^3 + 1^2
0 0 1 e : i e (e1-e2)^3 + (e1-e2)^2
0 0 1 0 : (-e1+e2)^1
0 1 0 e : -i e (u2+v2)^3 - (u2+v2)^2
0 1 0 0 : (u2+v2)^1
1 0 0 e : -i e (u1+v1)^3 - (u1+v1)^2
1 0 0 0 : (u1+v1)^1
0 1 1 e : i e (u2-v2)^3 + (u2-v2)^2
0 1 1 0 : (u2-v2)^1
1 1 0 e : i e (u3-v3)^3 + (u3-v3)^2
1 1 0 0 : (u3-v3)^1
1 0 1 e : i e (u1-v1)^3 + (u1-v1)^2
1 0 1 0 : (u1-v1)^1
1 1 1 e : -i e (u3+v3)^3 - (u3+v3)^2
1 1 1 0 : (u3+v3)^1
0 0 0 2 : -i E2 + i E3 + 1^1
0 0 0 -2 : -i E2 + i E3 - 1^1

grading nt2 slots 2 2 2 2
0 0 0 0 : E1 ; E2 ; E3 ; 1^1
0 0 0 1 : 1^3 ; 1^2
0 0 1 0 : (e1-e2)^1
0 1 0 0 : (u2+v2)^1
1 0 0 0 : (u1+v1)^1
1 1 0 0 : (u3-v3)^1
1 0 1 0 : (u1-v1)^1
1 0 0 1 : (u1+v1)^3 ; (u1+v1)^2
0 1 1 0 : (-u2+v2)^1
0 1 0 1 : (u2+v2)^3 ; (u2+v2)^2
0 0 1 1 : (e1-e2)^3 ; (e1-e2)^2
1 1 1 0 : (u3+v3)^1
1 1 0 1 : (u3-v3)^3 ; (u3-v3)^2
1 0 1 1 : (u1-v1)^3 ; (u1-v1)^2
0 1 1 1 : (u2-v2)^3 ; (-u2+v2)^2
1 1 1 1 : (u3+v3)^3 ; (u3+v3)^2

grading nt3 slots 2 2 2 3
0 0 0 0 : E1 ; E2 + E3
1 0 0 0 : (u1+v1)^1
0 1 0 0 : (u2+v2)^1
0 0 1 0 : (e1-e2)^1
0 1 1 0 : (u2-v2)^1
1 0 1 0 : (u1-v1)^1
1 1 0 0 : (u3-v3)^1
1 1 1 0 : (u3+v3)^1
0 0 0 1 : -i 1^3 + 1^2 ; i E2 - i E3 + 1^1
1 0 0 1 : i (u3+v3)^3 - (u3+v3)^2
0 1 0 1 : i (u2+v2)^3 + (u2+v2)^2
0 0 1 1 : i (e1-e2)^3 + (e1-e2)^2
0 1 1 1 : i (u2-v2)^3 + (u2-v2)^2
1 0 1 1 : i (u1-v1)^3 + (u1-v1)^2
1 1 0 1 : i (u3-v3)^3 + (u3-v3)^2
1 1 1 1 : i (u3+v3)^3 + (u3+v3)^2
0 0 0 2 : i 1^3 + 1^2 ; i E2 - i E3 - 1^1
1 0 0 2 : i (u1+v1)^3 - (u1+v1)^2
0 1 0 2 : i (u2+v2)^3 - (u2+v2)^2
0 0 1 2 : -i (e1-e2)^3 + (e1-e2)^2
0 1 1 2 : i (u2-v2)^3 - (u2-v2)^2
1 0 1 2 : -i (u1-v1)^3 + (u1-v1)^2
1 1 0 2 : i (u3-v3)^3 - (u3-v3)^2
1 1 1 2 : i (u3+v3)^3 - (u3+v3)^2

grading nt4 slots 2 2 2 4
0 0 0 0 : E1 ; E2 + E3
1 0 0 0 : (u1+v1)^1
0 1 0 0 : (u2+v2)^1
0 0 1 0 : (e1-e2)^1
0 1 1 0 : (u2-v2)^1
1 0 1 0 : (u1-v1)^1
1 1 0 0 : (u3-v3)^1
1 1 1 0 : (u3+v3)^1
0 0 0 1 : -i 1^3 + 1^2
1 0 0 1 : i (u1+v1)^3 + (u1+v1)^2
0 1 0 1 : i (u2+v2)^3 + (u2+v2)^2
0 0 1 1 : i (e1-e2)^3 + (e1-e2)^2
0 1 1 1 : i (u2-v2)^3 + (u2-v2)^2
1 0 1 1 : i (u1-v1)^3 + (u1-v1)^2
1 1 0 1 : i (u3-v3)^3 + (u3-v3)^2
1 1 1 1 : i (u3+v3)^3 + (u3+v3)^2
0 0 0 2 : E3 - E2 ; 1^1
0 0 0 3 : i 1^3 + 1^2
1 0 0 3 : i (u1+v1)^3 - (u1+v1)^2
0 1 0 3 : i (u2+v2)^3 - (u2+v2)^2
0 0 1 3 : -i (e1-e2)^3 + (e1-e2)^2
0 1 1 3 : -i (u2-v2)^3 + (u2-v2)^2
1 0 1 3 : -i (u1-v1)^3 + (u1-v1)^2
1 1 0 3 : -i (u3-v3)^3 + (u3-v3)^2
1 1 1 3 : i (u3+v3)^3 - (u3+v3)^2

grading nt5 slots 2 2 2 2 2
0 0 0 0 0 : E1 ; E2 + E3 ; 1^1
0 0 0 1 0 : -1^3 + 1^2
0 0 0 0 1 : E3 - E2
1 0 0 1 0 : (u1+v1)^3 + (u1+v1)^2
1 0 0 0 1 : (u1+v1)^1
0 1 0 1 0 : (u2+v2)^3 + (u2+v2)^2
0 1 0 0 1 : (u2+v2)^1
0 0 1 1 0 : (e1-e2)^3 + (e1-e2)^2
0 0 1 0 1 : (-e1+e2)^1
0 0 0 1 1 : 1^3 + 1^2
0 0 1 1 1 : (e2-e1)^3 + (e1-e2)^2
0 1 0 1 1 : (u2+v2)^3 - (u2+v2)^2
0 1 1 0 1 : (u2-v2)^1
0 1 1 1 0 : (u2-v2)^3 + (u2-v2)^2
0 1 1 1 1 : (-u2+v2)^3 + (u2-v2)^2
1 0 0 1 1 : (u1+v1)^3 - (u1+v1)^2
1 0 1 0 1 : (u1-v1)^1
1 0 1 1 0 : (u1-v1)^3 + (u1-v1)^2
1 0 1 1 1 : (-u1+v1)^3 + (u1-v1)^2
1 1 0 0 1 : (u3-v3)^1
1 1 0 1 0 : (u3-v3)^3 + (u3-v3)^2
1 1 0 1 1 : (-u3+v3)^3 + (u3-v3)^2
1 1 1 0 1 : (u3+v3)^1
1 1 1 1 0 : (-u3-v3)^3 - (u3+v3)^2
1 1 1 1 1 : (u3+v3)^3 - (u3+v3)^2

grading coar slots 2 2 4
0 0 0 : E1 ; E2 + E3 ; (e2-e1)^1
0 0 1 : -i e1^3 + e2^2 ; -i e2^3 + e1^2
0 0 2 : E3 - E2 ; 1^1
0 0 3 : i e1^3 + e2^2 ; i e2^3 + e1^2
0 1 0 : u2^1 ; v2^1
0 1 1 : -i u2^3 - u2^2 ; -i v2^3 - v2^2
0 1 3 : i u2^3 - u2^2 ; i v2^3 - v2^2
1 0 0 : u1^1 ; v1^1
1 0 1 : -i u1^3 - u1^2 ; -i v1^3 - v1^2
1 0 3 : i u1^3 - u1^2 ; i v1^3 - v1^2
1 1 0 : u3^1 ; v3^1
1 1 1 : -i u3^3 - u3^2 ; -i v3^3 - v3^2
1 1 3 : i u3^3 - u3^2 ; i v3^3 - v3^2

grading ztrescubo slots 3 3 3
0 0 0 : E1 + E2 + E3
0 0 1 : w E1 + w2 E2 + E3
0 0 2 : w2 E1 + w E2 + E3
0 1 0 : u3^3 + e1^2 + v3^1
0 1 1 : w2 u3^3 + w e1^2 + v3^1
0 1 2 : w u3^3 + w2 e1^2 + v3^1
0 2 0 : v3^3 - e2^2 + u3^1
0 2 1 : w2 v3^3 - w e2^2 + u3^1
0 2 2 : w v3^3 - w2 e2^2 + u3^1
1 0 0 : -v2^3 - u2^2 + e1^1
1 0 1 : -w2 v2^3 - w u2^2 + e1^1
1 0 2 : -w v2^3 - w2 u2^2 + e1^1
1 1 0 : e2^3 - u1^2 + v1^2
1 1 1 : w2 e2^3 - w u1^2 + v1^1
1 1 2 : w e2^3 - w2 u1^2 + v1^1
1 2 0 : v1^3 + v3^2 + v2^1
1 2 1 : w2 v1^3 + w v3^2 + v2^1
1 2 2 : w v1^3 + w2 v3^2 + v2^1
2 0 0 : u2^3 + v2^2 + e2^1
2 0 1 : w2 u2^3 + w v2^2 + e2^1
2 0 2 : w u2^3 + w2 v2^2 + e2^1
2 1 0 : u1^3 + u3^2 + u2^1
2 1 1 : w2 u1^3 + w u3^2 + u2^1
2 1 2 : w u1^3 + w2 u3^2 + u2^1
2 2 0 : -e1^3 - v1^2 + u1^1
2 2 1 : -w2 e1^3 - w v1^2 + u1^1
2 2 2 : -w e1^3 - w2 v1^2 + u1^1
"#;

pub const H3F_FIXTURES: &str = r#"
grading gr1 slots Z
0 : E1 ; E2 + E3
1 : -i 1^3 + 1^2
-1 : i 1^3 + 1^2
2 : -i E2 + i E3 + 1^1
-2 : i E2 - i E3 + 1^1

grading gr2 slots 2
0 : E1 ; E2 ; E3 ; 1^1
1 : 1^2 ; 1^3

grading gr3 slots 3
0 : E1 ; E2 + E3
1 : 1^2 - i 1^3 ; i E2 - i E3 + 1^1
2 : 1^2 + i 1^3 ; -i E2 + i E3 + 1^1

grading gr4 slots 4
0 : E1 ; E2 + E3
1 : -i 1^3 + 1^2
3 : i 1^3 + 1^2
2 : E2 - E3 ; 1^1

# the decomposition produced by the two involutions
grading gr5 slots 2 2
0 0 : E1 ; E2 + E3 ; 1^1
0 1 : 1^2 - 1^3
1 0 : E2 - E3
1 1 : 1^2 + 1^3

# an isomorphic presentation
grading gr5iso slots 2 2
0 0 : E1 ; E2 ; E3
0 1 : 1^1
1 0 : 1^2
1 1 : 1^3
"#;

fn octonion_named(terms: &[(i64, String)]) -> Result<Octonion, String> {
    let mut o = Octonion::zero();
    for (c, name) in terms {
        let b = if name == "1" {
            Octonion::one()
        } else {
            let k = BASIS_NAMES.iter().position(|n| n == name).ok_or_else(|| format!("unknown octonion {name}"))?;
            Octonion::basis(k)
        };
        o = o + b.scale(CycNum::int(*c));
    }
    Ok(o)
}

/// Atoms of J: E1..E3 and octonions in a slot.
pub struct AlbertResolver;

impl AtomResolver for AlbertResolver {
    fn dim(&self) -> usize {
        27
    }

    fn resolve(&self, atom: &Atom) -> Result<Vec<CycNum>, String> {
        match atom {
            Atom::Name(n) => match n.as_str() {
                "E1" => Ok(idempotent(1)),
                "E2" => Ok(idempotent(2)),
                "E3" => Ok(idempotent(3)),
                _ => Err(format!("unknown atom {n}")),
            },
            Atom::Octonion { terms, slot } if (1..=3).contains(slot) => Ok(embed(*slot, &octonion_named(terms)?)),
            Atom::Octonion { slot, .. } => Err(format!("bad slot {slot}")),
        }
    }
}

/// Same atoms, expressed in the six coordinates of H3(F).
pub struct H3fResolver;

impl AtomResolver for H3fResolver {
    fn dim(&self) -> usize {
        6
    }

    fn resolve(&self, atom: &Atom) -> Result<Vec<CycNum>, String> {
        let v = AlbertResolver.resolve(atom)?;
        h3f_coords(&v).ok_or_else(|| format!("{atom} is not in H3(F)"))
    }
}

pub fn albert_fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| parse_fixtures(ALBERT_FIXTURES).expect("embedded fixtures parse"))
}

pub fn h3f_fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| parse_fixtures(H3F_FIXTURES).expect("embedded fixtures parse"))
}

pub fn fixture<'a>(set: &'a [Fixture], name: &str) -> Option<&'a Fixture> {
    set.iter().find(|f| f.name == name)
}

/// A named grading of J: transcribed spans plus generating automorphisms.
#[derive(Clone, Debug)]
pub struct AlbertPreset {
    pub name: &'static str,
    pub fixture: Fixture,
    pub automorphisms: Vec<AlgebraMap>,
}

/// hat t_{1,-1}, hat t_{-1,1}, hat f0.
pub fn octonion_crossing() -> Vec<AlgebraMap> {
    let one = CycNum::ONE;
    [g2_torus(one, -one), g2_torus(-one, one), f0()]
        .iter()
        .map(|f| hat_extend(f).expect("automorphisms of C"))
        .collect()
}

/// The third generator of the Z3^3 grading: a power of theta composed with
/// a triality extension of the monomial U, chosen of order 3 and commuting
/// with the two torus generators. Returns the map and how it was built.
pub fn z3_cube_third_generator() -> Result<(AlgebraMap, String), JordanError> {
    let [t1, t2] = z3_cube_torus();
    let mut th = AlgebraMap::identity(27);
    for k in 1..=2 {
        th = theta().compose(&th);
        for (psi, desc) in triality_extensions(&pauli_triality_u())? {
            let mut phi = th.compose(&psi);
            if phi.order(3) == Some(3) && phi.commutes_with(&t1) && phi.commutes_with(&t2) {
                phi.name = format!("theta^{k}*Psi_U");
                return Ok((phi, format!("theta^{k} after Psi_U with slots ({desc})")));
            }
        }
    }
    Err(JordanError::NotAutomorphism("theta*Psi_U".into()))
}

fn z3_cube_torus() -> [AlgebraMap; 2] {
    let w = CycNum::omega();
    let w2 = w * w;
    let one = CycNum::ONE;
    [albert_torus(w2, w2, w2, one), albert_torus(w2, w, one, w2)]
}

pub fn z3_cube_generators() -> Result<Vec<AlgebraMap>, JordanError> {
    let [t1, t2] = z3_cube_torus();
    Ok(vec![t1, t2, z3_cube_third_generator()?.0])
}

/// The named gradings of J; built once, since the triality lifts are slow.
pub fn albert_grading_presets() -> Result<Vec<AlbertPreset>, JordanError> {
    static P: OnceLock<Result<Vec<AlbertPreset>, JordanError>> = OnceLock::new();
    P.get_or_init(build_albert_presets).clone()
}

fn build_albert_presets() -> Result<Vec<AlbertPreset>, JordanError> {
    let one = CycNum::ONE;
    let zero = CycNum::ZERO;
    let half = CycNum::rational(1, 2);
    let base = octonion_crossing();
    let with = |extra: Vec<AlgebraMap>| {
        let mut v = base.clone();
        v.extend(extra);
        v
    };
    let sets: Vec<(&'static str, Vec<AlgebraMap>)> = vec![
        ("nt1", with(vec![tau_root(CycNum::zeta(3))])),
        ("nt2", with(vec![tau(-one, zero)])),
        ("nt3", with(vec![tau(-half, CycNum::sqrt3() * half)])),
        ("nt4", with(vec![tau(zero, one)])),
        ("nt5", with(vec![tau(-one, zero), in_s()])),
        ("grad1", base.clone()),
        ("coar", vec![base[0].clone(), base[1].clone(), tau(zero, one)]),
        ("ztrescubo", z3_cube_generators()?),
    ];
    Ok(sets
        .into_iter()
        .map(|(name, automorphisms)| AlbertPreset {
            name,
            fixture: fixture(albert_fixtures(), name).expect("fixture present").clone(),
            automorphisms,
        })
        .collect())
}

pub fn albert() -> &'static AlgebraTable {
    build_albert()
}

pub fn h3f() -> &'static AlgebraTable {
    build_h3f()
}
