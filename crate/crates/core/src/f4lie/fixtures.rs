//! Transcribed fine gradings of f4 in the basis B'.
//!
//! Atoms are `b1`..`b48` and `t1`..`t4` for t_{alpha_1}..t_{alpha_4};
//! zero components are omitted. Sign labels are written additively.

use std::sync::OnceLock;

use super::F4_DIM;
use crate::exactmath::CycNum;
use crate::gradings::spans::{parse_fixtures, Atom, AtomResolver, Fixture};

pub const F4_FIXTURES: &str = r#"
grading z3cube slots 3 3 3
0 0 1 : b17 + b32 + b33 ; -b22 + b34 + b42
0 0 2 : b8 + b9 + b41 ; b10 + b18 + b46
0 1 0 : b1 + b2 + b29 ; b4 - b23 + b48
0 1 1 : -b19 + b30 + b38 ; -b20 + b31 + b39
0 1 2 : b3 + b13 + b40 ; b11 - b12 + b45
0 2 0 : b5 + b25 + b26 ; -b24 - b28 + b47
0 2 1 : -b21 - b35 + b36 ; b16 - b27 + b37
0 2 2 : -b6 - b14 + b43 ; b7 - b15 + b44
1 0 0 : t1 + [2 + w] t2 + 2 t3 ; [-1 - w] t1 + [-1 - 2 w] t2 + 2 t4
1 0 1 : w b17 + w2 b32 + b33 ; -w2 b22 + w b34 + b42
1 0 2 : w b8 + w2 b9 + b41 ; w2 b10 + w b18 + b46
1 1 0 : w b1 + w2 b2 + b29 ; w b4 - w2 b23 + b48
1 1 1 : -w2 b19 + w b30 + b38 ; -w b20 + w2 b31 + b39
1 1 2 : w2 b3 + w b13 + b40 ; w b11 - w2 b12 + b45
1 2 0 : w b5 + w2 b25 + b26 ; -w b24 - w2 b28 + b47
1 2 1 : -w b21 - w2 b35 + b36 ; w2 b16 - w b27 + b37
1 2 2 : -w2 b6 - w b14 + b43 ; w b7 - w2 b15 + b44
2 0 0 : t1 + [2 + w2] t2 + 2 t3 ; [-1 - w2] t1 + [-1 - 2 w2] t2 + 2 t4
2 0 1 : w2 b17 + w b32 + b33 ; -w b22 + w2 b34 + b42
2 0 2 : w2 b8 + w b9 + b41 ; w b10 + w2 b18 + b46
2 1 0 : w2 b1 + w b2 + b29 ; w2 b4 - w b23 + b48
2 1 1 : -w b19 + w2 b30 + b38 ; -w2 b20 + w b31 + b39
2 1 2 : w b3 + w2 b13 + b40 ; w2 b11 - w b12 + b45
2 2 0 : w2 b5 + w b25 + b26 ; -w2 b24 - w b28 + b47
2 2 1 : -w2 b21 - w b35 + b36 ; w b16 - w2 b27 + b37
2 2 2 : -w b6 - w2 b14 + b43 ; w2 b7 - w b15 + b44

grading z2five slots 2 2 2 2 2
0 0 0 0 1 : b2 + b26
0 0 0 1 0 : b41 - b17
0 0 0 1 1 : b43 - b19
0 0 1 0 0 : b38 - b14
0 0 1 0 1 : b35 - b11
0 0 1 1 0 : b3 + b27 ; b34 - b10 ; b39 - b15 ; b48 - b24
0 0 1 1 1 : b30 - b6
0 1 0 0 0 : b1 + b25
0 1 0 0 1 : b5 + b29
0 1 0 1 0 : b28 - b4 ; b40 - b16 ; b44 - b20 ; b22 + b46
0 1 0 1 1 : b45 - b21
0 1 1 0 0 : b7 + b31 ; b37 - b13 ; b42 - b18 ; b47 - b23
0 1 1 0 1 : b32 - b8
0 1 1 1 0 : b36 - b12
0 1 1 1 1 : b33 - b9
1 0 0 0 0 : t1 ; t2 ; t3 ; t4
1 0 0 0 1 : b26 - b2
1 0 0 1 0 : b17 + b41
1 0 0 1 1 : b19 + b43
1 0 1 0 0 : b14 + b38
1 0 1 0 1 : b11 + b35
1 0 1 1 0 : b27 - b3 ; b10 + b34 ; b15 + b39 ; b24 + b48
1 0 1 1 1 : b6 + b30
1 1 0 0 0 : b25 - b1
1 1 0 0 1 : b29 - b5
1 1 0 1 0 : b4 + b28 ; b16 + b40 ; b20 + b44 ; b46 - b22
1 1 0 1 1 : b21 + b45
1 1 1 0 0 : b31 - b7 ; b13 + b37 ; b18 + b42 ; b23 + b47
1 1 1 0 1 : b8 + b32
1 1 1 1 0 : b12 + b36
1 1 1 1 1 : b9 + b33

grading z2cube_z slots 2 2 2 Z
0 0 0 -1 : b2 + b9
0 0 0 0 : t2 + 2 t3 + t4
0 0 0 1 : b33 - b26
0 0 1 -2 : b22 + b28
0 0 1 -1 : b35 - b21
0 0 1 0 : b38 - b14 ; b40 - b16 ; b44 - b20
0 0 1 1 : b45 - b11
0 0 1 2 : b46 - b4
0 1 0 -2 : b15 - b10
0 1 0 -1 : b6 - b5
0 1 0 0 : b1 + b25 ; b3 + b27 ; b48 - b24
0 1 0 1 : b29 + b30
0 1 0 2 : b39 - b34
0 1 1 -2 : b23 + b31
0 1 1 -1 : b19 + b32
0 1 1 0 : b37 - b13 ; b41 - b17 ; b42 - b18
0 1 1 1 : b8 + b43
0 1 1 2 : b47 - b7
1 0 0 -2 : b12
1 0 0 -1 : b9 - b2
1 0 0 0 : t2 ; [1/2] t1 + t3 ; t4
1 0 0 1 : b26 + b33
1 0 0 2 : b36
1 0 1 -2 : b28 - b22
1 0 1 -1 : b21 + b35
1 0 1 0 : b14 + b38 ; b16 + b40 ; b20 + b44
1 0 1 1 : b11 + b45
1 0 1 2 : b4 + b46
1 1 0 -2 : b10 + b15
1 1 0 -1 : b5 + b6
1 1 0 0 : b25 - b1 ; b27 - b3 ; b24 + b48
1 1 0 1 : b30 - b29
1 1 0 2 : b34 + b39
1 1 1 -2 : b31 - b23
1 1 1 -1 : b32 - b19
1 1 1 0 : b13 + b37 ; b17 + b41 ; b18 + b42
1 1 1 1 : b43 - b8
1 1 1 2 : b7 + b47
"#;

/// Atoms of f4 in B'.
pub struct F4Resolver;

impl AtomResolver for F4Resolver {
    fn dim(&self) -> usize {
        F4_DIM
    }

    fn resolve(&self, atom: &Atom) -> Result<Vec<CycNum>, String> {
        let Atom::Name(n) = atom else {
            return Err(format!("unexpected atom {atom}"));
        };
        let index = |prefix: &str, max: usize| -> Option<usize> {
            n.strip_prefix(prefix)?.parse::<usize>().ok().filter(|k| (1..=max).contains(k))
        };
        let pos = match (index("b", 48), index("t", 4)) {
            (Some(k), _) => k + 3,
            (_, Some(k)) => k - 1,
            _ => return Err(format!("unknown atom {n}")),
        };
        let mut v = vec![CycNum::ZERO; F4_DIM];
        v[pos] = CycNum::ONE;
        Ok(v)
    }
}

pub fn f4_fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| parse_fixtures(F4_FIXTURES).expect("embedded fixtures parse"))
}
