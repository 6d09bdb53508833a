//! The Albert algebra, its subalgebra H3(F), the Tits model and the
//! automorphisms used to build gradings.

mod albert;
mod auts;
pub mod fixtures;
mod h3f;
pub mod tits;

#[cfg(test)]
mod tests;

pub use albert::{
    block, build_albert, congruence, embed, embedded_part, idempotent, jordan_product, norm, quadratic, trace, unit,
    AlbertParts, DIM, TORUS_WEIGHTS,
};
pub use auts::{
    albert_torus, hat_extend, is_special_orthogonal, psi, so3_extend, so3_swap, so3_torus, so3_torus_from_root, theta,
    triality_extensions, JordanError, Scalar3,
};
pub use fixtures::{albert_grading_presets, octonion_crossing, z3_cube_generators, AlbertPreset};
pub use h3f::{build_h3f, h3f_basis, h3f_coords, h3f_generators, h3f_gradings, in_s, restrict_to_h3f, tau, tau_root};
