//! Exact arithmetic substrate: Q, Q(z24), dense matrices, polynomials, joint
//! eigenspaces and integer lattices.

mod cyclotomic;
mod eigen;
mod field;
mod lattice;
mod matrix;
mod modular;
mod poly;
mod rational;

pub use cyclotomic::{CycNum, DEGREE};
pub use eigen::{roots_of_unity, simultaneous_eigenspaces, simultaneous_eigenspaces_on, EigenComponent, EigenError};
pub use field::Field;
pub use lattice::{
    multiplicative_kernel_generators, multiplicative_kernel_structure, smith_normal_form, AbelianGroupDescriptor,
    IntMatrix, KernelGenerators, Smith,
};
pub use matrix::{kernel_from_rref, rref_in_place, span_canonical, span_rank, ExactMatrix, Matrix, QMatrix};
pub use modular::{rank_lower_bound, rank_mod_p, reduce, REDUCTION_PRIMES};
pub use poly::{local_minimal_polynomial, minimal_polynomial, Poly};
pub use rational::Q;
