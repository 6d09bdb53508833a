//! Exact computation of gradings on the exceptional Lie algebra f4, the
//! Albert algebra and H3(F): cyclotomic arithmetic, the algebras and their
//! automorphisms, the Weyl group of F4 with its torus action, and the
//! verification tables.

// index loops mirror the matrix formulas they implement
#![allow(clippy::needless_range_loop)]

pub mod algcore;
pub mod cache;
pub mod exactmath;
pub mod f4lie;
pub mod gradings;
pub mod jordan;
pub mod octonion;
pub mod weyl;
