//! Torality of a grading of a Lie algebra: the zero component of a toral
//! grading contains a Cartan subalgebra, so it has full rank.

use crate::algcore::{fixed_subalgebra, lie_rank, AlgError, AlgebraMap, AlgebraTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToralReport {
    pub zero_dim: usize,
    /// None when the zero component is too small to have full rank.
    pub zero_rank: Option<usize>,
    pub toral: bool,
}

/// Decides torality of the grading induced on `lie` by the commuting
/// automorphisms `maps`, for a reductive `lie` of rank `full_rank`.
pub fn toral_report(lie: &AlgebraTable, maps: &[AlgebraMap], full_rank: usize) -> Result<ToralReport, AlgError> {
    let fixed = fixed_subalgebra(lie, maps)?;
    let zero_dim = fixed.dim();
    if zero_dim < full_rank {
        return Ok(ToralReport { zero_dim, zero_rank: None, toral: false });
    }
    let rank = lie_rank(lie, &fixed)?;
    Ok(ToralReport { zero_dim, zero_rank: Some(rank), toral: rank == full_rank })
}
