//! Semisimplicity of ad(x) for homogeneous x, using the grading.
//!
//! If x has degree g of order n, ad(x) moves L_h to L_{h+g} and ad(x)^n
//! preserves every component. Its minimal polynomial divides m(t^n) for m
//! the minimal polynomial of ad(x)^n, so ad(x) is diagonalizable iff
//! ad(x)^n is diagonalizable on each component and ker ad(x) = ker ad(x)^2.

use std::collections::HashMap;

use super::core::{Grading, GradingError, Label, Slot};
use crate::algcore::{AlgebraTable, Subspace};
use crate::exactmath::{minimal_polynomial, CycNum, ExactMatrix};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Order of a label in its group; None for a nonzero free slot.
pub fn label_order(l: &Label) -> Option<i64> {
    l.0.iter().try_fold(1i64, |acc, s| match *s {
        Slot::Cyclic { value, modulus } => {
            let o = modulus / gcd(value, modulus);
            Some(acc / gcd(acc, o) * o)
        }
        Slot::Free(0) => Some(acc),
        Slot::Free(_) => None,
    })
}

/// Block data for left multiplication by homogeneous x.
struct Shift {
    /// Image component of each component.
    target: Vec<usize>,
    /// Matrix of x * (.) from component h to its target, in echelon bases.
    blocks: Vec<ExactMatrix>,
}

fn shift(g: &Grading, alg: &AlgebraTable, comp: usize, x: &[CycNum]) -> Result<Shift, GradingError> {
    let subs: Vec<Subspace> = g.components.iter().map(|c| Subspace::from_vectors(&c.basis, g.dim)).collect();
    let index: HashMap<&Label, usize> = g.components.iter().enumerate().map(|(i, c)| (&c.label, i)).collect();
    let deg = &g.components[comp].label;
    let mut target = Vec::with_capacity(subs.len());
    let mut blocks = Vec::with_capacity(subs.len());
    for (h, c) in g.components.iter().enumerate() {
        let images: Vec<Vec<CycNum>> = subs[h].basis().iter().map(|b| alg.mul(x, b)).collect();
        let t = index.get(&c.label.add(deg)).copied();
        let cols: Vec<Vec<CycNum>> = match t {
            Some(t) => images
                .iter()
                .map(|v| subs[t].coords(v))
                .collect::<Option<_>>()
                .ok_or_else(|| GradingError::NotClosed(deg.to_string(), c.label.to_string(), "?".into()))?,
            None if images.iter().all(|v| v.iter().all(CycNum::is_zero)) => vec![],
            None => return Err(GradingError::NotClosed(deg.to_string(), c.label.to_string(), "outside".into())),
        };
        // a missing target component stands for the zero space
        let (t, m) = match t {
            Some(t) => (t, ExactMatrix::from_columns(subs[t].dim(), &cols)),
            None => (usize::MAX, ExactMatrix::zeros(0, subs[h].dim())),
        };
        target.push(t);
        blocks.push(m);
    }
    Ok(Shift { target, blocks })
}

/// Whether ad(x), or left multiplication by x, is diagonalizable for x in
/// component `comp` of the grading.
pub fn is_homogeneous_semisimple(
    g: &Grading,
    alg: &AlgebraTable,
    comp: usize,
    x: &[CycNum],
) -> Result<bool, GradingError> {
    let s = shift(g, alg, comp, x)?;
    let Some(n) = label_order(&g.components[comp].label) else {
        // degree of infinite order: ad(x) is nilpotent
        return Ok(s.blocks.iter().all(ExactMatrix::is_zero));
    };
    let sizes: Vec<usize> = g.components.iter().map(|c| c.dim()).collect();
    for h in 0..sizes.len() {
        // ker A = ker A^2 on L_h
        let a = &s.blocks[h];
        let t = s.target[h];
        let a2_rank = if t == usize::MAX { 0 } else { s.blocks[t].mul(a).rank() };
        if a.rank() != a2_rank {
            return Ok(false);
        }
        // A^n on L_h, composed along the orbit h, h+g, ...
        let mut pow = ExactMatrix::identity(sizes[h]);
        let mut at = h;
        for _ in 0..n {
            if at == usize::MAX {
                pow = ExactMatrix::zeros(sizes[h], sizes[h]);
                break;
            }
            pow = s.blocks[at].mul(&pow);
            at = s.target[at];
        }
        debug_assert!(at == h || at == usize::MAX || pow.is_zero());
        if sizes[h] > 0 && !minimal_polynomial(&pow).is_squarefree() {
            return Ok(false);
        }
    }
    Ok(true)
}
