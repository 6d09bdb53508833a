use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algcore::{AlgebraMap, AlgebraTable};
use crate::exactmath::{
    roots_of_unity, simultaneous_eigenspaces, smith_normal_form, span_canonical, AbelianGroupDescriptor, CycNum,
    EigenError, ExactMatrix, IntMatrix,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GradingError {
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error("components do not span the algebra ({found} of {expected} dimensions)")]
    NotADecomposition { found: usize, expected: usize },
    #[error("product of components {0} and {1} is not homogeneous")]
    NotHomogeneous(String, String),
    #[error("product of components {0} and {1} leaves component {2}")]
    NotClosed(String, String, String),
    #[error("label map is not a homomorphism on the support: {0}")]
    NotHomomorphic(String),
    #[error("fixture {fixture}, component {label}: {reason}")]
    FixtureMismatch { fixture: String, label: String, reason: String },
}

/// One coordinate of a group label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Slot {
    Cyclic { value: i64, modulus: i64 },
    Free(i64),
}

impl Slot {
    pub fn cyclic(value: i64, modulus: i64) -> Slot {
        Slot::Cyclic { value: value.rem_euclid(modulus), modulus }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, o: Slot) -> Slot {
        match (self, o) {
            (Slot::Cyclic { value: a, modulus: m }, Slot::Cyclic { value: b, modulus: n }) if m == n => {
                Slot::cyclic(a + b, m)
            }
            (Slot::Free(a), Slot::Free(b)) => Slot::Free(a + b),
            _ => panic!("adding labels of different shapes"),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Slot::Cyclic { value: 0, .. } | Slot::Free(0))
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Cyclic { value, .. } => write!(f, "{value}"),
            Slot::Free(v) => write!(f, "{v}"),
        }
    }
}

/// Group element tag: a tuple of slots added componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Label(pub Vec<Slot>);

impl Label {
    pub fn add(&self, o: &Label) -> Label {
        assert_eq!(self.0.len(), o.0.len(), "labels of different lengths");
        Label(self.0.iter().zip(&o.0).map(|(&a, &b)| a.add(b)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Slot::is_zero)
    }

    /// Same label with slot `k` removed.
    pub fn drop_slot(&self, k: usize) -> Label {
        let mut v = self.0.clone();
        v.remove(k);
        Label(v)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub label: Label,
    /// Reduced echelon basis of the component.
    pub basis: Vec<Vec<CycNum>>,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Where a grading came from.
#[derive(Clone, Debug)]
pub enum Provenance {
    Automorphisms(Vec<AlgebraMap>),
    Fixture(String),
    Coarsening(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Automorphisms(maps) => {
                let names: Vec<&str> = maps.iter().map(|m| m.name.as_str()).collect();
                write!(f, "automorphisms {{{}}}", names.join(", "))
            }
            Provenance::Fixture(s) => write!(f, "fixture {s}"),
            Provenance::Coarsening(s) => write!(f, "coarsening of {s}"),
        }
    }
}

/// Histogram (h1, ..., hl) of component dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingType(pub Vec<usize>);

impl GradingType {
    pub fn of_dims(dims: impl IntoIterator<Item = usize>) -> GradingType {
        let mut h: Vec<usize> = Vec::new();
        for d in dims {
            if d == 0 {
                continue;
            }
            if h.len() < d {
                h.resize(d, 0);
            }
            h[d - 1] += 1;
        }
        GradingType(h)
    }

    pub fn total_dim(&self) -> usize {
        self.0.iter().enumerate().map(|(i, h)| (i + 1) * h).sum()
    }
}

impl fmt::Display for GradingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|h| h.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Decomposition of an algebra into labelled subspaces.
#[derive(Clone, Debug)]
pub struct Grading {
    pub algebra: String,
    pub dim: usize,
    pub components: Vec<Component>,
    pub provenance: Provenance,
}

/// Order of the subgroup of 24th roots of unity generated by the exponents.
fn cyclic_order(exponents: impl IntoIterator<Item = usize>) -> i64 {
    let g = exponents.into_iter().fold(24i64, |g, e| num_gcd(g, e as i64));
    24 / g
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_gcd(b, a % b)
    }
}

/// Joint eigenspaces of commuting automorphisms; slot k of a label is the
/// exponent of the eigenvalue of map k in the cyclic group it generates.
pub fn grading_from_automorphisms(alg: &AlgebraTable, maps: &[AlgebraMap]) -> Result<Grading, GradingError> {
    let n = alg.dim();
    let matrices: Vec<ExactMatrix> = maps.iter().map(|m| m.matrix.clone()).collect();
    let comps = if maps.is_empty() {
        vec![(vec![], (0..n).map(|i| alg.unit_vector(i)).collect::<Vec<_>>())]
    } else {
        simultaneous_eigenspaces(&matrices, &roots_of_unity())?
            .into_iter()
            .map(|c| (c.candidate_indices, c.basis))
            .collect()
    };
    let orders: Vec<i64> = (0..maps.len()).map(|k| cyclic_order(comps.iter().map(|(idx, _)| idx[k]))).collect();
    let mut components: Vec<Component> = comps
        .into_iter()
        .map(|(idx, basis)| {
            let slots = idx.iter().zip(&orders).map(|(&e, &d)| Slot::cyclic(e as i64 / (24 / d), d)).collect();
            Component { label: Label(slots), basis }
        })
        .collect();
    components.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(Grading {
        algebra: alg.name().to_string(),
        dim: n,
        components,
        provenance: Provenance::Automorphisms(maps.to_vec()),
    })
}

/// Projection data for locating vectors inside a grading.
pub struct ComponentLocator {
    owner: Vec<usize>,
    inverse: ExactMatrix,
}

impl ComponentLocator {
    pub fn new(g: &Grading) -> Result<Self, GradingError> {
        let mut cols = Vec::new();
        let mut owner = Vec::new();
        for (ci, c) in g.components.iter().enumerate() {
            for v in &c.basis {
                cols.push(v.clone());
                owner.push(ci);
            }
        }
        let found = crate::exactmath::span_rank(&cols, g.dim);
        if cols.len() != g.dim || found != g.dim {
            return Err(GradingError::NotADecomposition { found, expected: g.dim });
        }
        let p = ExactMatrix::from_columns(g.dim, &cols);
        let inverse = p.inverse().expect("full rank");
        Ok(ComponentLocator { owner, inverse })
    }

    /// Components in which `v` has a nonzero projection.
    pub fn locate(&self, v: &[CycNum]) -> Vec<usize> {
        let coords = self.inverse.mul_vec(v);
        let mut out: Vec<usize> =
            coords.iter().zip(&self.owner).filter(|(c, _)| !c.is_zero()).map(|(_, &o)| o).collect();
        out.dedup();
        out
    }
}

impl Grading {
    pub fn grading_type(&self) -> GradingType {
        GradingType::of_dims(self.components.iter().map(Component::dim))
    }

    pub fn component(&self, label: &Label) -> Option<&Component> {
        self.components.iter().find(|c| &c.label == label)
    }

    pub fn zero_component(&self) -> Option<&Component> {
        self.components.iter().find(|c| c.label.is_zero())
    }

    pub fn zero_dim(&self) -> usize {
        self.zero_component().map_or(0, Component::dim)
    }

    /// Triples (a, b, k): the product of components a and b is nonzero and
    /// lies in component k. Errors when some product is not homogeneous.
    pub fn product_relations(&self, alg: &AlgebraTable) -> Result<Vec<(usize, usize, usize)>, GradingError> {
        let loc = ComponentLocator::new(self)?;
        let commutative =
            matches!(alg.flavor(), crate::algcore::Flavor::CommutativeJordan | crate::algcore::Flavor::Lie);
        let mut out = Vec::new();
        for (a, ca) in self.components.iter().enumerate() {
            for (b, cb) in self.components.iter().enumerate() {
                if commutative && b < a {
                    continue;
                }
                let mut target: Option<usize> = None;
                for x in &ca.basis {
                    for y in &cb.basis {
                        let p = alg.mul(x, y);
                        if p.iter().all(CycNum::is_zero) {
                            continue;
                        }
                        let at = loc.locate(&p);
                        let bad = || GradingError::NotHomogeneous(ca.label.to_string(), cb.label.to_string());
                        if at.len() != 1 {
                            return Err(bad());
                        }
                        match target {
                            None => target = Some(at[0]),
                            Some(t) if t == at[0] => {}
                            Some(_) => return Err(bad()),
                        }
                    }
                }
                if let Some(k) = target {
                    out.push((a, b, k));
                }
            }
        }
        Ok(out)
    }

    /// Exhaustive check that components multiply according to the labels.
    pub fn check_closure(&self, alg: &AlgebraTable) -> Result<(), GradingError> {
        for (a, b, k) in self.product_relations(alg)? {
            let (la, lb, lk) = (&self.components[a].label, &self.components[b].label, &self.components[k].label);
            if &la.add(lb) != lk {
                return Err(GradingError::NotClosed(la.to_string(), lb.to_string(), lk.to_string()));
            }
        }
        Ok(())
    }

    /// Universal grading group Z^Supp / <a + b - k>.
    pub fn universal_group(&self, alg: &AlgebraTable) -> Result<AbelianGroupDescriptor, GradingError> {
        let rel = self.product_relations(alg)?;
        Ok(universal_group_from_relations(self.components.len(), &rel))
    }

    /// Merges components along a label map, which must be a homomorphism on
    /// the support; the result is checked for closure.
    pub fn coarsen(
        &self,
        alg: &AlgebraTable,
        name: &str,
        map: impl Fn(&Label) -> Label,
    ) -> Result<Grading, GradingError> {
        for (a, b, k) in self.product_relations(alg)? {
            let (la, lb, lk) = (&self.components[a].label, &self.components[b].label, &self.components[k].label);
            if map(la).add(&map(lb)) != map(lk) {
                return Err(GradingError::NotHomomorphic(format!("{la} + {lb} = {lk}")));
            }
        }
        let mut merged: BTreeMap<Label, Vec<Vec<CycNum>>> = BTreeMap::new();
        for c in &self.components {
            merged.entry(map(&c.label)).or_default().extend(c.basis.iter().cloned());
        }
        let components =
            merged.into_iter().map(|(label, vs)| Component { label, basis: span_canonical(&vs, self.dim) }).collect();
        let g = Grading {
            algebra: self.algebra.clone(),
            dim: self.dim,
            components,
            provenance: Provenance::Coarsening(name.to_string()),
        };
        g.check_closure(alg)?;
        Ok(g)
    }

    /// Multiset of canonical component spans, for exact comparisons.
    pub fn canonical_spans(&self) -> Vec<Vec<Vec<CycNum>>> {
        let mut spans: Vec<Vec<Vec<CycNum>>> =
            self.components.iter().map(|c| span_canonical(&c.basis, self.dim)).collect();
        spans.sort_by_key(|s| format!("{s:?}"));
        spans
    }

    /// Equal decompositions up to relabelling.
    pub fn same_decomposition(&self, other: &Grading) -> bool {
        self.dim == other.dim && self.canonical_spans() == other.canonical_spans()
    }

    /// Every component of `self` lies inside a component of `coarser`.
    pub fn refines(&self, coarser: &Grading) -> bool {
        self.components.iter().all(|c| {
            coarser.components.iter().any(|d| {
                let sub = crate::algcore::Subspace::from_vectors(&d.basis, self.dim);
                c.basis.iter().all(|v| sub.contains(v))
            })
        })
    }
}

/// Cokernel of the relation lattice spanned by e_a + e_b - e_k.
pub fn universal_group_from_relations(support: usize, relations: &[(usize, usize, usize)]) -> AbelianGroupDescriptor {
    if relations.is_empty() {
        return AbelianGroupDescriptor { torus_rank: support, invariant_factors: vec![] };
    }
    let rows: Vec<Vec<i64>> = relations
        .iter()
        .map(|&(a, b, k)| {
            let mut r = vec![0i64; support];
            r[a] += 1;
            r[b] += 1;
            r[k] -= 1;
            r
        })
        .collect();
    let m = IntMatrix::from_rows(&rows);
    let smith = smith_normal_form(&m);
    let rank = smith.rank();
    let invariant_factors = smith.diagonal().into_iter().filter(|&d| d > 1).collect();
    AbelianGroupDescriptor { torus_rank: support - rank, invariant_factors }
}

/// Trivial grading with a single component.
pub fn trivial_grading(alg: &AlgebraTable) -> Grading {
    grading_from_automorphisms(alg, &[]).expect("no maps to diagonalize")
}

/// Grading whose components are given explicitly.
pub fn grading_from_components(alg: &AlgebraTable, name: &str, components: Vec<Component>) -> Grading {
    let n = alg.dim();
    let mut components: Vec<Component> =
        components.into_iter().map(|c| Component { label: c.label, basis: span_canonical(&c.basis, n) }).collect();
    components.sort_by(|a, b| a.label.cmp(&b.label));
    Grading { algebra: alg.name().to_string(), dim: n, components, provenance: Provenance::Fixture(name.to_string()) }
}
