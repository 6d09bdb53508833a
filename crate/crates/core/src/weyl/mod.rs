//! The Weyl group of F4 in the simple-root basis: enumeration in
//! lexicographic order, conjugacy classes, the action on the maximal
//! torus, fixed subgroups and the lift sigma -> sigma~ into Aut(f4).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::algcore::{is_automorphism_q, AlgebraMap};
use crate::exactmath::{
    multiplicative_kernel_generators, multiplicative_kernel_structure, AbelianGroupDescriptor, CycNum, IntMatrix,
    QMatrix, Q,
};
use crate::f4lie::{basis_root, f4, root_position, root_to_weight, torus_prime, F4_DIM, POSITIVE_ROOT_ORDER};

pub const WEYL_ORDER: usize = 1152;

/// Minimal-index representatives of the 25 conjugacy classes.
pub const CLASS_REPRESENTATIVES: [usize; 25] =
    [1, 2, 3, 4, 7, 8, 9, 10, 14, 15, 28, 30, 42, 55, 56, 78, 103, 104, 105, 106, 110, 114, 142, 405, 748];

/// Elements whose lifts give nontoral quasitori A(j, id).
pub const NONTORAL_INDICES: [usize; 5] = [3, 15, 105, 106, 405];

/// Orders of the surrogate roots of unity that may stand in for a generic
/// point of a one-dimensional torus factor, smallest first.
pub const SURROGATE_ORDERS: [i64; 3] = [8, 12, 24];

/// Change of basis for the action on t'_{xyzu}: B = m sigma m^-1.
pub const TORUS_CHANGE: [[i64; 4]; 4] = [[0, 0, 0, 1], [-1, -1, -2, -1], [1, 2, 2, 1], [0, 0, -1, 0]];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("index {0} outside 1..=1152")]
    BadIndex(usize),
    #[error("lift of sigma_{0} is not an automorphism")]
    PropagationInconsistency(usize),
    #[error("torus generator of order {0} needs roots of unity outside Q(z24)")]
    UnsupportedOrder(i64),
    #[error("no surrogate root of unity separates a weight spread of {0}")]
    SurrogateSpread(i64),
}

/// The four simple reflections; row i is the image of alpha_i.
pub fn simple_reflections() -> [IntMatrix; 4] {
    [
        IntMatrix::from_array([[-1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
        IntMatrix::from_array([[1, 1, 0, 0], [0, -1, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]]),
        IntMatrix::from_array([[1, 0, 0, 0], [0, 1, 2, 0], [0, 0, -1, 0], [0, 0, 1, 1]]),
        IntMatrix::from_array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, -1]]),
    ]
}

/// Closure of the simple reflections, sorted lexicographically by the
/// row-major entries.
pub fn generate_weyl() -> Vec<IntMatrix> {
    let gens = simple_reflections();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut queue: VecDeque<IntMatrix> = VecDeque::from([IntMatrix::identity(4)]);
    while let Some(m) = queue.pop_front() {
        if !seen.insert(m.entries().to_vec()) {
            continue;
        }
        for g in &gens {
            queue.push_back(m.mul(g));
        }
        out.push(m);
    }
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    out
}

/// One conjugacy class of W.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub order: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// The enumerated group with index lookup; indices are 1-based.
#[derive(Debug)]
pub struct WeylGroup {
    elements: Vec<IntMatrix>,
    lookup: HashMap<Vec<i64>, usize>,
}

impl WeylGroup {
    pub fn new() -> Self {
        let elements = generate_weyl();
        let lookup = elements.iter().enumerate().map(|(k, m)| (m.entries().to_vec(), k + 1)).collect();
        WeylGroup { elements, lookup }
    }

    /// Accepts a stored enumeration only if it is sorted, contains the
    /// identity and is closed under the simple reflections, which forces
    /// it to be all of W in the same order.
    pub fn from_elements(elements: Vec<IntMatrix>) -> Option<Self> {
        let sorted = elements.windows(2).all(|w| w[0].entries() < w[1].entries());
        if elements.len() != WEYL_ORDER || !sorted || elements.iter().any(|m| m.rows() != 4 || m.cols() != 4) {
            return None;
        }
        let lookup: HashMap<Vec<i64>, usize> =
            elements.iter().enumerate().map(|(k, m)| (m.entries().to_vec(), k + 1)).collect();
        let gens = simple_reflections();
        let closed = elements.iter().all(|m| gens.iter().all(|g| lookup.contains_key(m.mul(g).entries())));
        let w = WeylGroup { elements, lookup };
        (closed && w.index_of(&IntMatrix::identity(4)).is_some()).then_some(w)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, j: usize) -> Result<&IntMatrix, WeylError> {
        j.checked_sub(1).and_then(|k| self.elements.get(k)).ok_or(WeylError::BadIndex(j))
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.lookup.get(m.entries()).copied()
    }

    /// Index of sigma_i sigma_j.
    pub fn product(&self, i: usize, j: usize) -> Result<usize, WeylError> {
        let m = self.element(i)?.mul(self.element(j)?);
        Ok(self.index_of(&m).expect("W is closed"))
    }

    pub fn inverse(&self, j: usize) -> Result<usize, WeylError> {
        let m = self.element(j)?;
        let inv = m.unimodular_inverse().expect("Weyl matrices are unimodular");
        Ok(self.index_of(&inv).expect("W is closed"))
    }

    pub fn order(&self, j: usize) -> Result<usize, WeylError> {
        let m = self.element(j)?;
        let mut p = m.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.mul(m);
            k += 1;
        }
        Ok(k)
    }

    pub fn identity_index(&self) -> usize {
        self.index_of(&IntMatrix::identity(4)).expect("identity")
    }

    /// Classes by orbit expansion under conjugation by the generators,
    /// sorted by representative, which is the least index in the class.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let gens = simple_reflections();
        let mut class_of = vec![usize::MAX; self.len()];
        let mut classes = Vec::new();
        for start in 0..self.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start + 1];
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(k) = queue.pop_front() {
                for s in &gens {
                    // reflections are involutions
                    let c = s.mul(&self.elements[k]).mul(s);
                    let ci = self.index_of(&c).expect("W is closed") - 1;
                    if class_of[ci] == usize::MAX {
                        class_of[ci] = id;
                        members.push(ci + 1);
                        queue.push_back(ci);
                    }
                }
            }
            members.sort_unstable();
            let order = self.order(start + 1).expect("valid index");
            classes.push(ConjugacyClass { representative: start + 1, order, members });
        }
        classes
    }

    /// Number of elements of each order, sorted by order.
    pub fn order_counts(&self) -> Vec<(usize, usize)> {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for j in 1..=self.len() {
            *counts.entry(self.order(j).expect("valid index")).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// Exponent matrix B = m sigma_j m^-1 of the action on t'_{xyzu}.
    pub fn torus_matrix(&self, j: usize) -> Result<IntMatrix, WeylError> {
        let m = IntMatrix::from_array(TORUS_CHANGE);
        let inv = m.unimodular_inverse().expect("the change of basis is unimodular");
        Ok(m.mul(self.element(j)?).mul(&inv))
    }

    /// sigma_j . t'_{xyzu} = t'_{x'y'z'u'} with x' = prod t_k^{B_1k}, etc.
    pub fn torus_action(&self, j: usize, t: &TorusPoint) -> Result<TorusPoint, WeylError> {
        let b = self.torus_matrix(j)?;
        Ok(TorusPoint(std::array::from_fn(|i| (0..4).fold(CycNum::ONE, |acc, k| acc * t.0[k].powi(b[(i, k)])))))
    }

    /// Structure of the fixed points T^{sigma_j}.
    pub fn fixed_subgroup_structure(&self, j: usize) -> Result<AbelianGroupDescriptor, WeylError> {
        let b = self.torus_matrix(j)?;
        Ok(multiplicative_kernel_structure(&b.sub(&IntMatrix::identity(4))))
    }

    /// Indices i with sigma_i . t = t for every given point.
    pub fn stabilizer_indices(&self, points: &[TorusPoint]) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| points.iter().all(|t| self.torus_action(i, t).expect("valid index") == *t))
            .collect()
    }

    /// Indices commuting with sigma_j.
    pub fn centralizer(&self, j: usize) -> Result<Vec<usize>, WeylError> {
        let s = self.element(j)?;
        Ok((1..=self.len()).filter(|&i| self.elements[i - 1].mul(s) == s.mul(&self.elements[i - 1])).collect())
    }
}

impl Default for WeylGroup {
    fn default() -> Self {
        Self::new()
    }
}

/// The enumeration, read from the cache directory when a valid table is
/// stored there.
pub fn weyl() -> &'static WeylGroup {
    static W: OnceLock<WeylGroup> = OnceLock::new();
    W.get_or_init(|| crate::cache::cache_dir().and_then(|d| crate::cache::cached_weyl(&d)).unwrap_or_default())
}

/// A point (x, y, z, u) of the maximal torus, standing for t'_{xyzu}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusPoint(pub [CycNum; 4]);

impl TorusPoint {
    pub fn identity() -> Self {
        TorusPoint([CycNum::ONE; 4])
    }

    /// Point with coordinates zeta_24^{e_k}.
    pub fn from_exponents(e: [i64; 4]) -> Self {
        TorusPoint(e.map(CycNum::zeta))
    }

    pub fn map(&self) -> AlgebraMap {
        let [x, y, z, u] = self.0;
        torus_prime(x, y, z, u)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, u] = self.0;
        write!(f, "({x},{y},{z},{u})")
    }
}

fn unit(n: usize, k: usize) -> Vec<Q> {
    let mut v = vec![Q::ZERO; n];
    v[k] = Q::ONE;
    v
}

fn simple(i: usize) -> [i64; 4] {
    std::array::from_fn(|k| (k == i) as i64)
}

fn sub_root(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    std::array::from_fn(|k| a[k] - b[k])
}

/// Image of a root (coordinates in the simple roots) under sigma.
fn act_on_root(sigma: &IntMatrix, m: [i64; 4]) -> [i64; 4] {
    let v = sigma.vec_mul(&m);
    [v[0], v[1], v[2], v[3]]
}

/// Scalar c with v = c e_k, if any.
fn multiple_of_unit(v: &[Q], k: usize) -> Option<Q> {
    v.iter().enumerate().all(|(i, x)| i == k || x.is_zero()).then_some(v[k])
}

/// Ratio c with a = c b for vectors, if any.
fn ratio(a: &[Q], b: &[Q]) -> Option<Q> {
    let k = b.iter().position(|x| !x.is_zero())?;
    let c = a[k] / b[k];
    a.iter().zip(b).all(|(&x, &y)| x == c * y).then_some(c)
}

/// The lift sigma~ in the basis B' as a rational matrix: the Cartan block
/// sends t_{alpha_i} to t_{sigma(alpha_i)}, simple root vectors go to the
/// basis vectors of their image roots, and the rest follows from the
/// bracket relations, height by height.
pub fn lift_matrix(sigma: &IntMatrix) -> Option<QMatrix> {
    let table = f4().table();
    let n = F4_DIM;
    let mut cols: Vec<Option<Vec<Q>>> = vec![None; n];
    for (i, col) in cols.iter_mut().enumerate().take(4) {
        let mut v = vec![Q::ZERO; n];
        for (k, x) in v.iter_mut().enumerate().take(4) {
            *x = Q::int(sigma[(i, k)]);
        }
        *col = Some(v);
    }
    for i in 0..4 {
        let from = root_position(simple(i))?;
        let to = root_position(act_on_root(sigma, simple(i)))?;
        cols[from] = Some(unit(n, to));
    }
    let bracket = |a: &[Q], b: &[Q]| table.mul(a, b);
    // positive roots by height, then negative roots by height
    for sign in [1i64, -1] {
        for base in POSITIVE_ROOT_ORDER {
            let alpha = base.map(|x| sign * x);
            let pos = root_position(alpha)?;
            if cols[pos].is_some() {
                continue;
            }
            let height: i64 = base.iter().sum();
            if height == 1 {
                // negative simple root: [v_a, v_-a] is a Cartan element
                let pa = root_position(base)?;
                let h = bracket(&unit(n, pa), &unit(n, pos));
                let target: Vec<Q> = {
                    let c = cols[..4].iter().map(|c| c.as_ref().expect("Cartan block"));
                    let mut t = vec![Q::ZERO; n];
                    for (k, ck) in c.enumerate() {
                        if !h[k].is_zero() {
                            for (tx, &x) in t.iter_mut().zip(ck) {
                                *tx += h[k] * x;
                            }
                        }
                    }
                    t
                };
                let image_pos = root_position(act_on_root(sigma, alpha))?;
                let image_simple = cols[pa].as_ref()?;
                let w = bracket(image_simple, &unit(n, image_pos));
                let lambda = ratio(&target, &w)?;
                let mut v = unit(n, image_pos);
                v[image_pos] = lambda;
                cols[pos] = Some(v);
                continue;
            }
            let i = (0..4).find(|&i| {
                let beta = sub_root(alpha, simple(i).map(|x| sign * x));
                root_position(beta).is_some()
            })?;
            let step = simple(i).map(|x| sign * x);
            let beta = sub_root(alpha, step);
            let (pb, ps) = (root_position(beta)?, root_position(step)?);
            let c = multiple_of_unit(&bracket(&unit(n, pb), &unit(n, ps)), pos)?;
            if c.is_zero() {
                return None;
            }
            let img = bracket(cols[pb].as_ref()?, cols[ps].as_ref()?);
            let inv = c.inv();
            cols[pos] = Some(img.into_iter().map(|x| x * inv).collect());
        }
    }
    let cols: Vec<Vec<Q>> = cols.into_iter().collect::<Option<_>>()?;
    Some(QMatrix::from_columns(n, &cols))
}

/// sigma_j~, certified as an automorphism of f4.
pub fn extend_to_automorphism(j: usize) -> Result<AlgebraMap, WeylError> {
    let sigma = weyl().element(j)?;
    let m = lift_matrix(sigma).ok_or(WeylError::PropagationInconsistency(j))?;
    if !is_automorphism_q(f4().table(), &m) {
        return Err(WeylError::PropagationInconsistency(j));
    }
    Ok(AlgebraMap::new(format!("s{j}~"), m.to_cyc()))
}

/// Cached lifts, keyed by index.
pub fn lift(j: usize) -> Result<AlgebraMap, WeylError> {
    static CACHE: OnceLock<std::sync::Mutex<HashMap<usize, AlgebraMap>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().expect("lift cache").get(&j) {
        return Ok(m.clone());
    }
    let m = extend_to_automorphism(j)?;
    cache.lock().expect("lift cache").insert(j, m.clone());
    Ok(m)
}

/// Largest minus smallest exponent of s over the roots, for the
/// one-parameter subgroup t'_{s^{w}}.
pub fn weight_spread(w: &[i64]) -> i64 {
    let values: Vec<i64> = (0..F4_DIM)
        .map(|k| match basis_root(k) {
            None => 0,
            Some(m) => root_to_weight(m).iter().zip(w).map(|(a, b)| a * b).sum(),
        })
        .collect();
    values.iter().max().expect("nonempty") - values.iter().min().expect("nonempty")
}

pub fn surrogate_order(spread: i64) -> Result<i64, WeylError> {
    SURROGATE_ORDERS.into_iter().find(|&d| d > spread).ok_or(WeylError::SurrogateSpread(spread))
}

/// Finite generators of T^{sigma_j} as torus maps, with each
/// one-dimensional factor replaced by its point at a root of unity of
/// the least order in [`SURROGATE_ORDERS`] exceeding its weight spread,
/// so that it has the same eigenspaces on f4 as a generic point.
pub fn fixed_torus_generators(j: usize) -> Result<Vec<TorusPoint>, WeylError> {
    let b = weyl().torus_matrix(j)?;
    let gens = multiplicative_kernel_generators(&b.sub(&IntMatrix::identity(4)));
    let mut out = Vec::new();
    for (d, w) in &gens.finite {
        if 24 % d != 0 {
            return Err(WeylError::UnsupportedOrder(*d));
        }
        let step = 24 / d;
        out.push(TorusPoint::from_exponents(std::array::from_fn(|k| w[k] * step)));
    }
    for w in &gens.free {
        let spread = weight_spread(w);
        let order = surrogate_order(spread)?;
        let step = 24 / order;
        out.push(TorusPoint::from_exponents(std::array::from_fn(|k| w[k] * step)));
    }
    Ok(out)
}

/// Generators of A(j, t): sigma_j~ t'_t followed by the generators of
/// T^{sigma_j}.
pub fn quasitorus_a(j: usize, t: &TorusPoint) -> Result<Vec<AlgebraMap>, WeylError> {
    let s = lift(j)?;
    let head = if *t == TorusPoint::identity() { s } else { s.compose(&t.map()) };
    let mut out = vec![head];
    out.extend(fixed_torus_generators(j)?.iter().map(TorusPoint::map));
    Ok(out)
}

/// The order lemma's condition (sigma~_j t)^m = sigma~_j^m, with m the
/// order of sigma_j, on the given torus points.
pub fn order_lemma_holds(j: usize, samples: &[TorusPoint]) -> Result<bool, WeylError> {
    let m = weyl().order(j)? as u64;
    let s = lift(j)?;
    let target = s.pow(m).matrix;
    Ok(samples.iter().all(|t| s.compose(&t.map()).pow(m).matrix == target))
}

/// g1 = t'_{-1,1,-1,1}, g2 = t'_{1,-1,-1,1}, g3 = sigma~_105, g4 = t'_{1,1,1,-1}.
pub fn appendix_generators() -> Result<[AlgebraMap; 4], WeylError> {
    let sign = |a: [i64; 4]| TorusPoint(a.map(CycNum::int)).map();
    Ok([sign([-1, 1, -1, 1]), sign([1, -1, -1, 1]), lift(105)?, sign([1, 1, 1, -1])])
}

/// Rows of the conjugation table: index j and the printed words for
/// f g1 f^-1, f g2 f^-1, f g3 f^-1.
pub const APPENDIX_ROWS: [(usize, [&str; 3]); 5] = [
    (94, ["g1g2", "g2g4", "g3"]),
    (103, ["g1g4", "g2", "g3"]),
    (468, ["g2", "g1", "g3"]),
    (485, ["g2", "g1", "g3g4"]),
    (491, ["g1g2", "g1g4", "g3g4"]),
];

/// The product of a subset of g1..g4 equal to `m`, as a word like "g1g4".
pub fn express_in_generators(m: &AlgebraMap, gens: &[AlgebraMap; 4]) -> Option<String> {
    (0..16u32).find_map(|mask| {
        let mut p = AlgebraMap::identity(F4_DIM);
        let mut word = String::new();
        for (k, g) in gens.iter().enumerate() {
            if mask >> k & 1 == 1 {
                p = p.compose(g);
                word.push_str(&format!("g{}", k + 1));
            }
        }
        (p.matrix == m.matrix).then(|| if word.is_empty() { "1".to_string() } else { word })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixRow {
    pub j: usize,
    pub printed: [String; 3],
    pub computed: [Option<String>; 3],
    /// f t'_{1,1,1,u} f^-1 = t'_{1,1,1,u} for the sampled u.
    pub fixes_u: bool,
}

impl AppendixRow {
    pub fn exact(&self) -> bool {
        self.printed.iter().zip(&self.computed).all(|(p, c)| c.as_deref() == Some(p.as_str()))
    }

    /// Agreement on the two torus columns, and the third column lies in
    /// the coset g3 T.
    pub fn agrees_modulo_torus(&self) -> bool {
        self.printed[..2].iter().zip(&self.computed[..2]).all(|(p, c)| c.as_deref() == Some(p.as_str()))
            && self.computed[2].as_deref().is_some_and(|w| w.contains("g3"))
    }
}

/// Conjugation by the element f of N acting on T as sigma_j does under the
/// printed action, which is the lift of sigma_j^-1.
pub fn appendix_row(j: usize, printed: [&str; 3]) -> Result<AppendixRow, WeylError> {
    let gens = appendix_generators()?;
    let f = lift(weyl().inverse(j)?)?;
    let fi = f.inverse().expect("automorphisms are invertible");
    let conj = |g: &AlgebraMap| f.compose(g).compose(&fi);
    let computed = std::array::from_fn(|k| express_in_generators(&conj(&gens[k]), &gens));
    let fixes_u = [1, 5, 7].iter().all(|&e| {
        let u = TorusPoint([CycNum::ONE, CycNum::ONE, CycNum::ONE, CycNum::zeta(e)]).map();
        conj(&u).matrix == u.matrix
    });
    Ok(AppendixRow { j, printed: printed.map(str::to_string), computed, fixes_u })
}

pub fn appendix_table() -> Result<Vec<AppendixRow>, WeylError> {
    APPENDIX_ROWS.iter().map(|&(j, p)| appendix_row(j, p)).collect()
}

/// Bounded search for psi with psi g1 psi^-1 = g1, psi g2 psi^-1 = g3 and
/// psi g3 psi^-1 = g2 among sigma~_j t, t of order at most 2 in T. None is
/// inconclusive: psi need not lie in this finite set.
pub fn search_psi() -> Result<Option<AlgebraMap>, WeylError> {
    let gens = appendix_generators()?;
    let signs: Vec<TorusPoint> = (0..16)
        .map(|mask: u32| TorusPoint(std::array::from_fn(|k| CycNum::int(if mask >> k & 1 == 1 { -1 } else { 1 }))))
        .collect();
    for j in 1..=WEYL_ORDER {
        let s = lift(j)?;
        let si = s.inverse().expect("automorphisms are invertible");
        // torus elements only contribute diagonal factors, so the image of
        // g2 is toral unless sigma~_j already moves it off the torus
        let image = s.compose(&gens[1]).compose(&si);
        if image.matrix.nnz() == F4_DIM && (0..F4_DIM).all(|k| !image.matrix[(k, k)].is_zero()) {
            continue;
        }
        for t in &signs {
            let f = s.compose(&t.map());
            let fi = f.inverse().expect("automorphisms are invertible");
            let conj = |g: &AlgebraMap| f.compose(g).compose(&fi).matrix;
            if conj(&gens[0]) == gens[0].matrix && conj(&gens[1]) == gens[2].matrix && conj(&gens[2]) == gens[1].matrix
            {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
