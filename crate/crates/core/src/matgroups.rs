//! Matrix groups over prime fields acting on row vectors.
//!
//! Groups are fully enumerated. Orbits, stabilizers, bases and irreducibility
//! are computed by scanning the whole vector space `F_p^dim`, which is small
//! for every group handled here.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Pow;

use crate::error::{Error, Result};
use crate::exact::BigNat;
use crate::group::FiniteGroup;
use crate::matrix::{FieldVector, Matrix, Subspace};

/// Default bound on enumerated group orders.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Externally known facts about a group, taken from a catalog.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GroupMetadata {
    pub label: Option<String>,
    pub claimed_order: Option<u64>,
    pub solvable: Option<bool>,
    pub fitting_order: Option<u64>,
    pub frattini_order: Option<u64>,
    pub completely_reducible: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct MatGroup {
    p: u32,
    dim: usize,
    group: FiniteGroup<Matrix>,
    pub metadata: GroupMetadata,
}

impl MatGroup {
    /// Closes `generators` (invertible, all over `F_p` of dimension `dim`).
    ///
    /// An empty generator list gives the trivial group.
    pub fn close(p: u32, dim: usize, generators: &[Matrix], cap: usize) -> Result<Self> {
        let identity = Matrix::identity(p, dim);
        for (i, g) in generators.iter().enumerate() {
            if g.p() != p || g.dim() != dim {
                return Err(Error::InvalidInput(format!(
                    "generator {i} lives in GL({}, {}), expected GL({dim}, {p})",
                    g.dim(),
                    g.p()
                )));
            }
            if !g.is_invertible() {
                return Err(Error::SingularGenerator { index: i });
            }
        }
        let group = FiniteGroup::close(identity, generators, cap)?;
        Ok(MatGroup {
            p,
            dim,
            group,
            metadata: GroupMetadata::default(),
        })
    }

    pub fn with_metadata(mut self, metadata: GroupMetadata) -> Result<Self> {
        if let Some(claimed) = metadata.claimed_order {
            if claimed != self.order() as u64 {
                return Err(Error::Inconsistent(format!(
                    "closure has order {}, metadata claims {claimed}",
                    self.order()
                )));
            }
        }
        self.metadata = metadata;
        Ok(self)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &FiniteGroup<Matrix> {
        &self.group
    }

    pub fn generators(&self) -> Vec<Matrix> {
        self.group.generator_elements()
    }

    pub fn elements(&self) -> &[Matrix] {
        self.group.elements()
    }

    /// `p^dim`.
    pub fn space_size(&self) -> usize {
        (self.p as usize).pow(self.dim as u32)
    }

    pub fn vector(&self, index: usize) -> FieldVector {
        FieldVector::from_index(index, self.p, self.dim)
    }

    pub fn vectors(&self) -> impl Iterator<Item = FieldVector> + '_ {
        (0..self.space_size()).map(|i| self.vector(i))
    }

    /// Vector-index permutations induced by each generator.
    fn generator_actions(&self) -> Vec<Vec<u32>> {
        self.generators()
            .iter()
            .map(|g| self.vectors().map(|v| v.act(g).index() as u32).collect())
            .collect()
    }
}

/// `|GL(n, p)| = ∏ (p^n - p^i)`.
pub fn gl_order(n: usize, p: u32) -> BigNat {
    let q = BigNat::from(p);
    let pn: BigNat = Pow::pow(&q, n as u32);
    (0..n).map(|i| &pn - Pow::pow(&q, i as u32)).product()
}

fn primitive_root(p: u32) -> u32 {
    (1..p)
        .find(|&g| (1..p - 1).all(|k| crate::matrix::pow_mod(g as u64, k as u64, p as u64) != 1))
        .unwrap_or(1)
}

/// Elementary transvections `I + E_ij`, which generate `SL(n, p)`.
pub fn sl_generators(n: usize, p: u32) -> Result<Vec<Matrix>> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut rows: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| (r == c) as i64).collect()).collect();
                rows[i][j] = 1;
                gens.push(Matrix::from_rows(p, &rows)?);
            }
        }
    }
    Ok(gens)
}

/// Transvections plus `diag(ω, 1, .., 1)` for a primitive root `ω`.
pub fn gl_generators(n: usize, p: u32) -> Result<Vec<Matrix>> {
    let mut gens = Vec::new();
    let w = primitive_root(p);
    if w != 1 {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| match (r, c) {
                        (0, 0) => w as i64,
                        _ => (r == c) as i64,
                    })
                    .collect()
            })
            .collect();
        gens.push(Matrix::from_rows(p, &rows)?);
    }
    gens.extend(sl_generators(n, p)?);
    Ok(gens)
}

pub fn general_linear(n: usize, p: u32, cap: usize) -> Result<MatGroup> {
    MatGroup::close(p, n, &gl_generators(n, p)?, cap)
}

pub fn special_linear(n: usize, p: u32, cap: usize) -> Result<MatGroup> {
    MatGroup::close(p, n, &sl_generators(n, p)?, cap)
}

pub fn trivial_group(p: u32, dim: usize) -> Result<MatGroup> {
    MatGroup::close(p, dim, &[], 1)
}

/// Block-diagonal action of `g × h` on `U ⊕ W`.
pub fn direct_sum(g: &MatGroup, h: &MatGroup, cap: usize) -> Result<MatGroup> {
    if g.p != h.p {
        return Err(Error::InvalidInput(format!(
            "mixed characteristic {} and {} is not representable as one matrix group",
            g.p, h.p
        )));
    }
    let id_u = Matrix::identity(g.p, g.dim);
    let id_w = Matrix::identity(h.p, h.dim);
    let mut gens = Vec::new();
    for a in g.generators() {
        gens.push(Matrix::block_diag(&a, &id_w)?);
    }
    for b in h.generators() {
        gens.push(Matrix::block_diag(&id_u, &b)?);
    }
    MatGroup::close(g.p, g.dim + h.dim, &gens, cap)
}

/// Imprimitive wreath product `G ≀ Sym(k)` on `U^k`.
///
/// Generated by `G` in the first block together with a transposition and a
/// `k`-cycle of blocks.
pub fn wreath(g: &MatGroup, k: usize, cap: usize) -> Result<MatGroup> {
    if k == 0 {
        return Err(Error::InvalidInput("wreath product needs k >= 1".into()));
    }
    let mut gens = Vec::new();
    for a in g.generators() {
        gens.push(Matrix::embed_block(&a, 0, k)?);
    }
    if k >= 2 {
        let mut swap: Vec<usize> = (0..k).collect();
        swap.swap(0, 1);
        gens.push(Matrix::block_permutation(g.p, g.dim, &swap)?);
        if k >= 3 {
            let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
            gens.push(Matrix::block_permutation(g.p, g.dim, &cycle)?);
        }
    }
    MatGroup::close(g.p, g.dim * k, &gens, cap)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: FieldVector,
    pub size: usize,
}

/// Orbit decomposition of `F_p^dim`, representatives least in
/// lexicographic order, listed by representative.
pub fn orbits(g: &MatGroup) -> Vec<Orbit> {
    orbit_labels(g).1
}

/// For every vector index, the position of its orbit in the returned list.
pub fn orbit_labels(g: &MatGroup) -> (Vec<u32>, Vec<Orbit>) {
    let n = g.space_size();
    let actions = g.generator_actions();
    let mut label = vec![u32::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if label[start] != u32::MAX {
            continue;
        }
        let id = out.len() as u32;
        label[start] = id;
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for act in &actions {
                let y = act[x] as usize;
                if label[y] == u32::MAX {
                    label[y] = id;
                    queue.push(y);
                }
            }
        }
        out.push(Orbit {
            representative: g.vector(start),
            size: queue.len(),
        });
    }
    (label, out)
}

/// `|{g : v·g = v}|` counted element by element.
pub fn stabilizer_order(g: &MatGroup, v: &FieldVector) -> usize {
    g.elements().iter().filter(|m| v.act(m) == *v).count()
}

/// Ascending orbit sizes.
pub fn orbit_sizes(g: &MatGroup) -> Vec<usize> {
    let mut sizes: Vec<usize> = orbits(g).iter().map(|o| o.size).collect();
    sizes.sort_unstable();
    sizes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralizerExponent {
    /// `|C_G(v)|^2 <= |G|`.
    Half,
    /// `|C_G(v)|^3 <= |G|^2`.
    TwoThirds,
}

impl CentralizerExponent {
    pub fn admits(self, centralizer: usize, order: usize) -> bool {
        let c = centralizer as u128;
        let o = order as u128;
        match self {
            CentralizerExponent::Half => c * c <= o,
            CentralizerExponent::TwoThirds => c * c * c <= o * o,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CentralizerExponent::Half => "1/2",
            CentralizerExponent::TwoThirds => "2/3",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerScan {
    /// Smallest vector centralizer, with the lexicographically first vector
    /// attaining it.
    pub min_vector: FieldVector,
    pub min_centralizer: usize,
    /// `Some` iff some vector satisfies the bound; it is the minimizer.
    pub witness: Option<(FieldVector, usize)>,
}

/// Full scan for a vector with `|C_G(v)| <= |G|^ε`.
pub fn small_centralizer_witness(g: &MatGroup, eps: CentralizerExponent) -> CentralizerScan {
    let order = g.order();
    let orbs = orbits(g);
    // Orbit representatives are the least vectors of their orbits, so the
    // first minimizing orbit gives the lexicographically first minimizer.
    let best = orbs
        .iter()
        .min_by_key(|o| (order / o.size, o.representative.index()))
        .expect("the zero orbit always exists");
    let min_centralizer = order / best.size;
    let witness = eps
        .admits(min_centralizer, order)
        .then_some((best.representative, min_centralizer));
    CentralizerScan {
        min_vector: best.representative,
        min_centralizer,
        witness,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseWitness {
    pub vectors: Vec<FieldVector>,
    pub pointwise_stabilizer_order: usize,
}

impl BaseWitness {
    /// Recounts the pointwise stabilizer over every element.
    pub fn recheck(&self, g: &MatGroup) -> usize {
        g.elements()
            .iter()
            .filter(|m| self.vectors.iter().all(|v| v.act(m) == *v))
            .count()
    }
}

/// Smallest `k <= limit` admitting `k` vectors with trivial pointwise
/// stabilizer, with the lexicographically first such tuple.
pub fn min_base_size(g: &MatGroup, limit: usize) -> Result<Option<(usize, BaseWitness)>> {
    if limit > 4 {
        return Err(Error::InvalidInput(format!("base size limit {limit} exceeds 4")));
    }
    let all: Vec<usize> = (0..g.order()).collect();
    if all.len() == 1 {
        return Ok(Some((
            0,
            BaseWitness {
                vectors: Vec::new(),
                pointwise_stabilizer_order: 1,
            },
        )));
    }
    for k in 1..=limit {
        let mut chosen = Vec::new();
        if base_search(g, &all, k, &mut chosen) {
            let witness = BaseWitness {
                vectors: chosen,
                pointwise_stabilizer_order: 1,
            };
            return Ok(Some((k, witness)));
        }
    }
    Ok(None)
}

fn base_search(g: &MatGroup, stab: &[usize], remaining: usize, chosen: &mut Vec<FieldVector>) -> bool {
    for v in g.vectors() {
        let next: Vec<usize> = stab
            .iter()
            .copied()
            .filter(|&e| v.act(g.group.element(e)) == v)
            .collect();
        // A vector fixed by the whole current stabilizer never helps.
        if next.len() == stab.len() {
            continue;
        }
        chosen.push(v);
        if next.len() == 1 {
            return true;
        }
        if remaining > 1 && base_search(g, &next, remaining - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseClassCount {
    /// Ordered pairs `(u, w)` with trivial joint stabilizer.
    pub base_pairs: usize,
    /// `G`-orbits on those pairs.
    pub classes: usize,
    /// Every orbit on base pairs had size `|G|`.
    pub all_regular: bool,
}

/// Number of `G`-orbits on ordered size-2 bases.
///
/// Counted twice: as `base_pairs / |G|` and by walking the orbits on pairs;
/// disagreement is an error.
pub fn count_size2_base_classes(g: &MatGroup) -> Result<BaseClassCount> {
    let n = g.space_size();
    let order = g.order();
    let mut is_base = vec![false; n * n];
    let mut base_pairs = 0;
    for u in 0..n {
        let vu = g.vector(u);
        let stab: Vec<&Matrix> = g.elements().iter().filter(|m| vu.act(m) == vu).collect();
        for w in 0..n {
            let vw = g.vector(w);
            if stab.iter().filter(|m| vw.act(m) == vw).count() == 1 {
                is_base[u * n + w] = true;
                base_pairs += 1;
            }
        }
    }
    let actions = g.generator_actions();
    let mut seen = vec![false; n * n];
    let mut classes = 0;
    let mut all_regular = true;
    for start in 0..n * n {
        if !is_base[start] || seen[start] {
            continue;
        }
        classes += 1;
        seen[start] = true;
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let (u, w) = (x / n, x % n);
            for act in &actions {
                let y = act[u] as usize * n + act[w] as usize;
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        all_regular &= queue.len() == order;
    }
    if base_pairs % order != 0 || base_pairs / order != classes {
        return Err(Error::Inconsistent(format!(
            "{base_pairs} base pairs, |G| = {order}, but {classes} orbits"
        )));
    }
    Ok(BaseClassCount {
        base_pairs,
        classes,
        all_regular,
    })
}

/// No proper nonzero invariant subspace: the submodule spun from every
/// nonzero vector is the whole space.
pub fn is_irreducible(g: &MatGroup) -> bool {
    let gens = g.generators();
    g.vectors().filter(|v| !v.is_zero()).all(|v| {
        let mut span = Subspace::new(g.p, g.dim);
        let mut queue = vec![v];
        span.insert(&v);
        while let Some(x) = queue.pop() {
            if span.is_full() {
                break;
            }
            for m in &gens {
                let y = x.act(m);
                if span.insert(&y) {
                    queue.push(y);
                }
            }
        }
        span.is_full()
    })
}
