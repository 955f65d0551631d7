//! Colour classes, sunflower auditing and the conflict hypergraph.
//!
//! A set of vertices is rainbow when all of its k-edges carry pairwise
//! distinct colours. Two distinct edges `A`, `B` of one colour can never both
//! sit inside a rainbow set, so `A ∪ B` is recorded as a conflict edge; a
//! vertex set is rainbow exactly when it contains no conflict edge.

use indexmap::IndexMap;
use serde::Serialize;

use crate::colour::{ColorKey, Colouring};
use crate::error::{Error, Result};
use crate::subsets::{binomial, for_each_ksubset_of, Budget, GroundSet, KSubsets};

/// Edges grouped by colour, in order of first appearance.
pub type ColourClasses = IndexMap<ColorKey, Vec<Vec<usize>>>;

pub(crate) fn check_domain<C: Colouring + ?Sized>(c: &C, ground: &GroundSet) -> Result<usize> {
    let k = c.spec().k;
    if ground.len() > c.vertex_count() {
        return Err(Error::Parameter(format!(
            "ground set of {} vertices exceeds the colouring's {} vertices",
            ground.len(),
            c.vertex_count()
        )));
    }
    if k > ground.len() {
        return Err(Error::Parameter(format!(
            "edge size k = {k} exceeds ground size N = {}",
            ground.len()
        )));
    }
    Ok(k)
}

/// Groups every k-subset of the ground set by its colour.
pub fn colour_classes<C: Colouring + ?Sized>(
    c: &C,
    ground: &GroundSet,
    budget: &Budget,
) -> Result<ColourClasses> {
    let k = check_domain(c, ground)?;
    budget.check(binomial(ground.len() as u64, k as u64))?;
    let mut classes = ColourClasses::new();
    for edge in KSubsets::new(ground.len(), k) {
        let key = c.colour(&edge);
        classes.entry(key).or_default().push(edge);
    }
    Ok(classes)
}

/// Colour classes of the k-subsets of an arbitrary vertex list.
pub(crate) fn colour_classes_of<C: Colouring + ?Sized>(
    c: &C,
    vertices: &[usize],
    budget: &Budget,
) -> Result<ColourClasses> {
    let k = c.spec().k;
    budget.check(binomial(vertices.len() as u64, k as u64))?;
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    let mut classes = ColourClasses::new();
    for_each_ksubset_of(&sorted, k, |edge| {
        classes.entry(c.colour(edge)).or_default().push(edge.to_vec());
    });
    Ok(classes)
}

/// Worst monochromatic h-sunflower: `petals` edges of colour `colour`, all
/// containing `core`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SunflowerReport {
    pub core: Vec<usize>,
    #[serde(serialize_with = "serialize_key")]
    pub colour: ColorKey,
    pub petals: u64,
    pub witness_edges: Vec<Vec<usize>>,
}

fn serialize_key<S: serde::Serializer>(key: &ColorKey, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&key.to_hex())
}

/// Largest number of same-coloured edges through a common h-subset.
///
/// Ties go to the (core, colour) pair met first when scanning edges in
/// lexicographic order and cores in lexicographic order within each edge.
pub fn max_monochromatic_sunflower<C: Colouring + ?Sized>(
    c: &C,
    ground: &GroundSet,
    h: usize,
    budget: &Budget,
) -> Result<SunflowerReport> {
    let k = check_domain(c, ground)?;
    if h >= k {
        return Err(Error::Parameter(format!("core size h = {h} must be < k = {k}")));
    }
    let n_edges = binomial(ground.len() as u64, k as u64);
    budget.check(n_edges.saturating_mul(binomial(k as u64, h as u64)))?;

    let mut counts: IndexMap<(Vec<usize>, ColorKey), u64> = IndexMap::new();
    for edge in KSubsets::new(ground.len(), k) {
        let key = c.colour(&edge);
        for_each_ksubset_of(&edge, h, |core| {
            *counts.entry((core.to_vec(), key.clone())).or_insert(0) += 1;
        });
    }

    let mut best: Option<(&(Vec<usize>, ColorKey), u64)> = None;
    for (entry, &count) in &counts {
        if best.map_or(true, |(_, b)| count > b) {
            best = Some((entry, count));
        }
    }
    let ((core, colour), petals) = best.ok_or_else(|| Error::Invariant("no edges enumerated".into()))?;

    let witness_edges: Vec<Vec<usize>> = KSubsets::new(ground.len(), k)
        .filter(|e| core.iter().all(|v| e.contains(v)))
        .filter(|e| c.colour(e) == *colour)
        .collect();
    debug_assert_eq!(witness_edges.len() as u64, petals);

    Ok(SunflowerReport {
        core: core.clone(),
        colour: colour.clone(),
        petals,
        witness_edges,
    })
}

/// Checks the declared petal bound; the report is returned either way.
pub fn validate_lambda<C: Colouring + ?Sized>(
    c: &C,
    ground: &GroundSet,
    budget: &Budget,
) -> Result<(bool, SunflowerReport)> {
    let spec = c.spec();
    let report = max_monochromatic_sunflower(c, ground, spec.h, budget)?;
    Ok((report.petals <= spec.lambda, report))
}

/// A monochromatic pair of distinct k-edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ConflictPair {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

/// A conflict edge `A ∪ B` with every monochromatic pair that produces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConflictEdge {
    pub vertices: Vec<usize>,
    pub pairs: Vec<ConflictPair>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConflictHypergraph {
    pub ground: usize,
    pub k: usize,
    pub edges: Vec<ConflictEdge>,
}

impl ConflictHypergraph {
    /// Total number of generating pairs.
    pub fn pair_count(&self) -> usize {
        self.edges.iter().map(|e| e.pairs.len()).sum()
    }

    /// True when `subset` contains some generating pair `A, B`.
    pub fn has_conflict_within(&self, subset: &[usize]) -> bool {
        let mut inside = vec![false; self.ground];
        for &v in subset {
            inside[v] = true;
        }
        self.edges
            .iter()
            .any(|e| e.vertices.iter().all(|&v| inside[v]))
    }
}

pub(crate) fn union_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut u = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                u.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                u.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                u.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    u.extend_from_slice(&a[i..]);
    u.extend_from_slice(&b[j..]);
    u
}

/// Number of monochromatic pairs implied by a set of colour classes.
pub fn pair_count(classes: &ColourClasses) -> u128 {
    classes
        .values()
        .map(|edges| binomial(edges.len() as u64, 2))
        .sum()
}

pub(crate) fn conflicts_from_classes(
    ground: usize,
    k: usize,
    classes: &ColourClasses,
    budget: &Budget,
) -> Result<ConflictHypergraph> {
    budget.check(pair_count(classes))?;
    let mut by_union: IndexMap<Vec<usize>, Vec<ConflictPair>> = IndexMap::new();
    for edges in classes.values() {
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                by_union.entry(union_sorted(a, b)).or_default().push(ConflictPair {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
    }
    Ok(ConflictHypergraph {
        ground,
        k,
        edges: by_union
            .into_iter()
            .map(|(vertices, pairs)| ConflictEdge { vertices, pairs })
            .collect(),
    })
}

/// Conflict edges `A ∪ B` for all monochromatic pairs, deduplicated by vertex set.
pub fn build_conflict_hypergraph<C: Colouring + ?Sized>(
    c: &C,
    ground: &GroundSet,
    budget: &Budget,
) -> Result<ConflictHypergraph> {
    let classes = colour_classes(c, ground, budget)?;
    conflicts_from_classes(ground.len(), c.spec().k, &classes, budget)
}

/// `C(N,k)·C(k,h)·λ·C(N−k, k−h)`: the conflict-pair count suggested by
/// choosing `A`, a core inside `A`, a petal index and the rest of `B`.
///
/// This is not a valid bound for every colouring: when `h > k − h` a single
/// colour class can hold on the order of `N^h` edges pairwise meeting in
/// fewer than `h` vertices. See [`conflict_pair_bound`].
pub fn heuristic_pair_bound(n: u64, k: u64, h: u64, lambda: u64) -> u128 {
    binomial(n, k)
        .saturating_mul(binomial(k, h))
        .saturating_mul(lambda as u128)
        .saturating_mul(binomial(n.saturating_sub(k), k - h))
}

/// Upper bound on the number of monochromatic pairs of any colouring whose
/// h-sunflowers have at most `lambda` petals.
///
/// Fix `A`. Every `B` of the same colour contains `C(k,h)` cores, and each
/// of the `C(N,h)` cores lies in at most `lambda` edges of that colour, so `A`
/// has at most `lambda·C(N,h)/C(k,h) − 1` partners.
pub fn conflict_pair_bound(n: u64, k: u64, h: u64, lambda: u64) -> u128 {
    let per_edge = (lambda as u128).saturating_mul(binomial(n, h)) / binomial(k, h);
    binomial(n, k).saturating_mul(per_edge.saturating_sub(1)) / 2
}
