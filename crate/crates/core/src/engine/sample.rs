use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{verify_rainbow, Algorithm, RainbowResult, RunStats};
use crate::colour::Colouring;
use crate::error::{Error, Result};
use crate::hypergraph::{check_domain, colour_classes_of, pair_count, union_sorted};
use crate::subsets::{Budget, GroundSet};

/// Multiplier applied to the balancing probability by default.
pub const DEFAULT_SHRINK: f64 = 0.5;

/// Parameters of one sample-and-delete run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplePlan {
    pub n: usize,
    pub k: usize,
    pub h: usize,
    pub p: f64,
    pub seed: u64,
    pub shrink: f64,
}

impl SamplePlan {
    /// `p = shrink · N^(−(k+h−1)/(2k−1))`, the probability at which the
    /// expected number of surviving conflicts (≈ p^(2k) N^(k+h)) matches the
    /// expected number of surviving vertices (pN), scaled down by `shrink`.
    pub fn new(n: usize, k: usize, h: usize, seed: u64, shrink: f64) -> Result<Self> {
        if !(shrink > 0.0 && shrink <= 1.0) {
            return Err(Error::Parameter(format!("shrink = {shrink} must lie in (0, 1]")));
        }
        if n == 0 || k == 0 || h >= k {
            return Err(Error::Parameter(format!("invalid plan shape N={n}, k={k}, h={h}")));
        }
        let exponent = (k + h - 1) as f64 / (2 * k - 1) as f64;
        let p = (shrink * (n as f64).powf(-exponent)).clamp(f64::MIN_POSITIVE, 1.0);
        Ok(SamplePlan { n, k, h, p, seed, shrink })
    }

    /// Same plan with an explicit sampling probability.
    pub fn with_probability(mut self, p: f64) -> Result<Self> {
        self.p = p;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.p > 0.0 && self.p <= 1.0) {
            return Err(Error::Parameter(format!("sampling probability p = {} must lie in (0, 1]", self.p)));
        }
        Ok(())
    }
}

/// Keeps each vertex with probability `plan.p`, then removes one vertex from
/// every monochromatic pair that survived, always taking the vertex that
/// lies in the most surviving pairs (smallest id on ties).
pub fn sample_and_delete<C: Colouring + ?Sized>(
    c: &C,
    ground: &GroundSet,
    plan: &SamplePlan,
    budget: &Budget,
) -> Result<RainbowResult> {
    let start = Instant::now();
    check_domain(c, ground)?;
    plan.validate()?;
    if plan.n != ground.len() || plan.k != c.spec().k {
        return Err(Error::Parameter(format!(
            "plan for N={}, k={} does not match instance N={}, k={}",
            plan.n,
            plan.k,
            ground.len(),
            c.spec().k
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
    let kept: Vec<usize> = ground
        .vertices()
        .filter(|_| rng.gen::<f64>() < plan.p)
        .collect();
    let sampled_out = (ground.len() - kept.len()) as u64;

    // Pairs among the survivors are exactly the full pairs restricted to them.
    let classes = colour_classes_of(c, &kept, budget)?;
    budget.check(pair_count(&classes))?;
    let mut pair_vertices: Vec<Vec<usize>> = Vec::new();
    for edges in classes.values() {
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                pair_vertices.push(union_sorted(a, b));
            }
        }
    }
    let surviving_pairs = pair_vertices.len() as u64;
    let surviving_edges = {
        let mut unions = pair_vertices.clone();
        unions.sort_unstable();
        unions.dedup();
        unions.len() as u64
    };

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); ground.len()];
    for (p, verts) in pair_vertices.iter().enumerate() {
        for &v in verts {
            incident[v].push(p);
        }
    }
    let mut degree: Vec<usize> = incident.iter().map(Vec::len).collect();
    let mut queue: BTreeSet<(Reverse<usize>, usize)> = kept
        .iter()
        .filter(|&&v| degree[v] > 0)
        .map(|&v| (Reverse(degree[v]), v))
        .collect();
    let mut pair_alive = vec![true; pair_vertices.len()];
    let mut vertex_alive = vec![false; ground.len()];
    for &v in &kept {
        vertex_alive[v] = true;
    }

    let mut deleted = 0u64;
    while let Some((_, v)) = queue.pop_first() {
        vertex_alive[v] = false;
        deleted += 1;
        for &p in &incident[v] {
            if !std::mem::replace(&mut pair_alive[p], false) {
                continue;
            }
            for &u in &pair_vertices[p] {
                if u == v || !vertex_alive[u] {
                    continue;
                }
                queue.remove(&(Reverse(degree[u]), u));
                degree[u] -= 1;
                if degree[u] > 0 {
                    queue.insert((Reverse(degree[u]), u));
                }
            }
        }
        degree[v] = 0;
    }

    let subset: Vec<usize> = kept.into_iter().filter(|&v| vertex_alive[v]).collect();
    let verified = verify_rainbow(c, &subset, budget)?;
    if !verified {
        return Err(Error::Invariant("sample-and-delete produced a non-rainbow set".into()));
    }
    Ok(RainbowResult {
        subset,
        algorithm: Algorithm::SampleDelete,
        seed: Some(plan.seed),
        verified,
        stats: RunStats {
            vertices_sampled_out: Some(sampled_out),
            conflict_pairs_after_sampling: Some(surviving_pairs),
            conflict_edges_after_sampling: Some(surviving_edges),
            vertices_deleted_by_hand: Some(deleted),
            runtime: start.elapsed(),
            ..RunStats::default()
        },
    })
}
