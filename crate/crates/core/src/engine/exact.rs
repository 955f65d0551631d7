use std::collections::HashMap;
use std::time::Instant;

use super::{greedy_rainbow, verify_rainbow, Algorithm, GreedyOrder, RainbowResult, RunStats};
use crate::colour::Colouring;
use crate::error::{Error, Result};
use crate::hypergraph::check_domain;
use crate::subsets::{binomial, next_combination, rank_ksubset, Budget, GroundSet, KSubsets};

/// Largest ground sets the exact search accepts, by edge size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n_k1: usize,
    pub max_n_k2: usize,
    pub max_n_k3: usize,
    pub max_n_larger_k: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n_k1: 24,
            max_n_k2: 20,
            max_n_k3: 14,
            max_n_larger_k: 12,
        }
    }
}

impl OracleLimits {
    pub fn max_n(&self, k: usize) -> usize {
        match k {
            1 => self.max_n_k1,
            2 => self.max_n_k2,
            3 => self.max_n_k3,
            _ => self.max_n_larger_k,
        }
    }
}

struct Search<'a> {
    n: usize,
    k: usize,
    order: Vec<usize>,
    colour_of: &'a [u32],
    used: Vec<bool>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    idx: Vec<usize>,
    edge: Vec<usize>,
}

impl Search<'_> {
    /// Colour ids of the edges `v` would add, or None on a clash.
    fn new_colours(&mut self, v: usize) -> Option<Vec<u32>> {
        let mut fresh = Vec::new();
        if self.chosen.len() + 1 < self.k {
            return Some(fresh);
        }
        self.idx.clear();
        self.idx.extend(0..self.k - 1);
        loop {
            self.edge.clear();
            self.edge.extend(self.idx.iter().map(|&i| self.chosen[i]));
            self.edge.push(v);
            self.edge.sort_unstable();
            let colour = self.colour_of[rank_ksubset(&self.edge, self.n)];
            if self.used[colour as usize] || fresh.contains(&colour) {
                return None;
            }
            fresh.push(colour);
            if !next_combination(&mut self.idx, self.chosen.len()) {
                return Some(fresh);
            }
        }
    }

    fn run(&mut self, depth: usize) {
        self.nodes += 1;
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if depth == self.order.len() || self.chosen.len() + (self.order.len() - depth) <= self.best.len() {
            return;
        }
        let v = self.order[depth];
        if let Some(fresh) = self.new_colours(v) {
            for &c in &fresh {
                self.used[c as usize] = true;
            }
            self.chosen.push(v);
            self.run(depth + 1);
            self.chosen.pop();
            for &c in &fresh {
                self.used[c as usize] = false;
            }
        }
        self.run(depth + 1);
    }
}

/// Maximum-cardinality rainbow subset by branch and bound over vertex
/// inclusion, vertices taken in decreasing conflict degree.
pub fn exact_max_rainbow<C: Colouring + ?Sized>(
    c: &C,
    ground: &GroundSet,
    limits: &OracleLimits,
    budget: &Budget,
) -> Result<RainbowResult> {
    let start = Instant::now();
    let k = check_domain(c, ground)?;
    let n = ground.len();
    if n > limits.max_n(k) {
        return Err(Error::Resource {
            budget: "exact oracle ground size",
            needed: n as u128,
            limit: limits.max_n(k) as u128,
        });
    }
    budget.check(binomial(n as u64, k as u64))?;

    // Intern colours; edges are stored by lexicographic rank.
    let mut ids = HashMap::new();
    let mut colour_of = Vec::new();
    for edge in KSubsets::new(n, k) {
        let next = ids.len() as u32;
        colour_of.push(*ids.entry(c.colour(&edge)).or_insert(next));
    }
    let mut class_size = vec![0u64; ids.len()];
    for &col in &colour_of {
        class_size[col as usize] += 1;
    }
    // conflict degree: number of same-coloured partners over edges through v
    let mut degree = vec![0u64; n];
    for (rank, edge) in KSubsets::new(n, k).enumerate() {
        let partners = class_size[colour_of[rank] as usize] - 1;
        for &v in &edge {
            degree[v] += partners;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));

    let seed_solution = greedy_rainbow(c, ground, &GreedyOrder::Natural, budget)?.subset;
    let mut search = Search {
        n,
        k,
        order,
        colour_of: &colour_of,
        used: vec![false; ids.len()],
        chosen: Vec::new(),
        best: seed_solution,
        nodes: 0,
        idx: Vec::with_capacity(k),
        edge: Vec::with_capacity(k),
    };
    search.run(0);

    let mut subset = search.best;
    subset.sort_unstable();
    let verified = verify_rainbow(c, &subset, budget)?;
    if !verified {
        return Err(Error::Invariant("exact search produced a non-rainbow set".into()));
    }
    Ok(RainbowResult {
        subset,
        algorithm: Algorithm::Exact,
        seed: None,
        verified,
        stats: RunStats {
            search_nodes: Some(search.nodes),
            runtime: start.elapsed(),
            ..RunStats::default()
        },
    })
}
