use std::collections::HashSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{verify_rainbow, Algorithm, RainbowResult, RunStats};
use crate::colour::{ColorKey, Colouring};
use crate::error::{Error, Result};
use crate::hypergraph::check_domain;
use crate::subsets::{next_combination, Budget, GroundSet};

/// Order in which the greedy pass visits vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOrder {
    Natural,
    /// Uniform random permutation drawn from `ChaCha8Rng::seed_from_u64(seed)`.
    Seeded(u64),
    Given(Vec<usize>),
}

impl GreedyOrder {
    fn resolve(&self, n: usize) -> Result<Vec<usize>> {
        match self {
            GreedyOrder::Natural => Ok((0..n).collect()),
            GreedyOrder::Seeded(seed) => {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed));
                Ok(order)
            }
            GreedyOrder::Given(order) => {
                let mut seen = vec![false; n];
                if order.len() != n {
                    return Err(Error::Parameter(format!(
                        "order has {} entries, ground set has {n}",
                        order.len()
                    )));
                }
                for &v in order {
                    if v >= n || std::mem::replace(&mut seen[v], true) {
                        return Err(Error::Parameter("order is not a permutation of the ground set".into()));
                    }
                }
                Ok(order.clone())
            }
        }
    }
}

/// Adds vertices one at a time, keeping each one whose new edges bring only
/// fresh, pairwise distinct colours.
///
/// The output is maximal for the given order: rainbowness is inherited by
/// subsets, so a vertex rejected early stays rejected.
pub fn greedy_rainbow<C: Colouring + ?Sized>(
    c: &C,
    ground: &GroundSet,
    order: &GreedyOrder,
    budget: &Budget,
) -> Result<RainbowResult> {
    let start = Instant::now();
    let k = check_domain(c, ground)?;
    let seed = match order {
        GreedyOrder::Seeded(s) => Some(*s),
        _ => None,
    };
    let order = order.resolve(ground.len())?;

    let mut chosen: Vec<usize> = Vec::new();
    let mut used: HashSet<ColorKey> = HashSet::new();
    let mut fresh: Vec<ColorKey> = Vec::new();
    let mut idx: Vec<usize> = Vec::with_capacity(k);
    let mut edge: Vec<usize> = Vec::with_capacity(k);
    let mut rejected = 0u64;

    for &v in &order {
        fresh.clear();
        let mut ok = true;
        if chosen.len() + 1 >= k {
            idx.clear();
            idx.extend(0..k - 1);
            loop {
                edge.clear();
                edge.extend(idx.iter().map(|&i| chosen[i]));
                edge.push(v);
                edge.sort_unstable();
                let key = c.colour(&edge);
                // tentative insert; rolled back below if v is rejected
                if !used.insert(key.clone()) {
                    ok = false;
                    break;
                }
                fresh.push(key);
                if !next_combination(&mut idx, chosen.len()) {
                    break;
                }
            }
        }
        if ok {
            chosen.push(v);
        } else {
            for key in fresh.drain(..) {
                used.remove(&key);
            }
            rejected += 1;
        }
    }

    chosen.sort_unstable();
    let verified = verify_rainbow(c, &chosen, budget)?;
    if !verified {
        return Err(Error::Invariant("greedy produced a non-rainbow set".into()));
    }
    Ok(RainbowResult {
        subset: chosen,
        algorithm: Algorithm::Greedy,
        seed,
        verified,
        stats: RunStats {
            vertices_rejected: Some(rejected),
            runtime: start.elapsed(),
            ..RunStats::default()
        },
    })
}
