use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::ConflictHypergraph;

/// Default cap on the number of conflict edges scanned for short cycles.
pub const DEFAULT_CYCLE_EDGE_BUDGET: usize = 400;

fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect()
}

/// Whether distinct vertices `v_i ∈ e_i ∩ e_{i+1}` can be chosen along the cycle.
fn has_distinct_links(links: &[Vec<usize>], taken: &mut Vec<usize>) -> bool {
    let i = taken.len();
    if i == links.len() {
        return true;
    }
    for &v in &links[i] {
        if !taken.contains(&v) {
            taken.push(v);
            if has_distinct_links(links, taken) {
                taken.pop();
                return true;
            }
            taken.pop();
        }
    }
    false
}

/// Berge cycles of length 2..=`max_len` among the deduplicated conflict edges.
///
/// A cycle of length ℓ is a cyclic sequence of ℓ distinct edges admitting ℓ
/// distinct vertices `v_i ∈ e_i ∩ e_{i+1}`. Each cyclic edge sequence is
/// counted once regardless of starting point, direction or how many vertex
/// choices realise it; for ℓ = 2 this is the number of edge pairs sharing at
/// least two vertices.
pub fn count_short_cycles(
    hg: &ConflictHypergraph,
    max_len: usize,
    edge_budget: usize,
) -> Result<BTreeMap<usize, u64>> {
    if !(2..=4).contains(&max_len) {
        return Err(Error::Parameter(format!("max_len = {max_len} must lie in 2..=4")));
    }
    let m = hg.edges.len();
    if m > edge_budget {
        return Err(Error::Resource {
            budget: "cycle diagnostic edges",
            needed: m as u128,
            limit: edge_budget as u128,
        });
    }
    let edges: Vec<&[usize]> = hg.edges.iter().map(|e| e.vertices.as_slice()).collect();
    let mut shared: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); m]; m];
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            let s = intersection(edges[i], edges[j]);
            if !s.is_empty() {
                adjacent[i].push(j);
                adjacent[j].push(i);
            }
            shared[i][j] = s.clone();
            shared[j][i] = s;
        }
    }

    let mut counts: BTreeMap<usize, u64> = (2..=max_len).map(|l| (l, 0)).collect();
    for i in 0..m {
        for j in i + 1..m {
            if shared[i][j].len() >= 2 {
                *counts.get_mut(&2).unwrap() += 1;
            }
        }
    }

    // Longer cycles: the smallest edge index starts the sequence and the
    // second edge has a smaller index than the last, fixing rotation and
    // direction.
    let mut path = Vec::with_capacity(max_len);
    let mut taken = Vec::with_capacity(max_len);
    for start in 0..m {
        path.clear();
        path.push(start);
        extend_paths(start, &adjacent, &shared, max_len, &mut path, &mut taken, &mut counts);
    }
    Ok(counts)
}

fn extend_paths(
    start: usize,
    adjacent: &[Vec<usize>],
    shared: &[Vec<Vec<usize>>],
    max_len: usize,
    path: &mut Vec<usize>,
    taken: &mut Vec<usize>,
    counts: &mut BTreeMap<usize, u64>,
) {
    let last = *path.last().unwrap();
    for &next in &adjacent[last] {
        if next <= start || path.contains(&next) {
            continue;
        }
        path.push(next);
        let len = path.len();
        if len >= 3 && path[1] < next && !shared[next][start].is_empty() {
            let links: Vec<Vec<usize>> = (0..len)
                .map(|i| shared[path[i]][path[(i + 1) % len]].clone())
                .collect();
            taken.clear();
            if has_distinct_links(&links, taken) {
                *counts.get_mut(&len).unwrap() += 1;
            }
        }
        if len < max_len {
            extend_paths(start, adjacent, shared, max_len, path, taken, counts);
        }
        path.pop();
    }
}
