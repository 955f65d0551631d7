use std::collections::HashSet;

use crate::colour::Colouring;
use crate::error::{Error, Result};
use crate::subsets::{binomial, for_each_ksubset_of, Budget};

/// True iff all k-edges inside `subset` have pairwise distinct colours.
pub fn verify_rainbow<C: Colouring + ?Sized>(c: &C, subset: &[usize], budget: &Budget) -> Result<bool> {
    let k = c.spec().k;
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Parameter("subset contains repeated vertices".into()));
    }
    if let Some(&v) = sorted.last() {
        if v >= c.vertex_count() {
            return Err(Error::Parameter(format!("vertex {v} outside the colouring's domain")));
        }
    }
    if sorted.len() < k {
        return Ok(true);
    }
    budget.check(binomial(sorted.len() as u64, k as u64))?;
    let mut seen = HashSet::new();
    let mut rainbow = true;
    for_each_ksubset_of(&sorted, k, |edge| {
        if rainbow && !seen.insert(c.colour(edge)) {
            rainbow = false;
        }
    });
    Ok(rainbow)
}
