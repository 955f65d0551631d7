use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    exact_max_rainbow, greedy_rainbow, sample_and_delete, trial_seed, Algorithm, GreedyOrder,
    OracleLimits, RainbowResult, SamplePlan,
};
use crate::colour::Colouring;
use crate::error::Result;
use crate::subsets::{Budget, GroundSet};

pub const BENCH_CSV_HEADER: &str = "N,k,h,lambda,colouring,algorithm,trial,seed,rainbow_size,runtime_ms";

/// One trial of one algorithm on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    #[serde(rename = "N")]
    pub n: u64,
    pub k: usize,
    pub h: usize,
    pub lambda: u64,
    pub colouring: String,
    pub algorithm: String,
    pub trial: u64,
    pub seed: u64,
    pub rainbow_size: usize,
    pub runtime_ms: f64,
}

fn run_one<C: Colouring + ?Sized>(
    c: &C,
    ground: &GroundSet,
    algorithm: Algorithm,
    seed: u64,
    shrink: f64,
    budget: &Budget,
) -> Result<RainbowResult> {
    let spec = c.spec();
    match algorithm {
        Algorithm::Greedy => greedy_rainbow(c, ground, &GreedyOrder::Seeded(seed), budget),
        Algorithm::SampleDelete => {
            let plan = SamplePlan::new(ground.len(), spec.k, spec.h, seed, shrink)?;
            sample_and_delete(c, ground, &plan, budget)
        }
        Algorithm::Exact => exact_max_rainbow(c, ground, &OracleLimits::default(), budget),
    }
}

/// Runs `trials` independent trials in parallel. Trial `t` uses seed
/// `trial_seed(master_seed, t)`; records come back ordered by trial, so the
/// output does not depend on the number of worker threads.
pub fn run_trials<C: Colouring + ?Sized>(
    c: &C,
    ground: &GroundSet,
    algorithm: Algorithm,
    trials: u64,
    master_seed: u64,
    shrink: f64,
    budget: &Budget,
) -> Result<Vec<BenchRecord>> {
    let spec = c.spec();
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let seed = trial_seed(master_seed, trial);
            let start = Instant::now();
            let result = run_one(c, ground, algorithm, seed, shrink, budget)?;
            Ok(BenchRecord {
                n: ground.len() as u64,
                k: spec.k,
                h: spec.h,
                lambda: spec.lambda,
                colouring: c.label().to_string(),
                algorithm: algorithm.as_str().to_string(),
                trial,
                seed,
                rainbow_size: result.size(),
                runtime_ms: start.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect()
}

/// Writes records as CSV with the header [`BENCH_CSV_HEADER`].
pub fn write_bench_csv<W: Write>(out: W, records: &[BenchRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    if records.is_empty() {
        w.write_record(BENCH_CSV_HEADER.split(','))?;
    }
    w.flush()?;
    Ok(())
}
