//! Algorithms that extract rainbow subsets, and the diagnostics around them.

mod bench;
mod cycles;
mod exact;
mod exponent;
mod greedy;
mod sample;
mod verify;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use bench::{run_trials, write_bench_csv, BenchRecord, BENCH_CSV_HEADER};
pub use cycles::{count_short_cycles, DEFAULT_CYCLE_EDGE_BUDGET};
pub use exact::{exact_max_rainbow, OracleLimits};
pub use exponent::{estimate_exponent, ExponentFit};
pub use greedy::{greedy_rainbow, GreedyOrder};
pub use sample::{sample_and_delete, SamplePlan, DEFAULT_SHRINK};
pub use verify::verify_rainbow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Greedy,
    SampleDelete,
    Exact,
}

impl Algorithm {
    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Greedy => "greedy",
            Algorithm::SampleDelete => "sample_delete",
            Algorithm::Exact => "exact",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "greedy" => Ok(Algorithm::Greedy),
            "sample_delete" | "sample-delete" => Ok(Algorithm::SampleDelete),
            "exact" => Ok(Algorithm::Exact),
            other => Err(Error::Parameter(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// Counters collected while an algorithm runs.
///
/// Wall-clock time is kept out of the serialized form so that result files
/// of seeded runs are reproducible byte for byte.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunStats {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertices_sampled_out: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conflict_pairs_after_sampling: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conflict_edges_after_sampling: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertices_deleted_by_hand: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertices_rejected: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub search_nodes: Option<u64>,
    #[serde(skip)]
    pub runtime: Duration,
}

/// A vertex subset together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowResult {
    pub subset: Vec<usize>,
    pub algorithm: Algorithm,
    pub seed: Option<u64>,
    pub verified: bool,
    pub stats: RunStats,
}

impl RainbowResult {
    pub fn size(&self) -> usize {
        self.subset.len()
    }
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `trial` under `master`: the `trial`-th output of a
/// SplitMix64 stream started at `master`. Every trial's RNG is then
/// `ChaCha8Rng::seed_from_u64(trial_seed(master, trial))`.
pub fn trial_seed(master: u64, trial: u64) -> u64 {
    splitmix64(master.wrapping_add(trial.wrapping_mul(GOLDEN_GAMMA)))
}
