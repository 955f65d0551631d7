#[path = "../../validation/src/lib.rs"]
mod common;

use std::sync::Arc;

use proptest::prelude::*;

use common::{brute_is_rainbow, random_case, ColourTable};
use rainbow_core::engine::{
    exact_max_rainbow, greedy_rainbow, run_trials, sample_and_delete, trial_seed, verify_rainbow, Algorithm,
    GreedyOrder, OracleLimits, SamplePlan, DEFAULT_SHRINK,
};
use rainbow_core::algebra::{sidon_colouring, IntegerInstance};
use rainbow_core::{Budget, Colouring, ColouringSpec, FnColouring, GroundSet, InjectiveColouring};

fn ground(c: &dyn Colouring) -> GroundSet {
    GroundSet::new(c.vertex_count()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_output_is_rainbow(case in 0u64..10_000, seed in any::<u64>()) {
        let case = random_case(case);
        let c = case.colouring.as_ref();
        let g = ground(c);
        let b = Budget::default();
        let spec = c.spec();
        let plan = SamplePlan::new(g.len(), spec.k, spec.h, seed, DEFAULT_SHRINK).unwrap().with_probability(0.7).unwrap();
        let outs = [
            greedy_rainbow(c, &g, &GreedyOrder::Seeded(seed), &b).unwrap(),
            sample_and_delete(c, &g, &plan, &b).unwrap(),
            exact_max_rainbow(c, &g, &OracleLimits::default(), &b).unwrap(),
        ];
        for r in &outs {
            prop_assert!(r.verified);
            prop_assert!(brute_is_rainbow(c, &r.subset), "{} {:?}", r.algorithm.as_str(), r.subset);
            prop_assert!(r.subset.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn exact_matches_exhaustive_search(case in 0u64..10_000) {
        let case = random_case(case);
        let c = case.colouring.as_ref();
        prop_assume!(c.vertex_count() <= 10);
        let r = exact_max_rainbow(c, &ground(c), &OracleLimits::default(), &Budget::default()).unwrap();
        prop_assert_eq!(r.size(), ColourTable::new(c).max_rainbow());
    }

    #[test]
    fn verify_agrees_with_brute_force(case in 0u64..10_000, mask in any::<u16>()) {
        let case = random_case(case);
        let c = case.colouring.as_ref();
        let s: Vec<usize> = (0..c.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(verify_rainbow(c, &s, &Budget::default()).unwrap(), brute_is_rainbow(c, &s));
    }

    #[test]
    fn greedy_is_maximal_for_any_order(case in 0u64..10_000, seed in any::<u64>()) {
        let case = random_case(case);
        let c = case.colouring.as_ref();
        let r = greedy_rainbow(c, &ground(c), &GreedyOrder::Seeded(seed), &Budget::default()).unwrap();
        for v in (0..c.vertex_count()).filter(|v| !r.subset.contains(v)) {
            let mut bigger = r.subset.clone();
            bigger.push(v);
            prop_assert!(!brute_is_rainbow(c, &bigger));
        }
    }

    #[test]
    fn seeded_runs_repeat(case in 0u64..10_000, seed in any::<u64>()) {
        let case = random_case(case);
        let c = case.colouring.as_ref();
        let g = ground(c);
        let b = Budget::default();
        let spec = c.spec();
        let plan = SamplePlan::new(g.len(), spec.k, spec.h, seed, 1.0).unwrap();
        prop_assert_eq!(
            greedy_rainbow(c, &g, &GreedyOrder::Seeded(seed), &b).unwrap().subset,
            greedy_rainbow(c, &g, &GreedyOrder::Seeded(seed), &b).unwrap().subset
        );
        prop_assert_eq!(
            sample_and_delete(c, &g, &plan, &b).unwrap().subset,
            sample_and_delete(c, &g, &plan, &b).unwrap().subset
        );
    }

    /// Restricting to the first N − 1 vertices never increases the optimum.
    #[test]
    fn oracle_is_monotone(case in 0u64..10_000) {
        let case = random_case(case);
        let n = case.n();
        let spec = case.colouring.spec();
        prop_assume!(n > spec.k);
        let full: Arc<dyn Colouring> = Arc::from(case.colouring);
        let inner = Arc::clone(&full);
        let smaller = FnColouring::new(n - 1, spec, "prefix", move |e: &[usize]| inner.colour(e));
        let limits = OracleLimits::default();
        let b = Budget::default();
        let big = exact_max_rainbow(full.as_ref(), &GroundSet::new(n).unwrap(), &limits, &b).unwrap();
        let small = exact_max_rainbow(&smaller, &GroundSet::new(n - 1).unwrap(), &limits, &b).unwrap();
        prop_assert!(small.size() <= big.size());
    }
}

#[test]
fn full_probability_without_conflicts_keeps_everything() {
    for (n, k) in [(9, 2), (8, 3), (6, 4)] {
        let c = InjectiveColouring::new(n, ColouringSpec::new(k, k - 1, 1).unwrap());
        let g = GroundSet::new(n).unwrap();
        let plan = SamplePlan::new(n, k, k - 1, 5, DEFAULT_SHRINK).unwrap().with_probability(1.0).unwrap();
        let r = sample_and_delete(&c, &g, &plan, &Budget::default()).unwrap();
        assert_eq!(r.subset, (0..n).collect::<Vec<_>>());
        assert_eq!(r.stats.conflict_edges_after_sampling, Some(0));
        assert_eq!(r.stats.vertices_deleted_by_hand, Some(0));
    }
}

#[test]
fn trials_do_not_depend_on_worker_count() {
    let case = random_case(3);
    let c = case.colouring.as_ref();
    let g = ground(c);
    let run = || {
        let mut recs = run_trials(c, &g, Algorithm::Greedy, 12, 99, DEFAULT_SHRINK, &Budget::default()).unwrap();
        for r in &mut recs {
            r.runtime_ms = 0.0;
        }
        recs
    };
    let reference = run();
    assert_eq!(reference.iter().map(|r| r.trial).collect::<Vec<_>>(), (0..12).collect::<Vec<_>>());
    assert!(reference.iter().all(|r| r.seed == trial_seed(99, r.trial)));
    for threads in [1, 2, 5] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        assert_eq!(pool.install(run), reference);
    }
}

#[test]
fn oracle_limits_are_resource_errors() {
    let c = InjectiveColouring::new(30, ColouringSpec::new(3, 2, 1).unwrap());
    let err = exact_max_rainbow(&c, &GroundSet::new(30).unwrap(), &OracleLimits::default(), &Budget::default()).unwrap_err();
    assert!(err.is_resource());
}

#[test]
fn sidon_range_default_plan_regression() {
    let c = sidon_colouring(&IntegerInstance::range(100));
    let g = GroundSet::new(100).unwrap();
    let plan = SamplePlan::new(100, 2, 1, 1, DEFAULT_SHRINK).unwrap();
    assert!((plan.p - 0.5 * 100f64.powf(-2.0 / 3.0)).abs() < 1e-15);
    let r = sample_and_delete(&c, &g, &plan, &Budget::default()).unwrap();
    // frozen: 99 of 100 values sampled out, value 24 survives
    assert_eq!(r.subset, vec![23]);
    assert_eq!(r.stats.vertices_sampled_out, Some(99));
    assert_eq!(r.stats.vertices_deleted_by_hand, Some(0));
    assert!(r.verified);
}

#[test]
fn verify_small_sidon_sets() {
    let c = sidon_colouring(&IntegerInstance::range(5));
    let b = Budget::default();
    assert!(verify_rainbow(&c, &[0, 1, 4], &b).unwrap());
    assert!(!verify_rainbow(&c, &[0, 1, 2], &b).unwrap());
}
