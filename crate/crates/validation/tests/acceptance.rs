//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use rainbow_validation::{brute_is_rainbow, brute_max_b2, pairwise_sunflower_oracle, random_case, random_elements, random_field, random_sympoly, random_table, rng, subsets_of};
use rainbow_core::algebra::{poly_colouring, poly_prepare, sidon_colouring, Field, IntegerInstance, SymPoly};
use rainbow_core::engine::{
    estimate_exponent, exact_max_rainbow, greedy_rainbow, run_trials, sample_and_delete, Algorithm, BenchRecord,
    GreedyOrder, OracleLimits, RainbowResult, SamplePlan, DEFAULT_SHRINK,
};
use rainbow_core::geometry::{
    circumradius_colouring, generate_general_position, similarity_canonical_form, similarity_colouring,
    squared_circumradius, squared_volume, volume_colouring, RationalPoint,
};
use rainbow_core::hypergraph::{max_monochromatic_sunflower, validate_lambda};
use rainbow_core::io::{to_json_line, ResultFile};
use rainbow_core::{Budget, Colouring, GroundSet};

type Outcome = Result<String, String>;

const SOUNDNESS_CASES: u64 = 500;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Every algorithm run on one instance: greedy in natural and seeded order,
/// sample-and-delete at the default probability and at p = 1/2 and p = 1,
/// and the exact oracle.
fn run_all<C: Colouring + ?Sized>(c: &C, seed: u64) -> Vec<RainbowResult> {
    let g = GroundSet::new(c.vertex_count()).unwrap();
    let b = Budget::default();
    let spec = c.spec();
    let mut out = vec![
        greedy_rainbow(c, &g, &GreedyOrder::Natural, &b).unwrap(),
        greedy_rainbow(c, &g, &GreedyOrder::Seeded(seed), &b).unwrap(),
    ];
    let plan = SamplePlan::new(g.len(), spec.k, spec.h, seed, DEFAULT_SHRINK).unwrap();
    out.push(sample_and_delete(c, &g, &plan, &b).unwrap());
    for p in [0.5, 1.0] {
        let plan = plan.clone().with_probability(p).unwrap();
        out.push(sample_and_delete(c, &g, &plan, &b).unwrap());
    }
    out.push(exact_max_rainbow(c, &g, &OracleLimits::default(), &b).unwrap());
    out
}

fn criterion_1() -> Outcome {
    let mut runs = 0;
    let mut by_family: HashMap<&str, usize> = HashMap::new();
    for i in 0..SOUNDNESS_CASES {
        let case = random_case(i);
        *by_family.entry(case.family).or_default() += 1;
        for r in run_all(case.colouring.as_ref(), i) {
            runs += 1;
            if !r.verified || !brute_is_rainbow(case.colouring.as_ref(), &r.subset) {
                return Err(format!("case {i} ({}): {} returned non-rainbow {:?}", case.family, r.algorithm.as_str(), r.subset));
            }
        }
    }
    let mut families: Vec<String> = by_family.iter().map(|(f, n)| format!("{f}={n}")).collect();
    families.sort();
    Ok(format!("{runs} runs on {SOUNDNESS_CASES} instances verified ({})", families.join(" ")))
}

fn criterion_2() -> Outcome {
    let mut maximal_checks = 0;
    for i in 0..SOUNDNESS_CASES {
        let case = random_case(i);
        let c = case.colouring.as_ref();
        let results = run_all(c, i);
        let exact = results.iter().find(|r| r.algorithm == Algorithm::Exact).unwrap().size();
        for r in &results {
            if r.size() > exact {
                return Err(format!("case {i} ({}): {} size {} beats exact {exact}", case.family, r.algorithm.as_str(), r.size()));
            }
            if r.algorithm != Algorithm::Greedy {
                continue;
            }
            for v in (0..c.vertex_count()).filter(|v| !r.subset.contains(v)) {
                let mut bigger = r.subset.clone();
                bigger.push(v);
                maximal_checks += 1;
                if brute_is_rainbow(c, &bigger) {
                    return Err(format!("case {i} ({}): greedy output {:?} extends by {v}", case.family, r.subset));
                }
            }
        }
    }
    Ok(format!("oracle dominates on {SOUNDNESS_CASES} instances; {maximal_checks} greedy extensions rejected"))
}

fn criterion_3() -> Outcome {
    let b = Budget::default();
    for i in 0..200u64 {
        let mut r = rng(0x5afe_0000 + i);
        let k = r.gen_range(1..=3usize);
        let h = r.gen_range(0..k);
        let n = r.gen_range(k..=10usize);
        let m = subsets_of(&(0..n).collect::<Vec<_>>(), k).len() as u64;
        let palette = r.gen_range(1..=m.max(2));
        let c = random_table(n, k, h, palette, &mut r);
        let g = GroundSet::new(n).unwrap();
        let report = max_monochromatic_sunflower(&c, &g, h, &b).unwrap();
        let expected = pairwise_sunflower_oracle(&c, h);
        let witnesses_ok = report.witness_edges.len() as u64 == report.petals
            && report
                .witness_edges
                .iter()
                .all(|e| report.core.iter().all(|v| e.contains(v)) && c.colour(e) == report.colour);
        if report.petals != expected || !witnesses_ok {
            return Err(format!("colouring {i} (N={n}, k={k}, h={h}): audit {} vs oracle {expected}", report.petals));
        }
    }
    Ok("200 random colourings agree with the pairwise oracle".into())
}

fn criterion_4() -> Outcome {
    let b = Budget::default();
    let mut audits = 0;
    let mut check = |label: String, c: &dyn Colouring, lambda: u64| -> Result<(), String> {
        let g = GroundSet::new(c.vertex_count()).unwrap();
        let (ok, report) = validate_lambda(c, &g, &b).map_err(|e| format!("{label}: {e}"))?;
        audits += 1;
        if !ok || report.petals > lambda || c.spec().lambda != lambda {
            return Err(format!("{label}: {} petals, bound {lambda}", report.petals));
        }
        Ok(())
    };
    for seed in 0..20u64 {
        let n = 12;
        let inst = generate_general_position(n, 2, seed, (4 * n * n) as u64).unwrap();
        check(format!("circumradius seed {seed}"), &circumradius_colouring(&inst).unwrap(), 2)?;
        check(format!("volume seed {seed}"), &volume_colouring(&inst).unwrap(), 4)?;
        check(format!("similarity seed {seed}"), &similarity_colouring(&inst).unwrap(), 12)?;

        let mut r = rng(0x9017 + seed);
        for d in 1..=4 {
            let field = random_field(&mut r);
            let p = random_sympoly(field, d, &mut r);
            let xs = random_elements(field, 16, &mut r);
            let prep = poly_prepare(&p, &xs).unwrap();
            if prep.z.len() > d {
                return Err(format!("poly seed {seed} degree {d}: {} zeros of q_j", prep.z.len()));
            }
            if prep.y.len() >= 2 {
                check(format!("poly degree {d} seed {seed}"), &poly_colouring(&p, prep.y).unwrap(), d as u64)?;
            }
        }

        let ints = IntegerInstance::random(40, 400, seed).unwrap();
        check(format!("sidon seed {seed}"), &sidon_colouring(&ints), 2)?;
    }
    check("sidon range".into(), &sidon_colouring(&IntegerInstance::range(60)), 2)?;
    Ok(format!("{audits} audits within the declared petal bounds"))
}

fn criterion_5() -> Outcome {
    for d in 2..=4usize {
        let mut pts = vec![RationalPoint::from_integers(&vec![0; d])];
        for i in 0..d {
            let mut e = vec![0; d];
            e[i] = 1;
            pts.push(RationalPoint::from_integers(&e));
        }
        let fact: i64 = (1..=d as i64).product();
        let v = squared_volume(&pts).unwrap();
        if v != q(1, fact * fact) {
            return Err(format!("unit simplex d={d}: squared volume {v}"));
        }
    }
    let tri = [[0, 0], [3, 0], [0, 4]].map(|p| RationalPoint::from_integers(&p));
    let r2 = squared_circumradius(&tri).unwrap();
    if r2 != q(25, 4) {
        return Err(format!("3-4-5 triangle: squared circumradius {r2}"));
    }

    let mut r = rng(0x7e1a);
    let mut checked = 0;
    while checked < 100 {
        let raw: Vec<[i64; 2]> = (0..3).map(|_| [r.gen_range(-50..=50), r.gen_range(-50..=50)]).collect();
        let base: Vec<RationalPoint> = raw.iter().map(|p| RationalPoint::from_integers(p)).collect();
        let Ok(key) = similarity_canonical_form(&base) else { continue };
        let shift = [q(r.gen_range(-9..=9), r.gen_range(1..=7)), q(r.gen_range(-9..=9), r.gen_range(1..=7))];
        let scale = q(r.gen_range(1..=20), r.gen_range(1..=20));
        let flip = r.gen_range(0..2usize);
        let mut moved: Vec<RationalPoint> = base
            .iter()
            .map(|p| {
                let mut c = p.coords.clone();
                c[flip] = -c[flip].clone();
                RationalPoint::new(c.iter().zip(&shift).map(|(x, s)| x * &scale + s).collect()).unwrap()
            })
            .collect();
        moved.shuffle(&mut r);
        let moved_key = similarity_canonical_form(&moved).map_err(|e| e.to_string())?;
        if moved_key != key {
            return Err(format!("triangle {raw:?} changed similarity key after transformation"));
        }
        checked += 1;
    }
    Ok("unit simplices d=2..4, 3-4-5 circumradius, 100 transformed triangles all exact".into())
}

fn exact_size<C: Colouring + ?Sized>(c: &C) -> usize {
    let g = GroundSet::new(c.vertex_count()).unwrap();
    exact_max_rainbow(c, &g, &OracleLimits::default(), &Budget::default()).unwrap().size()
}

fn criterion_6() -> Outcome {
    let six = exact_size(&sidon_colouring(&IntegerInstance::range(6)));
    if six != 3 {
        return Err(format!("X = 1..6: oracle size {six}"));
    }
    let mut sizes = Vec::new();
    for n in 2..=16u64 {
        let oracle = exact_size(&sidon_colouring(&IntegerInstance::range(n)));
        let brute = brute_max_b2(n as usize);
        if oracle != brute {
            return Err(format!("X = 1..{n}: oracle {oracle}, exhaustive B2 search {brute}"));
        }
        sizes.push(oracle);
    }
    Ok(format!("1..6 gives 3; sizes for N = 2..16: {sizes:?}"))
}

fn median(mut xs: Vec<usize>) -> f64 {
    xs.sort_unstable();
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m] as f64
    } else {
        (xs[m - 1] + xs[m]) as f64 / 2.0
    }
}

fn criterion_7() -> Outcome {
    let b = Budget::default();
    let mut records: Vec<BenchRecord> = Vec::new();
    let mut medians = Vec::new();
    for n in [1_000u64, 10_000, 100_000, 1_000_000] {
        let c = sidon_colouring(&IntegerInstance::range(n));
        let g = GroundSet::new(n as usize).unwrap();
        let batch = run_trials(&c, &g, Algorithm::Greedy, 5, 0, DEFAULT_SHRINK, &b).map_err(|e| e.to_string())?;
        let med = median(batch.iter().map(|r| r.rainbow_size).collect());
        let floor = 0.8 * (n as f64).cbrt();
        medians.push(format!("N={n} median={med} floor={floor:.1}"));
        if med < floor {
            return Err(format!("N={n}: median {med} below 0.8 N^(1/3) = {floor:.2}"));
        }
        records.extend(batch);
    }
    let fit = estimate_exponent(&records).map_err(|e| e.to_string())?;
    let predicted = 1.0 / 3.0;
    let detail = format!("slope {:.4} (95% CI {:.4}..{:.4}), predicted {predicted:.4}; {}", fit.slope, fit.ci_low, fit.ci_high, medians.join(", "));
    if !(0.28..=0.40).contains(&fit.slope) {
        return Err(detail);
    }
    Ok(detail)
}

fn criterion_8() -> Outcome {
    let sum = SymPoly::sum(Field::Rationals);
    let mut mismatches = Vec::new();
    for n in 2..=16i64 {
        let xs: Vec<_> = (1..=n).map(|v| Field::Rationals.from_i64(v)).collect();
        let prep = poly_prepare(&sum, &xs).unwrap();
        let poly_size = exact_size(&poly_colouring(&sum, prep.y).unwrap());
        let sidon_size = exact_size(&sidon_colouring(&IntegerInstance::range(n as u64)));
        if poly_size != sidon_size {
            mismatches.push(format!("N={n}: x+y {poly_size} vs sidon {sidon_size}"));
        }
    }
    if mismatches.is_empty() {
        Ok("x+y and |x-y| oracle sizes agree for N = 2..16".into())
    } else {
        Err(format!(
            "{} of 15 sizes differ ({}); x+y only separates sums of distinct elements, so 2b = a + c is allowed",
            mismatches.len(),
            mismatches.join("; ")
        ))
    }
}

/// Result-file bytes of every seeded run, plus bench records without timings.
fn seeded_outputs() -> Vec<String> {
    let b = Budget::default();
    let mut out = Vec::new();
    let sidon = sidon_colouring(&IntegerInstance::range(200));
    let g = GroundSet::new(200).unwrap();
    let value = |v: usize| serde_json::Value::String((v + 1).to_string());
    for seed in [1u64, 7, 42] {
        let r = greedy_rainbow(&sidon, &g, &GreedyOrder::Seeded(seed), &b).unwrap();
        out.push(to_json_line(&ResultFile::new(&r, value)).unwrap());
        let plan = SamplePlan::new(200, 2, 1, seed, DEFAULT_SHRINK).unwrap().with_probability(0.3).unwrap();
        let r = sample_and_delete(&sidon, &g, &plan, &b).unwrap();
        out.push(to_json_line(&ResultFile::new(&r, value)).unwrap());
    }
    let inst = generate_general_position(9, 2, 3, 324).unwrap();
    let c = circumradius_colouring(&inst).unwrap();
    let g9 = GroundSet::new(9).unwrap();
    let r = exact_max_rainbow(&c, &g9, &OracleLimits::default(), &b).unwrap();
    out.push(to_json_line(&ResultFile::new(&r, |v| rainbow_core::io::point_value(&inst.points()[v]))).unwrap());
    for alg in [Algorithm::Greedy, Algorithm::SampleDelete] {
        let mut recs = run_trials(&sidon, &g, alg, 8, 11, DEFAULT_SHRINK, &b).unwrap();
        for r in &mut recs {
            r.runtime_ms = 0.0;
        }
        out.push(serde_json::to_string(&recs).unwrap());
    }
    out
}

fn criterion_9() -> Outcome {
    let reference = seeded_outputs();
    for rep in 0..20usize {
        let threads = 1 + rep % 4;
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| e.to_string())?;
        let again = pool.install(seeded_outputs);
        if again != reference {
            return Err(format!("repeat {rep} with {threads} workers differs"));
        }
    }
    Ok(format!("{} outputs byte-identical across 20 repeats on 1..4 workers", reference.len()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 9] = [
        ("rainbow soundness", criterion_1, Some(Duration::from_secs(120))),
        ("oracle dominance and greedy maximality", criterion_2, Some(Duration::from_secs(300))),
        ("sunflower audit vs pairwise oracle", criterion_3, None),
        ("petal bounds on validated instances", criterion_4, None),
        ("exact geometry", criterion_5, None),
        ("sidon oracle vs exhaustive B2 search", criterion_6, None),
        ("greedy sidon scaling", criterion_7, Some(Duration::from_secs(600))),
        ("x+y vs sidon oracle sizes", criterion_8, None),
        ("determinism", criterion_9, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(detail), Some(limit)) = (&outcome, limit) {
            if elapsed > *limit {
                outcome = Err(format!("{detail}; took {elapsed:.1?}, limit {limit:?}"));
            }
        }
        let (verdict, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {} {name}: {verdict} [{elapsed:.1?}] {detail}", i + 1);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
