use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use rainbow_core::algebra::{poly_colouring, poly_prepare, sidon_colouring, IntegerInstance, SymPoly};
use rainbow_core::engine::{
    estimate_exponent, exact_max_rainbow, greedy_rainbow, run_trials, sample_and_delete, write_bench_csv, Algorithm,
    BenchRecord, GreedyOrder, OracleLimits, RainbowResult, SamplePlan, DEFAULT_SHRINK,
};
use rainbow_core::geometry::{
    circumradius_colouring, generate_general_position, similarity_colouring, volume_colouring, PointInstance,
};
use rainbow_core::hypergraph::validate_lambda;
use rainbow_core::io::{
    integers_from_file, integers_to_file, point_value, points_from_file, points_to_file, read_instance,
    sympoly_from_file, to_json_line, write_json, InstanceFile, ResultFile,
};
use rainbow_core::subsets::DEFAULT_ENUMERATION_BUDGET;
use rainbow_core::{
    Budget, Colouring, ColouringSpec, ConstantColouring, Error, GroundSet, InjectiveColouring, Result,
};

const EXIT_INTERNAL: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// Rainbow subsets of edge-coloured complete hypergraphs.
#[derive(Parser, Debug)]
#[command(name = "rainbow", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Command {
    /// Write a points or integers instance.
    Generate(GenerateArgs),
    /// Find a rainbow subset of an instance.
    Find(FindArgs),
    /// Exact maximum rainbow subset (same as `find --algorithm exact`).
    Oracle(OracleArgs),
    /// Run seeded trials over a grid of sizes and fit the growth exponent.
    Bench(BenchArgs),
    /// Report the largest monochromatic sunflower and check the petal bound.
    Audit(AuditArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum GenerateKind {
    Points,
    IntegersRange,
    IntegersRandom,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum ColouringKind {
    Sidon,
    Poly,
    Circumradius,
    Volume,
    Similarity,
    Constant,
    Injective,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum AlgorithmArg {
    Greedy,
    SampleDelete,
    Exact,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Greedy => Algorithm::Greedy,
            AlgorithmArg::SampleDelete => Algorithm::SampleDelete,
            AlgorithmArg::Exact => Algorithm::Exact,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Serialize)]
struct GenerateArgs {
    #[arg(value_enum)]
    kind: GenerateKind,
    #[arg(long)]
    n: u64,
    /// Dimension of generated points.
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Coordinates are drawn from [0, bound]; defaults to 4N².
    #[arg(long)]
    coord_bound: Option<u64>,
    /// Upper end of the range for integers-random.
    #[arg(long)]
    max: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Options shared by every subcommand that builds a colouring.
#[derive(Args, Debug, Serialize)]
struct ColouringArgs {
    #[arg(long, value_enum)]
    colouring: ColouringKind,
    /// Symmetric polynomial file for `--colouring poly`.
    #[arg(long)]
    poly: Option<PathBuf>,
    /// Edge size for the constant and injective fixtures (h = k − 1, λ = 1).
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Enumeration budget in k-subsets.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug, Serialize)]
struct SearchArgs {
    #[arg(long)]
    instance: PathBuf,
    #[command(flatten)]
    colouring: ColouringArgs,
    /// Seed for the greedy visiting order and the sampling step.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug, Serialize)]
struct FindArgs {
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Greedy)]
    algorithm: AlgorithmArg,
    /// Scale factor of the default sampling probability.
    #[arg(long, default_value_t = DEFAULT_SHRINK)]
    shrink: f64,
    /// Explicit sampling probability, overriding --shrink.
    #[arg(long)]
    p: Option<f64>,
}

#[derive(Args, Debug, Serialize)]
struct OracleArgs {
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args, Debug, Serialize)]
struct BenchArgs {
    /// Grid of instance sizes, at least 4 distinct values.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u64>,
    #[command(flatten)]
    colouring: ColouringArgs,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "greedy")]
    algorithm: Vec<AlgorithmArg>,
    #[arg(long, default_value_t = 5)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SHRINK)]
    shrink: f64,
    /// Dimension of the generated point instances.
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug, Serialize)]
struct AuditArgs {
    #[arg(long)]
    instance: PathBuf,
    #[command(flatten)]
    colouring: ColouringArgs,
}

/// Everything needed to reproduce a run.
#[derive(Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a Command,
    outputs: Vec<String>,
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

fn write_manifest(command: &Command, out: &Path, extra: &[PathBuf]) -> Result<()> {
    let outputs = std::iter::once(out)
        .chain(extra.iter().map(PathBuf::as_path))
        .map(|p| p.display().to_string())
        .collect();
    let manifest = Manifest {
        tool: "rainbow",
        version: env!("CARGO_PKG_VERSION"),
        command,
        outputs,
    };
    write_json(&manifest_path(out), &manifest)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// A colouring together with the domain value of each vertex.
struct Loaded {
    colouring: Box<dyn Colouring>,
    values: Vec<Value>,
}

fn fixture_spec(k: usize) -> Result<ColouringSpec> {
    if k < 2 {
        return Err(Error::Parameter("fixtures need k ≥ 2".into()));
    }
    ColouringSpec::new(k, k - 1, 1)
}

fn fixture(kind: ColouringKind, n: usize, k: usize) -> Result<Box<dyn Colouring>> {
    let spec = fixture_spec(k)?;
    Ok(match kind {
        ColouringKind::Constant => Box::new(ConstantColouring::new(n, spec)),
        _ => Box::new(InjectiveColouring::new(n, spec)),
    })
}

fn load_poly(args: &ColouringArgs) -> Result<SymPoly> {
    let path = args
        .poly
        .as_ref()
        .ok_or_else(|| Error::Parameter("--colouring poly needs --poly <file>".into()))?;
    sympoly_from_file(&read_instance(path)?)
}

/// Prepares `ints` for the polynomial colouring, dropping the zeros of q_j.
fn poly_over(poly: &SymPoly, ints: &IntegerInstance) -> Result<Loaded> {
    let field = poly.field();
    let xs: Vec<_> = ints
        .values()
        .iter()
        .map(|v| field.from_bigint(&v.clone().into()))
        .collect();
    let prep = poly_prepare(poly, &xs)?;
    if !prep.z.is_empty() {
        eprintln!(
            "dropped {} element(s) that are zeros of q_{}",
            prep.z.len(),
            prep.j
        );
    }
    let values = prep
        .kept_positions
        .iter()
        .map(|&i| Value::String(ints.values()[i].to_string()))
        .collect();
    Ok(Loaded {
        colouring: Box::new(poly_colouring(poly, prep.y)?),
        values,
    })
}

fn points_colouring(kind: ColouringKind, inst: &PointInstance) -> Result<Box<dyn Colouring>> {
    Ok(match kind {
        ColouringKind::Circumradius => Box::new(circumradius_colouring(inst)?),
        ColouringKind::Volume => Box::new(volume_colouring(inst)?),
        _ => Box::new(similarity_colouring(inst)?),
    })
}

fn validate_points(kind: ColouringKind, inst: &mut PointInstance, budget: &Budget) -> Result<()> {
    let with_sphere = kind == ColouringKind::Circumradius;
    if let Some(bad) = inst.validate(with_sphere, budget)? {
        let pts: Vec<Value> = bad.iter().map(|&i| point_value(&inst.points()[i])).collect();
        let what = if bad.len() == inst.d() + 1 {
            "on a common hyperplane"
        } else {
            "on a common sphere"
        };
        return Err(Error::Degenerate(format!(
            "points {bad:?} lie {what}: {}",
            serde_json::to_string(&pts)?
        )));
    }
    Ok(())
}

fn load(file: &InstanceFile, args: &ColouringArgs, budget: &Budget) -> Result<Loaded> {
    let kind = args.colouring;
    match file {
        InstanceFile::Integers { .. } => {
            let ints = integers_from_file(file)?;
            let values = || ints.values().iter().map(|v| Value::String(v.to_string())).collect();
            match kind {
                ColouringKind::Sidon => Ok(Loaded {
                    colouring: Box::new(sidon_colouring(&ints)),
                    values: values(),
                }),
                ColouringKind::Poly => poly_over(&load_poly(args)?, &ints),
                ColouringKind::Constant | ColouringKind::Injective => Ok(Loaded {
                    colouring: fixture(kind, ints.len(), args.k)?,
                    values: values(),
                }),
                _ => Err(Error::Parameter(format!(
                    "{kind:?} colouring needs a points instance"
                ))),
            }
        }
        InstanceFile::Points { .. } => {
            let mut inst = points_from_file(file)?;
            let values = inst.points().iter().map(point_value).collect();
            let colouring = match kind {
                ColouringKind::Circumradius | ColouringKind::Volume | ColouringKind::Similarity => {
                    validate_points(kind, &mut inst, budget)?;
                    points_colouring(kind, &inst)?
                }
                ColouringKind::Constant | ColouringKind::Injective => fixture(kind, inst.len(), args.k)?,
                _ => {
                    return Err(Error::Parameter(format!(
                        "{kind:?} colouring needs an integers instance"
                    )))
                }
            };
            Ok(Loaded { colouring, values })
        }
        InstanceFile::Sympoly { .. } => Err(Error::Parameter(
            "a polynomial is not an instance; pass it with --poly".into(),
        )),
    }
}

fn cmd_generate(args: &GenerateArgs, command: &Command) -> Result<()> {
    let file = match args.kind {
        GenerateKind::Points => {
            let bound = match args.coord_bound {
                Some(b) => b,
                None => args
                    .n
                    .checked_mul(args.n)
                    .and_then(|v| v.checked_mul(4))
                    .ok_or_else(|| Error::Parameter("N too large".into()))?,
            };
            points_to_file(&generate_general_position(args.n as usize, args.d, args.seed, bound)?)
        }
        GenerateKind::IntegersRange => {
            if args.n == 0 {
                return Err(Error::Parameter("N must be at least 1".into()));
            }
            integers_to_file(&IntegerInstance::range(args.n))
        }
        GenerateKind::IntegersRandom => {
            let max = args
                .max
                .ok_or_else(|| Error::Parameter("integers-random needs --max".into()))?;
            if args.n == 0 {
                return Err(Error::Parameter("N must be at least 1".into()));
            }
            integers_to_file(&IntegerInstance::random(args.n, max, args.seed)?)
        }
    };
    emit(args.out.as_deref(), &to_json_line(&file)?)?;
    if let Some(out) = &args.out {
        write_manifest(command, out, &[])?;
    }
    Ok(())
}

fn csv_field(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(pair) if pair.len() == 2 => {
            let (num, den) = (pair[0].as_str().unwrap_or(""), pair[1].as_str().unwrap_or(""));
            if den == "1" {
                num.to_string()
            } else {
                format!("{num}/{den}")
            }
        }
        other => other.to_string(),
    }
}

/// One row per subset element: the integer, or one column per coordinate.
fn result_csv(subset: &[Value]) -> String {
    let width = subset
        .first()
        .and_then(Value::as_array)
        .map_or(0, Vec::len);
    let mut out = if width == 0 {
        "value\n".to_string()
    } else {
        (1..=width).map(|i| format!("x{i}")).collect::<Vec<_>>().join(",") + "\n"
    };
    for v in subset {
        let row = match v {
            Value::Array(coords) => coords.iter().map(csv_field).collect::<Vec<_>>().join(","),
            other => csv_field(other),
        };
        out.push_str(&row);
        out.push('\n');
    }
    out
}

fn run_search(
    search: &SearchArgs,
    algorithm: Algorithm,
    shrink: f64,
    p: Option<f64>,
    command: &Command,
) -> Result<()> {
    let budget = Budget {
        enumeration: search.colouring.budget,
    };
    let file = read_instance(&search.instance)?;
    let loaded = load(&file, &search.colouring, &budget)?;
    let c = loaded.colouring.as_ref();
    let ground = GroundSet::new(c.vertex_count())?;
    let started = Instant::now();
    let result: RainbowResult = match algorithm {
        Algorithm::Greedy => {
            let order = search.seed.map_or(GreedyOrder::Natural, GreedyOrder::Seeded);
            greedy_rainbow(c, &ground, &order, &budget)?
        }
        Algorithm::SampleDelete => {
            let spec = c.spec();
            let mut plan = SamplePlan::new(ground.len(), spec.k, spec.h, search.seed.unwrap_or(0), shrink)?;
            if let Some(p) = p {
                plan = plan.with_probability(p)?;
            }
            sample_and_delete(c, &ground, &plan, &budget)?
        }
        Algorithm::Exact => exact_max_rainbow(c, &ground, &OracleLimits::default(), &budget)?,
    };
    let elapsed = started.elapsed();
    if !result.verified {
        return Err(Error::Invariant("result failed verification".into()));
    }
    let report = ResultFile::new(&result, |v| loaded.values[v].clone());
    let text = match search.format {
        Format::Json => to_json_line(&report)?,
        Format::Csv => result_csv(&report.subset),
    };
    emit(search.out.as_deref(), &text)?;
    if let Some(out) = &search.out {
        write_manifest(command, out, &[])?;
    }
    eprintln!(
        "{} on {} ({} vertices, k={}, h={}, λ={}): rainbow subset of size {} in {:.3} ms, verified",
        algorithm.as_str(),
        c.label(),
        ground.len(),
        c.spec().k,
        c.spec().h,
        c.spec().lambda,
        result.size(),
        elapsed.as_secs_f64() * 1e3
    );
    Ok(())
}

/// Instance of size `n` for a bench grid point.
fn bench_instance(args: &BenchArgs, n: u64, poly: Option<&SymPoly>) -> Result<Box<dyn Colouring>> {
    let kind = args.colouring.colouring;
    let ints = || {
        if n == 0 {
            Err(Error::Parameter("grid sizes must be positive".into()))
        } else {
            Ok(IntegerInstance::range(n))
        }
    };
    match kind {
        ColouringKind::Sidon => Ok(Box::new(sidon_colouring(&ints()?))),
        ColouringKind::Poly => Ok(poly_over(poly.expect("loaded above"), &ints()?)?.colouring),
        ColouringKind::Constant | ColouringKind::Injective => fixture(kind, n as usize, args.colouring.k),
        ColouringKind::Circumradius | ColouringKind::Volume | ColouringKind::Similarity => {
            let bound = n.saturating_mul(n).saturating_mul(4);
            let inst = generate_general_position(n as usize, args.d, args.seed, bound)?;
            points_colouring(kind, &inst)
        }
    }
}

#[derive(Serialize)]
struct GridPoint {
    n: u64,
    median: f64,
    floor: f64,
    ok: bool,
}

#[derive(Serialize)]
struct AlgorithmReport {
    algorithm: String,
    slope: f64,
    ci_low: f64,
    ci_high: f64,
    predicted: f64,
    band: (f64, f64),
    slope_ok: bool,
    grid: Vec<GridPoint>,
    pass: bool,
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    }
}

fn report_for(algorithm: Algorithm, records: &[BenchRecord], predicted: f64) -> Result<AlgorithmReport> {
    let fit = estimate_exponent(records)?;
    let band = (0.84 * predicted, 1.2 * predicted);
    let grid: Vec<GridPoint> = fit
        .points
        .iter()
        .map(|&(n, _)| {
            let sizes = records
                .iter()
                .filter(|r| r.n == n)
                .map(|r| r.rainbow_size as f64)
                .collect();
            let median = median(sizes);
            let floor = 0.8 * (n as f64).powf(predicted);
            GridPoint {
                n,
                median,
                floor,
                ok: median >= floor,
            }
        })
        .collect();
    let slope_ok = band.0 <= fit.slope && fit.slope <= band.1;
    let pass = slope_ok && grid.iter().all(|g| g.ok);
    Ok(AlgorithmReport {
        algorithm: algorithm.as_str().to_string(),
        slope: fit.slope,
        ci_low: fit.ci_low,
        ci_high: fit.ci_high,
        predicted,
        band,
        slope_ok,
        grid,
        pass,
    })
}

fn cmd_bench(args: &BenchArgs, command: &Command) -> Result<()> {
    let distinct: BTreeSet<u64> = args.n.iter().copied().collect();
    if distinct.len() < 4 {
        return Err(Error::Parameter(format!(
            "exponent fitting needs at least 4 distinct grid sizes, got {}",
            distinct.len()
        )));
    }
    if args.trials < 3 {
        return Err(Error::Parameter("need at least 3 trials per grid size".into()));
    }
    let budget = Budget {
        enumeration: args.colouring.budget,
    };
    let poly = match args.colouring.colouring {
        ColouringKind::Poly => Some(load_poly(&args.colouring)?),
        _ => None,
    };
    let algorithms: Vec<Algorithm> = {
        let mut seen = Vec::new();
        for &a in &args.algorithm {
            let a = Algorithm::from(a);
            if !seen.contains(&a) {
                seen.push(a);
            }
        }
        seen
    };

    let mut records = Vec::new();
    let mut predicted = 0.0;
    for &n in &distinct {
        let c = bench_instance(args, n, poly.as_ref())?;
        predicted = c.spec().predicted_exponent();
        let ground = GroundSet::new(c.vertex_count())?;
        for &alg in &algorithms {
            let batch = run_trials(c.as_ref(), &ground, alg, args.trials, args.seed, args.shrink, &budget)?;
            for r in &batch {
                eprintln!(
                    "N={} {} trial={} seed={} size={} runtime_ms={:.3}",
                    r.n, r.algorithm, r.trial, r.seed, r.rainbow_size, r.runtime_ms
                );
            }
            records.extend(batch);
        }
    }

    let mut reports = Vec::new();
    for &alg in &algorithms {
        let subset: Vec<BenchRecord> = records
            .iter()
            .filter(|r| r.algorithm == alg.as_str())
            .cloned()
            .collect();
        reports.push(report_for(alg, &subset, predicted)?);
    }

    let data = match args.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_bench_csv(&mut buf, &records)?;
            String::from_utf8(buf).map_err(|e| Error::Invariant(e.to_string()))?
        }
        Format::Json => to_json_line(&records)?,
    };
    emit(args.out.as_deref(), &data)?;
    if let Some(out) = &args.out {
        let mut report_path = out.as_os_str().to_owned();
        report_path.push(".report.json");
        let report_path = PathBuf::from(report_path);
        write_json(&report_path, &reports)?;
        write_manifest(command, out, &[report_path])?;
    }
    for r in &reports {
        let medians: Vec<String> = r
            .grid
            .iter()
            .map(|g| format!("N={} median={} floor={:.2}", g.n, g.median, g.floor))
            .collect();
        eprintln!(
            "{}: slope {:.4} (95% CI {:.4}..{:.4}), predicted {:.4}, band [{:.4}, {:.4}]; {}; {}",
            r.algorithm,
            r.slope,
            r.ci_low,
            r.ci_high,
            r.predicted,
            r.band.0,
            r.band.1,
            medians.join(", "),
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct AuditOutput<'a> {
    colouring: &'a str,
    k: usize,
    h: usize,
    lambda: u64,
    core: Vec<Value>,
    colour: String,
    petals: u64,
    pass: bool,
}

/// Returns whether the audit passed.
fn cmd_audit(args: &AuditArgs) -> Result<bool> {
    let budget = Budget {
        enumeration: args.colouring.budget,
    };
    let file = read_instance(&args.instance)?;
    let loaded = load(&file, &args.colouring, &budget)?;
    let c = loaded.colouring.as_ref();
    let ground = GroundSet::new(c.vertex_count())?;
    let spec = c.spec();
    if spec.k > ground.len() {
        return Err(Error::Parameter(format!(
            "instance has {} elements, fewer than k = {}",
            ground.len(),
            spec.k
        )));
    }
    let (pass, report) = validate_lambda(c, &ground, &budget)?;
    let out = AuditOutput {
        colouring: c.label(),
        k: spec.k,
        h: spec.h,
        lambda: spec.lambda,
        core: report.core.iter().map(|&v| loaded.values[v].clone()).collect(),
        colour: report.colour.to_hex(),
        petals: report.petals,
        pass,
    };
    print!("{}", to_json_line(&out)?);
    println!(
        "{}: worst {}-sunflower has {} petals, declared λ = {}",
        if pass { "PASS" } else { "FAIL" },
        spec.h,
        report.petals,
        spec.lambda
    );
    Ok(pass)
}

fn exit_code(err: &Error) -> u8 {
    if err.is_validation() {
        EXIT_VALIDATION
    } else if err.is_resource() {
        EXIT_RESOURCE
    } else {
        EXIT_INTERNAL
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = &cli.command;
    let outcome = match command {
        Command::Generate(args) => cmd_generate(args, command).map(|_| true),
        Command::Find(args) => run_search(&args.search, args.algorithm.into(), args.shrink, args.p, command).map(|_| true),
        Command::Oracle(args) => run_search(&args.search, Algorithm::Exact, DEFAULT_SHRINK, None, command).map(|_| true),
        Command::Bench(args) => cmd_bench(args, command).map(|_| true),
        Command::Audit(args) => cmd_audit(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VALIDATION),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
