//! Command-line frontend: dataset ingestion, curve estimation (exact and
//! minibatch), curve alignment, spectral bounds, convergence studies, and
//! synthetic dataset generation. Reports are CSV/JSON (plus an optional
//! log-log SVG); identical inputs and seeds produce byte-identical outputs,
//! and the thread count never changes output bytes.

mod io;
mod report;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ndarray::Array2;

use dmoc::{
    compare_sampled, compute_dmoc, compute_dmoc_minibatch, discrete_seminorm,
    discrete_seminorm_batched, fill_distance, generate_classifier_dataset,
    generate_linear_dataset, generate_net, lipschitz_from_dmoc, sample_function,
    site_distance_extremes, trivial_bound_with, uniform_box_sample, BatchPlan, DataSet, Grid,
    Metric, OracleFunction, RhoFunction, WeightStack, DEFAULT_SPECTRAL_MAX_ITER,
    DEFAULT_SPECTRAL_TOL,
};

#[derive(Parser)]
#[command(
    name = "dmoc",
    version,
    about = "Multi-scale regularity analysis of sampled maps from input-output pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate the curve of a sampled map; writes `<stem>.curve.csv`,
    /// `<stem>.summary.json` and optionally `<stem>.svg`
    Compute(ComputeArgs),
    /// Compare two curve files sampled on identical grids
    Align(AlignArgs),
    /// Layer-product spectral bound from weight matrices (CSV per matrix)
    TrivialBound(TrivialBoundArgs),
    /// Minibatch curves across batch sizes, with gaps to the exact curve
    ConvergenceStudy(StudyArgs),
    /// Generate synthetic datasets with known structure
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricKind {
    Euclidean,
    Manhattan,
}

impl From<MetricKind> for Metric {
    fn from(kind: MetricKind) -> Metric {
        match kind {
            MetricKind::Euclidean => Metric::Euclidean,
            MetricKind::Manhattan => Metric::Manhattan,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GridKindArg {
    Exponential,
    Linear,
}

#[derive(Args)]
struct DataArgs {
    /// Sites CSV (one row per point); requires --y
    #[arg(long, requires = "y", conflicts_with = "data")]
    x: Option<PathBuf>,
    /// Values CSV, rows aligned with --x
    #[arg(long, requires = "x")]
    y: Option<PathBuf>,
    /// Combined CSV holding site and value columns
    #[arg(long)]
    data: Option<PathBuf>,
    /// Value columns of the combined file: comma-separated 0-based indices,
    /// or "last"
    #[arg(long, default_value = "last")]
    y_cols: String,
    /// Field delimiter
    #[arg(long, default_value_t = ',')]
    delimiter: char,
    #[arg(long, value_enum, default_value = "euclidean")]
    metric_x: MetricKind,
    #[arg(long, value_enum, default_value = "euclidean")]
    metric_y: MetricKind,
}

#[derive(Args)]
struct GridArgs {
    /// Grid spacing law
    #[arg(long = "grid", value_enum, default_value = "exponential")]
    kind: GridKindArg,
    /// Number of grid scales
    #[arg(long, default_value_t = 10_000)]
    grid_k: usize,
    /// Smallest scale; default: the separation distance
    #[arg(long)]
    t_min: Option<f64>,
    /// Largest scale; default: the data diameter
    #[arg(long)]
    t_max: Option<f64>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Batch size C for the minibatch estimator; omit for the exact one
    #[arg(long)]
    batch_size: Option<usize>,
    /// Seeded shuffle before batching (reproducible)
    #[arg(long, requires = "batch_size")]
    shuffle_seed: Option<u64>,
    /// Weight function: `identity | power:<beta> | table:<knots.csv>`
    #[arg(long, default_value = "identity")]
    rho: String,
    /// Worker threads (env DMOC_THREADS, default: available parallelism)
    #[arg(long)]
    threads: Option<usize>,
    /// Output stem; default: the input path without extension
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a log-log SVG plot
    #[arg(long)]
    svg: bool,
    /// Plot every m-th grid point; default: K/100
    #[arg(long)]
    subsample: Option<usize>,
    /// Reference sites CSV for the fill distance
    #[arg(long)]
    fill_reference: Option<PathBuf>,
    /// Monte-Carlo fill reference: sample count in the data bounding box
    #[arg(long, conflicts_with = "fill_reference")]
    fill_samples: Option<usize>,
    /// Seed for the Monte-Carlo fill reference
    #[arg(long, default_value_t = 0)]
    fill_seed: u64,
}

#[derive(Args)]
struct AlignArgs {
    /// Reference curve CSV
    reference: PathBuf,
    /// Candidate curve CSV
    candidate: PathBuf,
    #[arg(long, default_value_t = ',')]
    delimiter: char,
    /// Also write the JSON report to a file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TrivialBoundArgs {
    /// Weight matrix CSVs, first layer first
    #[arg(required = true)]
    matrices: Vec<PathBuf>,
    /// Per-layer activation Lipschitz constants, comma-separated (default all 1)
    #[arg(long)]
    activations: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SPECTRAL_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_SPECTRAL_MAX_ITER)]
    max_iter: usize,
    #[arg(long, default_value_t = ',')]
    delimiter: char,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StudyArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Batch sizes to sweep, comma-separated
    #[arg(long, required = true)]
    batch_sizes: String,
    #[arg(long)]
    shuffle_seed: Option<u64>,
    #[arg(long)]
    threads: Option<usize>,
    /// Output stem; default: the input path without extension
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(subcommand)]
    what: OracleCommand,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Uniform lattice on `[0,1]^dim` sampled through a test function
    Net {
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[arg(long)]
        spacing: f64,
        /// `power:<alpha> | sqrt | tanh:<a>:<b> | log-modulus`
        #[arg(long)]
        function: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// One-hot class clusters with an exact minimum cross-class distance
    Classifier {
        #[arg(long, default_value_t = 2)]
        classes: usize,
        #[arg(long, default_value_t = 1)]
        points_per_class: usize,
        #[arg(long)]
        min_cross_distance: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Uniform samples through a linear map given by a weight matrix CSV
    Linear {
        #[arg(long)]
        weights: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also inject a pair along the top right-singular direction
        #[arg(long)]
        singular_pair: bool,
        #[arg(long, default_value_t = ',')]
        delimiter: char,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Compute(args) => cmd_compute(args),
        Command::Align(args) => cmd_align(args),
        Command::TrivialBound(args) => cmd_trivial_bound(args),
        Command::ConvergenceStudy(args) => cmd_convergence_study(args),
        Command::Oracle(args) => cmd_oracle(args.what),
    }
}

fn init_threads(threads: Option<usize>) -> Result<()> {
    let from_env = std::env::var("DMOC_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    if let Some(n) = threads.or(from_env) {
        if n == 0 {
            bail!("thread count must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("initializing the thread pool")?;
    }
    Ok(())
}

fn load_dataset(args: &DataArgs) -> Result<DataSet> {
    let (sites, values) = match (&args.x, &args.y, &args.data) {
        (Some(x), Some(y), None) => {
            let sites = io::read_matrix(x, args.delimiter)?;
            let values = io::read_matrix(y, args.delimiter)?;
            if sites.nrows() != values.nrows() {
                bail!(
                    "row count mismatch: {} has {} rows, {} has {}",
                    x.display(),
                    sites.nrows(),
                    y.display(),
                    values.nrows()
                );
            }
            (sites, values)
        }
        (None, None, Some(path)) => {
            let table = io::read_matrix(path, args.delimiter)?;
            split_columns(&table, &args.y_cols)
                .with_context(|| format!("splitting columns of {}", path.display()))?
        }
        _ => bail!("provide exactly one input mode: --x/--y or --data"),
    };
    DataSet::new(sites, values, args.metric_x.into(), args.metric_y.into())
        .context("constructing the dataset")
}

fn split_columns(table: &Array2<f64>, y_cols: &str) -> Result<(Array2<f64>, Array2<f64>)> {
    let d = table.ncols();
    if d < 2 {
        bail!("combined file needs at least 2 columns, found {d}");
    }
    let mut value_cols: Vec<usize> = if y_cols.trim() == "last" {
        vec![d - 1]
    } else {
        y_cols
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .with_context(|| format!("bad column index '{tok}'"))
            })
            .collect::<Result<_>>()?
    };
    value_cols.sort_unstable();
    value_cols.dedup();
    if value_cols.iter().any(|&c| c >= d) {
        bail!("value column out of range (file has {d} columns)");
    }
    if value_cols.len() == d {
        bail!("all columns selected as values; no site columns left");
    }
    let site_cols: Vec<usize> = (0..d).filter(|c| !value_cols.contains(c)).collect();
    let pick = |cols: &[usize]| {
        let mut out = Array2::zeros((table.nrows(), cols.len()));
        for (k, &c) in cols.iter().enumerate() {
            out.column_mut(k).assign(&table.column(c));
        }
        out
    };
    Ok((pick(&site_cols), pick(&value_cols)))
}

fn parse_rho(spec: &str, delimiter: char) -> Result<RhoFunction> {
    let spec = spec.trim();
    if spec == "identity" {
        return Ok(RhoFunction::Identity);
    }
    if let Some(beta) = spec.strip_prefix("power:") {
        let beta: f64 = beta.parse().with_context(|| format!("bad exponent '{beta}'"))?;
        return Ok(RhoFunction::power(beta)?);
    }
    if let Some(path) = spec.strip_prefix("table:") {
        let table = io::read_matrix(Path::new(path), delimiter)?;
        if table.ncols() != 2 {
            bail!("weight table must have 2 columns (t, rho), found {}", table.ncols());
        }
        let knots = table.rows().into_iter().map(|r| (r[0], r[1])).collect();
        return Ok(RhoFunction::table(knots)?);
    }
    bail!("unknown weight function '{spec}' (expected identity, power:<beta>, table:<path>)")
}

fn parse_function(spec: &str) -> Result<OracleFunction> {
    let spec = spec.trim();
    if spec == "sqrt" {
        return Ok(OracleFunction::Sqrt);
    }
    if spec == "log-modulus" {
        return Ok(OracleFunction::LogModulus);
    }
    if let Some(alpha) = spec.strip_prefix("power:") {
        let alpha: f64 = alpha.parse().with_context(|| format!("bad exponent '{alpha}'"))?;
        return Ok(OracleFunction::power(alpha)?);
    }
    if let Some(rest) = spec.strip_prefix("tanh:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 2 {
            bail!("tanh spec is tanh:<a>:<b>, got '{spec}'");
        }
        let a: f64 = parts[0].parse().with_context(|| format!("bad bound '{}'", parts[0]))?;
        let b: f64 = parts[1].parse().with_context(|| format!("bad bound '{}'", parts[1]))?;
        return Ok(OracleFunction::tanh_on_interval(a, b)?);
    }
    bail!("unknown function '{spec}' (expected power:<alpha>, sqrt, tanh:<a>:<b>, log-modulus)")
}

fn output_stem(out: &Option<PathBuf>, input: &DataArgs) -> Result<PathBuf> {
    if let Some(stem) = out {
        return Ok(stem.clone());
    }
    let source = input
        .data
        .as_ref()
        .or(input.x.as_ref())
        .context("no input path to derive an output stem from")?;
    Ok(source.with_extension(""))
}

fn resolve_grid(args: &GridArgs, separation: f64, diameter: f64) -> Result<Grid> {
    let t_min = args.t_min.unwrap_or(separation);
    let t_max = args.t_max.unwrap_or(diameter);
    if t_min <= 0.0 {
        bail!(
            "smallest scale is {t_min}; duplicate sites make the default unusable, \
             pass --t-min explicitly"
        );
    }
    let k = if t_min == t_max { 1 } else { args.grid_k };
    Ok(match args.kind {
        GridKindArg::Exponential => Grid::exponential(k, t_min, t_max)?,
        GridKindArg::Linear => Grid::linear(k, t_min, t_max)?,
    })
}

fn grid_info(grid: &Grid) -> report::GridInfo {
    report::GridInfo {
        kind: grid.kind().name().to_string(),
        k: grid.len(),
        t_min: grid.t_min(),
        t_max: grid.t_max(),
    }
}

fn cmd_compute(args: ComputeArgs) -> Result<()> {
    init_threads(args.threads)?;
    let ds = load_dataset(&args.data)?;
    let stem = output_stem(&args.out, &args.data)?;

    let started = Instant::now();
    let (separation, diameter) = site_distance_extremes(&ds)?;
    let grid = resolve_grid(&args.grid, separation, diameter)?;

    let fill = match (&args.fill_reference, args.fill_samples) {
        (Some(path), _) => {
            let reference = io::read_matrix(path, args.data.delimiter)?;
            Some(fill_distance(&ds, reference.view())?)
        }
        (None, Some(n)) => {
            let (lo, hi) = bounding_box(&ds);
            let reference = uniform_box_sample(&lo, &hi, n, args.fill_seed)?;
            Some(fill_distance(&ds, reference.view())?)
        }
        (None, None) => None,
    };

    let rho = parse_rho(&args.rho, args.data.delimiter)?;
    let plan = args
        .batch_size
        .map(|c| BatchPlan::new(c, ds.n_points(), args.shuffle_seed))
        .transpose()?;

    let (curve, lipschitz, seminorm) = match &plan {
        Some(plan) => (
            compute_dmoc_minibatch(&ds, &grid, plan)?,
            discrete_seminorm_batched(&ds, &RhoFunction::Identity, plan)?,
            discrete_seminorm_batched(&ds, &rho, plan)?,
        ),
        None => (
            compute_dmoc(&ds, &grid)?,
            lipschitz_from_dmoc(&ds)?,
            discrete_seminorm(&ds, &rho)?,
        ),
    };
    let elapsed = started.elapsed();

    let summary = report::ComputeSummary {
        n: ds.n_points(),
        n_used: plan.as_ref().map_or(ds.n_points(), BatchPlan::retained),
        site_dim: ds.site_dim(),
        value_dim: ds.value_dim(),
        metric_x: ds.metric_x().name().to_string(),
        metric_y: ds.metric_y().name().to_string(),
        separation,
        diameter,
        fill,
        estimator: curve.estimator().name().to_string(),
        batch_size: plan.as_ref().map(|p| p.batch_size),
        n_batches: plan.as_ref().map(|p| p.n_batches),
        dropped_tail: plan.as_ref().map(|p| p.dropped_tail),
        shuffle_seed: plan.as_ref().and_then(|p| p.shuffle_seed),
        grid: grid_info(&grid),
        pairs_evaluated: curve.pairs_evaluated(),
        zero_distance_jump: curve.zero_distance_jump(),
        lipschitz: report::SeminormInfo::from_result("identity".into(), &lipschitz),
        seminorm: report::SeminormInfo::from_result(rho.describe(), &seminorm),
    };

    let curve_path = with_suffix(&stem, "curve.csv");
    let summary_path = with_suffix(&stem, "summary.json");
    io::write_curve_csv(&curve_path, grid.scales(), curve.omega())?;
    std::fs::write(&summary_path, report::to_json_bytes(&summary)?)
        .with_context(|| format!("writing {}", summary_path.display()))?;
    eprintln!(
        "computed {} curve on {} points in {:.3}s",
        curve.estimator().name(),
        ds.n_points(),
        elapsed.as_secs_f64()
    );
    eprintln!("wrote {}", curve_path.display());
    eprintln!("wrote {}", summary_path.display());

    if args.svg {
        let svg_path = with_suffix(&stem, "svg");
        let subsample = args.subsample.unwrap_or_else(|| (grid.len() / 100).max(1));
        let body = svg::log_log_curve_svg(
            grid.scales(),
            curve.omega(),
            subsample,
            &format!("{} curve, N = {}", curve.estimator().name(), ds.n_points()),
        );
        std::fs::write(&svg_path, body)
            .with_context(|| format!("writing {}", svg_path.display()))?;
        eprintln!("wrote {}", svg_path.display());
    }
    Ok(())
}

fn bounding_box(ds: &DataSet) -> (Vec<f64>, Vec<f64>) {
    let d = ds.site_dim();
    let mut lo = vec![f64::INFINITY; d];
    let mut hi = vec![f64::NEG_INFINITY; d];
    for row in ds.sites().rows() {
        for (k, &v) in row.iter().enumerate() {
            lo[k] = lo[k].min(v);
            hi[k] = hi[k].max(v);
        }
    }
    (lo, hi)
}

fn with_suffix(stem: &Path, suffix: &str) -> PathBuf {
    let mut name = stem.file_name().unwrap_or_default().to_os_string();
    name.push(".");
    name.push(suffix);
    stem.with_file_name(name)
}

fn cmd_align(args: AlignArgs) -> Result<()> {
    let (scales_a, omega_a) = io::read_curve_csv(&args.reference, args.delimiter)?;
    let (scales_b, omega_b) = io::read_curve_csv(&args.candidate, args.delimiter)?;
    let report = compare_sampled(&scales_a, &omega_a, &scales_b, &omega_b)
        .context("comparing the curves")?;
    let json = report::to_json_bytes(&report::AlignReport::from_report(&report))?;
    if let Some(out) = &args.out {
        std::fs::write(out, &json).with_context(|| format!("writing {}", out.display()))?;
    }
    print!("{}", String::from_utf8_lossy(&json));
    Ok(())
}

fn cmd_trivial_bound(args: TrivialBoundArgs) -> Result<()> {
    let matrices: Vec<Array2<f64>> = args
        .matrices
        .iter()
        .map(|p| io::read_matrix(p, args.delimiter))
        .collect::<Result<_>>()?;
    let activations = match &args.activations {
        Some(spec) => spec
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<f64>()
                    .with_context(|| format!("bad activation constant '{tok}'"))
            })
            .collect::<Result<Vec<f64>>>()?,
        None => vec![1.0; matrices.len()],
    };
    let stack = WeightStack::with_activations(matrices, activations)?;
    let bound = trivial_bound_with(&stack, args.tol, args.max_iter)?;
    let layers = stack
        .matrices()
        .iter()
        .zip(&bound.layer_norms)
        .map(|(m, est)| report::LayerNorm {
            rows: m.nrows(),
            cols: m.ncols(),
            spectral_norm: est.value,
            iterations: est.iterations,
            converged: est.converged,
        })
        .collect();
    let out = report::TrivialBoundReport {
        layers,
        activation_lipschitz: stack.activation_lipschitz().to_vec(),
        product: bound.value,
        converged: bound.converged,
    };
    let json = report::to_json_bytes(&out)?;
    if let Some(path) = &args.out {
        std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    print!("{}", String::from_utf8_lossy(&json));
    Ok(())
}

fn cmd_convergence_study(args: StudyArgs) -> Result<()> {
    init_threads(args.threads)?;
    let ds = load_dataset(&args.data)?;
    let stem = output_stem(&args.out, &args.data)?;
    let batch_sizes: Vec<usize> = args
        .batch_sizes
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .with_context(|| format!("bad batch size '{tok}'"))
        })
        .collect::<Result<_>>()?;
    if batch_sizes.is_empty() {
        bail!("no batch sizes given");
    }

    let started = Instant::now();
    let (separation, diameter) = site_distance_extremes(&ds)?;
    let grid = resolve_grid(&args.grid, separation, diameter)?;
    let study = dmoc::convergence_study(&ds, &grid, &batch_sizes, args.shuffle_seed)?;
    let exact_lipschitz = lipschitz_from_dmoc(&ds)?;

    let exact_path = with_suffix(&stem, "exact.curve.csv");
    io::write_curve_csv(&exact_path, grid.scales(), study.exact.omega())?;
    eprintln!("wrote {}", exact_path.display());

    let mut runs = Vec::new();
    for run in &study.runs {
        let path = with_suffix(&stem, &format!("c{}.curve.csv", run.batch_size));
        io::write_curve_csv(&path, grid.scales(), run.curve.omega())?;
        eprintln!("wrote {}", path.display());
        let plan = BatchPlan::new(run.batch_size, ds.n_points(), args.shuffle_seed)?;
        let lipschitz = discrete_seminorm_batched(&ds, &RhoFunction::Identity, &plan)?;
        runs.push(report::StudyRun {
            batch_size: run.batch_size,
            n_batches: plan.n_batches,
            dropped_tail: plan.dropped_tail,
            pairs_evaluated: run.curve.pairs_evaluated(),
            max_gap: run.gaps.iter().copied().fold(0.0, f64::max),
            lipschitz: report::SeminormInfo::from_result("identity".into(), &lipschitz),
        });
    }

    // one gap column per batch size, aligned with the grid scales
    let gaps_path = with_suffix(&stem, "gaps.csv");
    let mut gaps = String::from("t");
    for run in &study.runs {
        gaps.push_str(&format!(",gap_c{}", run.batch_size));
    }
    gaps.push('\n');
    for (k, t) in grid.scales().iter().enumerate() {
        gaps.push_str(&format!("{t}"));
        for run in &study.runs {
            gaps.push_str(&format!(",{}", run.gaps[k]));
        }
        gaps.push('\n');
    }
    std::fs::write(&gaps_path, gaps).with_context(|| format!("writing {}", gaps_path.display()))?;
    eprintln!("wrote {}", gaps_path.display());

    let summary = report::StudySummary {
        n: ds.n_points(),
        grid: grid_info(&grid),
        shuffle_seed: args.shuffle_seed,
        exact_lipschitz: report::SeminormInfo::from_result("identity".into(), &exact_lipschitz),
        runs,
    };
    let study_path = with_suffix(&stem, "study.json");
    std::fs::write(&study_path, report::to_json_bytes(&summary)?)
        .with_context(|| format!("writing {}", study_path.display()))?;
    eprintln!("wrote {}", study_path.display());
    eprintln!("study finished in {:.3}s", started.elapsed().as_secs_f64());
    Ok(())
}

fn cmd_oracle(what: OracleCommand) -> Result<()> {
    match what {
        OracleCommand::Net {
            dim,
            spacing,
            function,
            out,
        } => {
            let f = parse_function(&function)?;
            if f.input_dim() != dim {
                bail!("function takes {}-dimensional input, lattice is {dim}-dimensional", f.input_dim());
            }
            let sites = generate_net(dim, spacing)?;
            let ds = sample_function(&f, &sites)?;
            write_dataset(&out, &ds)
        }
        OracleCommand::Classifier {
            classes,
            points_per_class,
            min_cross_distance,
            seed,
            out,
        } => {
            let ds = generate_classifier_dataset(classes, points_per_class, min_cross_distance, seed)?;
            write_dataset(&out, &ds)
        }
        OracleCommand::Linear {
            weights,
            samples,
            seed,
            singular_pair,
            delimiter,
            out,
        } => {
            let w = io::read_matrix(&weights, delimiter)?;
            let ds = generate_linear_dataset(&w, samples, seed, singular_pair)?;
            write_dataset(&out, &ds)
        }
    }
}

fn write_dataset(stem: &Path, ds: &DataSet) -> Result<()> {
    let x_path = with_suffix(stem, "x.csv");
    let y_path = with_suffix(stem, "y.csv");
    io::write_matrix_csv(&x_path, ds.sites())?;
    io::write_matrix_csv(&y_path, ds.values())?;
    eprintln!("wrote {} ({} points)", x_path.display(), ds.n_points());
    eprintln!("wrote {}", y_path.display());
    Ok(())
}
