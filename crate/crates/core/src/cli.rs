//! The `delrips` command line.
//!
//! Exit codes: 0 success, 2 invalid arguments or input, 3 computation
//! failure (e.g. degenerate geometry), 4 file I/O failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::bench::{format_bench_csv, run_bench, BenchConfig, BenchError};
use crate::cloud::PointCloud;
use crate::datagen::{add_noise, sample_shape, DatagenError, ShapeClass};
use crate::diagram::PersistenceDiagram;
use crate::filtration::{build, FiltrationError, FiltrationSpec, Method};
use crate::geometry::{hausdorff_distance, GeometryError};
use crate::instability::{demo_instability, InstabilityError, DEFAULT_OFFSETS};
use crate::io::{self, IoError, NumberFormat};
use crate::metrics::{bottleneck, DiagonalCost, MetricsError};
use crate::persistence::{diagram, PersistenceError};
use crate::vectorize::{
    delay_embed, fit_pi_grid, persistence_image, stats_feature_names, stats_feature_vector_with,
    EntropyLog, VectorizeError,
};

#[derive(Debug, Parser)]
#[command(name = "delrips", version, about = "Persistent homology of point clouds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Persistence diagrams of a point cloud, one file per homology dimension
    Pd(PdArgs),
    /// Time the filtration methods on sampled shapes
    Bench(BenchArgs),
    /// Diagrams of the four-point configuration as its fourth point moves
    DemoInstability(DemoArgs),
    /// Sample a point cloud from a shape class
    Generate(GenerateArgs),
    /// Delay-embed a time series into a point cloud
    Embed(EmbedArgs),
    /// Feature vectors from diagram files
    #[command(subcommand)]
    Vectorize(VectorizeCommand),
    /// Bottleneck distance between two diagram files
    Bottleneck(BottleneckArgs),
    /// Hausdorff distance between two point clouds
    Hausdorff(HausdorffArgs),
}

#[derive(Debug, Args)]
pub struct OutputFormat {
    /// Write every digit needed to round-trip values exactly
    #[arg(long)]
    pub full_precision: bool,
}

impl OutputFormat {
    fn number_format(&self) -> NumberFormat {
        if self.full_precision {
            NumberFormat::Full
        } else {
            NumberFormat::Fixed
        }
    }
}

#[derive(Debug, Args)]
pub struct PdArgs {
    /// Point cloud (.csv or .json)
    pub input: PathBuf,
    #[arg(long, default_value = "dr")]
    pub method: Method,
    /// Top homology dimension; simplices up to one dimension higher are built
    #[arg(long, default_value_t = 1)]
    pub maxdim: usize,
    /// Scale cap (rips only)
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Directory for `<stem>_H<p>.csv` (or `.json`) files
    #[arg(short, long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Keep pairs with birth equal to death
    #[arg(long)]
    pub keep_zero_pairs: bool,
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "sphere")]
    pub shape: ShapeClass,
    #[arg(long, default_value_t = 0.1)]
    pub noise: f64,
    #[arg(long, value_delimiter = ',', default_value = "100,200,300,400,500")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, value_delimiter = ',', default_value = "rips,dr,alpha")]
    pub methods: Vec<Method>,
    #[arg(long, default_value_t = 1)]
    pub maxdim: usize,
    /// Seconds per cell
    #[arg(long, default_value_t = 7.0)]
    pub timeout: f64,
    #[arg(long, default_value_t = 2_000_000)]
    pub max_simplices: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// CSV destination; stdout when omitted
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Offsets of the moving point
    #[arg(long = "x", value_delimiter = ',', allow_negative_numbers = true)]
    pub offsets: Vec<f64>,
    #[arg(long, default_value = "half")]
    pub diagonal_cost: DiagonalCost,
    #[arg(long)]
    pub keep_zero_pairs: bool,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub shape: ShapeClass,
    #[arg(short, long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Radius of the uniform-ball noise added to every point
    #[arg(long, default_value_t = 0.0)]
    pub noise: f64,
    #[arg(short, long)]
    pub output: PathBuf,
    #[command(flatten)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    /// Numeric series separated by commas, spaces or newlines
    pub input: PathBuf,
    #[arg(long, default_value_t = 3)]
    pub dim: usize,
    #[arg(long, default_value_t = 5)]
    pub tau: usize,
    #[arg(long, default_value_t = 1)]
    pub stride: usize,
    #[arg(short, long)]
    pub output: PathBuf,
    #[command(flatten)]
    pub format: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum VectorizeCommand {
    /// Persistence images on one grid per dimension fitted to all inputs
    Pi(PiArgs),
    /// Sixteen summary statistics per dimension
    Stats(StatsArgs),
}

#[derive(Debug, Args)]
pub struct PiArgs {
    /// Diagram files; one output row each
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Homology dimensions to image
    #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
    pub dims: Vec<usize>,
    /// `RxC` per dimension, or one for all
    #[arg(long, value_delimiter = ',', default_value = "5x1,5x5,5x5", value_parser = parse_resolution)]
    pub resolution: Vec<(usize, usize)>,
    /// Gaussian bandwidth; half the pixel height when omitted
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long)]
    pub keep_zero_pairs: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
    pub dims: Vec<usize>,
    /// Logarithm for persistent entropy: e or 2
    #[arg(long, default_value = "e")]
    pub entropy_log: EntropyLog,
    #[arg(long)]
    pub keep_zero_pairs: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BottleneckArgs {
    pub left: PathBuf,
    pub right: PathBuf,
    /// Only this dimension; every dimension present otherwise
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, default_value = "half")]
    pub diagonal_cost: DiagonalCost,
}

#[derive(Debug, Args)]
pub struct HausdorffArgs {
    pub left: PathBuf,
    pub right: PathBuf,
}

fn parse_resolution(s: &str) -> Result<(usize, usize), String> {
    let (r, c) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("resolution `{s}` is not of the form RxC"))?;
    let parse = |v: &str| v.trim().parse::<usize>().ok().filter(|&v| v > 0);
    match (parse(r), parse(c)) {
        (Some(r), Some(c)) => Ok((r, c)),
        _ => Err(format!("resolution `{s}` needs positive integers")),
    }
}

// Feature tables are always written at full precision: pixels on a grid
// with a collapsed axis (H0 births are all zero) are of order 1e-9.

/// A failed command and the exit code it maps to.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Compute(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Compute(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::File { .. } => CliError::Io(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::EpsilonTooLarge { .. }
            | GeometryError::InvalidEpsilon(_)
            | GeometryError::DimensionMismatch { .. }
            | GeometryError::EmptyCloud => CliError::Invalid(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<FiltrationError> for CliError {
    fn from(e: FiltrationError) -> Self {
        match e {
            FiltrationError::Geometry(g) => g.into(),
            FiltrationError::InvalidSpec(_) | FiltrationError::EmptyCloud => {
                CliError::Invalid(e.to_string())
            }
            _ => CliError::Compute(e.to_string()),
        }
    }
}

macro_rules! compute_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Compute(e.to_string())
            }
        }
    )*};
}
compute_error!(PersistenceError, MetricsError);

impl From<DatagenError> for CliError {
    fn from(e: DatagenError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<VectorizeError> for CliError {
    fn from(e: VectorizeError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<InstabilityError> for CliError {
    fn from(e: InstabilityError) -> Self {
        match e {
            InstabilityError::OffsetOutOfRange(_) => CliError::Invalid(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<BenchError> for CliError {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::Datagen(e) => e.into(),
            BenchError::Filtration(e) => e.into(),
            BenchError::Persistence(e) => e.into(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Pd(a) => cmd_pd(&a, out),
        Command::Bench(a) => cmd_bench(&a, out, err),
        Command::DemoInstability(a) => cmd_demo_instability(&a, out),
        Command::Generate(a) => cmd_generate(&a),
        Command::Embed(a) => cmd_embed(&a),
        Command::Vectorize(VectorizeCommand::Pi(a)) => cmd_pi(&a, out, err),
        Command::Vectorize(VectorizeCommand::Stats(a)) => cmd_stats(&a, out),
        Command::Bottleneck(a) => cmd_bottleneck(&a, out),
        Command::Hausdorff(a) => cmd_hausdorff(&a, out),
    }
}

fn reduced_view(d: PersistenceDiagram, keep_zero_pairs: bool) -> PersistenceDiagram {
    if keep_zero_pairs {
        d
    } else {
        d.without_zero_persistence()
    }
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "diagram".into(), |s| s.to_string_lossy().into_owned())
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(p) => Ok(io::write_string(p, text)?),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Builds the filtration and diagram for one cloud.
pub fn compute_diagram(cloud: &PointCloud, spec: &FiltrationSpec) -> Result<PersistenceDiagram, CliError> {
    let filt = build(cloud, spec)?;
    Ok(diagram(&filt)?)
}

fn cmd_pd(a: &PdArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cloud = io::read_cloud(&a.input)?;
    let mut spec = FiltrationSpec::new(a.method, a.maxdim);
    if let Some(t) = a.threshold {
        spec = spec.with_threshold(t);
    }
    let dgm = reduced_view(compute_diagram(&cloud, &spec)?.canonical(), a.keep_zero_pairs);
    let stem = file_stem(&a.input);
    let fmt = a.format.number_format();
    std::fs::create_dir_all(&a.out_dir).map_err(|source| IoError::File {
        path: a.out_dir.display().to_string(),
        source,
    })?;
    for p in 0..dgm.num_dims() {
        let (ext, text) = if a.json {
            let single = PersistenceDiagram::from_pairs(
                (0..=p).map(|q| if q == p { dgm.dim(p).to_vec() } else { Vec::new() }).collect(),
            );
            ("json", io::format_diagram_json(&single))
        } else {
            ("csv", io::format_pairs_csv(p, dgm.dim(p), fmt))
        };
        let path = a.out_dir.join(format!("{stem}_H{p}.{ext}"));
        io::write_string(&path, &text)?;
        writeln!(out, "{}", path.display())?;
    }
    Ok(())
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    if !(a.timeout > 0.0 && a.timeout.is_finite()) {
        return Err(CliError::Invalid(format!("timeout must be positive, got {}", a.timeout)));
    }
    if a.sizes.is_empty() || a.trials == 0 || a.methods.is_empty() {
        return Err(CliError::Invalid("need at least one size, trial and method".into()));
    }
    let config = BenchConfig {
        shape: a.shape,
        noise: a.noise,
        sizes: a.sizes.clone(),
        trials: a.trials,
        methods: a.methods.clone(),
        max_hom_dim: a.maxdim,
        timeout: Duration::from_secs_f64(a.timeout),
        max_simplices: a.max_simplices,
        seed: a.seed,
    };
    let records = run_bench(&config, |r| {
        let _ = writeln!(err, "{} n={} trial={} {}", r.method, r.n, r.trial, r.status.as_str());
    })?;
    emit(&format_bench_csv(&records), a.output.as_deref(), out)
}

fn cmd_demo_instability(a: &DemoArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let offsets = if a.offsets.is_empty() {
        DEFAULT_OFFSETS.to_vec()
    } else {
        a.offsets.clone()
    };
    let report = demo_instability(&offsets, a.diagonal_cost)?;
    let fmt = NumberFormat::Fixed;
    let mut text = String::new();
    for r in &report.offsets {
        let tris: Vec<String> = r.triangles.iter().map(|t| t.to_string()).collect();
        writeln!(text, "x = {}", fmt.format(r.x)).unwrap();
        writeln!(
            text,
            "  triangles: {}{}",
            tris.join(" "),
            if r.degenerate { " (cocircular)" } else { "" }
        )
        .unwrap();
        let dgm = reduced_view(r.diagram.canonical(), a.keep_zero_pairs);
        for p in 0..2 {
            let pairs: Vec<String> = dgm
                .dim(p)
                .iter()
                .map(|q| format!("({}, {})", fmt.format(q.birth), fmt.format(q.death)))
                .collect();
            writeln!(text, "  H{p}: {}", pairs.join(" ")).unwrap();
        }
    }
    writeln!(text, "bottleneck ({} diagonal cost)", report.diagonal).unwrap();
    for t in &report.transitions {
        writeln!(
            text,
            "  {} -> {}: H0 {}  H1 {}  same_triangulation={}",
            fmt.format(t.from),
            fmt.format(t.to),
            fmt.format(t.bottleneck_h0),
            fmt.format(t.bottleneck_h1),
            t.same_triangulation
        )
        .unwrap();
    }
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn cmd_generate(a: &GenerateArgs) -> Result<(), CliError> {
    let cloud = sample_shape(a.shape, a.n, a.seed)?;
    let cloud = add_noise(&cloud, a.noise, a.seed.wrapping_add(1))?;
    Ok(io::write_cloud(&a.output, &cloud, a.format.number_format())?)
}

fn cmd_embed(a: &EmbedArgs) -> Result<(), CliError> {
    let series = io::parse_series(&io::read_to_string(&a.input)?)?;
    let cloud = delay_embed(&series, a.dim, a.tau, a.stride)?;
    Ok(io::write_cloud(&a.output, &cloud, a.format.number_format())?)
}

fn read_diagrams(paths: &[PathBuf], keep_zero_pairs: bool) -> Result<Vec<PersistenceDiagram>, CliError> {
    paths
        .iter()
        .map(|p| Ok(reduced_view(io::read_diagram(p)?, keep_zero_pairs)))
        .collect()
}

fn cmd_pi(a: &PiArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let resolutions: Vec<(usize, usize)> = match a.resolution.len() {
        1 => vec![a.resolution[0]; a.dims.len()],
        n if n == a.dims.len() => a.resolution.clone(),
        n => {
            return Err(CliError::Invalid(format!(
                "{n} resolutions given for {} dimensions",
                a.dims.len()
            )))
        }
    };
    let diagrams = read_diagrams(&a.inputs, a.keep_zero_pairs)?;
    let mut columns = Vec::new();
    let mut rows: Vec<(String, Vec<f64>)> =
        a.inputs.iter().map(|p| (p.display().to_string(), Vec::new())).collect();
    for (&p, &res) in a.dims.iter().zip(&resolutions) {
        let slices: Vec<&[_]> = diagrams.iter().map(|d| d.dim(p)).collect();
        let grid = match fit_pi_grid(&slices, res, a.sigma) {
            Ok(g) => Some(g),
            Err(VectorizeError::AllEmpty) => {
                writeln!(err, "warning: no finite H{p} pairs; writing zero pixels")?;
                None
            }
            Err(e) => return Err(e.into()),
        };
        for r in 0..res.0 {
            for c in 0..res.1 {
                columns.push(format!("H{p}_r{r}_c{c}"));
            }
        }
        for (row, pairs) in rows.iter_mut().zip(&slices) {
            match &grid {
                Some(g) => row.1.extend(persistence_image(pairs, g)),
                None => row.1.extend(std::iter::repeat_n(0.0, res.0 * res.1)),
            }
        }
    }
    let text = io::format_features_csv(&columns, &rows, NumberFormat::Full);
    emit(&text, a.output.as_deref(), out)
}

fn cmd_stats(a: &StatsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let diagrams = read_diagrams(&a.inputs, a.keep_zero_pairs)?;
    let names = stats_feature_names(a.dims.iter().copied().max().map_or(0, |m| m + 1));
    let columns: Vec<String> = a
        .dims
        .iter()
        .flat_map(|&p| names[p * 16..(p + 1) * 16].to_vec())
        .collect();
    let rows: Vec<(String, Vec<f64>)> = a
        .inputs
        .iter()
        .zip(&diagrams)
        .map(|(path, d)| {
            let slices: Vec<&[_]> = a.dims.iter().map(|&p| d.dim(p)).collect();
            (path.display().to_string(), stats_feature_vector_with(&slices, a.entropy_log))
        })
        .collect();
    let text = io::format_features_csv(&columns, &rows, NumberFormat::Full);
    emit(&text, a.output.as_deref(), out)
}

fn cmd_bottleneck(a: &BottleneckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let x = io::read_diagram(&a.left)?;
    let y = io::read_diagram(&a.right)?;
    let dims: Vec<usize> = match a.dim {
        Some(p) => vec![p],
        None => (0..x.num_dims().max(y.num_dims())).collect(),
    };
    let mut text = String::from("dim,distance\n");
    for p in dims {
        let d = match bottleneck(x.dim(p), y.dim(p), a.diagonal_cost) {
            Ok((d, _)) => d,
            Err(MetricsError::InfiniteDistance { .. }) => f64::INFINITY,
        };
        writeln!(text, "{p},{}", NumberFormat::Full.format(d)).unwrap();
    }
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn cmd_hausdorff(a: &HausdorffArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let x = io::read_cloud(&a.left)?;
    let y = io::read_cloud(&a.right)?;
    let d = hausdorff_distance(&x, &y)?;
    writeln!(out, "{}", NumberFormat::Full.format(d))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolutions() {
        assert_eq!(parse_resolution("5x1"), Ok((5, 1)));
        assert_eq!(parse_resolution("2X3"), Ok((2, 3)));
        assert!(parse_resolution("0x1").is_err());
        assert!(parse_resolution("5").is_err());
    }

    #[test]
    fn argument_errors_exit_with_two() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run_with(["delrips", "pd"], &mut o, &mut e), 2);
        assert_eq!(run_with(["delrips", "pd", "x.csv", "--method", "cech"], &mut o, &mut e), 2);
        assert_eq!(run_with(["delrips", "--help"], &mut o, &mut e), 0);
    }

    #[test]
    fn missing_file_exits_with_four() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run_with(["delrips", "hausdorff", "/nonexistent/a.csv", "/nonexistent/b.csv"], &mut o, &mut e);
        assert_eq!(code, 4);
    }
}
