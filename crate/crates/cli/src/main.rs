//! `faithlab` command-line front-end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 model invariant
//! violation, 3 size limit. Reports go to stdout (or `--out`), diagnostics to
//! stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use faithlab::interpolate::InterpolationPath;
use faithlab::io::{self, GraphInput};
use faithlab::typicality::{self, ExperimentConfig, Family, Model};
use faithlab::{parse_rational, Error, Rational, Result, SeparationGraph, VertexSet};

#[derive(Parser)]
#[command(name = "faithlab", version, about = "Separation queries, exact CI defects and faithfulness experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether A and B are separated given C.
    Dsep {
        graph: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Comma-separated conditioning set.
        #[arg(long, value_delimiter = ',', default_value = "")]
        c: Vec<String>,
    },
    /// Project out the graph's latent vertices and print the ADMG.
    Project { graph: PathBuf },
    /// Print the faithfulness report of a model against its own graph.
    CheckFaithful { model: PathBuf },
    /// Per-vertex mixture of two discrete models at `--lambda`.
    Interpolate {
        model0: PathBuf,
        model1: PathBuf,
        #[arg(long)]
        lambda: String,
    },
    /// Seeded Monte-Carlo experiment.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    MeasureZero,
    Denseness,
    Openness,
    LineScan,
    Latent,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Discrete,
    Gaussian,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// Graph file (measure-zero, latent).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Starting model (denseness, openness, line-scan).
    #[arg(long)]
    model: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "discrete")]
    family: FamilyArg,
    /// Draws, perturbations per radius, probes per radius or line-scan directions.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_delimiter = ',')]
    epsilons: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',')]
    radii: Option<Vec<String>>,
    #[arg(long, default_value_t = 10_000)]
    grid: usize,
    #[arg(long)]
    resolution: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn with_path<T>(path: &Path, result: Result<T>) -> Result<T> {
    result.map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn load_graph(path: &Path) -> Result<GraphInput> {
    with_path(path, io::parse_graph(&read(path)?))
}

fn load_model(path: &Path) -> Result<Model> {
    with_path(path, io::parse_model(&read(path)?))
}

fn rational_list(values: &Option<Vec<String>>, default: Vec<Rational>) -> Result<Vec<Rational>> {
    match values {
        Some(values) => values.iter().map(|v| parse_rational(v)).collect(),
        None => Ok(default),
    }
}

fn run_dsep(graph: &Path, a: &str, b: &str, c: &[String]) -> Result<String> {
    let input = load_graph(graph)?;
    let g = input.as_separation_graph();
    let c: Vec<&str> = c.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
    let (a, b, c) = (g.index_of(a)?, g.index_of(b)?, g.set_of(&c)?);
    if a == b || c.contains(a) || c.contains(b) {
        return Err(Error::InvalidArgument("query needs distinct vertices outside the conditioning set".into()));
    }
    Ok(if g.separated(a, b, c) { "separated\n" } else { "connected\n" }.to_string())
}

fn run_project(graph: &Path) -> Result<String> {
    match load_graph(graph)? {
        GraphInput::Dag { dag, latent, .. } => {
            let observed = dag.labels_of(dag.all_vertices().difference(latent));
            let observed: Vec<&str> = observed.iter().map(String::as_str).collect();
            Ok(io::admg_to_json(&faithlab::graph::latent_project(&dag, &observed)?))
        }
        GraphInput::Admg(admg) => Ok(io::admg_to_json(&admg)),
    }
}

fn run_check(model: &Path) -> Result<String> {
    let model = load_model(model)?;
    Ok(io::faithfulness_to_json(model.graph(), &model.check_faithful()?))
}

fn run_interpolate(m0: &Path, m1: &Path, lambda: &str) -> Result<String> {
    let lambda = parse_rational(lambda)?;
    let (Model::Discrete(p0), Model::Discrete(p1)) = (load_model(m0)?, load_model(m1)?) else {
        return Err(Error::InvalidArgument("interpolation needs two discrete models".into()));
    };
    let mixed = Model::Discrete(InterpolationPath::new(p0, p1)?.at(&lambda)?);
    Ok(io::interpolation_to_json(&lambda, &mixed, &mixed.check_faithful()?))
}

fn require<'a>(path: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path> {
    path.as_deref().ok_or_else(|| Error::InvalidArgument(format!("this experiment needs --{flag}")))
}

fn run_experiment(args: &ExperimentArgs) -> Result<String> {
    let family = match args.family {
        FamilyArg::Discrete => Family::Discrete,
        FamilyArg::Gaussian => Family::Gaussian,
    };
    let (graph, latent, cards, model) = match args.kind {
        Kind::MeasureZero | Kind::Latent => match load_graph(require(&args.graph, "graph")?)? {
            GraphInput::Dag { dag, latent, cards } => (dag, latent, cards, None),
            GraphInput::Admg(_) => return Err(Error::InvalidArgument("experiments need a DAG, not an ADMG".into())),
        },
        Kind::Denseness | Kind::Openness | Kind::LineScan => {
            let model = load_model(require(&args.model, "model")?)?;
            let cards = match &model {
                Model::Discrete(bn) => bn.cards().to_vec(),
                Model::Gaussian(bn) => vec![2; bn.graph().vertex_count()],
            };
            (model.graph().clone(), VertexSet::EMPTY, cards, Some(model))
        }
    };
    let mut cfg = ExperimentConfig::new(graph, family);
    cfg.latent = latent;
    cfg.cards = cards;
    cfg.samples = args.samples;
    cfg.seed = args.seed;
    cfg.grid = args.grid;
    cfg.epsilons = rational_list(&args.epsilons, cfg.epsilons.clone())?;
    cfg.radii = rational_list(&args.radii, cfg.radii.clone())?;
    if let Some(resolution) = args.resolution {
        cfg.resolution = resolution;
    }
    let report = match (args.kind, model) {
        (Kind::MeasureZero, _) => typicality::measure_zero_experiment(&cfg)?,
        (Kind::Latent, _) => typicality::latent_experiment(&cfg)?,
        (Kind::Denseness, Some(model)) => typicality::denseness_experiment(&model, &cfg)?,
        (Kind::Openness, Some(Model::Discrete(bn))) => typicality::openness_experiment(&bn, &cfg)?,
        (Kind::LineScan, Some(Model::Gaussian(bn))) => typicality::line_scan_report(&bn, &cfg)?,
        (Kind::Openness, _) => return Err(Error::InvalidArgument("openness needs a discrete model".into())),
        _ => return Err(Error::InvalidArgument("line-scan needs a gaussian model".into())),
    };
    Ok(match args.format {
        Format::Json => io::report_to_json(&report),
        Format::Csv => io::report_to_csv(&report),
    })
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match &cli.command {
        Command::Dsep { graph, a, b, c } => emit(&run_dsep(graph, a, b, c)?, None),
        Command::Project { graph } => emit(&run_project(graph)?, None),
        Command::CheckFaithful { model } => emit(&run_check(model)?, None),
        Command::Interpolate { model0, model1, lambda } => emit(&run_interpolate(model0, model1, lambda)?, None),
        Command::Experiment(args) => {
            let started = Instant::now();
            let text = run_experiment(args)?;
            eprintln!("faithlab: experiment finished in {:.2?}", started.elapsed());
            emit(&text, args.out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("faithlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
