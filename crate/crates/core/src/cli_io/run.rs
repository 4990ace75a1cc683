use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use super::config::RunConfig;
use super::manifest::RunManifest;
use super::{parse_config, Cli, Command, ExperimentCommand, FamilyArg, EXIT_ERROR, EXIT_FAIL, EXIT_PASS};
use crate::config_model::MultiGraph;
use crate::contact::{simulate, ContactConfig, SimOutcome, TextTrajectory};
use crate::degree_model::DegreeSequence;
use crate::error::{Error, Result};
use crate::experiments::{
    density_experiment, exponential_law_control, exponential_law_experiment, growth_experiment,
    structure_experiment, survival_indicator_experiment, GraphFamily, GrowthFamily, GrowthSpec, ResultTable, Verdict,
};
use crate::graph_structure::StructureReport;
use crate::rng::SeedTree;

const DENSITY_REPLICAS: usize = 100;
const INDICATOR_REPLICAS: usize = 50;
const EXP_LAW_REPLICAS: usize = 1000;
const GROWTH_REPLICAS: usize = 400;

/// Runs a parsed command. The manifest is written to the output directory
/// before anything else and rewritten when the command ends, errors
/// included.
pub fn run(cli: &Cli) -> Result<i32> {
    let cfg = parse_config(&cli.common)?;
    if !cfg.out.is_dir() {
        return Err(Error::Config(format!("output directory {} does not exist", cfg.out.display())));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let mut manifest = RunManifest::start(&cli.command, &cfg);
    manifest.write(&cfg.out)?;
    let result = pool.install(|| dispatch(&cli.command, &cfg, &mut manifest.outputs));
    manifest.finish(*result.as_ref().unwrap_or(&EXIT_ERROR));
    manifest.write(&cfg.out)?;
    result
}

fn dispatch(command: &Command, cfg: &RunConfig, outputs: &mut Vec<PathBuf>) -> Result<i32> {
    match command {
        Command::Generate { degrees } => {
            if cfg.graph.is_some() {
                return Err(Error::Config("generate does not read --graph".into()));
            }
            let graph = generate_graph(cfg, degrees.as_deref())?;
            let path = create(cfg, "graph.txt", outputs, |w| graph.write_text(w))?;
            println!("wrote {} ({} vertices, {} edges)", path.display(), graph.n(), graph.num_edges());
            Ok(EXIT_PASS)
        }
        Command::Structure => {
            let graph = load_or_generate(cfg)?;
            let report = StructureReport::compute(&graph);
            let json = report.to_json();
            create(cfg, "structure.json", outputs, |w| Ok(writeln!(w, "{json}")?))?;
            println!("{json}");
            Ok(EXIT_PASS)
        }
        Command::Simulate {
            initial,
            horizon,
            trajectory,
        } => run_simulation(cfg, initial, *horizon, *trajectory, outputs),
        Command::Experiment(which) => {
            let tables = run_experiment(which, cfg)?;
            let mut code = EXIT_PASS;
            for table in &tables {
                create(cfg, &format!("{}.csv", table.experiment), outputs, |w| table.write_csv(w))?;
                let report = table.report();
                create(cfg, &format!("{}.txt", table.experiment), outputs, |w| {
                    Ok(w.write_all(report.as_bytes())?)
                })?;
                print!("{report}");
                eprintln!("{}: wall time {:.3} s", table.experiment, table.wall_time_secs);
                if table.verdict() == Verdict::Fail {
                    code = EXIT_FAIL;
                }
            }
            Ok(code)
        }
    }
}

fn run_experiment(which: &ExperimentCommand, cfg: &RunConfig) -> Result<Vec<ResultTable>> {
    Ok(match which {
        ExperimentCommand::Density => vec![density_experiment(&cfg.experiment_spec(DENSITY_REPLICAS)?)?],
        ExperimentCommand::Indicator => {
            vec![survival_indicator_experiment(&cfg.experiment_spec(INDICATOR_REPLICAS)?)?]
        }
        ExperimentCommand::ExpLaw {
            star,
            fixed_graph,
            control,
        } => {
            let mut spec = cfg.experiment_spec(EXP_LAW_REPLICAS)?;
            spec.fixed_graph = *fixed_graph;
            let family = match (&cfg.graph, star) {
                (Some(_), Some(_)) => return Err(Error::Config("--graph and --star are exclusive".into())),
                (Some(path), None) => GraphFamily::Fixed(read_graph(path)?),
                (None, Some(leaves)) => GraphFamily::Fixed(MultiGraph::star(*leaves)),
                (None, None) => GraphFamily::Law,
            };
            let mut tables = vec![exponential_law_experiment(&spec, &family)?];
            if *control {
                tables.push(exponential_law_control(&spec)?);
            }
            tables
        }
        ExperimentCommand::Growth { family, centers, sizes } => {
            let family = match family {
                FamilyArg::Stars => GrowthFamily::Stars,
                FamilyArg::TwoStep => GrowthFamily::TwoStepStars { centers: *centers },
            };
            let replicas = cfg.replicas.unwrap_or(GROWTH_REPLICAS);
            let mut spec = GrowthSpec::new(family, sizes.clone(), cfg.lambda, replicas, cfg.seed);
            spec.cap = cfg.cap;
            spec.calibration = cfg.calibration()?;
            vec![growth_experiment(&spec)?]
        }
        ExperimentCommand::Structure { runs } => vec![structure_experiment(&cfg.experiment_spec(1)?, *runs)?],
    })
}

fn run_simulation(
    cfg: &RunConfig,
    initial: &str,
    horizon: Option<f64>,
    trajectory: bool,
    outputs: &mut Vec<PathBuf>,
) -> Result<i32> {
    let graph = load_or_generate(cfg)?;
    let initial = parse_initial(initial, graph.n())?;
    let contact = ContactConfig::new(cfg.lambda, Some(horizon.unwrap_or(cfg.cap)), cfg.times.clone())?;
    let seeds = SeedTree::new(cfg.seed).child("simulate");
    let replicas = cfg.replicas.unwrap_or(1);
    let runs: Vec<SimOutcome> = crate::experiments::run_replicas(replicas, |r| {
        simulate(&graph, &contact, &initial, &mut seeds.stream("dynamics", r), None)
    })?;

    create(cfg, "density.csv", outputs, |out| {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["replica", "t", "count", "density"])?;
        for (r, run) in runs.iter().enumerate() {
            for s in &run.density_samples {
                w.write_record([r.to_string(), format!("{:?}", s.time), s.count.to_string(), format!("{:?}", s.density)])?;
            }
        }
        Ok(w.flush()?)
    })?;
    create(cfg, "extinction.csv", outputs, |out| {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["replica", "time", "censored", "peak_infected"])?;
        for (r, run) in runs.iter().enumerate() {
            w.write_record([
                r.to_string(),
                format!("{:?}", run.extinction.time()),
                run.extinction.is_censored().to_string(),
                run.peak_infected.to_string(),
            ])?;
        }
        Ok(w.flush()?)
    })?;
    if trajectory {
        create(cfg, "trajectory.txt", outputs, |out| {
            let mut sink = TextTrajectory::new(out);
            simulate(&graph, &contact, &initial, &mut seeds.stream("dynamics", 0), Some(&mut sink))?;
            sink.finish().map(|_| ())
        })?;
    }
    let censored = runs.iter().filter(|r| r.extinction.is_censored()).count();
    println!("{replicas} runs on {} vertices, {censored} alive at the horizon", graph.n());
    Ok(EXIT_PASS)
}

fn parse_initial(spec: &str, n: usize) -> Result<Vec<usize>> {
    if spec == "all" {
        return Ok((0..n).collect());
    }
    spec.split(',')
        .map(|s| {
            let v: usize = s
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("initial vertex {s:?} is not a vertex index")))?;
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            Ok(v)
        })
        .collect()
}

fn generate_graph(cfg: &RunConfig, degrees: Option<&[u64]>) -> Result<MultiGraph> {
    let mut rng = SeedTree::new(cfg.seed).child("graph").stream("graph", 0);
    let seq = match degrees {
        Some(d) => DegreeSequence::from_degrees(d.to_vec())?,
        None => DegreeSequence::sample(&cfg.law()?.sampler(), cfg.n, &mut rng),
    };
    MultiGraph::build_uniform_matching(&seq, &mut rng)
}

fn load_or_generate(cfg: &RunConfig) -> Result<MultiGraph> {
    match &cfg.graph {
        Some(path) => read_graph(path),
        None => generate_graph(cfg, None),
    }
}

fn read_graph(path: &Path) -> Result<MultiGraph> {
    let file = File::open(path)
        .map_err(|e| Error::Config(format!("cannot open graph file {}: {e}", path.display())))?;
    MultiGraph::read_text(BufReader::new(file))
}

/// Creates `out/name`, hands a buffered writer to `write` and records the path.
fn create<F>(cfg: &RunConfig, name: &str, outputs: &mut Vec<PathBuf>, write: F) -> Result<PathBuf>
where
    F: FnOnce(&mut BufWriter<File>) -> Result<()>,
{
    let path = cfg.out.join(name);
    let mut w = BufWriter::new(File::create(&path)?);
    write(&mut w)?;
    w.flush()?;
    outputs.push(path.clone());
    Ok(path)
}
