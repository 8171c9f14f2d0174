//! `trapezoid`: batch front end for the trapezoid graph toolkit.
//!
//! Exit codes: 0 on success, 1 on usage, I/O, parse or validation failures,
//! 2 when algorithms disagree on an instance.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use trapezoid::batch::{self, Algorithm, BenchConfig, ORACLE_LIMIT};
use trapezoid::format::{parse_diagram, write_diagram};
use trapezoid::structure::{has_triangle, is_bipartite, is_caterpillar, OddCycle};
use trapezoid::{kappa_fast, kappa_quadratic, oracle, TrapezoidDiagram, WitnessMode};

#[derive(Parser)]
#[command(name = "trapezoid", version, about = "Vertex connectivity and structure of trapezoid graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random diagram.
    Gen {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Vertex connectivity of each input diagram.
    Kappa {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long, value_enum, default_value_t = AlgorithmArg::Fast)]
        algorithm: AlgorithmArg,
        /// Also report a minimum vertex cut.
        #[arg(short, long)]
        witness: bool,
        /// Accept arbitrary distinct integer labels and rank-normalize them.
        #[arg(long)]
        normalize: bool,
    },
    /// Test a structural property of the intersection graph.
    Check {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long, value_enum)]
        property: Property,
        #[arg(long)]
        normalize: bool,
    },
    /// Print the intersection graph.
    Export {
        input: PathBuf,
        #[arg(short, long, value_enum, default_value_t = ExportFormat::Edgelist)]
        format: ExportFormat,
        #[arg(long)]
        normalize: bool,
    },
    /// Time algorithms on random diagrams and cross-check their answers.
    Bench {
        /// Comma-separated diagram sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        seeds: u64,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [AlgorithmArg::Fast, AlgorithmArg::Quadratic])]
        algorithms: Vec<AlgorithmArg>,
        /// CSV output file; stdout when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Run instances on all cores (timings include contention).
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Fast,
    Quadratic,
    Oracle,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Fast => Algorithm::Fast,
            AlgorithmArg::Quadratic => Algorithm::Quadratic,
            AlgorithmArg::Oracle => Algorithm::Oracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Bipartite,
    Triangle,
    Caterpillar,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Edgelist,
    Dot,
}

/// One line of `kappa` output.
#[derive(Serialize)]
struct ResultRecord {
    input: String,
    kappa: usize,
    algorithm: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
    elapsed_ns: u128,
}

/// One line of `check` output.
#[derive(Serialize)]
struct CheckRecord {
    input: String,
    property: &'static str,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    sides: Option<[Vec<usize>; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    triangle: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spine: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pendants: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

impl CheckRecord {
    fn new(input: &Path, property: &'static str, holds: bool) -> Self {
        Self {
            input: input.display().to_string(),
            property,
            holds,
            sides: None,
            odd_cycle: None,
            triangle: None,
            spine: None,
            pendants: None,
            reason: None,
        }
    }
}

enum Failure {
    Invalid(anyhow::Error),
    Disagreement(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Invalid(e)
    }
}

fn read_diagram(path: &Path, normalize: bool) -> anyhow::Result<TrapezoidDiagram> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_diagram(&text, normalize).with_context(|| format!("{}", path.display()))
}

fn emit<T: Serialize>(out: &mut impl Write, record: &T) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, record)?;
    writeln!(out)?;
    Ok(())
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, bytes).with_context(|| format!("cannot write {}", p.display())),
        None => io::stdout().write_all(bytes).context("cannot write to stdout"),
    }
}

fn kappa_record(dg: &TrapezoidDiagram, algorithm: Algorithm, witness: bool) -> (usize, Option<Vec<usize>>, u128) {
    let mode = if witness { WitnessMode::Extract } else { WitnessMode::Skip };
    let start = Instant::now();
    let (kappa, cut) = match algorithm {
        Algorithm::Fast => {
            let r = kappa_fast(dg, mode);
            (r.kappa, r.witness)
        }
        Algorithm::Quadratic => {
            let r = kappa_quadratic(dg, mode);
            (r.kappa, r.witness)
        }
        Algorithm::Oracle => {
            let g = dg.intersection_graph();
            let kappa = oracle::kappa_bruteforce(&g);
            (kappa, if witness { oracle::min_vertex_cut(&g) } else { None })
        }
    };
    (kappa, cut, start.elapsed().as_nanos())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gen { n, seed, out: path } => {
            if n == 0 {
                return Err(anyhow!("n must be at least 1").into());
            }
            let text = write_diagram(&TrapezoidDiagram::random(n, seed));
            write_output(path.as_deref(), text.as_bytes())?;
        }
        Command::Kappa { inputs, algorithm, witness, normalize } => {
            let algorithm = Algorithm::from(algorithm);
            for input in &inputs {
                let dg = read_diagram(input, normalize)?;
                if algorithm == Algorithm::Oracle && dg.n() > ORACLE_LIMIT {
                    return Err(anyhow!(
                        "{}: oracle is limited to n <= {ORACLE_LIMIT}, diagram has n = {}",
                        input.display(),
                        dg.n()
                    )
                    .into());
                }
                let (kappa, cut, elapsed_ns) = kappa_record(&dg, algorithm, witness);
                let record = ResultRecord {
                    input: input.display().to_string(),
                    kappa,
                    algorithm: algorithm.name(),
                    // Complete graphs have no cut; report an empty list.
                    witness: witness.then(|| cut.unwrap_or_default()),
                    elapsed_ns,
                };
                emit(&mut out, &record)?;
            }
        }
        Command::Check { inputs, property, normalize } => {
            for input in &inputs {
                let g = read_diagram(input, normalize)?.intersection_graph();
                let record = match property {
                    Property::Bipartite => match is_bipartite(&g) {
                        Ok(b) => CheckRecord {
                            sides: Some([b.part(0), b.part(1)]),
                            ..CheckRecord::new(input, "bipartite", true)
                        },
                        Err(OddCycle(cycle)) => CheckRecord {
                            odd_cycle: Some(cycle),
                            ..CheckRecord::new(input, "bipartite", false)
                        },
                    },
                    Property::Triangle => match has_triangle(&g) {
                        Some((i, j, k)) => CheckRecord {
                            triangle: Some([i, j, k]),
                            ..CheckRecord::new(input, "triangle", true)
                        },
                        None => CheckRecord::new(input, "triangle", false),
                    },
                    Property::Caterpillar => match is_caterpillar(&g) {
                        Ok(cd) => CheckRecord {
                            spine: Some(cd.spine),
                            pendants: Some(cd.pendants),
                            ..CheckRecord::new(input, "caterpillar", true)
                        },
                        Err(reason) => CheckRecord {
                            reason: Some(reason.to_string()),
                            ..CheckRecord::new(input, "caterpillar", false)
                        },
                    },
                };
                emit(&mut out, &record)?;
            }
        }
        Command::Export { input, format, normalize } => {
            let g = read_diagram(&input, normalize)?.intersection_graph();
            let mut text = String::new();
            match format {
                ExportFormat::Edgelist => {
                    writeln!(text, "{} {}", g.n(), g.m()).unwrap();
                    for (i, j) in g.edges() {
                        writeln!(text, "{i} {j}").unwrap();
                    }
                }
                ExportFormat::Dot => {
                    text.push_str("graph trapezoid {\n");
                    for v in 1..=g.n() {
                        writeln!(text, "  {v};").unwrap();
                    }
                    for (i, j) in g.edges() {
                        writeln!(text, "  {i} -- {j};").unwrap();
                    }
                    text.push_str("}\n");
                }
            }
            out.write_all(text.as_bytes()).context("cannot write to stdout")?;
        }
        Command::Bench { sizes, seeds, algorithms, csv, parallel } => {
            let algorithms: Vec<Algorithm> = algorithms.into_iter().map(Algorithm::from).collect();
            if sizes.contains(&0) {
                return Err(anyhow!("sizes must be positive").into());
            }
            if algorithms.contains(&Algorithm::Oracle) {
                if let Some(&n) = sizes.iter().find(|&&n| n > ORACLE_LIMIT) {
                    return Err(anyhow!("oracle is limited to n <= {ORACLE_LIMIT}, size {n} requested").into());
                }
            }
            let config = BenchConfig {
                sizes,
                seeds_per_size: seeds,
                algorithms,
                parallel,
            };
            let records = batch::run_bench(&config).map_err(|e| Failure::Disagreement(e.into()))?;
            let mut buf = Vec::new();
            batch::write_csv(&records, &mut buf).context("cannot format CSV")?;
            write_output(csv.as_deref(), &buf)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Disagreement(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
