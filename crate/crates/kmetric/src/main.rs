use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kmetric::generate::{self, Fixture};
use kmetric::graph::Graph;
use kmetric::report::{analyze, AnalyzeOptions};
use kmetric::verify::run_verify;
use kmetric::{Error, Result};

#[derive(Parser)]
#[command(name = "kmetric", about = "Metric-dimensionality analysis for graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Dim and every bound for a graph in edge-list format
    Analyze {
        /// Graph file (line 1: vertex count; then one "u v" edge per line)
        file: PathBuf,
        /// Emit a single JSON object instead of aligned text
        #[arg(long)]
        json: bool,
        /// Use the specialized block-graph path (errors on non-block graphs)
        #[arg(long)]
        fast: bool,
    },
    /// Check every bound and equality against oracles on a file or corpus
    Verify {
        /// Graph file, or "gen:random_tree" / "gen:random_block" for a
        /// seeded generator sweep
        source: String,
        /// Number of seeds for generator sweeps
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        /// Max graph size for the exponential subset oracle (cap 12)
        #[arg(long, default_value_t = 10)]
        oracle_max: usize,
    },
    /// Generate a graph family and write it in edge-list format
    Gen {
        /// path | cycle | complete | star | random_tree | random_block |
        /// fixture:fig1 | fixture:fig2
        family: String,
        #[command(flatten)]
        params: GenParams,
        /// Output file (stdout if omitted)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenParams {
    /// Vertex count (path, cycle, complete, star, random_tree)
    #[arg(long)]
    n: Option<usize>,
    /// Number of glued blocks (random_block)
    #[arg(long)]
    t: Option<usize>,
    /// Smallest block size (random_block)
    #[arg(long, default_value_t = 2)]
    block_min: usize,
    /// Largest block size (random_block)
    #[arg(long, default_value_t = 5)]
    block_max: usize,
    /// RNG seed; required for random families
    #[arg(long)]
    seed: Option<u64>,
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    Graph::parse_edge_list(&text)
}

fn gen_graph(family: &str, p: &GenParams) -> Result<Graph> {
    let n = || p.n.ok_or_else(|| Error::InvalidParams("--n required".into()));
    let seed = || p.seed.ok_or_else(|| Error::InvalidParams("--seed required".into()));
    match family {
        "path" => generate::path(n()?),
        "cycle" => generate::cycle(n()?),
        "complete" => generate::complete(n()?),
        "star" => generate::star(n()?),
        "random_tree" => generate::random_tree(n()?, seed()?),
        "random_block" => {
            let t = p.t.ok_or_else(|| Error::InvalidParams("--t required".into()))?;
            generate::random_block(t, p.block_min, p.block_max, seed()?)
        }
        "fixture:fig1" => Ok(generate::fixture(Fixture::Fig1)),
        "fixture:fig2" => Ok(generate::fixture(Fixture::Fig2)),
        _ => Err(Error::InvalidParams(format!("unknown family: {family}"))),
    }
}

fn verify_corpus(source: &str, seeds: u64) -> Result<Vec<Graph>> {
    match source {
        "gen:random_tree" => (0..seeds)
            .map(|s| generate::random_tree(4 + (s as usize % 20), s))
            .collect(),
        "gen:random_block" => (0..seeds)
            .map(|s| generate::random_block(2 + (s as usize % 8), 2, 5, s))
            .collect(),
        path => Ok(vec![load_graph(&PathBuf::from(path))?]),
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze { file, json, fast } => {
            let g = load_graph(&file)?;
            let report = analyze(&g, AnalyzeOptions { fast_block_only: fast })?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(true)
        }
        Command::Verify {
            source,
            seeds,
            oracle_max,
        } => {
            if oracle_max > 12 {
                return Err(Error::TooLarge(oracle_max));
            }
            let corpus = verify_corpus(&source, seeds)?;
            let report = run_verify(&corpus, oracle_max)?;
            print!("{}", report.render_text());
            Ok(report.all_pass())
        }
        Command::Gen { family, params, out } => {
            let g = gen_graph(&family, &params)?;
            let text = g.to_edge_list();
            match out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
