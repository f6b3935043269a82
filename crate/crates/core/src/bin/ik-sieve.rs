use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ik_sieve::cache;
use ik_sieve::enumerate::degree_combinations;
use ik_sieve::families::{cousins_named, Catalog, DEFAULT_FAMILY_CAP};
use ik_sieve::minors::has_minor_named;
use ik_sieve::report::{summary_text, write_report};
use ik_sieve::sieve::{run_with_config, RunConfig};
use ik_sieve::simplify::{hat, ReductionTrace};
use ik_sieve::{decode_graph6, encode_graph6, Graph};

// stdout may be a closed pipe (e.g. `| head`); output errors are ignored
macro_rules! say {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Enumerate bipartite graphs by degree combination, sieve out 2-apex graphs,
/// and certify survivors by catalog minors.
#[derive(Parser)]
#[command(name = "ik-sieve", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one graph6 cache file per degree combination.
    Enumerate(RunArgs),
    /// Sieve the domain and write verdicts.tsv and summary.txt.
    Sieve(RunArgs),
    /// Print the cousin family of a catalog graph.
    Families {
        /// K7, K5, K33, K55, K3311, HEAWOOD or COUSIN110.
        seed: String,
        #[arg(long, default_value_t = DEFAULT_FAMILY_CAP)]
        cap: usize,
    },
    /// Search for TARGET as a minor of HOST (exit 0 found, 1 none, 2 bad input).
    Minor { host: String, target: String },
    /// Print Ĝ_{a,b} and its count-equation trace.
    Simplify { graph6: String, a: usize, b: usize },
    /// Full run; exit 0 iff the known classification is reproduced.
    VerifyTheorem(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 23)]
    edges: usize,
    #[arg(long, default_value_t = 3)]
    min_degree: usize,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Sieve disconnected graphs too (classified by the component edge bound).
    #[arg(long)]
    include_disconnected: bool,
}

impl RunArgs {
    fn config(&self) -> RunConfig {
        let d = RunConfig::default();
        RunConfig {
            edge_budget: self.edges,
            min_degree: self.min_degree,
            jobs: self.jobs.unwrap_or(d.jobs),
            cache_dir: self.cache_dir.clone(),
            out_dir: self.out.clone(),
            connected_only: !self.include_disconnected,
        }
    }
}

fn parse(text: &str) -> Result<Graph, ExitCode> {
    decode_graph6(text.trim()).map_err(|e| {
        eprintln!("error: {text:?}: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn fail(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_NEGATIVE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) | Err(code) => code,
    }
}

fn run(cmd: Command) -> Result<ExitCode, ExitCode> {
    match cmd {
        Command::Enumerate(args) => {
            let cfg = args.config();
            cfg.validate().map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            })?;
            let dir = cfg.cache_dir.clone().unwrap_or_else(|| PathBuf::from("cache"));
            let mut total = 0;
            for dc in degree_combinations(cfg.edge_budget, cfg.min_degree) {
                let (graphs, reused) = cache::load_or_enumerate(&dir, &dc).map_err(fail)?;
                total += graphs.len();
                say!("{dc}\t{}\t{}", graphs.len(), if reused { "cached" } else { "generated" });
            }
            say!("total {total}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Sieve(args) => {
            let cfg = args.config();
            let report = run_with_config(&cfg).map_err(fail)?;
            write_report(&report, &cfg.out_dir.clone().unwrap_or_else(|| PathBuf::from("out"))).map_err(fail)?;
            let _ = std::io::stdout().lock().write_all(summary_text(&report).as_bytes());
            Ok(if report.errors().is_empty() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_NEGATIVE) })
        }
        Command::VerifyTheorem(args) => {
            let cfg = args.config();
            let report = run_with_config(&cfg).map_err(fail)?;
            if let Some(out) = &cfg.out_dir {
                write_report(&report, out).map_err(fail)?;
            }
            let _ = std::io::stdout().lock().write_all(summary_text(&report).as_bytes());
            Ok(if report.known_result_holds() == Some(true) { ExitCode::SUCCESS } else { ExitCode::from(EXIT_NEGATIVE) })
        }
        Command::Families { seed, cap } => {
            let cat: Catalog = seed.parse().map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            })?;
            let family = cousins_named(&cat.graph(), cat.name(), cap).map_err(fail)?;
            for g in family.graphs() {
                say!("{}", encode_graph6(g).map_err(fail)?);
            }
            say!("family {} size {}", cat.name(), family.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Minor { host, target } => {
            let h = parse(&host)?;
            let t = parse(&target)?;
            match has_minor_named(&h, &t, "target") {
                Some(w) => {
                    if w.operation_script.is_empty() {
                        say!("isomorphic");
                    }
                    for op in &w.operation_script {
                        say!("{op}");
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    say!("none");
                    Ok(ExitCode::from(EXIT_NEGATIVE))
                }
            }
        }
        Command::Simplify { graph6, a, b } => {
            let g = parse(&graph6)?;
            let (h, trace) = hat(&g, a, b).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            })?;
            say!("{}", encode_graph6(&h.simple_underlying()).map_err(fail)?);
            if !h.is_simple() {
                let edges: Vec<String> = h
                    .edge_pairs()
                    .iter()
                    .map(|&(u, v)| format!("{u}-{v}x{}", h.multiplicity(u, v)))
                    .collect();
                say!("multiedges {}", edges.join(" "));
            }
            say!("{}", ReductionTrace::TSV_HEADER);
            say!("{}", trace.tsv_line());
            Ok(ExitCode::SUCCESS)
        }
    }
}
