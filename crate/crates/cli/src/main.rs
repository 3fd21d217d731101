//! Command-line front end: graph generation, coloring, induced-copy
//! search, hunting with certificates, and certificate verification.
//!
//! Exit codes: 0 success / found, 1 not found / step failed / invalid
//! certificate, 2 premise or input error.

use clap::{Parser, Subcommand};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use treehunt_cli::{certificate, format};
use treehunt_core::coloring::{chromatic_number, DEFAULT_NODE_BUDGET};
use treehunt_core::generators;
use treehunt_core::hunter::{hunt_jobs, HuntStatus};
use treehunt_core::tree::{find_induced_copy, TreeSpec};
use treehunt_core::Graph;

#[derive(Parser)]
#[command(
    name = "treehunt",
    version,
    about = "Certifying search for induced radius-three trees in triangle-free radius-two graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph in DIMACS .col format.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Exact chromatic number (branch and bound, budgeted).
    Color {
        #[arg(long)]
        input: PathBuf,
        /// Search-node budget; on exhaustion bounds are reported.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Brute-force induced-copy search for a tree shape.
    Oracle {
        /// Per-level child counts, e.g. 4,2 or 1,2,1.
        #[arg(long)]
        spec: String,
        #[arg(long)]
        input: PathBuf,
    },
    /// Constructive search for an induced T(t,2,1); prints a JSON certificate.
    Hunt {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        input: PathBuf,
        /// Skip the brute-force fallback when the constructive search fails.
        #[arg(long)]
        no_fallback: bool,
        /// Worker threads for exploring candidate centers.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also write the certificate to a file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        input: PathBuf,
    },
    /// Basic graph facts: size, triangle-freeness, radius, degrees.
    Stats {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Cycle C_n.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// k Mycielski iterations applied to C_5.
    Mycielski {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Kneser graph on k-subsets of {1..n}.
    Kneser {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Seeded triangle-free process.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: usize,
        /// Required: no wall-clock entropy anywhere.
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Generate { family } => {
            let (graph, output) = match family {
                Family::Cycle { n, output } => {
                    (generators::cycle(n).map_err(|e| e.to_string())?, output)
                }
                Family::Mycielski { k, output } => (generators::iterated_mycielski(k), output),
                Family::Kneser { n, k, output } => {
                    if n < 2 * k {
                        return Err(format!("kneser requires n >= 2k, got n={n}, k={k}"));
                    }
                    (generators::kneser(n, k).map_err(|e| e.to_string())?, output)
                }
                Family::Random {
                    n,
                    edges,
                    seed,
                    output,
                } => (generators::random_triangle_free(n, edges, seed), output),
            };
            emit(&format::write_graph(&graph), output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Color { input, budget } => {
            let graph = load_graph(&input)?;
            let result = chromatic_number(&graph, budget);
            println!(
                "chi exact={} lower={} upper={} nodes={}",
                result.exact, result.lower, result.upper, result.search_nodes
            );
            let colors: Vec<String> = result
                .witness
                .assignment
                .iter()
                .map(|c| (c + 1).to_string())
                .collect();
            println!("colors {}", colors.join(" "));
            Ok(ExitCode::SUCCESS)
        }

        Command::Oracle { spec, input } => {
            let graph = load_graph(&input)?;
            let spec = parse_spec(&spec)?;
            match find_induced_copy(&graph, &spec, None) {
                Some(embedding) => {
                    println!("found");
                    for (tree, &host) in embedding.map().iter().enumerate() {
                        println!("map {} {}", tree + 1, host + 1);
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("absent");
                    Ok(ExitCode::from(1))
                }
            }
        }

        Command::Hunt {
            t,
            input,
            no_fallback,
            jobs,
            output,
        } => {
            if t == 0 {
                return Err("t must be positive".into());
            }
            if jobs == 0 {
                return Err("jobs must be positive".into());
            }
            let graph = load_graph(&input)?;
            let outcome = hunt_jobs(&graph, t, !no_fallback, jobs);
            let text = certificate::serialize(&certificate::from_outcome(&outcome));
            print!("{text}");
            if let Some(path) = output {
                fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            eprintln!("{}", outcome.detail);
            Ok(match outcome.status {
                HuntStatus::Found => ExitCode::SUCCESS,
                HuntStatus::NotFound | HuntStatus::StepFailed => ExitCode::from(1),
                HuntStatus::PremiseViolated => ExitCode::from(2),
            })
        }

        Command::Verify { cert, input } => {
            let graph = load_graph(&input)?;
            let text = fs::read_to_string(&cert).map_err(|e| format!("{}: {e}", cert.display()))?;
            let parsed = certificate::parse(&text)?;
            match certificate::check_certificate(&graph, &parsed) {
                Ok(()) => {
                    println!("valid");
                    Ok(ExitCode::SUCCESS)
                }
                Err(reason) => {
                    println!("invalid: {reason}");
                    Ok(ExitCode::from(1))
                }
            }
        }

        Command::Stats { input } => {
            let graph = load_graph(&input)?;
            println!("n {}", graph.vertex_count());
            println!("m {}", graph.edge_count());
            println!("triangle-free {}", graph.is_triangle_free());
            match graph.radius_and_center() {
                Ok((radius, center)) => {
                    println!("radius {radius}");
                    println!("center {}", center + 1);
                }
                Err(_) => println!("radius disconnected"),
            }
            let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
            for v in 0..graph.vertex_count() {
                *histogram.entry(graph.degree(v)).or_insert(0) += 1;
            }
            let parts: Vec<String> = histogram
                .iter()
                .map(|(d, count)| format!("{d}:{count}"))
                .collect();
            println!("degrees {}", parts.join(" "));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    format::parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_spec(text: &str) -> Result<TreeSpec, String> {
    let degrees: Result<Vec<usize>, _> = text
        .split(',')
        .map(|part| part.trim().parse::<usize>())
        .collect();
    let degrees = degrees.map_err(|_| format!("bad tree shape '{text}'"))?;
    TreeSpec::new(degrees).map_err(|e| e.to_string())
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
