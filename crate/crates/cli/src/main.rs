//! `dicrit`: exact dichromatic numbers, criticality checks, Gallai-Edmonds
//! decompositions, proof replays, and exhaustive theorem verification.
//!
//! Exit codes: 0 success (and verification PASS), 1 theorem violation or
//! failed assertion, 2 invalid input or usage, 3 hypotheses not met for a
//! strict `trace`.

mod render;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dicrit::{
    bidirected_complete, bidirected_join, chi_with_witness, criticality, directed_cycle,
    ge_decompose, matching_number, run_proof_pipeline, verify_ge_structure, verify_theorem_up_to,
    Digraph, PipelineError, PipelineMode, ScanMode, UGraph, VerifyOptions,
};

#[derive(Parser)]
#[command(
    name = "dicrit",
    version,
    about = "Dichromatic numbers, critical digraphs, and the disconnected-complement theorem"
)]
struct Cli {
    /// Emit one structured JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dichromatic number and a witness colouring of a digraph.
    Chi {
        /// Digraph file in `digraph n` format, or `-` for stdin.
        file: String,
    },
    /// Vertex-criticality and arc-criticality of a digraph.
    Critical {
        /// Digraph file, or `-` for stdin.
        file: String,
    },
    /// Gallai-Edmonds decomposition of an undirected graph, with
    /// certificate checks.
    Ge {
        /// Graph file in `graph n` format, or `-` for stdin.
        file: String,
    },
    /// Replay the disconnected-complement argument on a digraph.
    Trace {
        /// Digraph file, or `-` for stdin.
        file: String,
        /// Run on any digraph and report which steps hold instead of
        /// requiring the hypotheses.
        #[arg(long)]
        exploratory: bool,
    },
    /// Check the theorem on every digraph up to a given order.
    Verify {
        #[arg(long = "max-n")]
        max_n: usize,
        /// Enumerate one representative per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Parallel workers for the scan.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Run the full proof replay on every in-bound instance.
        #[arg(long = "full-trace")]
        full_trace: bool,
    },
    /// Generate a digraph from a named family.
    Gen {
        /// One of: bidirected_complete, directed_cycle, bidirected_join.
        #[arg(long)]
        family: String,
        /// Order parameter for bidirected_complete.
        #[arg(short, long)]
        k: Option<usize>,
        /// Order parameter for directed_cycle.
        #[arg(short, long)]
        n: Option<usize>,
        /// Two digraph files to join, for bidirected_join.
        #[arg(long, num_args = 2, value_names = ["FILE1", "FILE2"])]
        parts: Option<Vec<String>>,
    },
}

/// A failure along with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Chi { file } => {
            let g = read_digraph(&file)?;
            let (k, witness) = chi_with_witness(&g);
            if cli.json {
                render::print_json(render::chi_json(g.n(), k, &witness));
            } else {
                print!("{}", render::chi_text(k, &witness));
            }
            Ok(0)
        }
        Command::Critical { file } => {
            let g = read_digraph(&file)?;
            if g.n() == 0 {
                return Err(Failure::usage(
                    "criticality is defined for digraphs with at least one vertex",
                ));
            }
            let c = criticality(&g);
            if cli.json {
                render::print_json(render::critical_json(g.n(), &c));
            } else {
                print!("{}", render::critical_text(&c));
            }
            Ok(0)
        }
        Command::Ge { file } => {
            let h = read_ugraph(&file)?;
            let dec = ge_decompose(&h);
            let cert = verify_ge_structure(&h, &dec)
                .expect("a freshly computed decomposition is structurally consistent");
            let nu = matching_number(&h);
            if cli.json {
                render::print_json(render::ge_json(&h, nu, &dec, &cert));
            } else {
                print!("{}", render::ge_text(&h, nu, &dec, &cert));
            }
            // A failed certificate would falsify the decomposition
            // structure itself; that is the loud exit.
            Ok(if cert.pass { 0 } else { 1 })
        }
        Command::Trace { file, exploratory } => {
            let g = read_digraph(&file)?;
            let mode = if exploratory {
                PipelineMode::Exploratory
            } else {
                PipelineMode::Strict
            };
            match run_proof_pipeline(&g, mode) {
                Ok(trace) => {
                    if cli.json {
                        render::print_json(render::trace_json(&trace));
                    } else {
                        print!("{}", render::trace_text(&trace));
                    }
                    Ok(0)
                }
                Err(PipelineError::TheoremViolation { trace }) => {
                    if cli.json {
                        render::print_json(render::trace_json(&trace));
                    } else {
                        print!("{}", render::trace_text(&trace));
                    }
                    eprintln!("error: theorem violation; the trace above is a counterexample");
                    Ok(1)
                }
                Err(err @ PipelineError::HypothesesNotMet { .. }) => Err(Failure {
                    code: 3,
                    message: format!("{err} (rerun with --exploratory for a partial trace)"),
                }),
                Err(err) => Err(Failure::usage(err.to_string())),
            }
        }
        Command::Verify {
            max_n,
            dedup,
            jobs,
            full_trace,
        } => {
            if jobs == 0 {
                return Err(Failure::usage("--jobs must be at least 1"));
            }
            let report = verify_theorem_up_to(&VerifyOptions {
                max_n,
                dedup,
                jobs,
                full_trace,
                scan: ScanMode::Census,
            })
            .map_err(|e| Failure::usage(e.to_string()))?;
            for (n, elapsed) in &report.elapsed_per_order {
                eprintln!("scanned n = {n} in {:.3}s", elapsed.as_secs_f64());
            }
            eprintln!("total {:.3}s", report.elapsed_total.as_secs_f64());
            if cli.json {
                render::print_json(render::verify_json(&report));
            } else {
                print!("{}", render::verify_text(&report));
            }
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Gen {
            family,
            k,
            n,
            parts,
        } => {
            let g = generate(&family, k, n, parts)?;
            if cli.json {
                render::print_json(render::digraph_json(&g));
            } else {
                println!("{}", g.to_text());
            }
            Ok(0)
        }
    }
}

fn generate(
    family: &str,
    k: Option<usize>,
    n: Option<usize>,
    parts: Option<Vec<String>>,
) -> Result<Digraph, Failure> {
    match family {
        "bidirected_complete" => {
            let k = k.ok_or_else(|| Failure::usage("bidirected_complete needs --k"))?;
            if k > Digraph::MAX_VERTICES {
                return Err(Failure::usage(format!(
                    "--k exceeds the supported maximum of {}",
                    Digraph::MAX_VERTICES
                )));
            }
            Ok(bidirected_complete(k))
        }
        "directed_cycle" => {
            let n = n.ok_or_else(|| Failure::usage("directed_cycle needs --n"))?;
            if n < 2 {
                return Err(Failure::usage("directed_cycle needs --n of at least 2"));
            }
            if n > Digraph::MAX_VERTICES {
                return Err(Failure::usage(format!(
                    "--n exceeds the supported maximum of {}",
                    Digraph::MAX_VERTICES
                )));
            }
            Ok(directed_cycle(n))
        }
        "bidirected_join" => {
            let parts = parts.ok_or_else(|| {
                Failure::usage("bidirected_join needs --parts FILE1 FILE2")
            })?;
            let g1 = read_digraph(&parts[0])?;
            let g2 = read_digraph(&parts[1])?;
            if g1.n() + g2.n() > Digraph::MAX_VERTICES {
                return Err(Failure::usage(format!(
                    "joined order {} exceeds the supported maximum of {}",
                    g1.n() + g2.n(),
                    Digraph::MAX_VERTICES
                )));
            }
            Ok(bidirected_join(&g1, &g2))
        }
        other => Err(Failure::usage(format!(
            "unknown family `{other}` (expected bidirected_complete, directed_cycle, or bidirected_join)"
        ))),
    }
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("reading {path}: {e}")))
    }
}

fn read_digraph(path: &str) -> Result<Digraph, Failure> {
    read_source(path)?
        .parse()
        .map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn read_ugraph(path: &str) -> Result<UGraph, Failure> {
    read_source(path)?
        .parse()
        .map_err(|e| Failure::usage(format!("{path}: {e}")))
}
