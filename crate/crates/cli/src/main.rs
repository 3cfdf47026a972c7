//! Command-line surface of the 2-cograph toolkit.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 on
//! malformed input.

use clap::{Parser, Subcommand};
use cographs::checks;
use cographs::dot::{emit_dot, EdgeColorMode};
use cographs::enumerate::{enumerate_class_g, enumerate_class_g_from};
use cographs::graph::SmallGraph;
use cographs::graph6::{emit_graph6, parse_graph6};
use cographs::minimal::{in_class_g, is_minimal_non_2cograph, MinimalityReason, Reduction};
use cographs::recognize::{check_2cograph, is_cograph, is_k_cograph, TwoCographVerdict};
use cographs::report::CensusDocument;
use std::fs;
use std::io::{BufRead, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cographs",
    about = "Recognition, minimality and census tools for 2-cographs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print cograph and 2-cograph verdicts for graphs given as graph6
    /// (one per line on stdin with `-`).
    Recognize {
        /// graph6 string, or `-` to read graphs from stdin
        graph: String,
        /// additionally report the k-cograph verdict for this k
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print a 2-cograph derivation as an s-expression, or the witness
    /// vertex set when there is none.
    Decompose {
        /// graph6 string, or `-` to read graphs from stdin
        graph: String,
    },
    /// Test induced-minor minimality as a non-2-cograph and membership in
    /// the doubly minimal class.
    Minimal {
        /// graph6 string, or `-` to read graphs from stdin
        graph: String,
    },
    /// Export a graph in DOT format.
    Dot {
        /// graph6 string, or `-` to read graphs from stdin
        graph: String,
        /// also draw complement edges, dashed and red
        #[arg(long)]
        green_red: bool,
    },
    /// Run the census of doubly minimal non-2-cographs on a given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// read candidate graphs from this graph6 file instead of the
        /// internal generator
        #[arg(long)]
        input: Option<String>,
        /// write the JSON report here as well as to stdout
        #[arg(long)]
        out: Option<String>,
        /// write the representatives as graph6 lines to this file
        #[arg(long, value_name = "FILE")]
        emit_g6: Option<String>,
    },
    /// Run the verification suite and print one line per check.
    Verify {
        /// largest order the scaling checks run at (the census needs >= 5;
        /// 10 reproduces everything)
        #[arg(long)]
        max_order: usize,
        /// worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Isomorphism verdict for two graphs.
    Iso { first: String, second: String },
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

/// Applies `f` to each input graph: the literal argument, or every line of
/// stdin when the argument is `-`. Stdin verdict lines are prefixed with the
/// graph6 string they belong to.
fn for_each_input(
    arg: &str,
    mut f: impl FnMut(&SmallGraph, Option<&str>),
) -> Result<(), String> {
    if arg == "-" {
        for line in std::io::stdin().lock().lines() {
            let line = line.map_err(|e| e.to_string())?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed == ">>graph6<<" {
                continue;
            }
            let g = parse_graph6(trimmed).map_err(|e| format!("{trimmed:?}: {e}"))?;
            f(&g, Some(trimmed));
        }
        Ok(())
    } else {
        let g = parse_graph6(arg).map_err(|e| e.to_string())?;
        f(&g, None);
        Ok(())
    }
}

fn prefix(tag: Option<&str>) -> String {
    tag.map(|t| format!("{t} ")).unwrap_or_default()
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Recognize { graph, k } => {
            let mut err = None;
            for_each_input(&graph, |g, tag| {
                let p = prefix(tag);
                println!("{p}cograph: {}", yes_no(is_cograph(g)));
                match check_2cograph(g) {
                    TwoCographVerdict::TwoCograph(_) => println!("{p}2-cograph: YES"),
                    TwoCographVerdict::NotTwoCograph(w) => {
                        let ids: Vec<String> =
                            w.support.iter().map(|v| v.to_string()).collect();
                        println!("{p}2-cograph: NO (witness: {})", ids.join(" "));
                    }
                }
                if let Some(k) = k {
                    match is_k_cograph(g, k) {
                        Ok(v) => println!("{p}{k}-cograph: {}", yes_no(v)),
                        Err(e) => err = Some(e.to_string()),
                    }
                }
            })?;
            if let Some(e) = err {
                return Err(e);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { graph } => {
            for_each_input(&graph, |g, tag| {
                let p = prefix(tag);
                match check_2cograph(g) {
                    TwoCographVerdict::TwoCograph(tree) => {
                        println!("{p}{}", tree.to_sexpr());
                    }
                    TwoCographVerdict::NotTwoCograph(w) => {
                        let ids: Vec<String> =
                            w.support.iter().map(|v| v.to_string()).collect();
                        println!("{p}witness: {}", ids.join(" "));
                    }
                }
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Minimal { graph } => {
            let mut err = None;
            for_each_input(&graph, |g, tag| {
                let p = prefix(tag);
                let verdict = match is_minimal_non_2cograph(g) {
                    Ok(v) => v,
                    Err(e) => {
                        err = Some(e.to_string());
                        return;
                    }
                };
                match verdict.reason {
                    MinimalityReason::Minimal => {
                        println!("{p}minimal non-2-cograph: YES");
                    }
                    MinimalityReason::NotANon2Cograph => {
                        println!("{p}minimal non-2-cograph: NO (the graph is a 2-cograph)");
                    }
                    MinimalityReason::Reducible => {
                        let how = match verdict.failing_reduction {
                            Some(Reduction::DeleteVertex(v)) => format!("delete {v}"),
                            Some(Reduction::ContractEdge(e)) => {
                                format!("contract {}-{}", e.u(), e.v())
                            }
                            None => unreachable!("reducible verdicts carry a reduction"),
                        };
                        println!("{p}minimal non-2-cograph: NO (reducible: {how})");
                    }
                }
                match in_class_g(g) {
                    Ok(v) => println!("{p}in class G: {}", yes_no(v)),
                    Err(e) => err = Some(e.to_string()),
                }
            })?;
            if let Some(e) = err {
                return Err(e);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot { graph, green_red } => {
            let mode = if green_red {
                EdgeColorMode::GreenRed
            } else {
                EdgeColorMode::Plain
            };
            for_each_input(&graph, |g, _| print!("{}", emit_dot(g, mode)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            order,
            jobs,
            input,
            out,
            emit_g6,
        } => {
            let report = match input {
                None => enumerate_class_g(order, jobs).map_err(|e| e.to_string())?,
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| format!("{path}: {e}"))?;
                    let mut graphs = Vec::new();
                    for line in text.lines() {
                        let trimmed = line.trim();
                        if trimmed.is_empty() || trimmed == ">>graph6<<" {
                            continue;
                        }
                        graphs.push(
                            parse_graph6(trimmed).map_err(|e| format!("{trimmed:?}: {e}"))?,
                        );
                    }
                    enumerate_class_g_from(order, graphs, jobs).map_err(|e| e.to_string())?
                }
            };
            let doc = CensusDocument::from_report(&report);
            let line = doc.to_json_line();
            println!("{line}");
            if let Some(path) = out {
                fs::write(&path, format!("{line}\n")).map_err(|e| format!("{path}: {e}"))?;
            }
            if let Some(path) = emit_g6 {
                let mut file = fs::File::create(&path).map_err(|e| format!("{path}: {e}"))?;
                for g in &report.representatives {
                    writeln!(file, "{}", emit_graph6(g)).map_err(|e| format!("{path}: {e}"))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_order, jobs } => {
            let outcomes = checks::run_all(max_order, jobs);
            let mut all_passed = true;
            for outcome in &outcomes {
                println!("{outcome}");
                all_passed &= outcome.passed;
            }
            if all_passed {
                println!("all {} checks passed", outcomes.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verification failed");
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Iso { first, second } => {
            let g = parse_graph6(&first).map_err(|e| e.to_string())?;
            let h = parse_graph6(&second).map_err(|e| e.to_string())?;
            if cographs::are_isomorphic(&g, &h) {
                println!("isomorphic");
            } else {
                println!("non-isomorphic");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "YES"
    } else {
        "NO"
    }
}
