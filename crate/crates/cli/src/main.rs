//! Command-line front end: compute exact rainbow connection numbers of
//! power graphs, decide rc <= k, emit certified colorings, export DOT, and
//! run the catalog verifier.
//!
//! Exit codes: 0 on success (including definitive negative answers such as
//! NoColoring), 1 when the verifier reports failures, 2 on usage or input
//! errors, 3 when the only obstacle was an exhausted search budget.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rcpg_core::coloring::{is_rainbow_connected, ColoringDocument, ColoringError, EdgeColoring};
use rcpg_core::constructions::{
    cyclic_coloring, general_coloring, pnq_coloring, quaternion_product_coloring,
};
use rcpg_core::group::{Group, GroupSpec};
use rcpg_core::power_graph::PowerGraph;
use rcpg_core::solver::{rc_decide, rc_exact, Budget, DecideOutcome, RcStatus};
use rcpg_core::verifier::{verify_catalog, Catalog};

#[derive(Parser)]
#[command(name = "rcpg", version, about = "Rainbow connection numbers of power graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact rainbow connection number of a group's power graph
    Rc {
        /// Group spec, e.g. "D:10", "Q:8 x Z:3", "SD:27,7,2"
        spec: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Decide whether the power graph admits a rainbow k-coloring
    Decide {
        spec: String,
        /// Number of colors
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Produce a constructive rainbow coloring with its certificate
    Color {
        spec: String,
        #[arg(long, value_enum)]
        method: Method,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Export the power graph
    Graph {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Attach the colors of a constructive coloring to the edges
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Verify the rc classification over a catalog of groups
    Verify {
        /// Catalog file (spec | claim | expected); defaults to the built-in catalog
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Skip catalog entries with more elements than this
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// General coloring with max(#maximal involutions, 3) colors
    MaxM3,
    /// Two-color construction for cyclic groups of non-prime-power order
    Cyclic2,
    /// Two-color construction for Q8 x Z_n with n odd
    Q8zn,
    /// Two-color construction for qualifying groups of order p^n*q
    Pnq,
}

#[derive(clap::Args)]
struct BudgetArgs {
    /// Search-node limit per (graph, k) decision
    #[arg(long, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget_nodes: u64,
    /// Wall-clock limit per (graph, k) decision, in seconds
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget_seconds: Option<u64>,
}

impl BudgetArgs {
    fn to_budget(&self) -> Budget {
        Budget {
            max_nodes: self.budget_nodes,
            max_seconds: self.budget_seconds,
        }
    }
}

#[derive(clap::Args)]
struct OutputArg {
    /// Write the result to a file instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Rc { spec, format, budget, output } => {
            let (group, graph) = build(&spec)?;
            let report = rc_exact(&graph, &group, &budget.to_budget(), &spec);
            let text = match format {
                ReportFormat::Json => format!("{}\n", report.to_json()),
                ReportFormat::Table => {
                    let mut t = format!(
                        "{:<12} {:>5} {:>5} {:>4} {:>5} {:>5} {:>5} {:<8} {:>10}\n",
                        "group", "order", "edges", "|M|", "lower", "upper", "exact", "status",
                        "nodes"
                    );
                    t.push_str(&format!(
                        "{:<12} {:>5} {:>5} {:>4} {:>5} {:>5} {:>5} {:<8} {:>10}\n",
                        report.group,
                        report.order,
                        report.edges,
                        report.m_g,
                        report.lower,
                        report.upper,
                        report.exact.map_or("-".into(), |v| v.to_string()),
                        match report.status {
                            RcStatus::Exact => "exact",
                            RcStatus::Interval => "interval",
                        },
                        report.nodes
                    ));
                    t
                }
            };
            emit(&output, &text)?;
            Ok(if report.exact.is_some() { 0 } else { 3 })
        }
        Command::Decide { spec, k, budget, output } => {
            let (_, graph) = build(&spec)?;
            let result = rc_decide(&graph, k, &budget.to_budget());
            match result.outcome {
                DecideOutcome::Colored(coloring) => {
                    let text = certified_document(&graph, &coloring)?;
                    emit(&output, &text)?;
                    Ok(0)
                }
                DecideOutcome::NoColoring => {
                    emit(&output, "NoColoring\n")?;
                    Ok(0)
                }
                DecideOutcome::BudgetExceeded => {
                    emit(&output, &format!("BudgetExceeded nodes={}\n", result.nodes))?;
                    Ok(3)
                }
            }
        }
        Command::Color { spec, method, output } => {
            let (group, graph) = build(&spec)?;
            match apply_method(method, &group, &graph) {
                Ok(coloring) => {
                    let text = certified_document(&graph, &coloring)?;
                    emit(&output, &text)?;
                    Ok(0)
                }
                Err(ColoringError::NotApplicable(reason)) => {
                    emit(&output, &format!("NotApplicable: {reason}\n"))?;
                    Ok(0)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Graph { spec, format: GraphFormat::Dot, method, output } => {
            let (group, graph) = build(&spec)?;
            let coloring = match method {
                Some(m) => Some(apply_method(m, &group, &graph).map_err(|e| e.to_string())?),
                None => None,
            };
            emit(&output, &graph.to_dot(coloring.as_ref()))?;
            Ok(0)
        }
        Command::Verify { catalog, max_order, format, budget, output } => {
            let catalog = match catalog {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| format!("cannot read catalog {}: {e}", path.display()))?;
                    Catalog::parse(&text).map_err(|e| e.to_string())?
                }
                None => Catalog::builtin(),
            };
            let report = verify_catalog(&catalog, &budget.to_budget(), max_order);
            let text = match format {
                ReportFormat::Json => format!("{}\n", report.to_json()),
                ReportFormat::Table => report.to_table(),
            };
            emit(&output, &text)?;
            if report.has_failures() {
                Ok(1)
            } else if report.has_inconclusive() {
                Ok(3)
            } else {
                Ok(0)
            }
        }
    }
}

fn build(spec: &str) -> Result<(Group, PowerGraph), String> {
    let parsed = GroupSpec::parse(spec).map_err(|e| e.to_string())?;
    let group = parsed.build().map_err(|e| e.to_string())?;
    let graph = PowerGraph::from_group(&group);
    Ok((group, graph))
}

fn apply_method(
    method: Method,
    group: &Group,
    graph: &PowerGraph,
) -> Result<EdgeColoring, ColoringError> {
    match method {
        Method::MaxM3 => general_coloring(group, graph),
        Method::Cyclic2 => cyclic_coloring(group, graph),
        Method::Q8zn => quaternion_product_coloring(group, graph),
        Method::Pnq => pnq_coloring(group, graph),
    }
}

/// Re-validates a coloring and renders it together with its certificate.
fn certified_document(graph: &PowerGraph, coloring: &EdgeColoring) -> Result<String, String> {
    let cert = is_rainbow_connected(graph, coloring)
        .certificate()
        .ok_or("internal error: produced coloring is not rainbow connected")?;
    Ok(ColoringDocument::new(graph, coloring, Some(&cert)).render())
}

fn emit(output: &OutputArg, text: &str) -> Result<(), String> {
    match &output.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            use std::io::Write;
            match std::io::stdout().write_all(text.as_bytes()) {
                Ok(()) => Ok(()),
                // a closed pipe (e.g. piping into head) is not an error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(format!("cannot write to stdout: {e}")),
            }
        }
    }
}
