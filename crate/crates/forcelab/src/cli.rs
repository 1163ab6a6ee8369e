//! Command-line front end: solve, check, verify-paper, containment, chain,
//! and families subcommands with stable JSON output.
//!
//! Exit codes: 0 on success (including a delivered "this set fails" answer),
//! 1 on claim failure or a budget exhausted without an answer, 2 on usage
//! errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::engine::{check_leaky_forcing, closure, LeakSet};
use crate::families;
use crate::graph::{Graph, VertexSet};
use crate::solver::{
    containment_question, min_leaky_forcing, nested_chain, Budget, SolveOutcome,
};
use crate::verify::{render_table, run_suite, ClaimStatus, Suite, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "forcelab",
    version,
    about = "Exact leaky zero-forcing computations on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimum size of an l-leaky forcing set exactly
    Solve(SolveArgs),
    /// Check whether a given vertex set is an l-leaky forcing set
    Check(CheckArgs),
    /// Run the bundled claim-verification suites
    VerifyPaper(VerifyArgs),
    /// Ask whether some minimum l-leaky set contains a minimum zero-forcing set
    Containment(ContainmentArgs),
    /// Search for a nested chain of minimum sets across leak counts 0..=k
    Chain(ChainArgs),
    /// List the graph families and their vertex-id layouts
    Families(FamiliesArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Graph family: hypercube, gp, bipartite, wheel, path, cycle, tree
    #[arg(long)]
    family: Option<String>,
    /// Hypercube dimension
    #[arg(long)]
    d: Option<usize>,
    /// Primary size parameter (cycle length, side size, path length)
    #[arg(long)]
    n: Option<usize>,
    /// Skip parameter of the generalized Petersen family
    #[arg(long)]
    k: Option<usize>,
    /// First side size of the complete bipartite family
    #[arg(long)]
    m: Option<usize>,
    /// Seed for the random tree family
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Read the graph from an edge-list file instead of a family
    #[arg(long, value_name = "PATH")]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Output::Table)]
    output: Output,
    /// Thread count for the search pools (default: all cores)
    #[arg(long)]
    workers: Option<usize>,
    /// Cap on closure evaluations before reporting bounds instead
    #[arg(long)]
    budget_evals: Option<u64>,
    /// Cap on wall-clock seconds before reporting bounds instead
    #[arg(long)]
    budget_secs: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Number of adversarial leaks
    #[arg(long, default_value_t = 0)]
    leaks: usize,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Comma-separated vertex ids of the candidate set
    #[arg(long)]
    set: String,
    #[arg(long, default_value_t = 0)]
    leaks: usize,
    /// Also print the leak-free forcing trace
    #[arg(long)]
    trace: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Include the 128-vertex half-cube check (several minutes)
    #[arg(long)]
    include_d7: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Cubes,
    Halfcube,
    Prism,
    Bipartite,
    Wheel,
    Containment,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Cubes => Suite::Cubes,
            SuiteArg::Halfcube => Suite::Halfcube,
            SuiteArg::Prism => Suite::Prism,
            SuiteArg::Bipartite => Suite::Bipartite,
            SuiteArg::Wheel => Suite::Wheel,
            SuiteArg::Containment => Suite::Containment,
        }
    }
}

#[derive(Args)]
struct ContainmentArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, default_value_t = 1)]
    leaks: usize,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ChainArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Highest leak count of the chain (levels 0..=leaks)
    #[arg(long, default_value_t = 1)]
    leaks: usize,
    /// Also report, per level pair, whether every minimum set contains one
    /// from the lower level
    #[arg(long)]
    all_variant: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct FamiliesArgs {
    /// Print the vertex-id layout of each family
    #[arg(long)]
    describe: bool,
}

struct UsageError(String);

fn build_graph(args: &GraphArgs) -> Result<Graph, UsageError> {
    match (&args.family, &args.graph) {
        (Some(_), Some(_)) => {
            Err(UsageError("give either --family or --graph, not both".into()))
        }
        (None, None) => Err(UsageError("a graph source is required: --family or --graph".into())),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
            let mut g = Graph::parse_edge_list(&text)
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            g.set_label(format!("edge-list({})", path.display()));
            Ok(g)
        }
        (Some(name), None) => {
            let need = |p: Option<usize>, flag: &str| {
                p.ok_or_else(|| UsageError(format!("family {name} requires {flag}")))
            };
            let built = match name.as_str() {
                "hypercube" => families::hypercube(need(args.d, "--d")?),
                "gp" => families::generalized_petersen(need(args.n, "--n")?, need(args.k, "--k")?),
                "bipartite" => {
                    families::complete_bipartite(need(args.m, "--m")?, need(args.n, "--n")?)
                }
                "wheel" => families::wheel(need(args.n, "--n")?),
                "path" => families::path(need(args.n, "--n")?),
                "cycle" => families::cycle(need(args.n, "--n")?),
                "tree" => families::random_tree(need(args.n, "--n")?, args.seed),
                other => return Err(UsageError(format!("unknown family {other:?}"))),
            };
            built.map_err(|e| UsageError(e.to_string()))
        }
    }
}

fn parse_set(list: &str, n: usize) -> Result<VertexSet, UsageError> {
    let mut set = VertexSet::empty();
    for tok in list.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let v: usize = tok
            .parse()
            .map_err(|_| UsageError(format!("--set: {tok:?} is not a vertex id")))?;
        if v >= n {
            return Err(UsageError(format!(
                "--set: vertex {v} out of range for a graph on {n} vertices"
            )));
        }
        set.insert(v);
    }
    Ok(set)
}

fn budget_from(common: &CommonArgs) -> Budget {
    let mut b = Budget::default();
    if let Some(evals) = common.budget_evals {
        b.max_closures = evals;
    }
    if let Some(secs) = common.budget_secs {
        b.max_duration = Duration::from_secs(secs);
    }
    b
}

fn check_leak_count(leaks: usize, n: usize) -> Result<(), UsageError> {
    if leaks > n {
        Err(UsageError(format!("--leaks {leaks} exceeds the vertex count {n}")))
    } else {
        Ok(())
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

fn run_command(cli: &Cli) -> Result<ExitCode, UsageError> {
    match &cli.command {
        Command::Solve(args) => {
            let g = build_graph(&args.graph)?;
            check_leak_count(args.leaks, g.n())?;
            let budget = budget_from(&args.common);
            let outcome = min_leaky_forcing(&g, args.leaks, &budget);
            match &outcome {
                SolveOutcome::Exact(r) => {
                    if args.common.output == Output::Json {
                        print!("{}", json_line(r));
                    } else {
                        println!("graph:            {}", r.graph);
                        println!("leaks:            {}", r.leaks);
                        println!("z_value:          {}", r.z_value);
                        println!("witness:          {}", r.witness);
                        println!("candidates:       {}", r.candidates_tested);
                        println!("leak sets tested: {}", r.leak_sets_tested);
                    }
                    eprintln!("solved in {:.3?}", r.elapsed);
                    Ok(ExitCode::SUCCESS)
                }
                SolveOutcome::Unknown(u) => {
                    if args.common.output == Output::Json {
                        print!("{}", json_line(u));
                    } else {
                        println!(
                            "unknown: budget exceeded, bounds [{}, {}]",
                            u.lower, u.upper
                        );
                    }
                    eprintln!("gave up after {:.3?}", u.elapsed);
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Check(args) => {
            let g = build_graph(&args.graph)?;
            check_leak_count(args.leaks, g.n())?;
            let set = parse_set(&args.set, g.n())?;
            let check = check_leaky_forcing(&g, set, args.leaks);
            if args.common.output == Output::Json {
                let value = serde_json::json!({
                    "graph": g.label(),
                    "leaks": args.leaks,
                    "set": set,
                    "ok": check.passed(),
                    "leak_placements": check.placements,
                    "closures_run": check.closures_run,
                    "certificate": check.certificate,
                });
                print!("{}", json_line(&value));
            } else if let Some(cert) = &check.certificate {
                print!("{}", json_line(cert));
            } else {
                println!("ok");
            }
            if args.trace {
                let trace = closure(&g, set, LeakSet::empty());
                print!("{}", json_line(&trace));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper(args) => {
            let opts =
                VerifyOptions { include_d7: args.include_d7, budget: budget_from(&args.common) };
            let results = run_suite(args.suite.into(), &opts);
            if args.common.output == Output::Json {
                print!("{}", json_line(&results));
            } else {
                print!("{}", render_table(&results));
            }
            let any_fail = results.iter().any(|r| r.status == ClaimStatus::Fail);
            Ok(if any_fail { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Containment(args) => {
            let g = build_graph(&args.graph)?;
            check_leak_count(args.leaks, g.n())?;
            let budget = budget_from(&args.common);
            match containment_question(&g, args.leaks, &budget) {
                Ok(report) => {
                    if args.common.output == Output::Json {
                        print!("{}", json_line(&report));
                    } else {
                        println!("graph:   {}", report.graph);
                        println!("leaks:   {}", report.leaks);
                        println!("z_0:     {} ({} minimum sets)", report.z_zero, report.minimum_zero_sets);
                        println!("z_leaky: {} ({} minimum sets)", report.z_leaky, report.minimum_leaky_sets);
                        match (&report.witness_zero, &report.witness_leaky) {
                            (Some(b), Some(bl)) => println!("answer:  yes, {b} is contained in {bl}"),
                            _ => println!("answer:  no"),
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Chain(args) => {
            let g = build_graph(&args.graph)?;
            check_leak_count(args.leaks, g.n())?;
            let budget = budget_from(&args.common);
            match nested_chain(&g, args.leaks, &budget, args.all_variant) {
                Ok(report) => {
                    if args.common.output == Output::Json {
                        print!("{}", json_line(&report));
                    } else {
                        println!("graph:  {}", report.graph);
                        println!("sizes:  {:?}", report.sizes);
                        match &report.witness {
                            Some(chain) => {
                                let steps: Vec<String> =
                                    chain.iter().map(|s| s.to_string()).collect();
                                println!(
                                    "chain:  {} ({})",
                                    steps.join(" within "),
                                    if report.strict_possible {
                                        "strictly nested"
                                    } else {
                                        "non-strict"
                                    }
                                );
                            }
                            None => println!("chain:  none exists"),
                        }
                        if let Some(note) = &report.note {
                            println!("note:   {note}");
                        }
                        if let Some(cells) = &report.all_variant {
                            for c in cells {
                                println!(
                                    "levels {} over {}: some={} every={}",
                                    c.leaks, c.lower, c.some, c.every
                                );
                            }
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Families(args) => {
            for (name, params, layout) in families::describe() {
                if args.describe {
                    println!("{name} {params}\n    {layout}");
                } else {
                    println!("{name} {params}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Parses the process arguments and runs the requested command inside the
/// requested worker pool.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let workers = match &cli.command {
        Command::Solve(a) => a.common.workers,
        Command::Check(a) => a.common.workers,
        Command::VerifyPaper(a) => a.common.workers,
        Command::Containment(a) => a.common.workers,
        Command::Chain(a) => a.common.workers,
        Command::Families(_) => None,
    };
    let dispatch = || match run_command(&cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    };
    match workers {
        Some(k) if k > 0 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .expect("worker pool");
            pool.install(dispatch)
        }
        _ => dispatch(),
    }
}
