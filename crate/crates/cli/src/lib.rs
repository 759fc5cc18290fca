//! Command-line front end. `run` is the whole program minus process setup so
//! integration tests can drive it in-process.
//!
//! Exit codes: 0 yes / success, 1 no, 2 error, 3 enumeration budget exceeded.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use tempord::approx::{approx_general, approx_singleton};
use tempord::exact::{
    solve_brute_force, solve_dag_singleton_maxmin, solve_dag_singleton_minmax, solve_tree_dp, solve_tree_dp_optimise,
    solve_tree_vc, BruteForceConfig, SolveError, SolveMode, SolveResult, DEFAULT_BUDGET,
};
use tempord::instances::{
    gen_family, reduce_34sat, reduce_min_bisection, reduce_pclique, reduce_vertex_cover_list,
    reduce_vertex_cover_maxmin, FamilyKind, Reduction,
};
use tempord::io::{
    parse_dimacs_cnf, parse_dimacs_graph, parse_instance, parse_ordering, write_instance, write_ordering, ParseError,
};
use tempord::{reachability_report, Instance, Objective, Ordering, Parallelism, Semantics};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Overrides the brute-force budget when `--budget` is absent.
pub const BUDGET_ENV: &str = "TEMPORD_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "tempord", version, about = "Reachability-minimising temporal orderings of edge classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide (or optimise) an instance exactly.
    Solve(SolveArgs),
    /// Colouring-based ordering with a guaranteed reachability bound.
    Approx(ApproxArgs),
    /// Write a benchmark family member.
    Generate(GenerateArgs),
    /// Build a reduction instance from a DIMACS graph or CNF file.
    Reduce(ReduceArgs),
    /// Evaluate an ordering against an instance.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Brute,
    Dag,
    TreeVc,
    TreeDp,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    algo: Algo,
    /// Report the optimal value instead of stopping at the first yes-witness.
    #[arg(long, alias = "optimize")]
    optimise: bool,
    /// Maximum number of orderings the brute force may examine.
    #[arg(long)]
    budget: Option<u64>,
    /// Run the brute force on one thread.
    #[arg(long)]
    sequential: bool,
    /// Write the witness ordering here.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ApproxArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Colour the class interaction graph instead of the edges.
    #[arg(long)]
    general: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    BinaryTree,
    CliquePendants,
    RandomTree,
    RandomDag,
    RandomGraph,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Comma-separated `name=value` pairs: `n`, `depth`, `r`, `s`, `p`.
    #[arg(long, default_value = "")]
    params: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Threshold written into the instance (default: vertex count).
    #[arg(long)]
    k: Option<u32>,
    /// Defaults to standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    Bisection,
    Sat34,
    Pclique,
    Vclist,
    Vcmaxmin,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    kind: ReduceKind,
    /// DIMACS graph (`p edge`) or, for sat34, DIMACS CNF (`p cnf`).
    #[arg(long, value_name = "FILE")]
    source: PathBuf,
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    /// Clique size or vertex-cover size; bisection cut size.
    #[arg(long, value_name = "N")]
    param: Option<usize>,
    /// Write the `label vertex` map of the construction here.
    #[arg(long, value_name = "FILE")]
    names: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_name = "FILE")]
    ordering: PathBuf,
    /// Also print `reach <vertex> <size>` for every vertex.
    #[arg(long)]
    per_vertex: bool,
}

/// Runs the program on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut report = String::new();
    let outcome = match cli.command {
        Command::Solve(a) => solve(a, &mut report, err),
        Command::Approx(a) => approx(a, &mut report),
        Command::Generate(a) => generate(a, &mut report),
        Command::Reduce(a) => reduce(a, &mut report),
        Command::Eval(a) => eval(a, &mut report),
    };
    let _ = out.write_all(report.as_bytes());
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn located(path: &Path, e: ParseError) -> anyhow::Error {
    let lines: Vec<String> = e.0.iter().map(|d| format!("{}:{d}", path.display())).collect();
    anyhow!(lines.join("\n"))
}

fn load_instance(path: &Path) -> Result<Instance> {
    parse_instance(&read(path)?).map_err(|e| located(path, e))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn times_line(ordering: &Ordering) -> String {
    ordering.times().iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().with_context(|| format!("{BUDGET_ENV}={v} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Solver chosen by `auto`, with the reason for reporting.
fn dispatch(instance: &Instance, optimise: bool) -> (Algo, &'static str) {
    let g = instance.graph();
    let singleton = instance.is_singleton_system() && instance.time_lists().is_none();
    let strict = instance.semantics() == Semantics::Strict;
    if !singleton {
        return (Algo::Brute, "class system is not a singleton system");
    }
    if !strict {
        return (Algo::Brute, "weak semantics");
    }
    if g.is_directed() && g.is_dag() {
        return match instance.objective() {
            Objective::MinMax => (Algo::Dag, "singleton DAG"),
            Objective::MaxMin => (Algo::Brute, "max-min objective on a DAG has no exact polynomial solver"),
        };
    }
    if !g.is_directed() && g.is_tree() && instance.objective() == Objective::MinMax {
        return if optimise {
            (Algo::TreeVc, "singleton tree, optimisation")
        } else {
            (Algo::TreeDp, "singleton tree, threshold k")
        };
    }
    (Algo::Brute, "no specialised solver applies")
}

fn algo_name(algo: Algo) -> &'static str {
    match algo {
        Algo::Auto => "auto",
        Algo::Brute => "brute",
        Algo::Dag => "dag",
        Algo::TreeVc => "tree-vc",
        Algo::TreeDp => "tree-dp",
    }
}

fn solve(args: SolveArgs, report: &mut String, err: &mut dyn Write) -> Result<i32> {
    let instance = load_instance(&args.input)?;
    let mode = if args.optimise { SolveMode::Optimise } else { SolveMode::Decision };
    let algo = match args.algo {
        Algo::Auto => {
            let (chosen, why) = dispatch(&instance, args.optimise);
            let _ = writeln!(err, "auto: {} ({why})", algo_name(chosen));
            chosen
        }
        other => other,
    };
    writeln!(report, "algo {}", algo_name(algo))?;
    if algo == Algo::Dag && instance.objective() == Objective::MaxMin {
        let achievable = solve_dag_singleton_maxmin(&instance)?;
        writeln!(report, "achievable_max {}", achievable.value)?;
        writeln!(report, "witness {}", times_line(&achievable.witness))?;
        if let Some(path) = &args.out {
            write_file(path, &write_ordering(&achievable.witness))?;
        }
        return Ok(EXIT_YES);
    }
    let outcome = match algo {
        Algo::Brute => {
            let parallelism = if args.sequential { Parallelism::Sequential } else { Parallelism::Parallel };
            let config = BruteForceConfig { budget: budget(args.budget)?, parallelism };
            solve_brute_force(&instance, mode, &config)
        }
        Algo::Dag => solve_dag_singleton_minmax(&instance),
        Algo::TreeVc => solve_tree_vc(&instance, mode),
        Algo::TreeDp if args.optimise => solve_tree_dp_optimise(&instance),
        Algo::TreeDp => solve_tree_dp(&instance),
        Algo::Auto => unreachable!("auto resolved above"),
    };
    let result = match outcome {
        Ok(r) => r,
        Err(SolveError::BudgetExceeded { budget, explored, best }) => {
            writeln!(report, "budget_exceeded {budget}")?;
            writeln!(report, "explored {explored}")?;
            if let Some((value, ordering)) = best {
                writeln!(report, "best {value}")?;
                writeln!(report, "witness {}", times_line(&ordering))?;
            }
            return Ok(EXIT_BUDGET);
        }
        Err(e) => return Err(e.into()),
    };
    write_result(&result, args.out.as_deref(), report)?;
    Ok(if result.decision { EXIT_YES } else { EXIT_NO })
}

fn write_result(result: &SolveResult, out: Option<&Path>, report: &mut String) -> Result<()> {
    writeln!(report, "decision {}", yes_no(result.decision))?;
    if let Some(v) = result.optimal_value {
        writeln!(report, "optimal {v}")?;
    }
    writeln!(report, "explored {}", result.stats.explored)?;
    if let Some(c) = result.stats.non_leaf_edges {
        writeln!(report, "non_leaf_edges {c}")?;
    }
    writeln!(report, "elapsed_ms {:.3}", result.stats.elapsed.as_secs_f64() * 1e3)?;
    if let Some(w) = &result.witness {
        writeln!(report, "witness {}", times_line(w))?;
        if let Some(path) = out {
            write_file(path, &write_ordering(w))?;
        }
    }
    Ok(())
}

fn approx(args: ApproxArgs, report: &mut String) -> Result<i32> {
    let instance = load_instance(&args.input)?;
    let started = Instant::now();
    let ordering = if args.general {
        let a = approx_general(&instance)?;
        writeln!(report, "algo approx-general")?;
        writeln!(report, "colors {}", a.coloring.color_count)?;
        writeln!(report, "class_degree {}", a.class_degree)?;
        writeln!(report, "bound {}", a.bound)?;
        a.ordering
    } else {
        let a = approx_singleton(&instance)?;
        writeln!(report, "algo approx-singleton")?;
        writeln!(report, "colors {}", a.coloring.color_count)?;
        writeln!(report, "bound {}", a.bound)?;
        writeln!(report, "ratio {}", a.ratio)?;
        a.ordering
    };
    let measured = reachability_report(&instance, &ordering)?;
    writeln!(report, "achieved {}", measured.max_value())?;
    writeln!(report, "elapsed_ms {:.3}", started.elapsed().as_secs_f64() * 1e3)?;
    if let Some(path) = &args.out {
        write_file(path, &write_ordering(&ordering))?;
    }
    Ok(EXIT_YES)
}

fn params(text: &str) -> Result<Vec<(String, String)>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(|| anyhow!("parameter `{kv}` is not name=value"))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn param<T: std::str::FromStr>(list: &[(String, String)], name: &str) -> Result<T> {
    let (_, raw) = list.iter().find(|(k, _)| k == name).ok_or_else(|| anyhow!("missing parameter `{name}`"))?;
    raw.parse().map_err(|_| anyhow!("parameter `{name}` has bad value `{raw}`"))
}

fn generate(args: GenerateArgs, report: &mut String) -> Result<i32> {
    let list = params(&args.params)?;
    let known: &[&str] = match args.family {
        Family::Path | Family::RandomTree => &["n"],
        Family::BinaryTree => &["depth"],
        Family::CliquePendants => &["r", "s"],
        Family::RandomDag | Family::RandomGraph => &["n", "p"],
    };
    if let Some((k, _)) = list.iter().find(|(k, _)| !known.contains(&k.as_str())) {
        bail!("unknown parameter `{k}` for this family (expected {})", known.join(", "));
    }
    let seed = args.seed;
    let kind = match args.family {
        Family::Path => FamilyKind::Path { n: param(&list, "n")? },
        Family::BinaryTree => FamilyKind::CompleteBinaryTree { depth: param(&list, "depth")? },
        Family::CliquePendants => FamilyKind::CliqueWithPendants { r: param(&list, "r")?, s: param(&list, "s")? },
        Family::RandomTree => FamilyKind::RandomTree { n: param(&list, "n")?, seed },
        Family::RandomDag => FamilyKind::RandomDag { n: param(&list, "n")?, p: param(&list, "p")?, seed },
        Family::RandomGraph => FamilyKind::RandomGraph { n: param(&list, "n")?, p: param(&list, "p")?, seed },
    };
    let instance = gen_family(kind, args.k)?;
    let text = write_instance(&instance);
    match &args.out {
        Some(path) => {
            write_file(path, &text)?;
            summary(&instance, report)?;
        }
        None => report.push_str(&text),
    }
    Ok(EXIT_YES)
}

fn summary(instance: &Instance, report: &mut String) -> Result<()> {
    writeln!(report, "vertices {}", instance.graph().vertex_count())?;
    writeln!(report, "edges {}", instance.graph().edge_count())?;
    writeln!(report, "classes {}", instance.classes().len())?;
    writeln!(report, "k {}", instance.k())?;
    Ok(())
}

fn reduce(args: ReduceArgs, report: &mut String) -> Result<i32> {
    let text = read(&args.source)?;
    let need = |what: &str| args.param.ok_or_else(|| anyhow!("--param is required for this kind ({what})"));
    let reduction: Reduction = if args.kind == ReduceKind::Sat34 {
        let cnf = parse_dimacs_cnf(&text).map_err(|e| located(&args.source, e))?;
        reduce_34sat(&cnf)?
    } else {
        let graph = parse_dimacs_graph(&text).map_err(|e| located(&args.source, e))?;
        match args.kind {
            ReduceKind::Bisection => reduce_min_bisection(&graph, need("cut size")?)?,
            ReduceKind::Pclique => reduce_pclique(&graph, need("clique size")?)?,
            ReduceKind::Vclist => reduce_vertex_cover_list(&graph, need("cover size")?)?,
            ReduceKind::Vcmaxmin => reduce_vertex_cover_maxmin(&graph, need("cover size")?)?,
            ReduceKind::Sat34 => unreachable!(),
        }
    };
    write_file(&args.out, &write_instance(&reduction.instance))?;
    if let Some(path) = &args.names {
        write_file(path, &reduction.names.to_text())?;
    }
    summary(&reduction.instance, report)?;
    Ok(EXIT_YES)
}

fn eval(args: EvalArgs, report: &mut String) -> Result<i32> {
    let instance = load_instance(&args.input)?;
    let ordering = parse_ordering(&read(&args.ordering)?).map_err(|e| located(&args.ordering, e))?;
    let r = reachability_report(&instance, &ordering).with_context(|| format!("{}", args.ordering.display()))?;
    writeln!(report, "extreme_value {}", r.extreme_value)?;
    writeln!(report, "extreme_vertex {}", r.extreme_vertex)?;
    let set: Vec<String> = r.extreme_set.iter().map(usize::to_string).collect();
    writeln!(report, "extreme_set {}", set.join(" "))?;
    writeln!(report, "max_value {}", r.max_value())?;
    writeln!(report, "min_value {}", r.min_value())?;
    if args.per_vertex {
        for (v, size) in r.per_vertex_size.iter().enumerate() {
            writeln!(report, "reach {v} {size}")?;
        }
    }
    let yes = match instance.objective() {
        Objective::MinMax => r.extreme_value <= instance.k() as usize,
        Objective::MaxMin => r.extreme_value >= instance.k() as usize,
    };
    writeln!(report, "decision {}", yes_no(yes))?;
    Ok(if yes { EXIT_YES } else { EXIT_NO })
}
