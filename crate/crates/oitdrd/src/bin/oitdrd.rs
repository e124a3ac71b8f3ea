//! Command-line interface: solve, check, bounds, reduce, family,
//! enumerate, bench.
//!
//! Exit codes: 0 success, 1 infeasible instance or violated check,
//! 2 usage or input error, 3 time budget exceeded.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use oitdrd::bounds::{bound_report, tree_bound_report, BoundReport};
use oitdrd::families::{generate, FamilySpec, Generated};
use oitdrd::graph::Graph;
use oitdrd::labeling::{check_conditions, Labeling, Verdict};
use oitdrd::reduction::{build_gadget, verify_reduction};
use oitdrd::solver::{
    domination_number, enumerate_optimal_oitdrdf_with_limit, matching_number, solve, SolveOptions,
    SolveResult, Variant,
};
use oitdrd::solver::{total_coindependent_number, total_domination_number};
use oitdrd::tree_dp::solve_tree;

const DEFAULT_BUDGET_MS: u64 = 60_000;
const BUDGET_ENV: &str = "OITDRD_BUDGET_MS";

const EXIT_OK: u8 = 0;
const EXIT_INFEASIBLE_OR_VIOLATED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "oitdrd",
    about = "Exact solvers and bound checks for outer-independent total double Roman domination",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    Oitdrd,
    Oidrd,
    Tdrd,
    Gamma,
    GammaT,
    GammaTcoi,
    Matching,
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file ("n m" header, then "u v" lines); - reads stdin
    graph: Option<String>,
    /// Generate the input instead, e.g. path:10 or random_tree:9:42
    #[arg(long)]
    family: Option<String>,
    /// Default seed spliced into seedless random_* family specs
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SolveTuning {
    /// Time budget in milliseconds (env OITDRD_BUDGET_MS overrides the default)
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Disable the parallel search
    #[arg(long)]
    sequential: bool,
    /// Report the lexicographically smallest optimal witness
    #[arg(long)]
    canonical: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Minimize a domination parameter on one graph
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Param::Oitdrd)]
        param: Param,
        /// Use the linear-time tree solver (input must be a tree)
        #[arg(long)]
        tree: bool,
        #[command(flatten)]
        tuning: SolveTuning,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a labeling file against a graph
    Check {
        /// Edge-list file
        graph: String,
        /// Labeling JSON file: {"n": .., "labels": [..]}
        labeling: String,
        /// Which function class to check
        #[arg(long, default_value = "oitdrdf")]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate every applicable bound on one graph
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        tuning: SolveTuning,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the star-gadget host graph; verify the reduction when -k is given
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        /// Threshold for the two reduction implications
        #[arg(short)]
        k: Option<usize>,
        #[command(flatten)]
        tuning: SolveTuning,
    },
    /// Emit a generated family member as an edge list
    Family {
        /// Family spec, e.g. cycle:5, double_star:2:3, corona:path:3
        spec: String,
        /// Default seed spliced into seedless random_* specs
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List every minimum-weight OITDRDF of one graph
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        /// Vertex-count cap for the enumeration
        #[arg(long, default_value_t = 12)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve a corpus of graphs and print one CSV row per instance
    Bench {
        /// Family specs; stream families (all_trees:9) expand to members
        #[arg(long, required = true)]
        family: Vec<String>,
        #[arg(long, value_enum, default_value_t = Param::Oitdrd)]
        param: Param,
        #[command(flatten)]
        tuning: SolveTuning,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn dispatch(command: Command) -> Result<u8, String> {
    match command {
        Command::Solve {
            input,
            param,
            tree,
            tuning,
            format,
        } => cmd_solve(&input, param, tree, &tuning, format),
        Command::Check {
            graph,
            labeling,
            class,
            format,
        } => cmd_check(&graph, &labeling, &class, format),
        Command::Bounds {
            input,
            tuning,
            format,
        } => cmd_bounds(&input, &tuning, format),
        Command::Reduce { input, k, tuning } => cmd_reduce(&input, k, &tuning),
        Command::Family { spec, seed } => cmd_family(&spec, seed),
        Command::Enumerate {
            input,
            limit,
            format,
        } => cmd_enumerate(&input, limit, format),
        Command::Bench {
            family,
            param,
            tuning,
            seed,
        } => cmd_bench(&family, param, &tuning, seed),
    }
}

fn parse_family(spec: &str, seed: u64) -> Result<FamilySpec, String> {
    spec.parse::<FamilySpec>()
        .or_else(|_| format!("{spec}:{seed}").parse::<FamilySpec>())
        .map_err(|e| e.to_string())
}

fn load_graph(input: &InputArgs) -> Result<(Graph, String), String> {
    match (&input.graph, &input.family) {
        (Some(_), Some(_)) => Err("give either a graph file or --family, not both".into()),
        (None, None) => Err("an input is required: a graph file or --family".into()),
        (Some(path), None) => {
            let text = if path == "-" {
                std::io::read_to_string(std::io::stdin()).map_err(|e| e.to_string())?
            } else {
                std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
            };
            let g = Graph::from_edge_list(&text).map_err(|e| format!("{path}: {e}"))?;
            Ok((g, path.clone()))
        }
        (None, Some(spec)) => {
            let parsed = parse_family(spec, input.seed)?;
            match generate(&parsed).map_err(|e| e.to_string())? {
                Generated::One(g) => Ok((g, parsed.to_string())),
                Generated::Many(_) => {
                    Err(format!("{spec} is a stream family; use `bench` for streams"))
                }
            }
        }
    }
}

fn solve_options(tuning: &SolveTuning) -> SolveOptions {
    let default_ms = std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET_MS);
    SolveOptions {
        time_budget: Some(Duration::from_millis(tuning.budget_ms.unwrap_or(default_ms))),
        canonical_witness: tuning.canonical,
        parallel: !tuning.sequential,
    }
}

fn set_param_result(value: Option<usize>) -> SolveResult {
    SolveResult {
        feasible: value.is_some(),
        weight: value,
        witness: None,
        nodes: 0,
        elapsed: Duration::ZERO,
        optimal: true,
    }
}

fn cmd_solve(
    input: &InputArgs,
    param: Param,
    tree: bool,
    tuning: &SolveTuning,
    format: Format,
) -> Result<u8, String> {
    let (g, id) = load_graph(input)?;
    if tree && param != Param::Oitdrd {
        return Err("--tree only applies to --param oitdrd".into());
    }
    let opts = solve_options(tuning);
    let (name, result) = match param {
        Param::Oitdrd if tree => (
            "oitdrd",
            solve_tree(&g, 0).map_err(|e| e.to_string())?,
        ),
        Param::Oitdrd => ("oitdrd", solve(&g, Variant::Oitdrd, &opts)),
        Param::Oidrd => ("oidrd", solve(&g, Variant::Oidrd, &opts)),
        Param::Tdrd => ("tdrd", solve(&g, Variant::Tdrd, &opts)),
        Param::Gamma => (
            "gamma",
            set_param_result(Some(domination_number(&g).map_err(|e| e.to_string())?)),
        ),
        Param::GammaT => (
            "gamma_t",
            set_param_result(total_domination_number(&g).map_err(|e| e.to_string())?),
        ),
        Param::GammaTcoi => (
            "gamma_tcoi",
            set_param_result(total_coindependent_number(&g).map_err(|e| e.to_string())?),
        ),
        Param::Matching => (
            "matching",
            set_param_result(Some(matching_number(&g).map_err(|e| e.to_string())?)),
        ),
    };
    match format {
        Format::Json => println!("{}", result.to_json()),
        Format::Text => {
            let value = result
                .weight
                .map(|w| w.to_string())
                .unwrap_or_else(|| "infeasible".into());
            println!(
                "{name}({id}) = {value}{}",
                if result.optimal { "" } else { " (upper bound: budget exceeded)" }
            );
            if let Some(w) = &result.witness {
                println!(
                    "witness: {}",
                    w.labels().iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
                );
            }
            println!("nodes: {}  millis: {}", result.nodes, result.elapsed.as_millis());
        }
        Format::Csv => return Err("csv output is only for bounds and bench".into()),
    }
    if !result.optimal {
        return Ok(EXIT_BUDGET);
    }
    Ok(if result.feasible { EXIT_OK } else { EXIT_INFEASIBLE_OR_VIOLATED })
}

fn cmd_check(
    graph_path: &str,
    labeling_path: &str,
    class: &str,
    format: Format,
) -> Result<u8, String> {
    let text = std::fs::read_to_string(graph_path).map_err(|e| format!("{graph_path}: {e}"))?;
    let g = Graph::from_edge_list(&text).map_err(|e| format!("{graph_path}: {e}"))?;
    let text =
        std::fs::read_to_string(labeling_path).map_err(|e| format!("{labeling_path}: {e}"))?;
    let f = Labeling::from_json(&text).map_err(|e| format!("{labeling_path}: {e}"))?;

    let (total, oi) = match class {
        "oitdrdf" => (true, true),
        "tdrdf" => (true, false),
        "oidrdf" => (false, true),
        "drdf" => (false, false),
        other => return Err(format!("unknown class `{other}`")),
    };
    let verdict = check_conditions(&g, &f, total, oi).map_err(|e| e.to_string())?;

    let valid = verdict.is_valid();
    match format {
        Format::Json => {
            let body = match verdict {
                Verdict::Valid => {
                    format!(r#"{{"valid":true,"weight":{}}}"#, f.weight())
                }
                Verdict::Violation { kind, vertex } => format!(
                    r#"{{"valid":false,"violation":"{kind:?}","vertex":{vertex},"weight":{}}}"#,
                    f.weight()
                ),
            };
            println!("{body}");
        }
        Format::Text => match verdict {
            Verdict::Valid => println!("valid, weight {}", f.weight()),
            Verdict::Violation { kind, vertex } => {
                println!("violation: {kind:?} at vertex {vertex} (weight {})", f.weight())
            }
        },
        Format::Csv => return Err("csv output is only for bounds and bench".into()),
    }
    Ok(if valid { EXIT_OK } else { EXIT_INFEASIBLE_OR_VIOLATED })
}

fn render_bounds(report: &BoundReport, format: Format) -> String {
    match format {
        Format::Csv => report.to_csv(),
        Format::Json => format!("{}\n", report.to_json()),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "bounds for {}", report.graph_id);
            for r in &report.rows {
                if !r.applicable {
                    let _ = writeln!(out, "  {:32} not applicable", r.name);
                    continue;
                }
                let cell = |v: &Option<num_rational::Rational64>| match v {
                    Some(x) if *x.denom() == 1 => x.numer().to_string(),
                    Some(x) => format!("{}/{}", x.numer(), x.denom()),
                    None => "?".into(),
                };
                let _ = writeln!(
                    out,
                    "  {:32} {} <= {}  holds={} tight={}",
                    r.name,
                    cell(&r.lhs),
                    cell(&r.rhs),
                    r.holds.map(|b| b.to_string()).unwrap_or_else(|| "?".into()),
                    r.tight.map(|b| b.to_string()).unwrap_or_else(|| "?".into()),
                );
            }
            out
        }
    }
}

fn cmd_bounds(input: &InputArgs, tuning: &SolveTuning, format: Format) -> Result<u8, String> {
    let (g, id) = load_graph(input)?;
    let opts = solve_options(tuning);
    let mut report = bound_report(&g, &opts).map_err(|e| e.to_string())?;
    report.graph_id = id;
    let mut violated = report.any_violation();
    let mut unknown = report.rows.iter().any(|r| r.applicable && !r.preconditions_met);
    print!("{}", render_bounds(&report, format));
    if g.is_tree() && g.n() >= 3 {
        let tree = tree_bound_report(&g, &opts).map_err(|e| e.to_string())?;
        violated |= tree.report.any_violation() || !tree.equivalence_holds;
        unknown |= tree
            .report
            .rows
            .iter()
            .any(|r| r.applicable && !r.preconditions_met);
        match format {
            Format::Csv => {
                // append the tree rows without repeating the header
                for line in tree.report.to_csv().lines().skip(1) {
                    println!("{line}");
                }
                println!(
                    "corona_recognized,{},,,,\nthree_halves_tight,{},,,,",
                    tree.corona_recognized, tree.three_halves_tight
                );
            }
            Format::Json => println!(
                r#"{{"tree":{},"corona_recognized":{},"three_halves_tight":{},"equivalence_holds":{}}}"#,
                tree.report.to_json(),
                tree.corona_recognized,
                tree.three_halves_tight,
                tree.equivalence_holds
            ),
            Format::Text => {
                print!("{}", render_bounds(&tree.report, format));
                println!(
                    "  corona_recognized={} three_halves_tight={} equivalence_holds={}",
                    tree.corona_recognized, tree.three_halves_tight, tree.equivalence_holds
                );
            }
        }
    }
    if unknown {
        return Ok(EXIT_BUDGET);
    }
    Ok(if violated { EXIT_INFEASIBLE_OR_VIOLATED } else { EXIT_OK })
}

fn cmd_reduce(input: &InputArgs, k: Option<usize>, tuning: &SolveTuning) -> Result<u8, String> {
    let (g, _) = load_graph(input)?;
    let gm = build_gadget(&g).map_err(|e| e.to_string())?;
    print!("{}", gm.host.to_edge_list_string());
    println!("{}", gm.to_json());
    if let Some(k) = k {
        let opts = solve_options(tuning);
        let verdict = verify_reduction(&g, k, &opts).map_err(|e| e.to_string())?;
        println!(
            r#"{{"k":{},"oidr":{},"host_oitdr":{},"forward_ok":{},"backward_ok":{}}}"#,
            verdict.k,
            json_opt(verdict.oidr_weight),
            json_opt(verdict.host_weight),
            json_opt_bool(verdict.forward_ok),
            json_opt_bool(verdict.backward_ok),
        );
        return Ok(match (verdict.forward_ok, verdict.backward_ok) {
            (Some(true), Some(true)) => EXIT_OK,
            (Some(false), _) | (_, Some(false)) => EXIT_INFEASIBLE_OR_VIOLATED,
            _ => EXIT_BUDGET,
        });
    }
    Ok(EXIT_OK)
}

fn json_opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "null".into())
}

fn json_opt_bool(v: Option<bool>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "null".into())
}

fn cmd_family(spec: &str, seed: u64) -> Result<u8, String> {
    let parsed = parse_family(spec, seed)?;
    match generate(&parsed).map_err(|e| e.to_string())? {
        Generated::One(g) => {
            print!("{}", g.to_edge_list_string());
            Ok(EXIT_OK)
        }
        Generated::Many(_) => Err(format!("{spec} is a stream family; use `bench` for streams")),
    }
}

fn cmd_enumerate(input: &InputArgs, limit: usize, format: Format) -> Result<u8, String> {
    let (g, id) = load_graph(input)?;
    let optima = enumerate_optimal_oitdrdf_with_limit(&g, limit).map_err(|e| e.to_string())?;
    if optima.is_empty() {
        match format {
            Format::Json => println!("[]"),
            _ => println!("no valid labeling exists for {id}"),
        }
        return Ok(EXIT_INFEASIBLE_OR_VIOLATED);
    }
    match format {
        Format::Json => {
            let rows: Vec<String> = optima.iter().map(|f| f.to_json()).collect();
            println!("[{}]", rows.join(","));
        }
        Format::Text => {
            println!(
                "{} optimal labelings of weight {} for {id}",
                optima.len(),
                optima[0].weight()
            );
            for f in &optima {
                println!(
                    "{}",
                    f.labels().iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
                );
            }
        }
        Format::Csv => return Err("csv output is only for bounds and bench".into()),
    }
    Ok(EXIT_OK)
}

fn cmd_bench(
    specs: &[String],
    param: Param,
    tuning: &SolveTuning,
    seed: u64,
) -> Result<u8, String> {
    let opts = solve_options(tuning);
    println!("graph,n,param,value,nodes,millis");
    let mut any_budget = false;
    for spec in specs {
        let parsed = parse_family(spec, seed)?;
        let members: Vec<(String, Graph)> = match generate(&parsed).map_err(|e| e.to_string())? {
            Generated::One(g) => vec![(parsed.to_string(), g)],
            Generated::Many(stream) => stream
                .enumerate()
                .map(|(i, g)| (format!("{parsed}#{i}"), g))
                .collect(),
        };
        for (id, g) in members {
            let (name, result) = bench_solve(&g, param, &opts)?;
            any_budget |= !result.optimal;
            println!(
                "{id},{},{name},{},{},{}",
                g.n(),
                result.weight.map(|w| w.to_string()).unwrap_or_default(),
                result.nodes,
                result.elapsed.as_millis()
            );
        }
    }
    Ok(if any_budget { EXIT_BUDGET } else { EXIT_OK })
}

fn bench_solve(
    g: &Graph,
    param: Param,
    opts: &SolveOptions,
) -> Result<(&'static str, SolveResult), String> {
    Ok(match param {
        Param::Oitdrd => ("oitdrd", solve(g, Variant::Oitdrd, opts)),
        Param::Oidrd => ("oidrd", solve(g, Variant::Oidrd, opts)),
        Param::Tdrd => ("tdrd", solve(g, Variant::Tdrd, opts)),
        Param::Gamma => (
            "gamma",
            set_param_result(Some(domination_number(g).map_err(|e| e.to_string())?)),
        ),
        Param::GammaT => (
            "gamma_t",
            set_param_result(total_domination_number(g).map_err(|e| e.to_string())?),
        ),
        Param::GammaTcoi => (
            "gamma_tcoi",
            set_param_result(total_coindependent_number(g).map_err(|e| e.to_string())?),
        ),
        Param::Matching => (
            "matching",
            set_param_result(Some(matching_number(g).map_err(|e| e.to_string())?)),
        ),
    })
}
