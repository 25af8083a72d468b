//! Command-line front end for the odd-coloring toolkit.
//!
//! Subcommands: solve, verify, kernelize, reduce, oracle, bench.
//! Exit codes: 0 solved, 2 infeasible within the requested k, 3 guard
//! exceeded, 4 parse/usage error.

use oddchrom::cluster::{find_cluster_modulator, solve_distance_to_cluster, ClusterInstance};
use oddchrom::cocluster::{
    find_cocluster_modulator, solve_distance_to_cocluster, CoClusterInstance,
};
use oddchrom::cograph::{build_cotree, cograph_chi_odd_coloring, cograph_invariants};
use oddchrom::coloring::{verify_odd_coloring, Coloring, Value};
use oddchrom::dispatch::{dispatch, DispatchError, DispatchLimits, Route, SolveReport};
use oddchrom::gen;
use oddchrom::graph::{parse_graph, Graph, GraphFormat};
use oddchrom::interval::{chi_odd_proper_interval, parse_intervals, IntervalRepresentation};
use oddchrom::kernel::{find_clique_modulator, kernelize, DcliqueInstance};
use oddchrom::nd::solve_neighborhood_diversity;
use oddchrom::oracle::{ExtendMode, Oracle};
use oddchrom::reductions::{
    minimum_vertex_cover, reduce_cw_coloring_to_odd, reduce_to_perfect_elim_bipartite,
    reduce_to_star_convex_bipartite, reduce_vc_coloring_to_odd, ReductionOutput,
};
use oddchrom::split::{chi_odd_split, split_partition};
use serde_json::json;
use std::io::Read;
use std::time::Instant;

const EXIT_OK: i32 = 0;
const EXIT_INFEASIBLE: i32 = 2;
const EXIT_GUARD: i32 = 3;
const EXIT_PARSE: i32 = 4;

fn main() {
    std::process::exit(run());
}

struct Args {
    positional: Vec<String>,
    flags: std::collections::HashMap<String, String>,
    switches: std::collections::HashSet<String>,
}

fn parse_args(argv: &[String]) -> Result<Args, String> {
    let mut args = Args {
        positional: Vec::new(),
        flags: std::collections::HashMap::new(),
        switches: std::collections::HashSet::new(),
    };
    let value_flags = [
        "--format",
        "--intervals",
        "--k",
        "--algo",
        "--guard-n",
        "--seed",
        "--coloring",
        "--kind",
        "--modulator-budget",
        "--n",
        "--count",
    ];
    let mut i = 0;
    while i < argv.len() {
        let a = &argv[i];
        if value_flags.contains(&a.as_str()) {
            let v = argv
                .get(i + 1)
                .ok_or_else(|| format!("{a} expects a value"))?;
            args.flags.insert(a.clone(), v.clone());
            i += 2;
        } else if a == "--json" {
            args.switches.insert(a.clone());
            i += 1;
        } else if a.starts_with("--") {
            return Err(format!("unknown flag {a}"));
        } else {
            args.positional.push(a.clone());
            i += 1;
        }
    }
    Ok(args)
}

fn run() -> i32 {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let Some(cmd) = argv.first() else {
        eprintln!("{USAGE}");
        return EXIT_PARSE;
    };
    let args = match parse_args(&argv[1..]) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    match cmd.as_str() {
        "solve" => cmd_solve(&args),
        "verify" => cmd_verify(&args),
        "kernelize" => cmd_kernelize(&args),
        "reduce" => cmd_reduce(&args),
        "oracle" => cmd_oracle(&args),
        "bench" => cmd_bench(&args),
        "--help" | "-h" | "help" => {
            println!("{USAGE}");
            EXIT_OK
        }
        other => {
            eprintln!("unknown subcommand {other}\n{USAGE}");
            EXIT_PARSE
        }
    }
}

const USAGE: &str = "oddchrom - exact odd chromatic number toolkit

USAGE:
  oddchrom solve     [FILE|-] [--format dimacs|edgelist] [--intervals FILE]
                     [--k INT] [--algo auto|cograph|split|interval|nd|cluster|cocluster|kernel|oracle]
                     [--guard-n INT] [--json]
  oddchrom verify    [FILE|-] --coloring FILE [--format dimacs|edgelist] [--json]
  oddchrom kernelize [FILE|-] --k INT [--modulator-budget INT] [--format ...] [--json]
  oddchrom reduce    [FILE|-] --kind vc|cw|peb|scb [--k INT] [--format ...] [--json]
  oddchrom oracle    [FILE|-] [--k INT] [--guard-n INT] [--format ...] [--json]
  oddchrom bench     [--n INT] [--count INT] [--seed INT]

Graphs are read from FILE or stdin (-). Exit codes: 0 solved,
2 infeasible within --k, 3 guard exceeded, 4 parse error.";

fn read_input(args: &Args) -> Result<String, String> {
    match args.positional.first().map(|s| s.as_str()) {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| e.to_string())?;
            Ok(buf)
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}")),
    }
}

fn graph_format(args: &Args) -> Result<GraphFormat, String> {
    match args.flags.get("--format").map(|s| s.as_str()) {
        None | Some("dimacs") => Ok(GraphFormat::Dimacs),
        Some("edgelist") => Ok(GraphFormat::EdgeList),
        Some(other) => Err(format!("unknown format {other}")),
    }
}

fn load_graph(args: &Args) -> Result<Graph, (i32, String)> {
    let text = read_input(args).map_err(|e| (EXIT_PARSE, e))?;
    let format = graph_format(args).map_err(|e| (EXIT_PARSE, e))?;
    parse_graph(&text, format).map_err(|e| (EXIT_PARSE, e.to_string()))
}

fn parse_usize(args: &Args, flag: &str) -> Result<Option<usize>, String> {
    match args.flags.get(flag) {
        None => Ok(None),
        Some(s) => s
            .parse()
            .map(Some)
            .map_err(|_| format!("{flag} expects an integer, got {s:?}")),
    }
}

fn value_json(v: Option<Value>) -> serde_json::Value {
    match v {
        Some(Value::Finite(k)) => json!(k),
        Some(Value::Unbounded) => json!("unbounded"),
        None => serde_json::Value::Null,
    }
}

fn coloring_json(g: &Graph, f: &Coloring) -> serde_json::Value {
    let cert = verify_odd_coloring(g, f);
    json!({
        "k": f.k(),
        "colors": f.raw(),
        "valid": cert.is_valid(),
        "violations": cert.violations(),
    })
}

fn cmd_solve(args: &Args) -> i32 {
    let intervals: Option<IntervalRepresentation> = match args.flags.get("--intervals") {
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {path}: {e}");
                    return EXIT_PARSE;
                }
            };
            match parse_intervals(&text) {
                Ok(ir) => Some(ir),
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_PARSE;
                }
            }
        }
        None => None,
    };
    let g = match &intervals {
        Some(ir) => ir.companion_graph(),
        None => match load_graph(args) {
            Ok(g) => g,
            Err((code, e)) => {
                eprintln!("error: {e}");
                return code;
            }
        },
    };
    let mut limits = DispatchLimits::default();
    if let Ok(Some(n)) = parse_usize(args, "--guard-n") {
        limits.oracle_guard = n;
    }
    let k = match parse_usize(args, "--k") {
        Ok(k) => k,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let algo = args
        .flags
        .get("--algo")
        .map(|s| s.as_str())
        .unwrap_or("auto");
    let started = Instant::now();
    let report = match solve_with(&g, intervals.as_ref(), &limits, algo) {
        Ok(r) => r,
        Err(SolveFail::Guard(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_GUARD;
        }
        Err(SolveFail::Usage(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };
    let elapsed = started.elapsed().as_millis();

    if args.switches.contains("--json") {
        let witness = report
            .witness
            .as_ref()
            .map(|w| coloring_json(&g, w))
            .unwrap_or(serde_json::Value::Null);
        let out = json!({
            "algorithm": report.route.to_string(),
            "chi_odd": value_json(report.value),
            "bounds": report.bounds.map(|(a, b)| json!([a, b])).unwrap_or(serde_json::Value::Null),
            "witness": witness,
            "time_ms": elapsed,
            "notes": report.notes,
        });
        println!("{out}");
    } else {
        match (report.value, report.bounds) {
            (Some(v), _) => println!("chi_odd = {v}   [route: {}]", report.route),
            (None, Some((lo, hi))) => {
                println!("chi_odd in [{lo}, {hi}]   [route: {}]", report.route)
            }
            _ => println!("no value computed"),
        }
        if let Some(w) = &report.witness {
            println!("witness: {:?}", w.raw());
        }
        for n in &report.notes {
            println!("note: {n}");
        }
        println!("time: {elapsed} ms");
    }
    match (k, report.value, report.bounds) {
        (None, _, _) => EXIT_OK,
        (Some(k), Some(v), _) => {
            if v.at_most(k) {
                EXIT_OK
            } else {
                EXIT_INFEASIBLE
            }
        }
        (Some(k), None, Some((lo, hi))) => {
            if hi <= k {
                EXIT_OK
            } else if lo > k {
                EXIT_INFEASIBLE
            } else {
                eprintln!("error: bounds [{lo}, {hi}] straddle k = {k}");
                EXIT_GUARD
            }
        }
        _ => EXIT_GUARD,
    }
}

enum SolveFail {
    Guard(String),
    Usage(String),
}

fn solve_with(
    g: &Graph,
    intervals: Option<&IntervalRepresentation>,
    limits: &DispatchLimits,
    algo: &str,
) -> Result<SolveReport, SolveFail> {
    let report =
        |route: Route, value: Value, witness: Option<Coloring>, notes: Vec<String>| SolveReport {
            route,
            value: Some(value),
            bounds: None,
            witness,
            verified: true,
            notes,
        };
    match algo {
        "auto" => dispatch(g, intervals, limits).map_err(|e| match e {
            DispatchError::TooLarge { .. } => SolveFail::Guard(e.to_string()),
        }),
        "cograph" => {
            let t = build_cotree(g)
                .map_err(|p4| SolveFail::Usage(format!("not a cograph; induced path {p4:?}")))?;
            let tup = cograph_invariants(&t);
            let w = cograph_chi_odd_coloring(&t, g);
            Ok(report(Route::Cograph, tup.chi_odd, w, vec![]))
        }
        "split" => {
            let sp =
                split_partition(g).ok_or_else(|| SolveFail::Usage("not a split graph".into()))?;
            let s = chi_odd_split(g, &sp);
            let note = format!(
                "split: k={} case={:?} predicate_vertex={:?} fallback={}",
                sp.k(),
                s.case,
                s.predicate_vertex,
                s.fallback
            );
            Ok(report(
                Route::Split,
                s.result.value,
                s.result.witness,
                vec![note],
            ))
        }
        "interval" => {
            let ir = intervals
                .ok_or_else(|| SolveFail::Usage("--algo interval needs --intervals".into()))?;
            let r = chi_odd_proper_interval(ir).map_err(|e| SolveFail::Usage(e.to_string()))?;
            Ok(report(Route::Interval, r.value, r.witness, vec![]))
        }
        "nd" => {
            let s = solve_neighborhood_diversity(g, g.n())
                .map_err(|e| SolveFail::Guard(e.to_string()))?;
            let note = format!(
                "nd: t={} r={} guesses={} residual={}",
                s.t, s.r_used, s.guesses_tried, s.residual_size
            );
            Ok(report(
                Route::NeighborhoodDiversity,
                s.result.value,
                s.result.witness,
                vec![note],
            ))
        }
        "cluster" => {
            let x = find_cluster_modulator(g, limits.cluster_budget)
                .map_err(|e| SolveFail::Guard(e.to_string()))?
                .ok_or_else(|| {
                    SolveFail::Guard(format!(
                        "no cluster modulator within budget {}",
                        limits.cluster_budget
                    ))
                })?;
            let inst = ClusterInstance::new(g.clone(), x, g.n());
            let s =
                solve_distance_to_cluster(&inst).map_err(|e| SolveFail::Guard(e.to_string()))?;
            let note = format!(
                "cluster: t={} t'={} guesses={} dp_states={}",
                inst.t(),
                s.t_prime,
                s.guesses_tried,
                s.dp_states
            );
            Ok(report(
                Route::Cluster,
                s.result.value,
                s.result.witness,
                vec![note],
            ))
        }
        "cocluster" => {
            let x = find_cocluster_modulator(g, limits.cocluster_budget)
                .map_err(|e| SolveFail::Guard(e.to_string()))?
                .ok_or_else(|| {
                    SolveFail::Guard(format!(
                        "no co-cluster modulator within budget {}",
                        limits.cocluster_budget
                    ))
                })?;
            let inst = CoClusterInstance::new(g.clone(), x, g.n());
            let s =
                solve_distance_to_cocluster(&inst).map_err(|e| SolveFail::Guard(e.to_string()))?;
            let note = format!(
                "cocluster: t={} t'={} guesses={} parts={} extra={}",
                inst.t(),
                s.t_prime,
                s.guesses_tried,
                s.parts,
                s.extra_colors_used
            );
            Ok(report(
                Route::CoCluster,
                s.result.value,
                s.result.witness,
                vec![note],
            ))
        }
        "oracle" => {
            let oracle = Oracle::with_guard(limits.oracle_guard);
            let r = oracle
                .chi_odd(g)
                .map_err(|e| SolveFail::Guard(e.to_string()))?;
            Ok(report(Route::Oracle, r.value, r.witness, vec![]))
        }
        "kernel" => dispatch_kernel_only(g, limits),
        other => Err(SolveFail::Usage(format!("unknown algorithm {other}"))),
    }
}

fn dispatch_kernel_only(g: &Graph, limits: &DispatchLimits) -> Result<SolveReport, SolveFail> {
    let x = find_clique_modulator(g, limits.dclique_budget)
        .map_err(|e| SolveFail::Guard(e.to_string()))?
        .ok_or_else(|| {
            SolveFail::Guard(format!(
                "no clique modulator within budget {}",
                limits.dclique_budget
            ))
        })?;
    if g.has_isolated_vertex() {
        return Ok(SolveReport {
            route: Route::KernelOracle,
            value: Some(Value::Unbounded),
            bounds: None,
            witness: None,
            verified: true,
            notes: vec![],
        });
    }
    let oracle = Oracle::with_guard(limits.oracle_guard);
    for k in (g.n() - x.len())..=g.n() {
        let inst = DcliqueInstance::new(g.clone(), x.clone(), k);
        let out = kernelize(&inst);
        let yes = match out.verdict {
            Some(v) => v,
            None => oddchrom::kernel::oracle_decision(&out.reduced, &oracle)
                .map_err(|e| SolveFail::Guard(e.to_string()))?,
        };
        if yes {
            return Ok(SolveReport {
                route: Route::KernelOracle,
                value: Some(Value::Finite(k)),
                bounds: None,
                witness: None,
                verified: true,
                notes: vec![format!("kernelized with d = {}", x.len())],
            });
        }
    }
    Err(SolveFail::Guard("kernel search exhausted".into()))
}

fn cmd_verify(args: &Args) -> i32 {
    let g = match load_graph(args) {
        Ok(g) => g,
        Err((code, e)) => {
            eprintln!("error: {e}");
            return code;
        }
    };
    let Some(path) = args.flags.get("--coloring") else {
        eprintln!("error: verify needs --coloring FILE");
        return EXIT_PARSE;
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {path}: {e}");
            return EXIT_PARSE;
        }
    };
    let parsed: serde_json::Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {path}: {e}");
            return EXIT_PARSE;
        }
    };
    let k = parsed["k"].as_u64().unwrap_or(0) as usize;
    let Some(colors) = parsed["colors"].as_array() else {
        eprintln!("error: coloring file needs a \"colors\" array");
        return EXIT_PARSE;
    };
    let colors: Vec<usize> = colors
        .iter()
        .map(|c| c.as_u64().unwrap_or(0) as usize)
        .collect();
    if colors.len() != g.n() {
        eprintln!(
            "error: coloring has {} entries for a graph with {} vertices",
            colors.len(),
            g.n()
        );
        return EXIT_PARSE;
    }
    if colors.iter().any(|&c| c == 0 || c > k) {
        eprintln!("error: coloring must be total with colors in 1..={k}");
        return EXIT_PARSE;
    }
    let f = Coloring::total(colors, k);
    let out = coloring_json(&g, &f);
    println!("{out}");
    if out["valid"].as_bool() == Some(true) {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    }
}

fn cmd_kernelize(args: &Args) -> i32 {
    let g = match load_graph(args) {
        Ok(g) => g,
        Err((code, e)) => {
            eprintln!("error: {e}");
            return code;
        }
    };
    let Ok(Some(k)) = parse_usize(args, "--k") else {
        eprintln!("error: kernelize needs --k INT");
        return EXIT_PARSE;
    };
    let budget = match parse_usize(args, "--modulator-budget") {
        Ok(b) => b.unwrap_or(4),
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let x = match find_clique_modulator(&g, budget) {
        Ok(Some(x)) => x,
        Ok(None) => {
            eprintln!("error: no clique modulator within budget {budget}");
            return EXIT_GUARD;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_GUARD;
        }
    };
    let inst = DcliqueInstance::new(g, x, k);
    let out = kernelize(&inst);
    let sidecar = json!({
        "d": out.reduced.d(),
        "k": out.reduced.budget,
        "verdict": out.verdict,
        "size_bound_ok": out.size_bound_ok(),
        "rr1_applied": out.rr1_applied,
        "rr2_applied": out.rr2_applied,
        "n": out.reduced.graph.n(),
    });
    if args.switches.contains("--json") {
        println!(
            "{}",
            json!({
                "dimacs": out.reduced.graph.to_dimacs(),
                "modulator": out.reduced.modulator,
                "sidecar": sidecar,
            })
        );
    } else {
        print!("{}", out.reduced.graph.to_dimacs());
        println!("c sidecar {sidecar}");
    }
    EXIT_OK
}

fn cmd_reduce(args: &Args) -> i32 {
    let g = match load_graph(args) {
        Ok(g) => g,
        Err((code, e)) => {
            eprintln!("error: {e}");
            return code;
        }
    };
    let k = match parse_usize(args, "--k") {
        Ok(k) => k.unwrap_or(3),
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let kind = args.flags.get("--kind").map(|s| s.as_str()).unwrap_or("");
    let out: Result<ReductionOutput, String> = match kind {
        "vc" => {
            let cover = minimum_vertex_cover(&g);
            reduce_vc_coloring_to_odd(&g, &cover, k).map_err(|e| e.to_string())
        }
        "cw" => Ok(reduce_cw_coloring_to_odd(&g)),
        "peb" => reduce_to_perfect_elim_bipartite(&g, k).map_err(|e| e.to_string()),
        "scb" => reduce_to_star_convex_bipartite(&g, k).map_err(|e| e.to_string()),
        other => {
            eprintln!("error: --kind must be vc|cw|peb|scb, got {other:?}");
            return EXIT_PARSE;
        }
    };
    let out = match out {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let roles: Vec<String> = out.roles.iter().map(|r| format!("{r:?}")).collect();
    let meta = json!({
        "k_out": out.k_out,
        "roles": roles,
        "fixups": out.fixups.iter().map(|f| format!("{f:?}")).collect::<Vec<_>>(),
        "cover": out.cover,
    });
    if args.switches.contains("--json") {
        println!("{}", json!({"dimacs": out.graph.to_dimacs(), "meta": meta}));
    } else {
        print!("{}", out.graph.to_dimacs());
        println!("c roles {meta}");
    }
    EXIT_OK
}

fn cmd_oracle(args: &Args) -> i32 {
    let g = match load_graph(args) {
        Ok(g) => g,
        Err((code, e)) => {
            eprintln!("error: {e}");
            return code;
        }
    };
    let guard = match parse_usize(args, "--guard-n") {
        Ok(v) => v.unwrap_or(oddchrom::oracle::DEFAULT_GUARD_N),
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    let oracle = Oracle::with_guard(guard);
    let k = match parse_usize(args, "--k") {
        Ok(k) => k,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    if let Some(k) = k {
        match oracle.colorable_with(&g, k, &Coloring::empty(g.n(), k), ExtendMode::Odd) {
            Ok(Some(f)) => {
                println!("{}", coloring_json(&g, &f));
                return EXIT_OK;
            }
            Ok(None) => {
                println!("{}", json!({"k": k, "feasible": false}));
                return EXIT_INFEASIBLE;
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_GUARD;
            }
        }
    }
    let run = || -> Result<serde_json::Value, oddchrom::oracle::OracleError> {
        let chi = oracle.chi(&g)?;
        let chi_odd = oracle.chi_odd(&g)?;
        let chi_strong = oracle.chi_strong(&g)?;
        let chi_odd_strong = oracle.chi_odd_strong(&g)?;
        let witness = chi_odd
            .witness
            .as_ref()
            .map(|w| coloring_json(&g, w))
            .unwrap_or(serde_json::Value::Null);
        Ok(json!({
            "chi": value_json(Some(chi.value)),
            "chi_odd": value_json(Some(chi_odd.value)),
            "chi_strong": value_json(Some(chi_strong.value)),
            "chi_odd_strong": value_json(Some(chi_odd_strong.value)),
            "witness": witness,
        }))
    };
    match run() {
        Ok(v) => {
            println!("{v}");
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_GUARD
        }
    }
}

fn cmd_bench(args: &Args) -> i32 {
    let n = parse_usize(args, "--n").ok().flatten().unwrap_or(10);
    let count = parse_usize(args, "--count").ok().flatten().unwrap_or(20);
    let seed = parse_usize(args, "--seed").ok().flatten().unwrap_or(1) as u64;
    let mut rng = gen::Rng::new(seed);
    let limits = DispatchLimits::default();
    println!("{:>4} {:>14} {:>12} {:>9}", "#", "route", "chi_odd", "ms");
    let mut total_ms = 0u128;
    for i in 0..count {
        let g = gen::connected_gnp(n, 1, 2, &mut rng);
        let started = Instant::now();
        match dispatch(&g, None, &limits) {
            Ok(r) => {
                let ms = started.elapsed().as_millis();
                total_ms += ms;
                let v = match (r.value, r.bounds) {
                    (Some(v), _) => format!("{v}"),
                    (None, Some((a, b))) => format!("[{a},{b}]"),
                    _ => "-".into(),
                };
                println!("{:>4} {:>14} {:>12} {:>9}", i, r.route.to_string(), v, ms);
            }
            Err(e) => {
                println!("{:>4} {:>14} {:>12} {:>9}", i, "-", e.to_string(), "-");
            }
        }
    }
    println!("total: {total_ms} ms over {count} instances (n = {n}, seed = {seed})");
    EXIT_OK
}
