//! Batch command-line front end: solve, oracle, verify, gen, reduce,
//! counterexample, bench.
//!
//! Exit codes: 0 success, 2 bad input, 3 instance outside the requested
//! class, 4 oracle budget exceeded, 5 verification failure, 1 internal
//! error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pairdom::block::{is_block_graph, mpdb, mpdt};
use pairdom::generate::GeneratorSpec;
use pairdom::graph::Graph;
use pairdom::interval::{
    counterexample_intervals, interval_graph, legacy_mpd_trace, mpdi, IntervalRep, LeftOrdering,
};
use pairdom::oracle::{gamma_p_bruteforce, OracleBudget};
use pairdom::reduce::{reduce_bipartite, reduce_split, ReductionOutput};
use pairdom::report::RunReport;
use pairdom::solution::{verify_paired_dominating, PairedSolution};
use pairdom::{Error, Result};

#[derive(Parser)]
#[command(name = "pairdom", version, about = "Exact paired-domination toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve an instance with the matching linear-time algorithm.
    Solve {
        input: PathBuf,
        /// Instance class; `auto` tries tree, then block, then interval.
        #[arg(long, value_enum, default_value_t = ClassArg::Auto)]
        class: ClassArg,
        #[arg(long)]
        json: bool,
    },
    /// Solve exactly by brute force (small instances only).
    Oracle {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check a solution file against an instance.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        seed: u64,
        /// Block kind: largest clique size.
        #[arg(long, default_value_t = 8)]
        max_clique: u32,
        /// Interval kind: largest interval length.
        #[arg(long, default_value_t = 10)]
        max_len: i64,
        /// Interval kind: left endpoints drawn from 0..=range (default 2n).
        #[arg(long)]
        range: Option<i64>,
        /// Vc-source kind: target edge count (default 2n, clamped).
        #[arg(long)]
        edges: Option<usize>,
        /// Output path (stdout when omitted).
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
    /// Construct a hardness-reduction instance from a source graph.
    Reduce {
        input: PathBuf,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Path for the constructed graph.
        #[arg(long, short = 'o')]
        output: PathBuf,
        /// Path for the provenance sidecar (default: output with
        /// `.provenance.json`).
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Run the legacy procedure against the optimal solver, printing its
    /// parameter table and recursion trace. Without an input this reproduces
    /// the built-in six-interval defect demonstration.
    Counterexample {
        /// Optional interval-format instance to trace instead of the fixture.
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Time the linear solvers across instance sizes.
    Bench {
        #[arg(long, value_enum)]
        kind: BenchKind,
        /// Comma-separated ascending sizes, e.g. 1e5,1e6.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_clique: u32,
        #[arg(long, default_value_t = 10)]
        max_len: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Tree,
    Block,
    Interval,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Tree,
    Block,
    Interval,
    VcSource,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchKind {
    Tree,
    Block,
    Interval,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::Argument(_) => 2,
        Error::Instance(_) => 3,
        Error::Capacity(_) => 4,
        Error::Invariant(_) => 1,
    }
}

/// Either a plain graph or an interval family with its derived graph and
/// ordering.
enum Instance {
    Plain(Graph),
    Interval(Graph, LeftOrdering),
}

impl Instance {
    fn graph(&self) -> &Graph {
        match self {
            Instance::Plain(g) => g,
            Instance::Interval(g, _) => g,
        }
    }
}

fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Argument(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance> {
    let text = read_to_string(path)?;
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if header.split_whitespace().count() == 1 {
        let rep = IntervalRep::parse(&text)?;
        let (g, ord) = interval_graph(&rep)?;
        Ok(Instance::Interval(g, ord))
    } else {
        Ok(Instance::Plain(Graph::parse(&text)?))
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Solve { input, class, json } => cmd_solve(&input, class, json),
        Cmd::Oracle { input, json } => cmd_oracle(&input, json),
        Cmd::Verify {
            instance,
            solution,
            json,
        } => cmd_verify(&instance, &solution, json),
        Cmd::Gen {
            kind,
            n,
            seed,
            max_clique,
            max_len,
            range,
            edges,
            out,
        } => cmd_gen(kind, n, seed, max_clique, max_len, range, edges, out.as_deref()),
        Cmd::Reduce {
            input,
            variant,
            output,
            provenance,
        } => cmd_reduce(&input, variant, &output, provenance.as_deref()),
        Cmd::Counterexample { input, json } => cmd_counterexample(input.as_deref(), json),
        Cmd::Bench {
            kind,
            sizes,
            seed,
            max_clique,
            max_len,
            json,
        } => cmd_bench(kind, &sizes, seed, max_clique, max_len, json),
    }
}

fn solve_as(inst: &Instance, class: ClassArg) -> Result<(&'static str, PairedSolution)> {
    let g = inst.graph();
    match class {
        ClassArg::Tree => Ok(("mpdt", mpdt(g)?)),
        ClassArg::Block => Ok(("mpdb", mpdb(g)?)),
        ClassArg::Interval => match inst {
            Instance::Interval(g, ord) => Ok(("mpdi", mpdi(g, ord)?)),
            Instance::Plain(_) => Err(Error::Instance(
                "the interval class needs an interval-format input".into(),
            )),
        },
        ClassArg::Auto => {
            let n = g.vertex_count();
            if g.is_connected() && g.edge_count() == n as usize - 1 && n >= 2 {
                return Ok(("mpdt", mpdt(g)?));
            }
            if n >= 2 && g.is_connected() && is_block_graph(g)? {
                return Ok(("mpdb", mpdb(g)?));
            }
            match inst {
                Instance::Interval(g, ord) => Ok(("mpdi", mpdi(g, ord)?)),
                Instance::Plain(_) => Err(Error::Instance(
                    "instance is neither a tree nor a block graph, and no interval \
                     representation was given"
                        .into(),
                )),
            }
        }
    }
}

fn finish_report(report: &RunReport, json: bool) -> Result<ExitCode> {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
    if report.verified {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("error: solver output failed verification");
        Ok(ExitCode::from(5))
    }
}

fn cmd_solve(input: &Path, class: ClassArg, json: bool) -> Result<ExitCode> {
    let inst = load_instance(input)?;
    let start = Instant::now();
    let (solver, solution) = solve_as(&inst, class)?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let class_name = match class {
        ClassArg::Tree => "tree",
        ClassArg::Block => "block",
        ClassArg::Interval => "interval",
        ClassArg::Auto => "auto",
    };
    let report = RunReport::new(inst.graph(), class_name, solver, solution, elapsed);
    finish_report(&report, json)
}

fn oracle_budget() -> OracleBudget {
    let mut budget = OracleBudget::default();
    if let Ok(v) = std::env::var("PAIRDOM_ORACLE_MAX") {
        if let Ok(n) = v.parse::<u32>() {
            budget.max_vertices = n;
        }
    }
    budget
}

fn cmd_oracle(input: &Path, json: bool) -> Result<ExitCode> {
    let inst = load_instance(input)?;
    let budget = oracle_budget();
    let start = Instant::now();
    let solution = gamma_p_bruteforce(inst.graph(), &budget)?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let report = RunReport::new(inst.graph(), "oracle", "gamma_p_bruteforce", solution, elapsed);
    finish_report(&report, json)
}

fn cmd_verify(instance: &Path, solution: &Path, json: bool) -> Result<ExitCode> {
    let inst = load_instance(instance)?;
    let sol = PairedSolution::from_json(&read_to_string(solution)?)?;
    let verdict = verify_paired_dominating(inst.graph(), &sol);
    #[derive(Serialize)]
    struct VerifyReport {
        verified: bool,
        reason: Option<&'static str>,
        size: usize,
    }
    let report = VerifyReport {
        verified: verdict.is_ok(),
        reason: verdict.err().map(|r| r.as_str()),
        size: sol.size(),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        match verdict {
            Ok(()) => println!("verified: size {}", sol.size()),
            Err(why) => println!("invalid: {why}"),
        }
    }
    Ok(if report.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(5)
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    kind: KindArg,
    n: u32,
    seed: u64,
    max_clique: u32,
    max_len: i64,
    range: Option<i64>,
    edges: Option<usize>,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let spec = match kind {
        KindArg::Tree => GeneratorSpec::Tree { n },
        KindArg::Block => GeneratorSpec::Block { n, max_clique },
        KindArg::Interval => GeneratorSpec::Interval {
            n,
            max_len,
            range: range.unwrap_or(2 * n as i64),
        },
        KindArg::VcSource => GeneratorSpec::VcSource {
            n,
            edges: edges.unwrap_or(2 * n as usize),
        },
    };
    let text = spec.generate(seed)?;
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Argument(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(
    input: &Path,
    variant: VariantArg,
    output: &Path,
    provenance: Option<&Path>,
) -> Result<ExitCode> {
    let text = read_to_string(input)?;
    let g = Graph::parse(&text)?;
    let red = match variant {
        VariantArg::Bipartite => reduce_bipartite(&g),
        VariantArg::Split => reduce_split(&g),
    }
    // An unusable source is an input problem for this command.
    .map_err(|e| match e {
        Error::Instance(msg) => Error::Argument(msg),
        other => other,
    })?;
    write_reduction(&red, output, provenance)?;
    println!(
        "{}: {} vertices, {} edges -> {}",
        red.variant.as_str(),
        red.gprime.vertex_count(),
        red.gprime.edge_count(),
        output.display()
    );
    Ok(ExitCode::SUCCESS)
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Bipartite,
    Split,
}

fn write_reduction(red: &ReductionOutput, output: &Path, provenance: Option<&Path>) -> Result<()> {
    std::fs::write(output, red.gprime.serialize())
        .map_err(|e| Error::Argument(format!("{}: {e}", output.display())))?;
    let prov_path = match provenance {
        Some(p) => p.to_path_buf(),
        None => {
            let mut p = output.as_os_str().to_owned();
            p.push(".provenance.json");
            PathBuf::from(p)
        }
    };
    std::fs::write(&prov_path, red.provenance_json())
        .map_err(|e| Error::Argument(format!("{}: {e}", prov_path.display())))?;
    Ok(())
}

fn cmd_counterexample(input: Option<&Path>, json: bool) -> Result<ExitCode> {
    let (rep, builtin) = match input {
        Some(path) => (IntervalRep::parse(&read_to_string(path)?)?, false),
        None => (counterexample_intervals(), true),
    };
    let trace = legacy_mpd_trace(&rep);
    let (g, ord) = interval_graph(&rep)?;
    let optimal = mpdi(&g, &ord)?;
    let optimal_ok = verify_paired_dominating(&g, &optimal).is_ok();
    let oracle_size = if g.vertex_count() <= oracle_budget().max_vertices {
        Some(gamma_p_bruteforce(&g, &oracle_budget())?.size())
    } else {
        None
    };
    let legacy_size = trace.result.len();
    let defect = legacy_size > optimal.size();
    // the built-in fixture must exhibit the defect; a user instance need not
    let confirmed = optimal_ok
        && oracle_size.is_none_or(|s| s == optimal.size())
        && (!builtin || defect);

    if json {
        #[derive(Serialize)]
        struct Doc<'a> {
            table: &'a [pairdom::interval::LegacyTableRow],
            steps: &'a [pairdom::interval::LegacyStep],
            legacy_result: &'a [u32],
            legacy_size: usize,
            mpdi: &'a PairedSolution,
            mpdi_verified: bool,
            oracle_size: Option<usize>,
            optimal_size: usize,
            defect_confirmed: bool,
        }
        let doc = Doc {
            table: &trace.rows,
            steps: &trace.steps,
            legacy_result: &trace.result,
            legacy_size,
            mpdi: &optimal,
            mpdi_verified: optimal_ok,
            oracle_size,
            optimal_size: optimal.size(),
            defect_confirmed: defect,
        };
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        if builtin {
            println!("built-in six-interval instance:");
        } else {
            println!("instance:");
        }
        println!("{}", rep.serialize().trim_end());
        println!();
        println!("  i | a_i | b_i | max a(IFB(a_i)) | l_i | A_i");
        for row in &trace.rows {
            let aset = if row.a_set.is_empty() {
                "{}".to_string()
            } else {
                format!(
                    "{{{}}}",
                    row.a_set
                        .iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            println!(
                "  {} | {:3} | {:3} | {:15} | {:3} | {}",
                row.index, row.a, row.b, row.max_a_ifb_a, row.l, aset
            );
        }
        println!();
        for step in &trace.steps {
            let row = &trace.rows[step.j as usize - 1];
            println!(
                "j={}, max a(IFB(min(a_{},a_{})))={}, k={}, MPD({})={{{}}}",
                step.j,
                step.j,
                row.l,
                step.max_a_ifb_min,
                step.k,
                step.j,
                step.mpd
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            );
        }
        println!();
        let legacy_list = trace
            .result
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        println!("legacy result: {{{legacy_list}}} (size {legacy_size})");
        let opt_list = optimal
            .vertices()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        println!(
            "mpdi result:   {{{opt_list}}} (size {}, verified: {optimal_ok})",
            optimal.size()
        );
        match oracle_size {
            Some(s) => println!("oracle size:   {s}"),
            None => println!("oracle size:   skipped (instance over budget)"),
        }
        if defect {
            println!("defect confirmed: legacy {} > optimal {}", legacy_size, optimal.size());
        } else {
            println!("no defect on this instance: legacy {legacy_size} = optimal");
        }
    }
    if confirmed {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Error::Invariant(
            "defect reproduction failed; this is a regression".into(),
        ))
    }
}

fn parse_sizes(sizes: &[String]) -> Result<Vec<u64>> {
    if sizes.is_empty() {
        return Err(Error::Argument("size list must not be empty".into()));
    }
    let mut out = Vec::with_capacity(sizes.len());
    for s in sizes {
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Argument(format!("malformed size `{s}`")))?;
        if !v.is_finite() || !(2.0..=1e9).contains(&v) {
            return Err(Error::Argument(format!("size `{s}` out of range")));
        }
        out.push(v.round() as u64);
    }
    if out.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Argument("sizes must be strictly ascending".into()));
    }
    Ok(out)
}

#[derive(Serialize)]
struct BenchRow {
    kind: &'static str,
    n: u64,
    m: usize,
    size: usize,
    build_ms: f64,
    solve_ms: f64,
    ratio_vs_prev: Option<f64>,
    verified: bool,
}

fn cmd_bench(
    kind: BenchKind,
    sizes: &[String],
    seed: u64,
    max_clique: u32,
    max_len: i64,
    json: bool,
) -> Result<ExitCode> {
    let sizes = parse_sizes(sizes)?;
    let kind_name = match kind {
        BenchKind::Tree => "tree",
        BenchKind::Block => "block",
        BenchKind::Interval => "interval",
    };
    let mut rows: Vec<BenchRow> = Vec::new();
    let mut prev: Option<f64> = None;
    for &n in &sizes {
        let n32 = u32::try_from(n).map_err(|_| Error::Argument("size too large".into()))?;
        let built = Instant::now();
        let (g, ord) = match kind {
            BenchKind::Tree => (pairdom::generate::random_tree(n32, seed), None),
            BenchKind::Block => (
                pairdom::generate::random_block_graph(n32, max_clique, seed),
                None,
            ),
            BenchKind::Interval => {
                let rep =
                    pairdom::generate::random_interval_rep(n32, max_len, 2 * n as i64, seed);
                let (g, ord) = interval_graph(&rep)?;
                (g, Some(ord))
            }
        };
        let build_ms = built.elapsed().as_secs_f64() * 1e3;
        let started = Instant::now();
        let solution = match kind {
            BenchKind::Tree => mpdt(&g)?,
            BenchKind::Block => mpdb(&g)?,
            BenchKind::Interval => mpdi(&g, ord.as_ref().expect("interval ordering"))?,
        };
        let solve_ms = started.elapsed().as_secs_f64() * 1e3;
        let verified = verify_paired_dominating(&g, &solution).is_ok();
        let ratio = prev.map(|p| solve_ms / p);
        prev = Some(solve_ms);
        rows.push(BenchRow {
            kind: kind_name,
            n,
            m: g.edge_count(),
            size: solution.size(),
            build_ms,
            solve_ms,
            ratio_vs_prev: ratio,
            verified,
        });
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
    } else {
        println!(
            "{:<9} {:>9} {:>10} {:>9} {:>10} {:>10} {:>7} {:>9}",
            "kind", "n", "m", "size", "build_ms", "solve_ms", "ratio", "verified"
        );
        for r in &rows {
            println!(
                "{:<9} {:>9} {:>10} {:>9} {:>10.1} {:>10.1} {:>7} {:>9}",
                r.kind,
                r.n,
                r.m,
                r.size,
                r.build_ms,
                r.solve_ms,
                r.ratio_vs_prev
                    .map(|x| format!("{x:.1}"))
                    .unwrap_or_else(|| "-".into()),
                r.verified
            );
        }
    }
    if rows.iter().all(|r| r.verified) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(5))
    }
}
