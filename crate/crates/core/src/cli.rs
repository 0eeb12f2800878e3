//! Command-line front end. [`run`] returns the exit code and the text to
//! print, so the binary is a thin wrapper and tests drive it directly.
//!
//! Exit codes: 0 success or a true verdict, 1 a false verdict or violations
//! found, 2 usage or input errors.

use crate::bounds::{evaluate, BoundQuery, MainReading};
use crate::coloring::{is_properly_connected, parse_coloring, pc_exact, unreachable_pair, emit_coloring};
use crate::graph::{build_family, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, Graph, GraphFamily};
use crate::harness::{
    check_monotonicity, run_verification, search_counterexamples, Source, Theorem, VerifyReport,
    VerifyTask,
};
use crate::structure::{build_bridge_tree, find_bridges};
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "pcgraph", version, about = "Proper connection number toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Input {
    /// Graph file (graph6 line or edge list); `-` or omitted reads stdin.
    #[arg(conflicts_with = "graph6")]
    file: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact proper connection number with a witness coloring.
    Pc {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Check whether a coloring properly connects a graph.
    Check {
        #[command(flatten)]
        input: Input,
        /// Coloring file: `k <K>` then `u v c` per edge.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Bridges, bridgeless components and the contracted tree.
    Gstar {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Evaluate a size threshold or extremal bound.
    Bounds {
        /// g-nk | bridge-bound-simple | bridge-bound-lemma | main-thm | thm34 |
        /// conjecture | erdos-gallai | woodall
        #[arg(long)]
        variant: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        /// Circumference bound for erdos-gallai.
        #[arg(long)]
        c: Option<usize>,
        /// Block size for woodall.
        #[arg(long)]
        m: Option<usize>,
        /// main-thm with delta 1: use m = t (requires --t).
        #[arg(long)]
        abstract_reading: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Replay a theorem over a corpus of graphs.
    Verify {
        /// Theorem tag, or `lemma-monotonicity` for the random edge-deletion run.
        #[arg(long)]
        theorem: String,
        #[arg(long, required_unless_present = "samples")]
        n: Option<usize>,
        /// `builtin` or a graph6 file.
        #[arg(long, default_value = "builtin")]
        source: String,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        abstract_reading: bool,
        #[arg(long)]
        widen: bool,
        #[arg(long)]
        min_degree: Option<usize>,
        #[arg(long)]
        min_size: Option<usize>,
        #[arg(long)]
        bridges: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Hunt for counterexamples to the conjectured k = 2 threshold.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value = "builtin")]
        source: String,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Emit a named graph as graph6.
    Gen {
        /// complete | path | cycle | star | g-star-1 | g-star-2 | g-1 | g-n |
        /// g-k, or an expression such as `K1 v 3K2`
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        edge_list: bool,
    },
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(done) => done,
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn read_graph(input: &Input) -> Result<Graph> {
    if let Some(g6) = &input.graph6 {
        return parse_graph6(g6.trim());
    }
    let text = match &input.file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let trimmed = text.trim();
    if trimmed.starts_with("n ") || trimmed.starts_with("n\t") {
        parse_edge_list(&text)
    } else {
        let mut lines = trimmed.lines().filter(|l| !l.trim().is_empty());
        let first = lines.next().ok_or_else(|| Error::Graph6 {
            offset: 0,
            reason: "no graph on input".into(),
        })?;
        if lines.next().is_some() {
            return Err(Error::Contract("expected exactly one graph on input".into()));
        }
        parse_graph6(first.trim())
    }
}

fn source(text: &str) -> Source {
    if text == "builtin" {
        Source::Builtin
    } else {
        Source::Graph6(PathBuf::from(text))
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn dispatch(command: Command) -> Result<(i32, String)> {
    match command {
        Command::Pc { input, format } => {
            let g = read_graph(&input)?;
            let r = pc_exact(&g)?;
            let out = match format {
                Format::Json => to_json(&json!({
                    "graph6": emit_graph6(&g).ok(),
                    "edges": g.edges(),
                    "pc": r.pc,
                    "method": r.method,
                    "lower_bound": r.lower_bound,
                    "upper_bound": r.upper_bound,
                    "witness": r.witness,
                })),
                _ => format!(
                    "pc: {}\nmethod: {}\n{}",
                    r.pc,
                    serde_json::to_value(r.method).unwrap().as_str().unwrap(),
                    emit_coloring(&g, &r.witness)
                ),
            };
            Ok((0, out))
        }
        Command::Check {
            input,
            coloring,
            format,
        } => {
            let g = read_graph(&input)?;
            let text = std::fs::read_to_string(&coloring)
                .map_err(|e| Error::Io(format!("{}: {e}", coloring.display())))?;
            let c = parse_coloring(&g, &text)?;
            let ok = is_properly_connected(&g, &c)?;
            let gap = if ok { None } else { unreachable_pair(&g, &c)? };
            let out = match format {
                Format::Json => to_json(&json!({ "properly_connected": ok, "unreachable": gap })),
                _ => match gap {
                    None => "properly connected: yes\n".to_string(),
                    Some((u, v)) => format!("properly connected: no\nno proper path: {u} {v}\n"),
                },
            };
            Ok((if ok { 0 } else { 1 }, out))
        }
        Command::Gstar { input, format } => {
            let g = read_graph(&input)?;
            let bridges = find_bridges(&g)?;
            let tree = build_bridge_tree(&g)?;
            let bridge_pairs: Vec<(usize, usize)> = bridges.iter().map(|&e| g.edge(e)).collect();
            let out = match format {
                Format::Json => to_json(&json!({
                    "bridges": bridge_pairs,
                    "nodes": tree.nodes,
                    "tree_edges": tree.edges,
                    "max_degree": tree.max_degree,
                })),
                _ => {
                    let mut s = format!("bridges: {}\n", bridge_pairs.len());
                    for (u, v) in &bridge_pairs {
                        s.push_str(&format!("  {u} {v}\n"));
                    }
                    s.push_str(&format!("components: {}\n", tree.nodes.len()));
                    for (i, node) in tree.nodes.iter().enumerate() {
                        let kind = serde_json::to_value(node.kind).unwrap();
                        let vs: Vec<String> = node.vertices.iter().map(|v| v.to_string()).collect();
                        s.push_str(&format!("  {i} {} [{}]\n", kind.as_str().unwrap(), vs.join(" ")));
                    }
                    s.push_str(&format!("max tree degree: {}\n", tree.max_degree));
                    s
                }
            };
            Ok((0, out))
        }
        Command::Bounds {
            variant,
            n,
            k,
            t,
            delta,
            c,
            m,
            abstract_reading,
            format,
        } => {
            let need = |v: Option<usize>, name: &str| {
                v.ok_or_else(|| Error::Contract(format!("variant `{variant}` needs --{name}")))
            };
            let q = match variant.as_str() {
                "g-nk" => BoundQuery::Gnk { n, k: need(k, "k")? },
                "bridge-bound-simple" => BoundQuery::BridgeBoundSimple { n, t: need(t, "t")? },
                "bridge-bound-lemma" => BoundQuery::BridgeBoundLemma {
                    n,
                    t: need(t, "t")?,
                    delta: need(delta, "delta")?,
                },
                "main-thm" => BoundQuery::MainThm {
                    n,
                    k: need(k, "k")?,
                    delta: need(delta, "delta")?,
                    reading: if abstract_reading {
                        MainReading::Abstract { t: need(t, "t")? }
                    } else {
                        MainReading::Body
                    },
                },
                "thm34" => BoundQuery::Thm34 { n },
                "conjecture" => BoundQuery::Conjecture {
                    n,
                    delta: need(delta, "delta")?,
                },
                "erdos-gallai" => BoundQuery::ErdosGallai { n, c: need(c, "c")? },
                "woodall" => BoundQuery::Woodall { n, m: need(m, "m")? },
                other => return Err(Error::Contract(format!("unknown bound variant `{other}`"))),
            };
            let r = evaluate(&q)?;
            let out = match format {
                Format::Json => to_json(&json!({ "query": q, "result": r })),
                _ => format!("{}\n{}\n", r.value, r.formula),
            };
            Ok((0, out))
        }
        Command::Verify {
            theorem,
            n,
            source: src,
            jobs,
            k,
            abstract_reading,
            widen,
            min_degree,
            min_size,
            bridges,
            samples,
            seed,
            format,
        } => {
            let report = if theorem == "lemma-monotonicity" {
                let samples = samples
                    .ok_or_else(|| Error::Contract("lemma-monotonicity needs --samples".into()))?;
                check_monotonicity(samples, seed)?
            } else {
                let n = n.ok_or_else(|| Error::Contract("verify needs --n".into()))?;
                let mut task = VerifyTask::new(theorem.parse::<Theorem>()?, n);
                task.source = source(&src);
                task.jobs = jobs;
                task.k = k;
                task.abstract_reading = abstract_reading;
                task.widen = widen;
                task.filters.min_degree = min_degree;
                task.filters.min_size = min_size;
                task.filters.exact_bridges = bridges;
                run_verification(&task)?
            };
            Ok(render_report(&report, format))
        }
        Command::Search {
            n,
            delta,
            source: src,
            jobs,
            format,
        } => {
            let report = search_counterexamples(n, delta, source(&src), jobs)?;
            Ok(render_report(&report, format))
        }
        Command::Gen {
            family,
            n,
            k,
            delta,
            edge_list,
        } => {
            let g = build_family(&GraphFamily::from_tag(&family, n, k, delta)?)?;
            let out = if edge_list {
                emit_edge_list(&g)
            } else {
                emit_graph6(&g)? + "\n"
            };
            Ok((0, out))
        }
    }
}

fn render_report(report: &VerifyReport, format: Format) -> (i32, String) {
    let code = if report.summary.violations > 0 { 1 } else { 0 };
    let out = match format {
        Format::Json => report.to_jsonl(),
        Format::Csv => report.to_csv(),
        Format::Human => report.render_summary(),
    };
    (code, out)
}
