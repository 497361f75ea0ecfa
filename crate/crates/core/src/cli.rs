//! The `multires` command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 cap or budget exceeded, 3 a
//! verified claim failed. Errors go to standard error as
//! `error[<kind>]: <message>`. JSON is the stable output contract; the
//! infinite value is the string `"infinity"`.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::lower_bounds;
use crate::error::{Error, Result};
use crate::generators::{all_connected, FamilySpec};
use crate::graph::{parse_edge_list, parse_graph6, to_graph6, Graph};
use crate::multiset::Variant;
use crate::solver::{self, DimensionResult, SolverOptions};
use crate::verify::{self, Outcome, TheoremCheck, Verdict, VerifyParams};

/// Environment variable overriding the solver vertex cap.
pub const CAP_ENV: &str = "MULTIRES_CAP";

#[derive(Debug, Parser)]
#[command(name = "multires", version, about = "Exact (local, outer, multiset) metric dimensions of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one variant, or all six, exactly.
    Compute {
        #[command(flatten)]
        input: Input,
        /// dim, ldim, md, dim_ms, lmd, ldim_ms or all.
        #[arg(long, default_value = "all")]
        variant: String,
        #[command(flatten)]
        run: RunFlags,
        /// Include wall-clock timings in JSON output.
        #[arg(long)]
        timing: bool,
    },
    /// Check a proposed landmark set.
    Certify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        variant: Variant,
        /// Comma-separated vertex list, e.g. "0,2,5".
        #[arg(long)]
        witness: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
    },
    /// Emit a graph from a family spec such as "wheel:8" or "corona:path:3/2,2,2".
    Gen {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Report lower/upper bounds and infiniteness certificates.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
    },
    /// Compare closed forms and bounds with exact values.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        theorem: Option<String>,
        #[arg(long)]
        all: bool,
        /// Parameter range "lo..hi" (inclusive), meaning depends on the theorem.
        #[arg(long, conflicts_with = "all")]
        range: Option<String>,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Stream every connected labelled graph on n vertices (n <= 7).
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Input encoding for --file or standard input.
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
    /// Family spec to generate instead of reading a graph.
    #[arg(long = "gen", conflicts_with = "file")]
    family: Option<String>,
    /// Read the graph from a file instead of standard input.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RunFlags {
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Maximum number of subsets visited per solve.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

/// Outcome of a command that ran to completion.
enum Done {
    Ok,
    VerifyFailed,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::BudgetExhausted { .. } => 2,
        _ => 1,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(stderr, "error[usage]: {first}");
            return 1;
        }
    };
    match execute(cli, stdin, stdout) {
        Ok(Done::Ok) => 0,
        Ok(Done::VerifyFailed) => 3,
        Err(e) => {
            let _ = writeln!(stderr, "error[{}]: {e}", e.kind());
            exit_code(&e)
        }
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("i/o: {e}"))
}

fn solver_options(run: &RunFlags) -> Result<SolverOptions> {
    let mut opts = SolverOptions { subset_budget: run.budget, ..SolverOptions::default() };
    opts.parallel_shards = run.jobs.max(1);
    if let Ok(cap) = std::env::var(CAP_ENV) {
        opts.caps.solver = cap
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{CAP_ENV} must be an integer, got `{cap}`")))?;
    }
    Ok(opts)
}

fn read_graph(input: &Input, stdin: &mut dyn Read) -> Result<Graph> {
    if let Some(spec) = &input.family {
        return spec.parse::<FamilySpec>()?.generate();
    }
    let text = match &input.file {
        Some(path) => fs::read_to_string(path).map_err(io_error)?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(io_error)?;
            s
        }
    };
    match input.format {
        GraphFormat::Graph6 => parse_graph6(&text),
        GraphFormat::Edges => parse_edge_list(&text),
    }
}

fn write_graph(out: &mut dyn Write, g: &Graph, format: GraphFormat) -> Result<()> {
    match format {
        GraphFormat::Graph6 => writeln!(out, "{}", to_graph6(g)),
        GraphFormat::Edges => write!(out, "{}", g.to_edge_list()),
    }
    .map_err(io_error)
}

fn print_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serialisable")).map_err(io_error)
}

fn result_json(r: &DimensionResult, timing: bool) -> Value {
    let mut v = serde_json::to_value(r).expect("serialisable");
    if !timing {
        v.as_object_mut().expect("object").remove("elapsed_ms");
    }
    v
}

fn parse_witness(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim().parse().map_err(|_| Error::InvalidArgument(format!("witness entry `{t}` is not a vertex index")))
        })
        .collect()
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::InvalidArgument(format!("range `{s}` must look like lo..hi"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.trim_start_matches('=');
    Ok(lo.trim().parse().map_err(|_| bad())?..=hi.trim().parse().map_err(|_| bad())?)
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<Done> {
    match cli.command {
        Command::Compute { input, variant, run, timing } => {
            let g = read_graph(&input, stdin)?;
            let opts = solver_options(&run)?;
            let results = if variant.eq_ignore_ascii_case("all") {
                solver::all_dimensions(&g, &opts)?
            } else {
                vec![solver::dimension(&g, variant.parse()?, &opts)?]
            };
            match run.output {
                OutputFormat::Json if results.len() == 1 => print_json(out, &result_json(&results[0], timing))?,
                OutputFormat::Json => print_json(
                    out,
                    &json!({ "n": g.n(), "results": results.iter().map(|r| result_json(r, timing)).collect::<Vec<_>>() }),
                )?,
                OutputFormat::Table => {
                    writeln!(out, "{:<8} {:>8}  {:<24} {:>10}", "variant", "value", "witness", "subsets")
                        .map_err(io_error)?;
                    for r in &results {
                        let w = r.witness.as_ref().map_or("-".to_string(), |w| format!("{w:?}"));
                        writeln!(
                            out,
                            "{:<8} {:>8}  {:<24} {:>10}",
                            r.variant.name(),
                            r.value.to_string(),
                            w,
                            r.subsets_checked
                        )
                        .map_err(io_error)?;
                    }
                }
            }
        }
        Command::Certify { input, variant, witness, output } => {
            let g = read_graph(&input, stdin)?;
            let w = parse_witness(&witness)?;
            let cert = solver::certify(&g, &w, variant)?;
            match output {
                OutputFormat::Json => {
                    let mut v = serde_json::to_value(&cert).expect("serialisable");
                    let obj = v.as_object_mut().expect("object");
                    obj.insert("variant".into(), json!(variant));
                    obj.insert("witness".into(), json!(w));
                    print_json(out, &v)?;
                }
                OutputFormat::Table => match &cert {
                    solver::Certificate::Valid => writeln!(out, "valid"),
                    solver::Certificate::Invalid { violating_pairs } => {
                        writeln!(out, "invalid: {} colliding pairs {:?}", violating_pairs.len(), violating_pairs)
                    }
                }
                .map_err(io_error)?,
            }
        }
        Command::Gen { spec, format } => {
            let g = spec.parse::<FamilySpec>()?.generate()?;
            write_graph(out, &g, format)?;
        }
        Command::Bounds { input, output } => {
            let g = read_graph(&input, stdin)?;
            let caps = solver_options(&RunFlags { jobs: 1, budget: None, output })?.caps;
            let report = lower_bounds(&g, &caps)?;
            match output {
                OutputFormat::Json => print_json(out, &serde_json::to_value(&report).expect("serialisable"))?,
                OutputFormat::Table => {
                    writeln!(
                        out,
                        "n = {}, diameter = {}, omega = {}, chi = {}, bipartite = {}",
                        report.n, report.diameter, report.omega, report.chi, report.bipartite
                    )
                    .map_err(io_error)?;
                    for vb in &report.variants {
                        let sources: Vec<String> =
                            vb.lower_bounds.iter().map(|b| format!("{} ({:?})", b.value, b.source)).collect();
                        let upper = vb.upper.as_ref().map_or("-".into(), |b| b.value.to_string());
                        writeln!(
                            out,
                            "{:<8} lower {} [{}], upper {upper}",
                            vb.variant.name(),
                            vb.lower,
                            sources.join(", ")
                        )
                        .map_err(io_error)?;
                    }
                    for c in &report.infinite {
                        writeln!(out, "{} infinite: {}", c.variant(), c.describe()).map_err(io_error)?;
                    }
                }
            }
        }
        Command::Verify { theorem, all, range, run } => {
            let opts = solver_options(&run)?;
            let opts = SolverOptions {
                parallel_shards: 1,
                caps: crate::graph::Caps { chromatic: opts.caps.chromatic.max(20), ..opts.caps },
                ..opts
            };
            let checks = if all {
                with_jobs(run.jobs, || verify::run_all(&opts))??
            } else {
                let id = theorem.expect("clap enforces --theorem or --all");
                let params = VerifyParams { range: range.as_deref().map(parse_range).transpose()?, options: opts };
                vec![with_jobs(run.jobs, || verify::run_theorem(&id, &params))??]
            };
            write_checks(out, &checks, run.output)?;
            if checks.iter().any(|c| c.verdict == Verdict::Fail) {
                return Ok(Done::VerifyFailed);
            }
        }
        Command::Enumerate { n, format } => {
            for g in all_connected(n)? {
                write_graph(out, &g, format)?;
                if format == GraphFormat::Edges {
                    writeln!(out).map_err(io_error)?;
                }
            }
        }
    }
    Ok(Done::Ok)
}

fn write_checks(out: &mut dyn Write, checks: &[TheoremCheck], format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => print_json(out, &serde_json::to_value(checks).expect("serialisable")),
        OutputFormat::Table => {
            let mut w = |s: String| writeln!(out, "{s}").map_err(io_error);
            w(format!(
                "{:<18} {:<8} {:<11} {:>5} {:>6} {:>5} {:>5}",
                "theorem", "range", "verdict", "pass", "discr", "fail", "skip"
            ))?;
            for c in checks {
                let verdict = match c.verdict {
                    Verdict::Pass => "PASS",
                    Verdict::Discrepant => "DISCREPANT",
                    Verdict::Fail => "FAIL",
                };
                w(format!(
                    "{:<18} {:<8} {:<11} {:>5} {:>6} {:>5} {:>5}",
                    c.id,
                    c.range,
                    verdict,
                    c.count(Outcome::Pass),
                    c.count(Outcome::Discrepant),
                    c.count(Outcome::Fail),
                    c.count(Outcome::Skipped)
                ))?;
                for i in c.non_passing().filter(|i| !i.instance.starts_with("all connected")) {
                    let note = i.note.as_deref().map_or(String::new(), |n| format!("  ({n})"));
                    w(format!(
                        "    {:?}: {} | {}: expected {}, computed {}{note}",
                        i.outcome, i.instance, i.claim, i.expected, i.computed
                    ))?;
                }
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut argv = vec!["multires"];
        argv.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_cycle_lmd() {
        let (code, out, _) = call(&["compute", "--gen", "cycle:7", "--variant", "lmd"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], 3);
        assert!(v.get("elapsed_ms").is_none());
    }

    #[test]
    fn infinity_is_a_string() {
        let (_, out, _) = call(&["compute", "--gen", "cycle:5", "--variant", "lmd"], "");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], "infinity");
    }

    #[test]
    fn certify_and_stdin_edges() {
        let (code, out, _) =
            call(&["certify", "--format", "edges", "--variant", "lmd", "--witness", "0"], "0 1\n1 2\n2 3\n3 0\n");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "valid");
    }

    #[test]
    fn error_prefix_and_codes() {
        let (code, _, err) = call(&["compute", "--format", "edges", "--variant", "lmd"], "0 1\n2 3\n");
        assert_eq!(code, 1);
        assert!(err.starts_with("error[disconnected]:"), "{err}");
        let (code, _, err) = call(&["compute", "--gen", "cycle:9", "--variant", "md", "--budget", "5"], "");
        assert_eq!(code, 2);
        assert!(err.starts_with("error[budget]:"), "{err}");
        let (code, _, err) = call(&["compute", "--bogus"], "");
        assert_eq!(code, 1);
        assert!(err.starts_with("error[usage]:"), "{err}");
        let (code, _, err) = call(&["enumerate", "8"], "");
        assert_eq!((code, err.starts_with("error[cap]:")), (2, true));
    }

    #[test]
    fn gen_and_enumerate() {
        let (_, out, _) = call(&["gen", "complete:3"], "");
        assert_eq!(out.trim(), "Bw");
        let (_, out, _) = call(&["enumerate", "3"], "");
        assert_eq!(out.lines().count(), 4);
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..12").unwrap(), 3..=12);
        assert_eq!(parse_range("3..=5").unwrap(), 3..=5);
        assert!(parse_range("3-5").is_err());
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = call(&["verify", "--theorem", "cycles", "--range", "3..8", "--output", "table"], "");
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("PASS"));
        let (code, _, err) = call(&["verify", "--theorem", "nope"], "");
        assert_eq!((code, err.starts_with("error[theorem]:")), (1, true));
    }
}
