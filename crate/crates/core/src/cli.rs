//! Command-line front end.
//!
//! Exit codes: 0 on success (or all rows matching for `verify`), 1 on a
//! verification mismatch, 2 on any input error.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functigraph::Functigraph;
use crate::generators::{make_family, make_map, FamilySpec, MapSpec};
use crate::graph::{Graph, TwinKind};
use crate::io::{graph_to_json, parse_document, parse_edge_list, Document};
use crate::solver::{lambda_exact, lambda_oracle, SearchStats, SolveOptions, SolveResult};
use crate::theorems::{verify_suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "locdom",
    version,
    about = "Exact locating-dominating sets of graphs and functigraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Location-domination number with the pruned parallel search.
    Lambda(LambdaArgs),
    /// Location-domination number by unpruned enumeration (order <= 24).
    Oracle(InputArgs),
    /// Print the twin partition.
    Twins(InputArgs),
    /// Write a family graph as graph JSON.
    Gen(GenArgs),
    /// Check every closed-form value against the solver.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph or functigraph JSON, or an edge list; `-` or absent reads stdin.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Require functigraph mode.
    #[arg(long)]
    pub functigraph: bool,
    /// Map for functigraph mode: identity, constant:<v>, perm:<list>, signature:<list>.
    #[arg(long)]
    pub map: Option<String>,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct LambdaArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Disable the twin-class forced set and lower-bound start.
    #[arg(long)]
    pub no_prune: bool,
    /// Return the lexicographically least minimum witness.
    #[arg(long)]
    pub deterministic_witness: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Star,
    Path,
    Cycle,
    PendantGap,
    HGraph,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Order (all families except pendant_gap).
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of removed matching edges (h_graph).
    #[arg(long)]
    pub i: Option<usize>,
    /// Number of pendants (pendant_gap).
    #[arg(long)]
    pub t: Option<usize>,
    /// Output file; stdout if absent.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    pub nmax_complete: usize,
    #[arg(long, default_value_t = 9)]
    pub nmax_hi: usize,
    #[arg(long, default_value_t = 5)]
    pub nmax_bounds: usize,
    #[arg(long, default_value_t = 4)]
    pub gap_tmax: usize,
    /// Skip the pendant gap family.
    #[arg(long)]
    pub no_gap: bool,
    /// Write the CSV report here (`-` for stdout).
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long)]
    pub json: Option<PathBuf>,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(
    cmd: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    match cmd {
        Command::Lambda(args) => {
            let graph = load_graph(&args.input, stdin)?;
            let opts = SolveOptions {
                use_twin_pruning: !args.no_prune,
                deterministic_witness: args.deterministic_witness,
            };
            let result = lambda_exact(&graph, opts)?;
            emit_result(&result, args.input.json, stdout)?;
        }
        Command::Oracle(args) => {
            let graph = load_graph(&args, stdin)?;
            let result = lambda_oracle(&graph)?;
            emit_result(&result, args.json, stdout)?;
        }
        Command::Twins(args) => {
            let graph = load_graph(&args, stdin)?;
            emit_twins(&graph, args.json, stdout)?;
        }
        Command::Gen(args) => {
            let graph = make_family(family_spec(&args)?)?;
            let text = graph_to_json(&graph);
            match &args.output {
                Some(path) if path.as_os_str() != "-" => {
                    fs::write(path, format!("{text}\n")).map_err(|e| io_error(path, e))?
                }
                _ => writeln!(stdout, "{text}").map_err(write_error)?,
            }
        }
        Command::Verify(args) => return verify(&args, stdout, stderr),
    }
    Ok(EXIT_OK)
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> Error {
    Error::Parse(format!("{}: {e}", path.display()))
}

fn write_error(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn load_graph(args: &InputArgs, stdin: &mut dyn Read) -> Result<Graph> {
    let text = match &args.graph {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(path).map_err(|e| io_error(path, e))?
        }
        _ => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            buf
        }
    };
    let document = if text.trim_start().starts_with('{') {
        parse_document(&text)?
    } else {
        Document::Graph(parse_edge_list(&text)?)
    };
    let flag_map = args.map.as_deref().map(str::parse::<MapSpec>).transpose()?;
    match (document, flag_map) {
        (Document::Functigraph { .. }, Some(_)) => Err(Error::Parse(
            "input already carries a map; drop --map".into(),
        )),
        (Document::Functigraph { base, map }, None) => {
            Ok(Functigraph::build(&base, &map)?.into_graph())
        }
        (Document::Graph(base), Some(spec)) => {
            let map = make_map(base.order(), &spec)?;
            Ok(Functigraph::build(&base, &map)?.into_graph())
        }
        (Document::Graph(_), None) if args.functigraph => Err(Error::Parse(
            "--functigraph needs functigraph JSON or --map".into(),
        )),
        (Document::Graph(g), None) => Ok(g),
    }
}

#[derive(Serialize)]
struct ResultJson<'a> {
    lambda: usize,
    witness: Vec<usize>,
    stats: &'a SearchStats,
}

fn emit_result(result: &SolveResult, json: bool, out: &mut dyn Write) -> Result<()> {
    if json {
        let doc = ResultJson {
            lambda: result.lambda,
            witness: result.witness.to_vec(),
            stats: &result.stats,
        };
        let text = serde_json::to_string(&doc).expect("plain data serializes");
        writeln!(out, "{text}").map_err(write_error)
    } else {
        writeln!(
            out,
            "lambda = {}\nwitness = {}\nsets tested = {}, cardinalities skipped = {}, {:.3} ms",
            result.lambda,
            result.witness,
            result.stats.sets_tested,
            result.stats.pruned_cardinalities_skipped,
            result.stats.elapsed.as_secs_f64() * 1e3
        )
        .map_err(write_error)
    }
}

#[derive(Serialize)]
struct ClassJson {
    members: Vec<usize>,
    kind: TwinKind,
}

fn emit_twins(g: &Graph, json: bool, out: &mut dyn Write) -> Result<()> {
    let tp = g.twin_partition();
    if json {
        let classes: Vec<_> = tp
            .classes()
            .iter()
            .map(|c| ClassJson {
                members: c.members.to_vec(),
                kind: c.kind,
            })
            .collect();
        let text = serde_json::json!({ "classes": classes }).to_string();
        writeln!(out, "{text}").map_err(write_error)
    } else {
        for c in tp.classes() {
            let kind = match c.kind {
                TwinKind::AdjacentTwins => "adjacent-twins",
                TwinKind::NonAdjacentTwins => "non-adjacent-twins",
                TwinKind::Singleton => "singleton",
            };
            writeln!(out, "{kind} {}", c.members).map_err(write_error)?;
        }
        Ok(())
    }
}

fn family_spec(args: &GenArgs) -> Result<FamilySpec> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Error::InvalidFamily(format!("--{name} is required for this family")))
    };
    Ok(match args.family {
        Family::Complete => FamilySpec::Complete {
            n: need(args.n, "n")?,
        },
        Family::Star => FamilySpec::Star {
            n: need(args.n, "n")?,
        },
        Family::Path => FamilySpec::Path {
            n: need(args.n, "n")?,
        },
        Family::Cycle => FamilySpec::Cycle {
            n: need(args.n, "n")?,
        },
        Family::PendantGap => FamilySpec::PendantGap {
            t: need(args.t, "t")?,
        },
        Family::HGraph => FamilySpec::HGraph {
            n: need(args.n, "n")?,
            i: need(args.i, "i")?,
        },
    })
}

fn verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let config = VerifyConfig {
        n_max_complete: args.nmax_complete,
        n_max_hi: args.nmax_hi,
        n_max_bounds: args.nmax_bounds,
        include_gap_lemma: !args.no_gap,
        t_max: args.gap_tmax,
    };
    let report = verify_suite(&config);
    let machine = args.csv.is_some() || args.json.is_some();
    for (target, body) in [
        (&args.csv, report.to_csv()),
        (&args.json, format!("{}\n", report.to_json())),
    ] {
        match target {
            Some(path) if path.as_os_str() == "-" => {
                stdout.write_all(body.as_bytes()).map_err(write_error)?
            }
            Some(path) => fs::write(path, body).map_err(|e| io_error(path, e))?,
            None => {}
        }
    }
    if machine {
        writeln!(
            stderr,
            "{} rows, {} match, {} mismatch",
            report.summary.total, report.summary.matched, report.summary.mismatched
        )
        .map_err(write_error)?;
    } else {
        writeln!(stdout, "{report}").map_err(write_error)?;
    }
    Ok(if report.all_match() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
