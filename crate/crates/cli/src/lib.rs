//! `linked-domain` command line.
//!
//! Exit codes: 0 linked / agreement, 1 not linked, 2 usage, I/O or parse
//! error, 3 oracle disagreement.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use linked_domain::generate::{gen_edge_realizing_named, gen_impartial_culture, candidate_names};
use linked_domain::oracle::{brute_force_linked, DEFAULT_CAP};
use linked_domain::profile_io::{parse_native_bytes, parse_preflib_soc_bytes};
use linked_domain::recognition::prior_neighbor_counts;
use linked_domain::{
    build_graph, export_dot, recognize_parallel, write_native, ConnectivityGraph, Election, Mode,
    RecognitionResult,
};
use serde::Serialize;

pub mod graph_input;

pub const EXIT_LINKED: i32 = 0;
pub const EXIT_NOT_LINKED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "linked-domain", version, about = "Decide whether a preference profile is a linked domain")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recognize a profile and report the verdict.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
        mode: ModeArg,
        /// Input format; defaults to `soc` for `.soc` files and `native` otherwise.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Print the witness position by position, or every seed's stuck set.
        #[arg(long)]
        witness: bool,
        /// Print a single-line JSON report instead.
        #[arg(long)]
        json: bool,
        /// Write the connectivity graph as Graphviz DOT.
        #[arg(long, value_name = "PATH")]
        graph_out: Option<PathBuf>,
    },
    /// Generate a profile in the native format.
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, value_name = "M")]
        candidates: Option<usize>,
        #[arg(long, value_name = "N")]
        votes: Option<u64>,
        /// Target graph for `--model edges` (edge list of 0-based ids, or DOT).
        #[arg(long, value_name = "PATH")]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Compare the recognizer with exhaustive search.
    Oracle {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
        mode: ModeArg,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Strong,
    Weak,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strong => Mode::Strong,
            ModeArg::Weak => Mode::Weak,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Native,
    Soc,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModelArg {
    Ic,
    Edges,
}

/// Result of `check`, also the shape of its `--json` output.
#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub input: String,
    pub mode: String,
    pub m: usize,
    pub n: u64,
    pub edges: usize,
    pub verdict: &'static str,
    pub witness: Option<Vec<String>>,
    pub elapsed_ms: f64,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn load(path: &Path, format: Option<Format>) -> Result<Election, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let format = format.unwrap_or_else(|| {
        if path.extension().is_some_and(|x| x.eq_ignore_ascii_case("soc")) {
            Format::Soc
        } else {
            Format::Native
        }
    });
    let parsed = match format {
        Format::Native => parse_native_bytes(&bytes),
        Format::Soc => parse_preflib_soc_bytes(&bytes),
    };
    parsed.map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn graph_for(e: &Election, mode: Mode) -> Result<ConnectivityGraph, Failure> {
    if e.m() == 1 {
        return Ok(ConnectivityGraph::from_edges(1, [])?.with_mode(mode));
    }
    Ok(build_graph(e, mode)?)
}

fn names_of<'a>(e: &'a Election, ids: &[usize]) -> Vec<&'a str> {
    ids.iter().map(|&id| e.name(id)).collect()
}

fn check(
    out: &mut dyn Write,
    path: &Path,
    mode: Mode,
    format: Option<Format>,
    show_witness: bool,
    json: bool,
    graph_out: Option<&Path>,
) -> Result<i32, Failure> {
    let e = load(path, format)?;
    let start = Instant::now();
    let g = graph_for(&e, mode)?;
    let result = recognize_parallel(&g);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    if let Some(dot_path) = graph_out {
        fs::write(dot_path, export_dot(&g, &e.names()))
            .map_err(|err| Failure(format!("{}: {err}", dot_path.display())))?;
    }

    let report = CheckReport {
        input: path.display().to_string(),
        mode: mode.to_string(),
        m: e.m(),
        n: e.n(),
        edges: g.edge_count(),
        verdict: if result.is_linked() { "linked" } else { "not_linked" },
        witness: result
            .witness()
            .map(|w| names_of(&e, w.as_slice()).into_iter().map(String::from).collect()),
        elapsed_ms,
    };

    if json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out, "input:      {}", report.input)?;
        writeln!(out, "mode:       {}", report.mode)?;
        writeln!(out, "candidates: {}", report.m)?;
        writeln!(out, "votes:      {}", report.n)?;
        writeln!(out, "edges:      {}", report.edges)?;
        match &result {
            RecognitionResult::Linked(w) => {
                writeln!(out, "verdict:    LINKED")?;
                writeln!(out, "witness:    {}", names_of(&e, w.as_slice()).join(" > "))?;
                if show_witness {
                    let counts = prior_neighbor_counts(&g, w)?;
                    for (i, (&v, c)) in w.as_slice().iter().zip(counts).enumerate() {
                        writeln!(out, "  {:>4}. {} ({c} earlier neighbors)", i + 1, e.name(v))?;
                    }
                }
            }
            RecognitionResult::NotLinked(c) => {
                writeln!(out, "verdict:    NOT LINKED")?;
                writeln!(
                    out,
                    "certificate: {} seeds tried, largest stuck set {} of {} candidates",
                    c.len(),
                    c.max_stuck_size(),
                    e.m()
                )?;
                if show_witness {
                    for ((a, b), set) in c.iter() {
                        writeln!(
                            out,
                            "  seed {{{}, {}}}: stuck at {{{}}}",
                            e.name(a),
                            e.name(b),
                            names_of(&e, set).join(", ")
                        )?;
                    }
                }
            }
        }
        writeln!(out, "elapsed:    {elapsed_ms:.3} ms")?;
    }
    Ok(if result.is_linked() {
        EXIT_LINKED
    } else {
        EXIT_NOT_LINKED
    })
}

fn gen(
    out: &mut dyn Write,
    model: ModelArg,
    candidates: Option<usize>,
    votes: Option<u64>,
    graph: Option<&Path>,
    seed: u64,
    target: Option<&Path>,
) -> Result<i32, Failure> {
    let election = match model {
        ModelArg::Ic => {
            if graph.is_some() {
                return Err(Failure("--graph only applies to --model edges".into()));
            }
            let m = candidates.ok_or(Failure("--model ic needs --candidates".into()))?;
            if m == 0 {
                return Err(Failure("--candidates must be at least 1".into()));
            }
            gen_impartial_culture(m, votes.unwrap_or(0), seed)?
        }
        ModelArg::Edges => {
            if votes.is_some() {
                return Err(Failure("--votes only applies to --model ic".into()));
            }
            let path = graph.ok_or(Failure("--model edges needs --graph".into()))?;
            let text = fs::read_to_string(path)
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            let input = graph_input::parse_graph(&text)
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            let m = match candidates {
                None => input.vertices,
                Some(c) if input.names.is_some() && c != input.vertices => {
                    return Err(Failure("--candidates conflicts with the DOT vertex set".into()))
                }
                Some(c) if c < input.vertices => {
                    return Err(Failure(format!(
                        "--candidates {c} is smaller than the graph's {} vertices",
                        input.vertices
                    )))
                }
                Some(c) => c,
            };
            let target = ConnectivityGraph::from_edges(m.max(1), input.edges)?;
            let names = input.names.unwrap_or_else(|| candidate_names(m));
            gen_edge_realizing_named(&target, &names)?
        }
    };
    let text = write_native(&election);
    match target {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))?
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

fn oracle(
    out: &mut dyn Write,
    path: &Path,
    mode: Mode,
    format: Option<Format>,
    cap: usize,
) -> Result<i32, Failure> {
    let e = load(path, format)?;
    let g = graph_for(&e, mode)?;
    let slow = brute_force_linked(&g, cap)?;
    let fast = recognize_parallel(&g);
    let word = |linked: bool| if linked { "linked" } else { "not linked" };
    if fast.is_linked() == slow.is_some() {
        writeln!(out, "AGREE: {}", word(fast.is_linked()))?;
        Ok(0)
    } else {
        writeln!(
            out,
            "DISAGREEMENT: recognizer says {}, brute force says {}",
            word(fast.is_linked()),
            word(slow.is_some())
        )?;
        Ok(EXIT_DISAGREEMENT)
    }
}

/// Runs the CLI with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Check {
            path,
            mode,
            format,
            witness,
            json,
            graph_out,
        } => check(out, &path, mode.into(), format, witness, json, graph_out.as_deref()),
        Command::Gen {
            model,
            candidates,
            votes,
            graph,
            seed,
            out: target,
        } => gen(out, model, candidates, votes, graph.as_deref(), seed, target.as_deref()),
        Command::Oracle {
            path,
            mode,
            format,
            cap,
        } => oracle(out, &path, mode.into(), format, cap),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}
