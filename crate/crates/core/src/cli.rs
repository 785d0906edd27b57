//! The `ecperm` command line.
//!
//! Results go to standard output as JSON (graphs may be written as ECG
//! text), diagnostics to standard error. Exit codes: 0 when the query was
//! answered, 1 when `--assert` was given and the answer is negative, 2 on
//! usage or input errors.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::classes::{is_gallai, is_symbolic_ultrametric_graph};
use crate::graph::{ColoredGraph, Vertex};
use crate::io::{self, GraphJson, IoError};
use crate::md::decompose;
use crate::oracle::{self, Profile};
use crate::perm::{generate_colored, verify, Certificate, Labeling, Permutation};
use crate::recognizer::{restrict, Outcome, Recognizer};

/// Environment variable that overrides the seed of `random`.
pub const SEED_ENV: &str = "ECPERM_SEED";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn usage(message: String) -> Self {
        Self { code: 2, stdout: String::new(), stderr: message }
    }
}

#[derive(Parser)]
#[command(name = "ecperm", version, about = "Complete edge-colored permutation graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership; prints a certificate or an obstruction.
    Recognize {
        file: PathBuf,
        /// JSON list of `{"module": [...], "order": [...]}` pinning quotient labelings.
        #[arg(long)]
        quotient_labels: Option<PathBuf>,
        /// Worker threads for prime quotients.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Exit with status 1 if the graph is not a member.
        #[arg(long)]
        assert: bool,
    },
    /// Check a certificate against a graph.
    Verify {
        file: PathBuf,
        /// Certificate JSON, or the output of `recognize`.
        #[arg(long, conflicts_with_all = ["labeling", "perms"])]
        certificate: Option<PathBuf>,
        /// `v:label,...` or `id`.
        #[arg(long)]
        labeling: Option<String>,
        /// One permutation per color, in color order, e.g. `(2,1,3)`.
        #[arg(long = "perm")]
        perms: Vec<String>,
        #[arg(long)]
        assert: bool,
    },
    /// Build the graph of a labeling and permutations.
    Generate {
        /// `v:label,...` or `id`.
        #[arg(long, default_value = "id")]
        labeling: String,
        #[arg(long = "perm", required = true)]
        perms: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Ecg)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the modular decomposition tree (JSON unless `--dot` or `--text`).
    Mdtree {
        file: PathBuf,
        #[arg(long, conflicts_with = "text")]
        dot: bool,
        #[arg(long)]
        text: bool,
    },
    /// Restrict a graph and its certificate to a vertex subset.
    Restrict {
        file: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<Vertex>,
        /// Certificate to restrict; computed by recognition when omitted.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Report class memberships.
    Classify { file: PathBuf },
    /// Exhaustive recognition for small graphs.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        assert: bool,
    },
    /// Emit seeded random graphs.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// uniform, gallai-substitution or from-permutations.
        #[arg(long, default_value = "uniform")]
        profile: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// More than one graph is always emitted as a JSON array.
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Format::Ecg)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ecg,
    Json,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

/// Runs the command line on `args` (including the program name), reading
/// the seed override from the environment.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let seed = std::env::var(SEED_ENV).ok();
    run_with_seed_env(args, seed.as_deref())
}

/// Like [`run`], with the seed override given explicitly.
pub fn run_with_seed_env<I, T>(args: I, seed_env: Option<&str>) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { CommandResult::usage(text) } else { CommandResult::ok(text) };
        }
    };
    match dispatch(cli.command, seed_env) {
        Ok(result) => result,
        Err(Failure(message)) => CommandResult::usage(format!("error: {message}\n")),
    }
}

fn read_text(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Res<ColoredGraph> {
    io::read_graph(&read_text(path)?).map_err(|e| match e {
        IoError::Parse { line, message } => Failure(format!("{}:{line}: {message}", path.display())),
        other => Failure(format!("{}: {other}", path.display())),
    })
}

fn emit(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON value serializes");
    s.push('\n');
    s
}

fn finish(value: Value, negative: bool, assert: bool) -> CommandResult {
    CommandResult { code: if negative && assert { 1 } else { 0 }, stdout: emit(&value), stderr: String::new() }
}

fn parse_labeling(text: &str, n: usize) -> Res<Labeling> {
    if text == "id" {
        return Ok(Labeling::identity(n));
    }
    text.parse().map_err(|e| Failure(format!("labeling {text:?}: {e}")))
}

fn parse_perms(texts: &[String]) -> Res<Vec<Permutation>> {
    texts.iter().map(|t| t.parse().map_err(|e| Failure(format!("permutation {t:?}: {e}")))).collect()
}

fn read_certificate(path: &Path) -> Res<Certificate> {
    let value: Value = serde_json::from_str(&read_text(path)?)
        .map_err(|e| Failure(format!("{}: invalid JSON: {e}", path.display())))?;
    let inner = value.get("certificate").cloned().unwrap_or(value);
    serde_json::from_value(inner).map_err(|e| Failure(format!("{}: not a certificate: {e}", path.display())))
}

#[derive(Deserialize)]
struct PinEntry {
    module: Vec<Vertex>,
    order: Vec<Vertex>,
}

fn write_graph(g: &ColoredGraph, format: Format, output: Option<&Path>) -> Res<CommandResult> {
    let text = match format {
        Format::Ecg => io::write_ecg(g),
        Format::Json => io::write_json(g) + "\n",
    };
    write_out(text, output)
}

fn write_out(text: String, output: Option<&Path>) -> Res<CommandResult> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
            Ok(CommandResult::ok(String::new()))
        }
        None => Ok(CommandResult::ok(text)),
    }
}

fn outcome_json(outcome: &Outcome, g: &ColoredGraph) -> Value {
    let colors = g.labels();
    match outcome {
        Outcome::Certificate(c) => json!({ "member": true, "certificate": c, "colors": colors }),
        Outcome::Obstruction(o) => json!({ "member": false, "obstruction": o, "colors": colors }),
    }
}

fn dispatch(command: Command, seed_env: Option<&str>) -> Res<CommandResult> {
    match command {
        Command::Recognize { file, quotient_labels, jobs, assert } => {
            let g = load_graph(&file)?;
            let mut recognizer = Recognizer::new().jobs(jobs);
            if let Some(path) = quotient_labels {
                let pins: Vec<PinEntry> = serde_json::from_str(&read_text(&path)?)
                    .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                recognizer = recognizer.pins(pins.into_iter().map(|p| (p.module, p.order)));
            }
            let outcome = recognizer.run(&g)?;
            Ok(finish(outcome_json(&outcome, &g), !outcome.is_member(), assert))
        }
        Command::Verify { file, certificate, labeling, perms, assert } => {
            let g = load_graph(&file)?;
            let cert = match certificate {
                Some(path) => read_certificate(&path)?,
                None => {
                    let labeling = parse_labeling(labeling.as_deref().unwrap_or("id"), g.n())?;
                    Certificate::new(labeling, parse_perms(&perms)?)
                }
            };
            let valid = verify(&g, &cert.labeling, &cert.permutations)?;
            Ok(finish(json!({ "valid": valid }), !valid, assert))
        }
        Command::Generate { labeling, perms, format, output } => {
            let perms = parse_perms(&perms)?;
            let labeling = parse_labeling(&labeling, perms[0].len())?;
            let g = generate_colored(&labeling, &perms)?;
            write_graph(&g, format, output.as_deref())
        }
        Command::Mdtree { file, dot, text } => {
            let tree = decompose(&load_graph(&file)?);
            Ok(CommandResult::ok(if dot {
                tree.to_dot()
            } else if text {
                tree.to_text()
            } else {
                emit(&tree.to_json())
            }))
        }
        Command::Restrict { file, vertices, certificate } => {
            let g = load_graph(&file)?;
            let cert = match certificate {
                Some(path) => read_certificate(&path)?,
                None => match Recognizer::new().run(&g)? {
                    Outcome::Certificate(c) => c,
                    Outcome::Obstruction(_) => {
                        return Err(Failure("graph is not a member; there is no certificate to restrict".into()))
                    }
                },
            };
            if !cert.verifies(&g) {
                return Err(Failure("certificate does not verify against the graph".into()));
            }
            let r = restrict(&g, &cert, &vertices)?;
            Ok(CommandResult::ok(emit(&json!({
                "graph": GraphJson::from_graph(&r.graph),
                "certificate": r.certificate,
                "kept": r.kept,
                "color_map": r.color_map,
            }))))
        }
        Command::Classify { file } => {
            let g = load_graph(&file)?;
            let member = crate::recognizer::recognize(&g).is_member();
            Ok(CommandResult::ok(emit(&json!({
                "n": g.n(),
                "k": g.k(),
                "gallai": is_gallai(&g),
                "symbolic_ultrametric": is_symbolic_ultrametric_graph(&g),
                "colored_permutation": member,
            }))))
        }
        Command::Oracle { file, assert } => {
            let g = load_graph(&file)?;
            let found = oracle::brute_force_recognize(&g)?;
            let value = match &found {
                Some(c) => json!({ "member": true, "certificate": c, "colors": g.labels() }),
                None => json!({ "member": false, "colors": g.labels() }),
            };
            Ok(finish(value, found.is_none(), assert))
        }
        Command::Random { n, k, profile, seed, count, format, output } => {
            if n == 0 || k == 0 {
                return Err(Failure("--n and --k must be positive".into()));
            }
            let profile: Profile = profile.parse()?;
            let seed = match seed_env {
                Some(s) => s.parse::<u64>().map_err(|_| Failure(format!("{SEED_ENV}={s:?} is not a u64")))?,
                None => seed,
            };
            let graphs: Vec<ColoredGraph> = oracle::random_instances(seed, n, k, profile).take(count).collect();
            if count == 1 {
                write_graph(&graphs[0], format, output.as_deref())
            } else {
                let all: Vec<GraphJson> = graphs.iter().map(GraphJson::from_graph).collect();
                write_out(emit(&serde_json::to_value(all)?), output.as_deref())
            }
        }
    }
}
