mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use diffgraph::io::{catalog_to_jsonl, emit_dot, emit_json, parse_graph_document, ParsedDocument};
use diffgraph::search::{find_signatures_with_progress, Progress};
use diffgraph::{
    check_k3_uniqueness, classify_edges, corollary_diagnostics, enumerate_difference_graphs, prove_absent_up_to,
    verify, Error, FamilyParams, FamilySpec, Graph, SearchConfig, SearchMode, StarVariant,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "diffgraph",
    version,
    about = "Difference graph labelings: verify, construct, search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a labeled graph document is a difference labeling.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Also print edge types and signature diagnostics.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Build a labeled family member.
    Family {
        #[command(flatten)]
        family: FamilyArgs,
        /// Verify the construction and fail if it is not a difference labeling.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Search for signatures realizing a graph.
    Search {
        #[arg(long, conflicts_with = "name")]
        input: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        max_label: u64,
        /// Report every signature (default).
        #[arg(long, conflicts_with = "first")]
        all: bool,
        /// Stop at the first signature found.
        #[arg(long)]
        first: bool,
        /// Only signatures whose gcd is 1.
        #[arg(long)]
        primitive_only: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Print running totals to stderr.
        #[arg(long)]
        progress: bool,
    },
    /// Exhaustively rule out signatures up to a bound.
    ProveAbsent {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_label: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Write one record per difference graph class of the given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        max_label: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check that every triangle signature up to a bound is {a, 2a, 3a}.
    CheckK3 {
        #[arg(long)]
        max_label: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name, e.g. bistar or olive_tree.
    #[arg(long, visible_alias = "family")]
    name: Option<String>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    variant: Option<StarVariant>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<Option<FamilySpec>, Failure> {
        let Some(name) = &self.name else {
            return Ok(None);
        };
        let params = FamilyParams {
            a: self.a,
            n: self.n,
            m: self.m,
            t: self.t,
            k: self.k,
            variant: self.variant,
        };
        Ok(Some(FamilySpec::from_params(name, &params)?))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

enum Failure {
    /// The checked property does not hold; exit 1.
    Predicate(Value),
    /// Bad input or usage; exit 2.
    Usage(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(json!({"error": e.kind(), "message": e.to_string()}))
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(json!({"error": "io", "message": format!("{}: {e}", path.display())}))
}

fn read_document(path: &Path) -> Result<ParsedDocument, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    Ok(parse_graph_document(&text)?)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => {
            stdout(text);
            Ok(())
        }
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(value: &Value) {
    stdout(&format!(
        "{}\n",
        serde_json::to_string_pretty(value).expect("json value serializes")
    ));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { input, diagnostics } => {
            let doc = read_document(&input)?;
            let lg = doc
                .labeled()
                .ok_or_else(|| Error::InvalidLabeling("document has no labels".into()))?;
            let report = verify(&lg);
            let mut out = render::verification(lg.graph(), &report);
            if diagnostics && report.valid {
                out["edge_classes"] = render::edge_classes(lg.graph(), &classify_edges(&lg)?);
                if lg.order() > 0 {
                    out["corollary"] = render::corollary(&corollary_diagnostics(&lg)?);
                }
            }
            print_json(&out);
            if report.valid {
                Ok(())
            } else {
                Err(Failure::Predicate(json!({
                    "error": "not-a-difference-labeling",
                    "message": format!("{} violation(s)", report.violations.len()),
                })))
            }
        }
        Command::Family {
            family,
            check,
            out,
            format,
        } => {
            let spec = family
                .spec()?
                .ok_or_else(|| Error::InvalidArgument("--name is required".into()))?;
            let lg = spec.build()?;
            let name = spec.to_string();
            let text = match format {
                Format::Json => emit_json(&lg, Some(&name)),
                Format::Dot => emit_dot(&lg, Some(&name)),
            };
            write_output(out.as_deref(), &text)?;
            if check {
                let report = verify(&lg);
                if !report.valid {
                    return Err(Failure::Predicate(json!({
                        "error": "not-a-difference-labeling",
                        "message": format!("{name} has {} violation(s)", report.violations.len()),
                        "violations": report.violations.iter().map(|v| render::violation(lg.graph(), v)).collect::<Vec<_>>(),
                    })));
                }
            }
            Ok(())
        }
        Command::Search {
            input,
            family,
            max_label,
            all: _,
            first,
            primitive_only,
            jobs,
            progress,
        } => {
            let target: Graph = match (input, family.spec()?) {
                (Some(path), None) => read_document(&path)?.graph,
                (None, Some(spec)) => spec.build()?.graph().clone(),
                _ => return Err(Error::InvalidArgument("give exactly one of --input or --name".into()).into()),
            };
            let mode = if first { SearchMode::First } else { SearchMode::All };
            let cfg = SearchConfig::new(max_label)
                .mode(mode)
                .primitive_only(primitive_only)
                .jobs(jobs);
            let report = with_progress(progress, |p| find_signatures_with_progress(&target, &cfg, p))?;
            print_json(&render::search(&target, &report));
            Ok(())
        }
        Command::ProveAbsent { input, max_label, jobs } => {
            let target = read_document(&input)?.graph;
            let report = prove_absent_up_to(&target, max_label, jobs)?;
            let mut out = render::search(&target, &report);
            out["absent"] = json!(report.is_absent());
            print_json(&out);
            if report.is_absent() {
                Ok(())
            } else {
                Err(Failure::Predicate(json!({
                    "error": "witness-found",
                    "message": format!("{} signature(s) up to {max_label}", report.witnesses.len()),
                })))
            }
        }
        Command::Enumerate {
            order,
            max_label,
            out,
            jobs,
        } => {
            let entries = enumerate_difference_graphs(order, max_label, jobs)?;
            write_output(Some(&out), &catalog_to_jsonl(&entries))?;
            print_json(&json!({"order": order, "max_label": max_label, "classes": entries.len()}));
            Ok(())
        }
        Command::CheckK3 { max_label, jobs } => {
            let result = check_k3_uniqueness(max_label, jobs)?;
            print_json(&render::k3(max_label, &result));
            if result.holds {
                Ok(())
            } else {
                Err(Failure::Predicate(json!({
                    "error": "uniqueness-fails",
                    "message": format!("{} signature(s) not of the form {{a, 2a, 3a}}", result.offenders.len()),
                })))
            }
        }
    }
}

/// Runs `f`, printing progress counters to stderr twice a second when enabled.
fn with_progress<T>(enabled: bool, f: impl FnOnce(Option<&Progress>) -> T) -> T {
    if !enabled {
        return f(None);
    }
    let progress = Progress::default();
    let done = AtomicBool::new(false);
    std::thread::scope(|scope| {
        scope.spawn(|| {
            let start = Instant::now();
            while !done.load(Ordering::Relaxed) {
                std::thread::sleep(Duration::from_millis(500));
                let candidates = progress.candidates.load(Ordering::Relaxed);
                let rate = candidates as f64 / start.elapsed().as_secs_f64().max(1e-9);
                eprintln!(
                    "chunks {} candidates {} pruned {} witnesses {} ({rate:.0}/s)",
                    progress.chunks_done.load(Ordering::Relaxed),
                    candidates,
                    progress.pruned.load(Ordering::Relaxed),
                    progress.witnesses.load(Ordering::Relaxed),
                );
            }
        });
        let result = f(Some(&progress));
        done.store(true, Ordering::Relaxed);
        result
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            eprintln!("{}", json!({"error": "usage", "message": message.trim_end()}));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Predicate(v)) => {
            eprintln!("{v}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(v)) => {
            eprintln!("{v}");
            ExitCode::from(2)
        }
    }
}
