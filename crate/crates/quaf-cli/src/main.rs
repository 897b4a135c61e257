//! `quaf` — analyze Dung argumentation frameworks and their quotient
//! abstractions from the command line.
//!
//! Every subcommand prints a single JSON report on stdout:
//!
//! ```json
//! {
//!   "command": "solve",
//!   "input_digest": "sha256:…",
//!   "timing_ms": 3,
//!   "result": { … }
//! }
//! ```
//!
//! `input_digest` is the SHA-256 of the input files' bytes (framework
//! file first, then the partition file if one was given), so reports
//! are traceable to exact inputs. Identical inputs produce identical
//! payloads apart from `timing_ms`.
//!
//! Exit codes: `0` success (and, where applicable, the checked property
//! holds); `1` the command completed but the property fails (partition
//! not faithful, maps not a Galois connection); `2` usage, parse, or
//! bound errors, with a diagnostic on stderr naming the file and line.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use quaf::abstraction::{
    classify_with_limit, coarsest_faithful_with_limit, partition_galois_with, quotient_af,
    Partition, SearchMode, GALOIS_EXHAUSTIVE_MAX_ARGS, GALOIS_SAMPLES,
};
use quaf::io::{self, Format, OutputFormat, ParseMode};
use quaf::semantics::{
    complete_labellings_with_limit, enumerate_with_limit, SemanticsKind, DEFAULT_MAX_ARGS,
};
use quaf::ArgumentationFramework;

/// Solver bound override: maximum argument count for enumeration-based
/// commands (the grounded semantics is exempt).
const MAX_ARGS_VAR: &str = "QUAF_MAX_ARGS";

/// Galois bound override: largest framework checked exhaustively by
/// `galois`; larger ones get seeded random spot checks.
const GALOIS_MAX_ARGS_VAR: &str = "QUAF_GALOIS_MAX_ARGS";

#[derive(Parser)]
#[command(
    name = "quaf",
    version,
    about = "Solve Dung argumentation frameworks and verify quotient abstractions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Auto-declare attack endpoints missing from the declarations.
    #[arg(long, global = true)]
    lenient: bool,

    /// Input format (default: inferred from the file extension).
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Apx,
    Tgf,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the extensions of a framework under a semantics.
    Solve {
        /// Framework file (APX or TGF).
        file: PathBuf,
        #[arg(long)]
        semantics: SemanticsKind,
        /// Also report complete labellings (IN/OUT/UNDEC). Only valid
        /// with --semantics complete.
        #[arg(long)]
        labellings: bool,
    },
    /// Build the quotient framework induced by a partition.
    Abstract {
        file: PathBuf,
        /// Partition file (one `Name: member member …` line per block).
        #[arg(long)]
        partition: PathBuf,
        /// Also write the quotient framework as APX to this path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Reject partitions whose blocks contain internal attacks.
        #[arg(long)]
        require_conflict_free_blocks: bool,
    },
    /// Classify a partition as sound/faithful for a semantics.
    Verify {
        file: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        semantics: SemanticsKind,
        /// Reject partitions whose blocks contain internal attacks.
        #[arg(long)]
        require_conflict_free_blocks: bool,
    },
    /// Search for a coarsest faithful partition.
    Search {
        file: PathBuf,
        #[arg(long)]
        semantics: SemanticsKind,
        #[arg(long, default_value = "greedy")]
        mode: SearchMode,
        /// Also write the found partition in the partition format.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the Galois connection induced by a partition.
    Galois {
        file: PathBuf,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Render a framework as a Graphviz DOT document.
    Render {
        file: PathBuf,
        /// Render the quotient under --partition instead of the
        /// framework itself.
        #[arg(long = "abstract", requires = "partition")]
        as_quotient: bool,
        #[arg(long, requires = "as_quotient")]
        partition: Option<PathBuf>,
        /// Also write the DOT document to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Solve { .. } => "solve",
            Command::Abstract { .. } => "abstract",
            Command::Verify { .. } => "verify",
            Command::Search { .. } => "search",
            Command::Galois { .. } => "galois",
            Command::Render { .. } => "render",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let command_name = cli.command.name();
    let max_args = env_limit(MAX_ARGS_VAR, DEFAULT_MAX_ARGS)?;

    let mut digest = Sha256::new();
    let (result, property_holds) = dispatch(&cli, &mut digest, max_args)?;

    let report = json!({
        "command": command_name,
        "input_digest": format!("sha256:{:x}", digest.finalize()),
        "timing_ms": started.elapsed().as_millis() as u64,
        "result": result,
    });
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if property_holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Executes the subcommand, feeding every input file into `digest`.
/// Returns the result payload and whether the checked property holds
/// (always true for commands that do not check one).
fn dispatch(
    cli: &Cli,
    digest: &mut Sha256,
    max_args: usize,
) -> anyhow::Result<(Value, bool)> {
    match &cli.command {
        Command::Solve {
            file,
            semantics,
            labellings,
        } => {
            if *labellings && *semantics != SemanticsKind::Complete {
                bail!("--labellings requires --semantics complete");
            }
            let af = load_af(file, cli, digest)?;
            let extensions = enumerate_with_limit(&af, *semantics, max_args)?;
            let mut result = json!({
                "semantics": semantics,
                "count": extensions.len(),
                "extensions": extensions.iter().collect::<Vec<_>>(),
            });
            if *labellings {
                let labs = complete_labellings_with_limit(&af, max_args)?;
                result["labellings"] = serde_json::to_value(&labs)?;
            }
            Ok((result, true))
        }

        Command::Abstract {
            file,
            partition,
            out,
            require_conflict_free_blocks,
        } => {
            let af = load_af(file, cli, digest)?;
            let p = load_partition(partition, &af, digest)?;
            check_conflict_free_blocks(&af, &p, *require_conflict_free_blocks)?;
            let quotient = quotient_af(&af, &p)?;
            let apx = io::serialize(&quotient.abstract_af, OutputFormat::Apx);
            if let Some(path) = out {
                write_output(path, &apx)?;
            }
            let conflicts: Vec<Value> = p
                .internal_conflicts(&af)?
                .into_iter()
                .map(|(block, attacker, target)| {
                    json!({ "block": block, "attacker": attacker, "target": target })
                })
                .collect();
            let result = json!({
                "blocks": blocks_json(&p),
                "abstract_af": af_json(&quotient.abstract_af),
                "internal_conflicts": conflicts,
                "apx": apx,
            });
            Ok((result, true))
        }

        Command::Verify {
            file,
            partition,
            semantics,
            require_conflict_free_blocks,
        } => {
            let af = load_af(file, cli, digest)?;
            let p = load_partition(partition, &af, digest)?;
            check_conflict_free_blocks(&af, &p, *require_conflict_free_blocks)?;
            let report = classify_with_limit(&af, &p, *semantics, max_args)?;
            let faithful = report.faithful;
            Ok((serde_json::to_value(&report)?, faithful))
        }

        Command::Search {
            file,
            semantics,
            mode,
            out,
        } => {
            let af = load_af(file, cli, digest)?;
            let best = coarsest_faithful_with_limit(&af, *semantics, *mode, max_args)?;
            if let Some(path) = out {
                write_output(path, &io::serialize_partition(&best))?;
            }
            let report = classify_with_limit(&af, &best, *semantics, max_args)?;
            let result = json!({
                "semantics": semantics,
                "mode": mode,
                "block_count": best.len(),
                "blocks": blocks_json(&best),
                "report": serde_json::to_value(&report)?,
            });
            Ok((result, true))
        }

        Command::Galois { file, partition } => {
            let galois_max = env_limit(GALOIS_MAX_ARGS_VAR, GALOIS_EXHAUSTIVE_MAX_ARGS)?;
            let af = load_af(file, cli, digest)?;
            let p = load_partition(partition, &af, digest)?;
            let report = partition_galois_with(&p, galois_max, GALOIS_SAMPLES);
            let is_connection = report.is_connection();
            Ok((serde_json::to_value(&report)?, is_connection))
        }

        Command::Render {
            file,
            as_quotient,
            partition,
            out,
        } => {
            let af = load_af(file, cli, digest)?;
            let rendered = if *as_quotient {
                let path = partition.as_ref().expect("clap enforces --partition");
                let p = load_partition(path, &af, digest)?;
                quotient_af(&af, &p)?.abstract_af
            } else {
                af
            };
            let dot = io::serialize(&rendered, OutputFormat::Dot);
            if let Some(path) = out {
                write_output(path, &dot)?;
            }
            let result = json!({
                "args": rendered.arg_count(),
                "attacks": rendered.attack_count(),
                "dot": dot,
            });
            Ok((result, true))
        }
    }
}

fn load_af(
    path: &Path,
    cli: &Cli,
    digest: &mut Sha256,
) -> anyhow::Result<ArgumentationFramework> {
    let bytes = std::fs::read(path).with_context(|| path.display().to_string())?;
    digest.update(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| anyhow!("{}: not valid UTF-8", path.display()))?;
    let format = match cli.format {
        Some(FormatArg::Apx) => Format::Apx,
        Some(FormatArg::Tgf) => Format::Tgf,
        None => format_by_extension(path),
    };
    let mode = if cli.lenient {
        ParseMode::Lenient
    } else {
        ParseMode::Strict
    };
    io::parse_with(&text, format, mode)
        .map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_partition(
    path: &Path,
    af: &ArgumentationFramework,
    digest: &mut Sha256,
) -> anyhow::Result<Partition> {
    let bytes = std::fs::read(path).with_context(|| path.display().to_string())?;
    digest.update(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| anyhow!("{}: not valid UTF-8", path.display()))?;
    io::parse_partition(&text, af).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn format_by_extension(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("tgf") => Format::Tgf,
        _ => Format::Apx,
    }
}

fn check_conflict_free_blocks(
    af: &ArgumentationFramework,
    p: &Partition,
    required: bool,
) -> anyhow::Result<()> {
    if !required {
        return Ok(());
    }
    let conflicts = p.internal_conflicts(af)?;
    if let Some((block, attacker, target)) = conflicts.first() {
        bail!(
            "block `{block}` is not conflict-free: `{attacker}` attacks `{target}` \
             ({} internal attack(s) in total)",
            conflicts.len()
        );
    }
    Ok(())
}

fn blocks_json(p: &Partition) -> Vec<Value> {
    p.blocks()
        .iter()
        .map(|b| json!({ "name": b.name, "members": b.members }))
        .collect()
}

fn af_json(af: &ArgumentationFramework) -> Value {
    json!({
        "args": af.args(),
        "attacks": af.attacks().collect::<Vec<_>>(),
    })
}

fn write_output(path: &Path, contents: &str) -> anyhow::Result<()> {
    std::fs::write(path, contents).with_context(|| path.display().to_string())
}

fn env_limit(name: &str, default: usize) -> anyhow::Result<usize> {
    match std::env::var(name) {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            anyhow!("environment variable {name} must be a non-negative integer, got `{raw}`")
        }),
        Err(std::env::VarError::NotPresent) => Ok(default),
        Err(e) => Err(anyhow!("environment variable {name}: {e}")),
    }
}
