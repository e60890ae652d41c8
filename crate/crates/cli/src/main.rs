mod commands;
mod output;

use brookskit::limits::{self, ScaleLimits};
use brookskit::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{CliError, Out};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "brookskit", version, about = "Brooks-theorem colorings, certificates and oracles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Graph file; stdin when absent.
    #[arg(long, short, global = true)]
    pub input: Option<PathBuf>,
    /// Input format; sniffed from the content when absent.
    #[arg(long, global = true, value_enum)]
    pub format: Option<InputFormat>,
    /// Write JSON here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Cross-check results with the exact oracles when within scale.
    #[arg(long, global = true)]
    pub verify: bool,
    /// No log lines on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    /// Scale limit overrides, `key=value,...`; applied after BROOKSKIT_LIMITS.
    #[arg(long, global = true)]
    pub limits: Option<String>,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum InputFormat {
    Graph6,
    Dimacs,
    EdgeList,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Δ-color a graph with one strategy or all of them.
    Color {
        #[arg(long, default_value = "kempe")]
        strategy: String,
        /// Include the derivation trace.
        #[arg(long)]
        trace: bool,
    },
    /// Exact χ, ω, α and optionally χ_ℓ and χ_OL.
    Oracle {
        #[arg(long)]
        list: bool,
        #[arg(long)]
        paint: bool,
    },
    /// Structural class with its witness.
    Classify,
    /// List coloring.
    Lists {
        #[arg(long, value_enum, default_value = "brooks")]
        mode: ListMode,
        /// JSON array of per-vertex color lists.
        #[arg(long)]
        lists: Option<PathBuf>,
    },
    /// Alon–Tarsi degree-choosability certificate.
    AtCheck {
        #[arg(long, value_enum, default_value = "as-cycle")]
        chord_rule: ChordRuleArg,
    },
    /// Online list coloring.
    Paint {
        #[arg(long, value_enum, default_value = "solve")]
        mode: PaintMode,
        /// Tokens per vertex for `solve`; the paint number is reported when absent.
        #[arg(long)]
        tokens: Option<usize>,
        #[arg(long, value_enum, default_value = "reveal-all")]
        adversary: AdversaryArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a named construction as graph6.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bound report for every graph up to a size, as JSON lines.
    CheckConjectures {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Run strategies over all connected labeled graphs and compare.
    Bench {
        #[arg(long, default_value = "all")]
        strategies: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListMode {
    /// Lists of size max{3, ω, Δ} (uniform unless given).
    Brooks,
    /// Lists of size d(v) (1..d(v) unless given).
    Degree,
    /// Degree lists that defeat a Gallai tree.
    Bad,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ChordRuleArg {
    AsCycle,
    Reversed,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaintMode {
    Solve,
    Play,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum AdversaryArg {
    RevealAll,
    Lowest,
    Random,
}

fn setup_limits(global: &Global) -> Result<(), CliError> {
    let mut l = ScaleLimits::default();
    if let Ok(env) = std::env::var("BROOKSKIT_LIMITS") {
        l.apply_overrides(&env).map_err(CliError::usage)?;
    }
    if let Some(spec) = &global.limits {
        l.apply_overrides(spec).map_err(CliError::usage)?;
    }
    limits::set(l);
    Ok(())
}

pub fn read_input(global: &Global) -> Result<brookskit::Graph, CliError> {
    let mut bytes = Vec::new();
    match &global.input {
        Some(p) => bytes = std::fs::read(p).map_err(|e| CliError::usage_msg("io", format!("{}: {e}", p.display())))?,
        None => {
            std::io::stdin()
                .read_to_end(&mut bytes)
                .map_err(|e| CliError::usage_msg("io", e.to_string()))?;
        }
    }
    use brookskit::graph_core::format::{parse, parse_auto, Format};
    let g = match global.format {
        None => parse_auto(&bytes),
        Some(InputFormat::Graph6) => parse(&bytes, Format::Graph6),
        Some(InputFormat::Dimacs) => parse(&bytes, Format::DimacsCol),
        Some(InputFormat::EdgeList) => parse(&bytes, Format::EdgeList),
    };
    g.map_err(|e: Error| CliError::usage(e))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let err = CliError::usage_msg("usage", e.to_string().trim().to_string());
            Out::stdout().emit_error(&err);
            return ExitCode::from(err.code);
        }
    };
    let mut out = match &cli.global.output {
        Some(p) => match Out::file(p) {
            Ok(o) => o,
            Err(e) => {
                Out::stdout().emit_error(&e);
                return ExitCode::from(e.code);
            }
        },
        None => Out::stdout(),
    };
    out.quiet = cli.global.quiet;
    let result = setup_limits(&cli.global).and_then(|_| commands::run(&cli, &mut out));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            out.emit_error(&e);
            ExitCode::from(e.code)
        }
    }
}
