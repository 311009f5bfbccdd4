//! `gammakit`: decide equalities in the model group, replay the relation
//! suite and derivation traces, and run the planar simulator.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 malformed input,
//! 3 an expression outgrew the word-length cap.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use gammakit_core::word::DEFAULT_MAX_LEN;
use gammakit_core::{ArtinConvention, FramingTransport, ModelConfig};

#[derive(Parser)]
#[command(name = "gammakit", version, about = "Exact checks for the framed circular braid model")]
struct Cli {
    /// Omit wall-clock timing so reports are byte-stable.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Convention::Standard)]
    convention: Convention,
    #[arg(long, global = true, value_enum, default_value_t = Transport::Left)]
    transport: Transport,
    /// Drop the full-twist relation (framings and braids become independent).
    #[arg(long, global = true)]
    no_relation: bool,
    /// Cap on any intermediate word length.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_LEN)]
    max_len: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Standard,
    Mirrored,
}

#[derive(Clone, Copy, ValueEnum)]
enum Transport {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two expressions are equal.
    Eq { lhs: String, rhs: String },
    /// Print framing, braid invariants and label action of an expression.
    Normalize { expr: String },
    /// Smallest k <= MAX with EXPR^k = 1.
    Order {
        expr: String,
        #[arg(long, default_value_t = 1000)]
        max: u64,
    },
    /// Decide whether two expressions commute.
    Comm { lhs: String, rhs: String },
    /// Run the relation suite for the named generators.
    VerifyLemma,
    /// Replay a derivation trace (defaults to the shipped sigma3 trace).
    VerifyDerivation { file: Option<PathBuf> },
    /// Push the labelled sample set through EXPR and compare label actions.
    Simulate {
        expr: String,
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = ModelConfig {
        artin: match cli.convention {
            Convention::Standard => ArtinConvention::Standard,
            Convention::Mirrored => ArtinConvention::Mirrored,
        },
        transport: match cli.transport {
            Transport::Left => FramingTransport::Left,
            Transport::Right => FramingTransport::Right,
        },
        central_relation: !cli.no_relation,
        max_word_len: cli.max_len,
    };
    let start = Instant::now();
    let result = commands::run(&cli.command, config);
    let (mut json, passed) = match result {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.code());
        }
    };
    if !cli.no_timing {
        if let Some(obj) = json.as_object_mut() {
            let ms = start.elapsed().as_secs_f64() * 1e3;
            obj.insert("duration_ms".into(), serde_json::json!(ms));
        }
    }
    let text = serde_json::to_string_pretty(&json).expect("report serialises") + "\n";
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(if passed { 0 } else { 1 })
}
