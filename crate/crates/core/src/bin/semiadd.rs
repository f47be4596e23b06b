use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use semiadd::field::FieldSpec;
use semiadd::suite::{run_suite, SuiteConfig, SuiteName};

/// Runs a named verification suite and reports each assertion.
#[derive(Parser, Debug)]
#[command(name = "semiadd", version)]
struct Cli {
    #[arg(long)]
    suite: String,
    /// Builtin lattice (`chain:n`, `boolean:k`, `diamond`, `pentagon`) or a lattice file.
    #[arg(long, default_value = "boolean:1")]
    lattice: String,
    /// `self` or a T-module file; give twice for U and V.
    #[arg(long = "tmodule")]
    tmodules: Vec<String>,
    /// `q` or `f:p`; repeatable.
    #[arg(long = "field")]
    fields: Vec<String>,
    /// Window of set sizes `{0..N}`.
    #[arg(long, default_value_t = 3)]
    window: usize,
    /// Highest Tor/Ext degree.
    #[arg(long, default_value_t = 2)]
    depth: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1 << 24)]
    cap_enum: u128,
    #[arg(long, default_value_t = 1 << 17)]
    cap_matrix: usize,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report elapsed_ms as 0 so output is byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

fn config(cli: &Cli) -> semiadd::Result<SuiteConfig> {
    let mut cfg = SuiteConfig::new(cli.suite.parse::<SuiteName>()?);
    cfg.lattice = cli.lattice.clone();
    cfg.tmodules = cli.tmodules.clone();
    cfg.fields = cli
        .fields
        .iter()
        .map(|f| f.parse::<FieldSpec>().map_err(|e| semiadd::Error::Config(e.to_string())))
        .collect::<semiadd::Result<_>>()?;
    cfg.window = cli.window;
    cfg.depth = cli.depth;
    cfg.seed = cli.seed;
    cfg.cap_enum = cli.cap_enum;
    cfg.cap_matrix = cli.cap_matrix;
    cfg.timing = !cli.no_timing;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    let report = match config(&cli).and_then(|c| run_suite(&c)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("semiadd: {e}");
            return ExitCode::from(2);
        }
    };
    let text = if cli.json { report.to_json() + "\n" } else { report.to_table() };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("semiadd: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
