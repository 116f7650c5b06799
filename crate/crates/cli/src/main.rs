use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use chernclass::charclasses::DEFAULT_MAX_GENS;
use chernclass_cli::{parse_session, Format, Overrides, Runner, EXIT_INPUT};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Segre, CSM, Chern–Fulton and Milnor classes of subschemes of P^n, and
/// checks of the identities relating them.
#[derive(Debug, Parser)]
#[command(name = "chernclass", version)]
struct Cli {
    /// Prime modulus, or "auto" to draw one from the seed.
    #[arg(long)]
    prime: Option<String>,

    #[arg(long)]
    seed: Option<u64>,

    /// Independent (prime, seed) trials that must agree.
    #[arg(long)]
    trials: Option<usize>,

    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,

    /// Largest generator count accepted by inclusion–exclusion.
    #[arg(long, default_value_t = DEFAULT_MAX_GENS)]
    max_gens: usize,

    /// Session file declaring the ring, ideals and constructible functions.
    session: PathBuf,

    /// segre | csm | cfulton | milnor | euler | verify
    command: String,

    args: Vec<String>,
}

fn input_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_INPUT as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let prime = match cli.prime.as_deref() {
        None => None,
        Some("auto") => Some(None),
        Some(p) => match p.parse::<u64>() {
            Ok(v) => Some(Some(v)),
            Err(_) => return input_error(format!("--prime expects an integer or 'auto', got '{p}'")),
        },
    };
    if cli.trials == Some(0) {
        return input_error("--trials must be at least 1");
    }
    let overrides = Overrides {
        prime,
        seed: cli.seed,
        trials: cli.trials,
    };
    let session = match parse_session(&cli.session, &overrides) {
        Ok(s) => s,
        Err(e) => return input_error(format!("{}: {e}", cli.session.display())),
    };
    let runner = Runner {
        session: &session,
        max_gens: cli.max_gens,
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
    };
    match runner.run(&cli.command, &cli.args) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
