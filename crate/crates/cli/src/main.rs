use arrowcat_cli::suites::{
    find_suite, SuiteParams, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use arrowcat_cli::{load_instances, registry, FixtureSet};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

/// Builds arrow categories over exact rational matrix categories and checks
/// every structure they inherit: monoidal products, braidings, duals,
/// pivots, twists, and monoid / bialgebra / Frobenius / Hopf objects.
#[derive(Parser)]
#[command(name = "arrowcat", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Lists every registered suite with its citation.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Runs one suite and reports per-check verdicts.
    Run {
        /// Suite id, as printed by `list`.
        suite: String,
        /// Seed for the deterministic generators. Falls back to the
        /// ARROWCAT_SEED environment variable, then to 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Sampled cases per check family.
        #[arg(long)]
        samples: Option<usize>,
        /// Dimension bound for sampled objects.
        #[arg(long)]
        max_dim: Option<usize>,
        /// Extra fixtures (one JSON object per line).
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parses and validates a fixture file without running anything.
    CheckFile { file: PathBuf },
}

fn env_seed() -> Option<u64> {
    std::env::var("ARROWCAT_SEED").ok()?.parse().ok()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List { format } => {
            match format {
                Format::Text => {
                    for def in registry() {
                        println!("{:<22} [{}]  {}", def.id, def.citation, def.description);
                    }
                }
                Format::Json => {
                    for def in registry() {
                        println!(
                            "{}",
                            serde_json::json!({
                                "id": def.id,
                                "citation": def.citation,
                                "description": def.description,
                                "default_max_dim": def.default_max_dim,
                            })
                        );
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Run {
            suite,
            seed,
            samples,
            max_dim,
            fixtures,
            format,
            out,
        } => {
            let def = match find_suite(&suite) {
                Ok(def) => def,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let fixture_set = match fixtures {
                None => FixtureSet::default(),
                Some(path) => match load_instances(&path) {
                    Ok(set) => set,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                },
            };
            let max_dim = max_dim.unwrap_or(def.default_max_dim);
            if max_dim == 0 {
                eprintln!("error: --max-dim must be at least 1");
                return ExitCode::from(2);
            }
            let params = SuiteParams::new(
                seed.or_else(env_seed).unwrap_or(DEFAULT_SEED),
                samples.unwrap_or(DEFAULT_SAMPLES),
                max_dim,
            );
            let report = def.run(&params, &fixture_set);
            let rendered = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json_lines(),
            };
            match out {
                None => print!("{rendered}"),
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, rendered) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::CheckFile { file } => match load_instances(&file) {
            Ok(set) => {
                println!("ok: {}", set.summary());
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}
