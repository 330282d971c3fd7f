//! `opd`: command-line front end for the outerplanar deletion kernel.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use opd_kernel::batch::{kernelize_verify_batch, BatchSummary};
use opd_kernel::modulator::ProviderMode;
use opd_kernel::oracle::{opd_exact, OpdValue};
use opd_kernel::outerplanar::is_outerplanar;
use opd_kernel::pipeline::{
    check_obstruction, generate_with, kernelize, parse_instance, write_instance, write_kernel, GenParams,
    KernelConfig, ParsedInstance, Verdict,
};
use opd_kernel::protrusion::Mode;
use opd_kernel::{Error, Graph};

const YES: u8 = 0;
const NO: u8 = 1;
const UNKNOWN: u8 = 2;
const INPUT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "opd", version, about = "Kernelization and exact solving for outerplanar vertex deletion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test outerplanarity (exit 0 if outerplanar, 1 otherwise).
    Check { file: PathBuf },
    /// Exact deletion number by exhaustive search up to a cap.
    OpdExact {
        file: PathBuf,
        #[arg(long)]
        cap: usize,
    },
    /// Reduce an instance and print the kernel.
    Kernelize {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
        /// Print run statistics to stderr.
        #[arg(long, value_enum)]
        stats: Option<StatsFormat>,
    },
    /// Kernelize one or more instances and check the result with the exact oracle.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print a seeded random instance: outerplanar base plus apex vertices.
    Gen {
        #[arg(long)]
        seed: u64,
        /// Vertices of the outerplanar base.
        #[arg(long)]
        n: usize,
        /// Number of apex vertices (also the budget).
        #[arg(long, default_value_t = 0)]
        apex: usize,
        /// Apex edge probability.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Probability of dropping each base chord.
        #[arg(long, default_value_t = 0.0)]
        drop_chord: f64,
    },
    /// Test whether the graph is a minor-minimal instance with deletion number above k.
    Obstruction {
        file: PathBuf,
        #[arg(short)]
        k: usize,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    /// Budget; overrides a `k` line in the file.
    #[arg(short)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Aggressive)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = ProviderArg::Exact)]
    provider: ProviderArg,
}

impl RunArgs {
    fn config(&self) -> KernelConfig {
        KernelConfig {
            mode: match self.mode {
                ModeArg::Aggressive => Mode::Aggressive,
                ModeArg::Strict => Mode::Strict,
            },
            provider: match self.provider {
                ProviderArg::Exact => ProviderMode::Exact,
                ProviderArg::Heuristic => ProviderMode::Heuristic,
            },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Aggressive,
    Strict,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProviderArg {
    Exact,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsFormat {
    Json,
}

/// Failure that maps to an exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Precondition(_) => INPUT_ERROR,
            Error::TooLarge(_) => UNKNOWN,
            _ => INPUT_ERROR,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn input_error(msg: String) -> Failure {
    Failure { code: INPUT_ERROR, msg }
}

fn read(path: &Path) -> Result<ParsedInstance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn budget(path: &Path, parsed: &ParsedInstance, k: Option<usize>) -> Result<usize, Failure> {
    k.or(parsed.k)
        .ok_or_else(|| input_error(format!("{}: no budget (pass -k or add a `k` line)", path.display())))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check { file } => {
            let g = read(&file)?.graph;
            let yes = is_outerplanar(&g);
            println!("{}", if yes { "outerplanar" } else { "not outerplanar" });
            Ok(if yes { YES } else { NO })
        }
        Command::OpdExact { file, cap } => {
            let g = read(&file)?.graph;
            match opd_exact(&g, cap) {
                OpdValue::Exact(v) => {
                    println!("opd {v}");
                    Ok(YES)
                }
                OpdValue::AboveCap => {
                    println!("opd > {cap}");
                    Ok(UNKNOWN)
                }
            }
        }
        Command::Kernelize { file, run, stats } => {
            let parsed = read(&file)?;
            let k = budget(&file, &parsed, run.k)?;
            let result = kernelize(&parsed.graph, k, run.config())?;
            print!("{}", write_kernel(&result));
            if let Some(StatsFormat::Json) = stats {
                let json = serde_json::json!({
                    "verdict": result.verdict.name(),
                    "config": result.config,
                    "stats": result.stats,
                });
                eprintln!("{json}");
            }
            Ok(match result.verdict {
                Verdict::Kernel | Verdict::TriviallyYes => YES,
                Verdict::TriviallyNo(_) => NO,
                Verdict::Unknown => UNKNOWN,
            })
        }
        Command::Verify { files, run } => {
            let instances = files
                .iter()
                .map(|f| {
                    let parsed = read(f)?;
                    let k = budget(f, &parsed, run.k)?;
                    Ok((parsed.graph, k))
                })
                .collect::<Result<Vec<(Graph, usize)>, Failure>>()?;
            let checked = kernelize_verify_batch(&instances, run.config());
            for (file, c) in files.iter().zip(&checked) {
                match c {
                    Ok((r, report)) if report.passed() => {
                        println!("{}: ok ({}, {} -> {} vertices)", file.display(), r.verdict.name(), r.stats.input.vertices, r.stats.output.vertices)
                    }
                    Ok((_, report)) => println!("{}: FAILED {}", file.display(), report.failures.join("; ")),
                    Err(e) => println!("{}: error {e}", file.display()),
                }
            }
            let summary = BatchSummary::of(&checked);
            println!("passed {} failed {} errors {}", summary.passed, summary.failed, summary.errors);
            Ok(if summary.failed > 0 {
                NO
            } else if summary.errors > 0 {
                UNKNOWN
            } else {
                YES
            })
        }
        Command::Gen { seed, n, apex, p, drop_chord } => {
            if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&drop_chord) {
                return Err(input_error("probabilities must lie in [0, 1]".into()));
            }
            let inst = generate_with(&GenParams { seed, n_base: n, k_apex: apex, p_edge: p, drop_chord });
            println!("c gen seed {seed} n {n} apex {apex} p {p}");
            let apex: Vec<String> = inst.apex.iter().map(ToString::to_string).collect();
            println!("c apex {}", apex.join(" "));
            print!("{}", write_instance(&inst.graph, Some(inst.k)));
            Ok(YES)
        }
        Command::Obstruction { file, k } => {
            let g = read(&file)?.graph;
            let yes = check_obstruction(&g, k)?;
            println!("{}", if yes { "obstruction" } else { "not an obstruction" });
            Ok(if yes { YES } else { NO })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { YES });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
