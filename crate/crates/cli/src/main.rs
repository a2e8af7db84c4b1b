use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use clipnoise::Method;
use clipnoise_cli::files::{compress_file, decompress_file};
use clipnoise_cli::{run_sweep, write_csv, CliError, Mode, SweepConfig};

/// Entropy models and real bitstreams for images with clipped Gaussian noise.
#[derive(Parser)]
#[command(name = "clipnoise", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the noise level and write CSV.
    Sweep(SweepArgs),
    /// Compress a binary PGM into a bitstream.
    Compress {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, short, default_value = "legall")]
        method: Method,
        /// Decomposition levels for haar and legall.
        #[arg(long, short, default_value_t = 4)]
        levels: u32,
    },
    /// Decompress a bitstream back into a binary PGM.
    Decompress { input: PathBuf, output: PathBuf },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum, default_value = "theory")]
    mode: Mode,
    #[arg(long, default_value_t = 0.01)]
    sigma_min: f64,
    /// Defaults to 10^3.66.
    #[arg(long)]
    sigma_max: Option<f64>,
    #[arg(long, default_value_t = 60)]
    points: usize,
    /// Constant level; defaults to the center code.
    #[arg(long)]
    mu: Option<i64>,
    #[arg(long)]
    bit_depth: Option<u32>,
    #[arg(long)]
    width: Option<usize>,
    #[arg(long)]
    height: Option<usize>,
    #[arg(long, default_value_t = 4)]
    levels: u32,
    /// Comma-separated subset of direct,predictive,haar,legall.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "direct,predictive,haar,legall"
    )]
    methods: Vec<Method>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Add noise to this PGM instead of a constant image (simulate mode).
    #[arg(long)]
    input: Option<PathBuf>,
    /// CSV destination; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl SweepArgs {
    fn config(&self) -> Result<SweepConfig, CliError> {
        if self.input.is_some()
            && (self.mu.is_some()
                || self.bit_depth.is_some()
                || self.width.is_some()
                || self.height.is_some())
        {
            return Err(CliError::Usage(
                "--mu, --bit-depth, --width and --height come from --input when it is given".into(),
            ));
        }
        let d = SweepConfig::default();
        Ok(SweepConfig {
            mode: self.mode,
            sigma_min: self.sigma_min,
            sigma_max: self.sigma_max.unwrap_or(d.sigma_max),
            points: self.points,
            mu: self.mu,
            bit_depth: self.bit_depth.unwrap_or(d.bit_depth),
            width: self.width.unwrap_or(d.width),
            height: self.height.unwrap_or(d.height),
            levels: self.levels,
            methods: self.methods.clone(),
            seed: self.seed,
            input: self.input.clone(),
        })
    }
}

fn sweep(args: &SweepArgs) -> Result<(), CliError> {
    let cfg = args.config()?;
    let records = run_sweep(&cfg)?;
    match &args.out {
        Some(path) => write_csv(&records, BufWriter::new(File::create(path)?)),
        None => write_csv(&records, io::stdout().lock()),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep(args) => sweep(&args),
        Command::Compress {
            input,
            output,
            method,
            levels,
        } => {
            let s = compress_file(&input, &output, method, levels)?;
            println!("original {} bytes, compressed {} bytes", s.input, s.output);
            Ok(())
        }
        Command::Decompress { input, output } => {
            let s = decompress_file(&input, &output)?;
            println!("compressed {} bytes, original {} bytes", s.input, s.output);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = io::stdout().flush();
            eprintln!("clipnoise: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
