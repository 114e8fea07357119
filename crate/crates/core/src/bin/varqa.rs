use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use varqa::hamiltonian::SpinOrdering;
use varqa::optimizer::DigitizerKind;
use varqa::scan::{
    convert, run_scan, BackendName, ExcitedSettings, FineTuneSettings, Format, ModeName, ScanConfig, Source,
};
use varqa::Error;

#[derive(Parser)]
#[command(name = "varqa", version, about = "Variational quantum annealing on a classical sampler")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search every source and compare against exact diagonalization.
    Scan(Box<ScanArgs>),
    /// Convert an FCIDUMP or pauli_text file to pauli_text.
    Convert(ConvertArgs),
}

#[derive(Args)]
struct ScanArgs {
    /// `label=path` sources, appended to those in --config.
    sources: Vec<String>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_parser = ["d1", "d2"])]
    digitizer: Option<String>,
    #[arg(long, value_parser = ["exhaustive", "random"])]
    mode: Option<String>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, value_parser = ["gibbs", "gibbs_shots", "sa"])]
    backend: Option<String>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    sweeps: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Coordinate-descent refinement of each optimum.
    #[arg(long)]
    fine_tune: bool,
    /// Deflate this many lowest states (a single k for every source).
    #[arg(long)]
    excited_k: Option<usize>,
    #[arg(long)]
    alpha_shift: Option<f64>,
    #[arg(long, value_parser = ["blocked", "interleaved"])]
    ordering: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Leave the seconds column empty so output is byte-reproducible.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Args)]
struct ConvertArgs {
    input: PathBuf,
    output: PathBuf,
    /// Inferred from the input file name when absent.
    #[arg(long)]
    from: Option<String>,
    #[arg(long, default_value = "pauli_text")]
    to: String,
    #[arg(long, default_value = "blocked", value_parser = ["blocked", "interleaved"])]
    ordering: String,
}

fn build_config(args: &ScanArgs) -> Result<ScanConfig, Error> {
    let mut c = match &args.config {
        Some(p) => ScanConfig::from_file(p)?,
        None => ScanConfig::default(),
    };
    for s in &args.sources {
        let (label, path) = s
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("source '{s}' is not label=path")))?;
        c.sources.push(Source {
            label: label.to_string(),
            path: PathBuf::from(path),
            format: None,
        });
    }
    if let Some(d) = &args.digitizer {
        c.digitizer.kind = d.parse::<DigitizerKind>()?;
    }
    if let Some(m) = &args.mode {
        c.digitizer.mode = if m == "random" { ModeName::Random } else { ModeName::Exhaustive };
    }
    if let Some(t) = args.trials {
        c.digitizer.trials = t;
    }
    if let Some(s) = args.samples {
        c.sampler.shots = s;
    }
    if let Some(b) = &args.backend {
        c.sampler.backend = b.parse::<BackendName>()?;
    }
    if let Some(b) = args.beta {
        c.sampler.beta = b;
    }
    if let Some(s) = args.sweeps {
        let mut schedule = c.sampler.schedule();
        schedule.sweeps = s;
        c.sampler.schedule = Some(schedule);
    }
    if let Some(s) = args.seed {
        c.seed = s;
        c.digitizer.seed = s;
    }
    if args.fine_tune {
        c.fine_tune = Some(FineTuneSettings {
            enabled: true,
            coordinates: None,
        });
    }
    if let Some(k) = args.excited_k {
        c.excited = Some(ExcitedSettings::constant(k, args.alpha_shift.unwrap_or(2.0)));
    } else if let (Some(a), Some(ex)) = (args.alpha_shift, c.excited.as_mut()) {
        ex.alpha_shift = a;
    }
    if let Some(o) = &args.ordering {
        c.ordering = o.parse::<SpinOrdering>()?;
    }
    if args.output.is_some() {
        c.output = args.output.clone();
    }
    if args.report.is_some() {
        c.report = args.report.clone();
    }
    if args.no_timings {
        c.timings = false;
    }
    Ok(c)
}

fn scan(args: ScanArgs) -> ExitCode {
    let config = match build_config(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run_scan(&config)) {
        Ok(out) => {
            if config.output.is_none() {
                print!("{}", out.csv);
            }
            if out.failed_rows() > 0 {
                eprintln!("{} of {} rows failed", out.failed_rows(), out.rows.len());
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run_convert(args: ConvertArgs) -> Result<(), Error> {
    let from = match &args.from {
        Some(f) => f.parse()?,
        None => Format::from_path(&args.input),
    };
    convert(&args.input, from, &args.output, args.to.parse()?, args.ordering.parse()?)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match Cli::parse().command {
        Command::Scan(args) => scan(*args),
        Command::Convert(args) => match run_convert(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}
