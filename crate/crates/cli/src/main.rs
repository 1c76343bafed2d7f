use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diffext::dext::Which;
use diffext::frontend::{
    autos_report, build_report, divcheck_report, inner_report, load_instance, nucleus_report, parse_field, run_suite,
    Instance, Report,
};
use diffext::Error;

/// Exact computations in differential polynomial quotient algebras over F_p(x).
#[derive(Parser)]
#[command(name = "diffext", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Sampling seed; overrides the instance file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Also write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Record every timing as 0 so reports are byte-identical across runs.
    #[arg(long, global = true)]
    no_timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Left,
    Middle,
    Right,
    Full,
}

impl From<WhichArg> for Which {
    fn from(w: WhichArg) -> Which {
        match w {
            WhichArg::Left => Which::Left,
            WhichArg::Middle => Which::Middle,
            WhichArg::Right => Which::Right,
            WhichArg::Full => Which::Full,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print g, f and the dimensions of the algebra.
    Build { config: PathBuf },
    /// Compute a nucleus.
    Nucleus {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "full")]
        which: WhichArg,
    },
    /// Describe the automorphism group; optionally test a shift t -> t + c.
    Autos {
        config: PathBuf,
        /// Check whether (id, c, 1) is an automorphism.
        #[arg(long, value_name = "EXPR")]
        check_c: Option<String>,
        /// Order of the automorphism (id, c, 1).
        #[arg(long, value_name = "EXPR")]
        order: Option<String>,
    },
    /// The inner automorphism of a nonzero a in K.
    Inner {
        config: PathBuf,
        #[arg(long, value_name = "EXPR")]
        a: String,
    },
    /// Three-valued division-algebra verdict.
    Divcheck {
        config: PathBuf,
        /// Degree bound for the factor search; defaults to the instance file.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Run verification suites.
    Verify {
        config: PathBuf,
        /// ring, vops, nuclei, autos, inner, division or all; defaults to the
        /// instance file.
        #[arg(long)]
        suite: Option<String>,
    },
}

/// Failures that map to exit status 2.
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn load(path: &PathBuf, seed: Option<u64>) -> Result<Instance, UsageError> {
    let mut inst = load_instance(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    if let Some(seed) = seed {
        inst.config.seed = seed;
    }
    Ok(inst)
}

fn run(cli: &Cli) -> Result<Report, UsageError> {
    let seed = cli.global.seed;
    let report = match &cli.command {
        Command::Build { config } => {
            let inst = load(config, seed)?;
            build_report(&inst.alg, inst.config.seed, inst.config.degree_bound)
        }
        Command::Nucleus { config, which } => {
            let inst = load(config, seed)?;
            nucleus_report(&inst.alg, (*which).into(), inst.config.seed, inst.config.degree_bound)
        }
        Command::Autos { config, check_c, order } => {
            let inst = load(config, seed)?;
            let p = inst.config.p;
            let check_c = check_c.as_deref().map(|s| parse_field(s, p)).transpose()?;
            let order = order.as_deref().map(|s| parse_field(s, p)).transpose()?;
            autos_report(&inst.alg, check_c.as_ref(), order.as_ref(), inst.config.seed, inst.config.degree_bound)
        }
        Command::Inner { config, a } => {
            let inst = load(config, seed)?;
            let a = parse_field(a, inst.config.p)?;
            inner_report(&inst.alg, &a, inst.config.seed, inst.config.degree_bound)
        }
        Command::Divcheck { config, bound } => {
            let inst = load(config, seed)?;
            divcheck_report(&inst.alg, bound.unwrap_or(inst.config.degree_bound), inst.config.seed)?
        }
        Command::Verify { config, suite } => {
            let inst = load(config, seed)?;
            let suites = match suite {
                Some(s) => vec![s.clone()],
                None => inst.config.suites.clone(),
            };
            let mut report: Option<Report> = None;
            for s in &suites {
                let r = run_suite(&inst.alg, s, inst.config.seed, inst.config.degree_bound)?;
                match &mut report {
                    Some(acc) => acc.merge(r),
                    None => report = Some(r),
                }
            }
            report.ok_or_else(|| UsageError("no suites selected".into()))?
        }
    };
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = match run(&cli) {
        Ok(r) => r,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if cli.global.no_timings {
        report.clear_timings();
    }
    print!("{}", report.table());
    if let Some(path) = &cli.global.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
