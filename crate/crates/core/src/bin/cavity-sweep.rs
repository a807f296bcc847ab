use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use cavity_entanglement::estimate::estimate_physical;
use cavity_entanglement::sweep::{output_path, parse_config, run_sweep, to_csv, write_csv, SweepSpec};
use cavity_entanglement::units::Quanta;
use cavity_entanglement::verify::{run_verification, Level, VerifyOptions};
use cavity_entanglement::Error;

/// Negativity sweeps, verification and physical estimates for accelerated cavities.
#[derive(Parser, Debug)]
#[command(name = "cavity-sweep", version)]
struct Cli {
    /// Flat key = value config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    preset: Option<String>,
    /// one-way | alpha-centauri | round-trip | kickstart | custom
    #[arg(long)]
    scenario: Option<String>,
    /// Custom segments, e.g. "accel+:u,coast:v,accel-:u".
    #[arg(long)]
    segments: Option<String>,
    /// Mode index or comma-separated list.
    #[arg(long)]
    k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    #[arg(long = "M")]
    mass_dimless: Option<String>,
    #[arg(long)]
    delta: Option<String>,
    #[arg(long)]
    n_max: Option<String>,
    #[arg(long)]
    r_max: Option<String>,
    /// closed-form | general | both
    #[arg(long)]
    mode: Option<String>,
    /// name=start:stop:count, repeatable.
    #[arg(long)]
    axis: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    /// Output CSV path; "-" for stdout.
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    workers: Option<String>,
    /// Run the verification suite instead of a sweep: fast | full.
    #[arg(long)]
    verify: Option<String>,
    #[arg(long, hide = true)]
    corrupt_a11: Option<f64>,
    /// Print h, M, validity and peak one-way deficit for physical inputs.
    #[arg(long)]
    estimate: bool,
    /// Proper acceleration in m/s².
    #[arg(long)]
    accel: Option<f64>,
    /// Particle mass in kg.
    #[arg(long)]
    mass: Option<f64>,
    /// Transverse wavelength in m.
    #[arg(long)]
    wavelength: Option<f64>,
}

enum Failure {
    Error(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn pairs(cli: &Cli) -> Result<Vec<(String, String)>, Error> {
    let mut out = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            parse_config(&text)?
        }
        None => Vec::new(),
    };
    let flags = [
        ("preset", &cli.preset),
        ("scenario", &cli.scenario),
        ("segments", &cli.segments),
        ("k", &cli.k),
        ("h", &cli.h),
        ("M", &cli.mass_dimless),
        ("delta", &cli.delta),
        ("n_max", &cli.n_max),
        ("r_max", &cli.r_max),
        ("mode", &cli.mode),
        ("u", &cli.u),
        ("v", &cli.v),
        ("w", &cli.w),
        ("out", &cli.out),
        ("workers", &cli.workers),
    ];
    for (key, value) in flags {
        if let Some(v) = value {
            out.push((key.to_string(), v.clone()));
        }
    }
    for a in &cli.axis {
        out.push(("axis".to_string(), a.clone()));
    }
    Ok(out)
}

fn estimate(cli: &Cli) -> Result<(), Failure> {
    let accel = cli
        .accel
        .ok_or_else(|| Error::argument("--estimate needs --accel"))?;
    let delta = match &cli.delta {
        Some(d) => d
            .parse::<f64>()
            .map_err(|_| Error::config("delta", format!("not a number: `{d}`")))?,
        None => return Err(Error::argument("--estimate needs --delta").into()),
    };
    let k = match &cli.k {
        Some(k) => k
            .parse::<usize>()
            .map_err(|_| Error::config("k", format!("not a mode index: `{k}`")))?,
        None => 1,
    };
    let quanta = Quanta::from_options(cli.mass, cli.wavelength)?;
    println!("{}", estimate_physical(accel, delta, quanta, k)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if cli.estimate {
        return estimate(cli);
    }
    if let Some(level) = &cli.verify {
        let level = Level::parse(level)
            .ok_or_else(|| Error::config("verify", format!("`{level}` (fast, full)")))?;
        let options = VerifyOptions {
            corrupt_a11: cli.corrupt_a11,
        };
        let report = run_verification(level, &options);
        println!("{report}");
        return if report.passed() {
            Ok(())
        } else {
            Err(Failure::Verification)
        };
    }
    let spec = SweepSpec::from_pairs(&pairs(cli)?)?;
    let rows = run_sweep(&spec)?;
    let csv = to_csv(&rows, spec.mode);
    let path = output_path(&spec);
    if path.as_os_str() == "-" {
        std::io::stdout()
            .write_all(csv.as_bytes())
            .map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
    } else {
        write_csv(&path, &csv)?;
        eprintln!("wrote {} rows to {}", rows.len(), path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(3),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
